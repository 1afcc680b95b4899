#include <filesystem>

#include "doctest.h"

#include "fgerbe/errors.hpp"
#include "fgerbe/instances.hpp"
#include "fgerbe/io.hpp"

using namespace fgerbe;
namespace fs = std::filesystem;

namespace {

const fs::path kData = FGERBE_DATA_DIR;

}  // namespace

TEST_CASE("every shipped fixture loads") {
  Workspace ws(kData);
  for (const auto& entry : fs::directory_iterator(kData)) {
    if (entry.path().extension() != ".json") continue;
    const Json j = ws.read(entry.path());
    const std::string type = infer_type(j);
    CAPTURE(entry.path().string());
    if (type == "group") CHECK_NOTHROW(ws.group(j));
    else if (type == "gset") CHECK_NOTHROW(ws.gset(j));
    else if (type == "cocycle") CHECK_NOTHROW(ws.cocycle(j));
    else if (type == "gerbe") CHECK_NOTHROW(ws.gerbe(j));
    else if (type == "bundle") CHECK_NOTHROW(ws.bundle(j));
    else if (type == "kernel") CHECK_NOTHROW(ws.kernel(j));
    else if (type == "extension") CHECK_NOTHROW(ws.extension(j));
    else FAIL("unknown type " << type);
  }
}

TEST_CASE("invalid fixtures fail with the right error") {
  Workspace ws(kData);
  CHECK_THROWS_AS(ws.group(ws.read(kData / "invalid/nonassociative_group.json")), ValidationError);
  CHECK_THROWS_AS(ws.cocycle(ws.read(kData / "invalid/bad_cocycle.json")), ValidationError);
  CHECK_THROWS_AS(ws.cocycle(ws.read(kData / "invalid/missing_field.json")), StructuralError);
  CHECK_THROWS_AS(ws.read(kData / "nope.json"), StructuralError);
}

TEST_CASE("fixtures match the built-in instances") {
  Workspace ws(kData);
  const GerbePtr bil = ws.gerbe(Json("z22_bilinear.json"));
  CHECK(bil->cocycle() == z22_bilinear_point()->cocycle());
  const EquivBundle explicit_pauli = ws.bundle(Json("pauli_explicit.json"));
  const EquivBundle built = ws.bundle(Json("pauli_bundle.json"));
  for (std::size_t k = 0; k < built.maps().size(); ++k)
    CHECK(max_abs_diff(explicit_pauli.maps()[k], built.maps()[k]) < 1e-15);
  const AbelianExtension q8 = ws.extension(Json("q8_extension.json"));
  CHECK(q8.cocycle == q8_extension().cocycle);
  const AbelianExtension heis = ws.extension(Json("heisenberg_extension.json"));
  CHECK(heis.cocycle == heisenberg_extension(3).cocycle);
}

TEST_CASE("round trips") {
  Workspace ws(kData);
  for (const auto& s : core_suite(3)) {
    const Gerbe& x = *s.gerbe;
    const Json j = to_json(x);
    const GerbePtr back = ws.gerbe(j);
    CHECK(back->cocycle() == x.cocycle());
    CHECK(back->metric() == x.metric());
    CHECK(to_json(*back).dump() == j.dump());
  }
  const GroupPtr d4 = std::make_shared<const FiniteGroup>(dihedral_group(4));
  CHECK(*ws.group(to_json(*d4)) == *d4);

  const GerbePtr bil = z22_bilinear_point();
  const EquivBundle pauli = constant_bundle(bil, weyl_matrices(2));
  const EquivBundle back = ws.bundle(to_json(pauli));
  for (std::size_t k = 0; k < pauli.maps().size(); ++k) CHECK(max_abs_diff(back.maps()[k], pauli.maps()[k]) == 0.0);

  std::mt19937_64 rng(1);
  const Gerbe metric = with_metric(*bil, random_invariant_metric(bil->gset(), rng));
  CHECK(ws.gerbe(to_json(metric))->metric() == metric.metric());
}

TEST_CASE("builder kinds") {
  Workspace ws(kData);
  CHECK(ws.group(Json::parse(R"({"kind": "dihedral", "n": 5})"))->order() == 10);
  CHECK(ws.gset(Json::parse(R"({"group": {"kind": "symmetric", "n": 3}, "kind": "conjugation"})"))->size() == 6);
  CHECK(ws.gset(Json::parse(R"({"kind": "product", "factors": ["s3_coset.json", "s3_coset.json"]})"))->size() == 9);
  CHECK_THROWS_AS(ws.group(Json::parse(R"({"kind": "free", "n": 2})")), StructuralError);
  const GerbePtr metric = ws.gerbe(Json("s3_conjugation_metric.json"));
  CHECK(metric->metric()[1].to_string() == "3/2");
  CHECK_THROWS_AS(
      ws.gerbe(Json::parse(R"({"gset": {"group": "s3_group.json", "kind": "conjugation"}, "metric": [1, 2, 1, 1, 1, 1]})")),
      ValidationError);
  CHECK(infer_type(Json::parse(R"({"type": "gset", "kind": "conjugation"})")) == "gset");
}
