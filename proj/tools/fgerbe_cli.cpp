#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fgerbe/acceptance.hpp"
#include "fgerbe/errors.hpp"
#include "fgerbe/io.hpp"

using namespace fgerbe;
namespace fs = std::filesystem;

namespace {

Json rational_json(std::int64_t num, std::int64_t den) {
  if (den == 1) return num;
  return std::to_string(num) + "/" + std::to_string(den);
}

Json loops_json(const LoopGroupoid& loops) {
  Json out = Json::array();
  for (const auto& l : loops.loops()) out.push_back(Json::array({l.point, l.element}));
  return out;
}

Json matrices_by_element(const std::vector<MatrixXc>& mats) {
  Json out = Json::object();
  for (std::size_t x = 0; x < mats.size(); ++x) out[std::to_string(x)] = to_json(mats[x]);
  return out;
}

Json validate_file(Workspace& ws, const std::string& file) {
  const Json j = ws.read(file);
  const std::string type = infer_type(j);
  Json out;
  out["file"] = file;
  out["type"] = type;
  if (type == "group") {
    out["order"] = ws.group(j)->order();
  } else if (type == "gset") {
    const GSetPtr s = ws.gset(j);
    out["size"] = s->size();
    out["orbits"] = orbits_and_stabilizers(*s).orbits.size();
  } else if (type == "cocycle") {
    out["N"] = ws.cocycle(j).order();
  } else if (type == "gerbe") {
    const GerbePtr x = ws.gerbe(j);
    out["points"] = x->gset().size();
    out["N"] = x->cocycle().order();
  } else if (type == "bundle") {
    const EquivBundle e = ws.bundle(j);
    out["total_dim"] = e.total_dim();
    out["residual"] = bundle_residual(e);
  } else if (type == "kernel") {
    const Kernel k = ws.kernel(j);
    out["total_dim"] = k.bundle.total_dim();
    out["residual"] = bundle_residual(k.bundle);
  } else if (type == "extension") {
    out["characters"] = from_abelian_extension(ws.extension(j)).gset().size();
  } else {
    throw StructuralError("unknown type \"" + type + "\"");
  }
  out["valid"] = true;
  return out;
}

// One gerbe: Thm-11 dimensions of x and the End formulas. Two gerbes: everything for Hom(x, y).
Json dims_report(const Gerbe& x, const Gerbe* y) {
  const Gerbe t = y ? tensor_gerbes(*y, x) : x;
  const EndCount c = y ? hom_count_formula(*y, x) : end_count_formula(x);
  Json out;
  out["flat_dim"] = flat_sections(transgress(t)).dimension;
  out["center_dim"] = center_dimension(t);
  out["end_plain"] = rational_json(c.plain_numerator, c.plain_denominator);
  out["end_weighted"] = to_json(c.weighted);
  const GroupBundle chx = push_forward(x);
  out["homG"] = homG_dimension(chx, y ? push_forward(*y) : chx);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite equivariant gerbes, transgression and geometric characters"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::vector<std::string> files;
  std::string suite = "core";
  auto* validate = app.add_subcommand("validate", "Validate a JSON object file");
  validate->add_option("file", files)->required()->expected(1);
  auto* cohomology = app.add_subcommand("cohomology", "Decide whether two cocycles are cohomologous");
  cohomology->add_option("files", files)->required()->expected(2);
  auto* equiv = app.add_subcommand("equiv", "Search for an equivalence between two gerbes");
  equiv->add_option("files", files)->required()->expected(2);
  auto* transgress_cmd = app.add_subcommand("transgress", "Transgressed line bundle of a gerbe");
  transgress_cmd->add_option("file", files)->required()->expected(1);
  auto* char_cmd = app.add_subcommand("char", "Twisted character of a bundle");
  char_cmd->add_option("file", files)->required()->expected(1);
  auto* ch_cmd = app.add_subcommand("ch", "Geometric character of a gerbe");
  ch_cmd->add_option("file", files)->required()->expected(1);
  auto* chmor = app.add_subcommand("chmor", "Geometric character of a kernel");
  chmor->add_option("file", files)->required()->expected(1);
  auto* dims = app.add_subcommand("dims", "Dimension formulas for End(x) or Hom(x, y)");
  dims->add_option("files", files)->required()->expected(1, 2);
  auto* extension = app.add_subcommand("extension", "Gerbe of an abelian extension");
  extension->add_option("file", files)->required()->expected(1);
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--suite", suite, "Suite name")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Workspace ws(".");
  Json report;
  int code = 0;
  try {
    if (validate->parsed()) {
      report = validate_file(ws, files[0]);
    } else if (cohomology->parsed()) {
      const Cocycle2 phi = ws.cocycle(ws.read(files[0])), psi = ws.cocycle(ws.read(files[1]));
      const auto w = is_cohomologous(phi, psi);
      report["cohomologous"] = w.has_value();
      if (w) report["witness"] = to_json(*w);
    } else if (equiv->parsed()) {
      const GerbePtr x = ws.gerbe(ws.read(files[0])), y = ws.gerbe(ws.read(files[1]));
      const auto w = equivalence_check(*x, *y);
      report["equivalent"] = w.has_value();
      if (w) {
        report["map"] = w->map;
        report["cochain"] = to_json(w->cochain);
      }
    } else if (transgress_cmd->parsed()) {
      const GerbePtr x = ws.gerbe(ws.read(files[0]));
      const TransgressedBundle t = transgress(*x);
      Json tau = Json::object();
      for (int g = 0; g < x->group().order(); ++g)
        for (int k = 0; k < t.loops().size(); ++k) tau[std::to_string(g) + "," + std::to_string(k)] = to_json(t.value(g, k));
      report["loops"] = loops_json(t.loops());
      report["tau"] = std::move(tau);
      report["flat_dim"] = flat_sections(t).dimension;
    } else if (char_cmd->parsed()) {
      const EquivBundle e = ws.bundle(ws.read(files[0]));
      const TransgressedBundle t = transgress(e.gerbe());
      const FlatSection chi = twisted_character(e, t.loops());
      Json values = Json::array();
      for (Eigen::Index k = 0; k < chi.size(); ++k) values.push_back(to_json(chi[k]));
      report["loops"] = loops_json(t.loops());
      report["character"] = std::move(values);
      report["norm_squared"] = section_inner(t, chi, chi).real();
      report["flatness_residual"] = flatness_residual(t, chi);
    } else if (ch_cmd->parsed()) {
      const GerbePtr x = ws.gerbe(ws.read(files[0]));
      const GroupBundle ch = push_forward(*x);
      const int n = x->group().order();
      Json fibers = Json::object(), action = Json::object();
      for (int e = 0; e < n; ++e) fibers[std::to_string(e)] = ch.dim(e);
      for (int g = 0; g < n; ++g)
        for (int e = 0; e < n; ++e) action[std::to_string(g) + "," + std::to_string(e)] = to_json(ch.map(g, e));
      report["fibers"] = std::move(fibers);
      report["action"] = std::move(action);
    } else if (chmor->parsed()) {
      const Kernel k = ws.kernel(ws.read(files[0]));
      const auto mats = ch_on_morphism(k);
      report["matrices"] = matrices_by_element(mats);
      report["equivariance_residual"] =
          ch_equivariance_residual(push_forward(*k.target), push_forward(*k.source), mats);
    } else if (dims->parsed()) {
      const GerbePtr x = ws.gerbe(ws.read(files[0]));
      const GerbePtr y = files.size() > 1 ? ws.gerbe(ws.read(files[1])) : nullptr;
      report = dims_report(*x, y.get());
    } else if (extension->parsed()) {
      const AbelianExtension ext = ws.extension(ws.read(files[0]));
      const Gerbe x = from_abelian_extension(ext);
      Json points = Json::array();
      const auto chars = character_tuples(ext.cyclic_factors);
      const OrbitData orbits = orbits_and_stabilizers(x.gset());
      for (int i = 0; i < x.gset().size(); ++i) {
        const Gerbe at = restrict_gerbe(x, orbits.orbits[orbits.orbit_of[i]]);
        Json p;
        p["character"] = chars[i];
        p["orbit_flat_dim"] = flat_sections(transgress(at)).dimension;
        p["orbit_trivial_class"] = is_cohomologous(trivial_cocycle(at.gset_ptr()), at.cocycle()).has_value();
        points.push_back(std::move(p));
      }
      report["gerbe"] = to_json(x);
      report["points"] = std::move(points);
      report["flat_dim"] = flat_sections(transgress(x)).dimension;
    } else if (verify->parsed()) {
      if (suite != "core") throw StructuralError("unknown suite \"" + suite + "\"");
      Json criteria = Json::array();
      bool all = true;
      for (int id = 1; id <= kCriterionCount; ++id) {
        const CriterionResult r = run_criterion(id, seed);
        std::cerr << format_result(r) << "\n";
        Json c;
        c["id"] = r.id;
        c["title"] = r.title;
        c["pass"] = r.pass();
        c["checks"] = r.checks;
        c["max_residual"] = r.max_residual;
        c["failures"] = r.failures;
        c["notes"] = r.notes;
        criteria.push_back(std::move(c));
        all = all && r.pass();
      }
      report["suite"] = suite;
      report["seed"] = seed;
      report["all_pass"] = all;
      report["criteria"] = std::move(criteria);
      code = all ? 0 : 1;
    }
  } catch (const ValidationError& e) {
    report = Json::object();
    report["valid"] = false;
    report["error"] = e.what();
    std::cout << report.dump(2) << "\n";
    return 1;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << report.dump(2) << "\n";
  return code;
}
