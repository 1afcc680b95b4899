#include "fgerbe/io.hpp"

#include <fstream>
#include <sstream>

#include "fgerbe/errors.hpp"

namespace fgerbe {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <typename T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::string kind_of(const Json& j) { return j.contains("kind") ? get<std::string>(j, "kind") : std::string(); }

ScaleFactor parse_scale(const Json& j) {
  if (j.is_number_integer()) return ScaleFactor::rational(j.get<std::int64_t>());
  if (j.is_number()) return ScaleFactor::real(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return ScaleFactor::rational(std::stoll(s));
      return ScaleFactor::rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw StructuralError("bad scale factor \"" + s + "\"");
    }
  }
  throw StructuralError("scale factor must be a number or a \"p/q\" string");
}

Complex parse_complex(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw StructuralError("complex entries are [re, im] pairs");
}

MatrixXc parse_matrix(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) throw StructuralError("matrix has the wrong number of rows");
  MatrixXc m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != cols)
      throw StructuralError("matrix has the wrong number of columns");
    for (int c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c]);
  }
  return m;
}

bool is_ref(const Json& j) { return j.is_string() || (j.is_object() && j.size() == 1 && j.contains("ref")); }

// Rewrites file references inside a loaded document so they resolve relative to its directory.
void anchor_refs(Json& j, const std::filesystem::path& dir) {
  static const char* kRefKeys[] = {"group", "gset", "cocycle", "gerbe", "target", "source", "extension", "G"};
  auto anchor = [&](Json& v) {
    if (!is_ref(v)) {
      anchor_refs(v, dir);
      return;
    }
    Json& path = v.is_string() ? v : v["ref"];
    const std::filesystem::path rel = path.get<std::string>();
    if (rel.is_relative()) path = (dir / rel).lexically_normal().string();
  };
  if (!j.is_object()) return;
  for (const char* key : kRefKeys)
    if (j.contains(key)) anchor(j[key]);
  if (j.contains("factors") && j["factors"].is_array())
    for (auto& f : j["factors"]) anchor(f);
}

double clean(double v) { return std::abs(v) < 1e-13 ? 0.0 : v; }

}  // namespace

Json Workspace::read(const std::filesystem::path& file) const {
  const auto path = file.is_absolute() ? file : base_ / file;
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  try {
    Json j = Json::parse(in);
    anchor_refs(j, path.parent_path());
    return j;
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(path.string() + ": " + e.what());
  }
}

Json Workspace::resolve(const Json& j) const {
  Json cur = j;
  for (int depth = 0; depth < 32; ++depth) {
    if (cur.is_string()) {
      cur = read(cur.get<std::string>());
    } else if (is_ref(cur)) {
      cur = read(get<std::string>(cur, "ref"));
    } else {
      return cur;
    }
  }
  throw StructuralError("reference chain too deep");
}

GroupPtr Workspace::group(const Json& in) {
  const Json j = resolve(in);
  const std::string kind = kind_of(j);
  if (kind == "cyclic") return std::make_shared<const FiniteGroup>(cyclic_group(get<int>(j, "n")));
  if (kind == "dihedral") return std::make_shared<const FiniteGroup>(dihedral_group(get<int>(j, "n")));
  if (kind == "symmetric") return std::make_shared<const FiniteGroup>(symmetric_group(get<int>(j, "n")));
  if (kind == "product") {
    const Json& f = field(j, "factors");
    if (!f.is_array() || f.size() < 1) throw StructuralError("product needs a list of factors");
    FiniteGroup acc = *group(f[0]);
    for (std::size_t k = 1; k < f.size(); ++k) acc = product_group(acc, *group(f[k]));
    return std::make_shared<const FiniteGroup>(std::move(acc));
  }
  if (!kind.empty() && kind != "table") throw StructuralError("unknown group kind \"" + kind + "\"");
  auto rows = get<std::vector<std::vector<int>>>(j, "mul");
  if (j.contains("order") && get<int>(j, "order") != static_cast<int>(rows.size()))
    throw StructuralError("order does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(std::move(rows), std::move(labels)));
}

GSetPtr Workspace::gset(const Json& in) {
  const Json j = resolve(in);
  const std::string kind = kind_of(j);
  if (kind == "product") {
    const Json& f = field(j, "factors");
    if (!f.is_array() || f.size() != 2) throw StructuralError("gset product takes two factors");
    return std::make_shared<const GSet>(product_gset(*gset(f[0]), *gset(f[1])));
  }
  GroupPtr g = group(field(j, "group"));
  if (kind == "trivial") {
    const int points = j.contains("points") ? get<int>(j, "points") : 1;
    return std::make_shared<const GSet>(trivial_gset(g, points));
  }
  if (kind == "left_translation") return std::make_shared<const GSet>(left_translation(g));
  if (kind == "conjugation") return std::make_shared<const GSet>(conjugation_gset(g));
  if (kind == "coset") return std::make_shared<const GSet>(coset_gset(g, get<std::vector<int>>(j, "generators")));
  if (!kind.empty() && kind != "table") throw StructuralError("unknown gset kind \"" + kind + "\"");
  const int size = get<int>(j, "size");
  return std::make_shared<const GSet>(g, size, get<std::vector<std::vector<int>>>(j, "act"));
}

Cocycle2 Workspace::cocycle(const Json& in, GSetPtr default_gset) {
  const Json j = resolve(in);
  GSetPtr s = j.contains("gset") ? gset(field(j, "gset")) : default_gset;
  if (!s) throw StructuralError("cocycle without a gset");
  if (default_gset && !(*s == *default_gset)) throw StructuralError("cocycle lives on a different gset");
  const std::string kind = kind_of(j);
  std::optional<Cocycle2> c;
  if (kind == "trivial") {
    c = trivial_cocycle(s);
  } else if (kind == "group_cocycle") {
    c = inflate_group_cocycle(s, get<int>(j, "N"), get<std::vector<std::vector<int>>>(j, "table"));
  } else if (kind.empty() || kind == "table") {
    const auto exp = get<std::vector<std::vector<std::vector<int>>>>(j, "exp");
    const std::size_t n = s->group().order();
    if (exp.size() != static_cast<std::size_t>(s->size())) throw StructuralError("exp has the wrong number of points");
    std::vector<int> flat;
    flat.reserve(exp.size() * n * n);
    for (const auto& plane : exp) {
      if (plane.size() != n) throw StructuralError("exp has the wrong shape");
      for (const auto& row : plane) {
        if (row.size() != n) throw StructuralError("exp has the wrong shape");
        flat.insert(flat.end(), row.begin(), row.end());
      }
    }
    c = Cocycle2(s, get<int>(j, "N"), std::move(flat));
  } else {
    throw StructuralError("unknown cocycle kind \"" + kind + "\"");
  }
  if (auto v = validate_cocycle(*c)) throw ValidationError(v->describe());
  return *c;
}

GerbePtr Workspace::gerbe(const Json& in) {
  const Json j = resolve(in);
  if (j.contains("extension")) {
    Gerbe x = from_abelian_extension(extension(field(j, "extension")));
    if (!j.contains("metric")) return std::make_shared<const Gerbe>(std::move(x));
    std::vector<ScaleFactor> metric;
    for (const auto& k : field(j, "metric")) metric.push_back(parse_scale(k));
    return std::make_shared<const Gerbe>(with_metric(x, std::move(metric)));
  }
  GSetPtr s = j.contains("gset") ? gset(field(j, "gset")) : nullptr;
  Cocycle2 c = j.contains("cocycle") ? cocycle(field(j, "cocycle"), s) : trivial_cocycle(s);
  if (!s) s = c.gset_ptr();
  std::vector<ScaleFactor> metric;
  if (j.contains("metric")) {
    for (const auto& k : field(j, "metric")) metric.push_back(parse_scale(k));
    if (static_cast<int>(metric.size()) != s->size()) throw StructuralError("metric has the wrong length");
  } else {
    metric.assign(s->size(), ScaleFactor::rational(1));
  }
  return std::make_shared<const Gerbe>(std::move(metric), std::move(c));
}

namespace {

EquivBundle bundle_from_fields(const Json& j, GerbePtr x) {
  const std::string kind = kind_of(j);
  std::optional<EquivBundle> e;
  if (kind == "regular") {
    e = regular_bundle(x);
  } else if (kind == "trivial_line") {
    e = trivial_line_bundle(x);
  } else if (kind == "weyl") {
    e = constant_bundle(x, weyl_matrices(get<int>(j, "n")));
  } else if (kind == "line") {
    const Json& c = field(j, "cochain");
    const auto exp = get<std::vector<std::vector<int>>>(c, "exp");
    std::vector<int> flat;
    for (const auto& row : exp) flat.insert(flat.end(), row.begin(), row.end());
    e = line_bundle(x, Cochain1(x->gset_ptr(), get<int>(c, "N"), std::move(flat)));
  } else if (kind.empty() || kind == "table") {
    const auto dims = get<std::vector<int>>(j, "dims");
    const int m = x->gset().size(), n = x->group().order();
    if (static_cast<int>(dims.size()) != m) throw StructuralError("dims has the wrong length");
    const Json& maps = field(j, "maps");
    std::vector<MatrixXc> mats(static_cast<std::size_t>(n) * m);
    for (int g = 0; g < n; ++g)
      for (int i = 0; i < m; ++i) {
        const int rows = dims[x->gset().act(g, i)], cols = dims[i];
        const std::string key = std::to_string(g) + "," + std::to_string(i);
        if (maps.contains(key)) {
          mats[static_cast<std::size_t>(g) * m + i] = parse_matrix(maps.at(key), rows, cols);
        } else if (rows == 0 || cols == 0) {
          mats[static_cast<std::size_t>(g) * m + i] = MatrixXc(rows, cols);
        } else {
          throw StructuralError("missing map \"" + key + "\"");
        }
      }
    e = EquivBundle(std::move(x), dims, std::move(mats));
  } else {
    throw StructuralError("unknown bundle kind \"" + kind + "\"");
  }
  if (auto v = validate_bundle(*e)) throw ValidationError(v->describe());
  return *e;
}

}  // namespace

EquivBundle Workspace::bundle(const Json& in) {
  const Json j = resolve(in);
  return bundle_from_fields(j, gerbe(field(j, "gerbe")));
}

Kernel Workspace::kernel(const Json& in) {
  const Json j = resolve(in);
  GerbePtr target = gerbe(field(j, "target"));
  GerbePtr source = gerbe(field(j, "source"));
  const std::string kind = kind_of(j);
  if (kind == "identity") {
    if (!(target->gset() == source->gset()) || !(target->cocycle() == source->cocycle()))
      throw StructuralError("identity kernel needs equal target and source");
    return identity_kernel(target);
  }
  if (kind == "regular") return regular_kernel(target, source);
  auto tensor = std::make_shared<const Gerbe>(tensor_gerbes(*target, *source));
  return make_kernel(target, source, bundle_from_fields(j, tensor));
}

AbelianExtension Workspace::extension(const Json& in) {
  const Json j = resolve(in);
  AbelianExtension ext;
  ext.group = group(field(j, "G"));
  ext.cyclic_factors = get<std::vector<int>>(field(j, "K"), "cyclic_factors");
  const std::size_t n = ext.group->order(), r = ext.cyclic_factors.size();
  if (j.contains("action")) {
    ext.action = get<std::vector<std::vector<std::vector<int>>>>(j, "action");
  } else {
    ext.action.assign(n, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
    for (auto& a : ext.action)
      for (std::size_t k = 0; k < r; ++k) a[k][k] = 1;
  }
  ext.cocycle = get<std::vector<std::vector<std::vector<int>>>>(j, "phiK");
  if (ext.action.size() != n || ext.cocycle.size() != n) throw StructuralError("extension tables have the wrong shape");
  for (const auto& a : ext.action) {
    if (a.size() != r) throw StructuralError("action has the wrong shape");
    for (const auto& t : a)
      if (t.size() != r) throw StructuralError("action has the wrong shape");
  }
  for (const auto& row : ext.cocycle) {
    if (row.size() != n) throw StructuralError("phiK has the wrong shape");
    for (const auto& t : row)
      if (t.size() != r) throw StructuralError("phiK has the wrong shape");
  }
  validate_extension(ext);
  return ext;
}

std::string infer_type(const Json& j) {
  if (j.is_object() && j.contains("type")) return j.at("type").get<std::string>();
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  if (j.contains("K") || j.contains("phiK")) return "extension";
  if (j.contains("target") && j.contains("source")) return "kernel";
  if (j.contains("gerbe")) return "bundle";
  if (j.contains("metric") || j.contains("cocycle") || j.contains("extension")) return "gerbe";
  if (j.contains("exp") || j.contains("N")) return "cocycle";
  if (j.contains("act") || j.contains("group")) return "gset";
  if (j.contains("mul") || j.contains("kind")) return "group";
  throw StructuralError("cannot tell what kind of object this file holds");
}

Json to_json(const FiniteGroup& g) {
  Json j;
  j["order"] = g.order();
  j["mul"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json to_json(const GSet& s) {
  Json j;
  j["group"] = to_json(s.group());
  j["size"] = s.size();
  j["act"] = s.table();
  return j;
}

Json to_json(const Cocycle2& c) {
  const int n = c.gset().group().order();
  Json exp = Json::array();
  for (int i = 0; i < c.gset().size(); ++i) {
    Json plane = Json::array();
    for (int g2 = 0; g2 < n; ++g2) {
      Json row = Json::array();
      for (int g1 = 0; g1 < n; ++g1) row.push_back(c(i, g2, g1));
      plane.push_back(std::move(row));
    }
    exp.push_back(std::move(plane));
  }
  Json j;
  j["gset"] = to_json(c.gset());
  j["N"] = c.order();
  j["exp"] = std::move(exp);
  return j;
}

Json to_json(const Cochain1& c) {
  const int n = c.gset().group().order();
  Json exp = Json::array();
  for (int i = 0; i < c.gset().size(); ++i) {
    Json row = Json::array();
    for (int g = 0; g < n; ++g) row.push_back(c(i, g));
    exp.push_back(std::move(row));
  }
  Json j;
  j["N"] = c.order();
  j["exp"] = std::move(exp);
  return j;
}

Json to_json(const Gerbe& x) {
  Json metric = Json::array();
  for (const auto& k : x.metric()) {
    if (k.is_rational() && k.denominator() == 1)
      metric.push_back(k.numerator());
    else if (k.is_rational())
      metric.push_back(k.to_string());
    else
      metric.push_back(k.value());
  }
  Json c = to_json(x.cocycle());
  Json j;
  j["gset"] = c["gset"];
  j["metric"] = std::move(metric);
  c.erase("gset");
  j["cocycle"] = std::move(c);
  return j;
}

Json to_json(Complex z) { return Json::array({clean(z.real()), clean(z.imag())}); }

Json to_json(const MatrixXc& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const EquivBundle& e) {
  Json maps = Json::object();
  const int n = e.gerbe().group().order();
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < e.points(); ++i) {
      const MatrixXc& m = e.map(g, i);
      if (m.size() == 0) continue;
      maps[std::to_string(g) + "," + std::to_string(i)] = to_json(m);
    }
  Json j;
  j["gerbe"] = to_json(e.gerbe());
  j["dims"] = e.dims();
  j["maps"] = std::move(maps);
  return j;
}

}  // namespace fgerbe
