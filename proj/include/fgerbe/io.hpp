#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "fgerbe/geochar.hpp"

namespace fgerbe {

using Json = nlohmann::ordered_json;

/// Loads objects from JSON. File references inside a file resolve relative to that file;
/// references in inline objects resolve against the base directory.
///
/// Anywhere an object is expected, a string or {"ref": path} names a file holding it.
/// Objects are either explicit tables or builders selected by a "kind" field:
///   group:   {"order", "mul", "labels"} | kind cyclic/dihedral/symmetric {"n"} | kind product {"factors"}
///   gset:    {"group", "size", "act"} | kind trivial {"points"} | left_translation | conjugation
///            | coset {"generators"} | product {"factors"}
///   cocycle: {"gset", "N", "exp"} | kind trivial | kind group_cocycle {"N", "table"}
///   gerbe:   {"gset", "metric", "cocycle"} | {"extension"}; metric entries are numbers or "p/q"
///   bundle:  {"gerbe", "dims", "maps": {"g,i": [[[re, im], ...], ...]}} | kind regular | trivial_line
///            | weyl {"n"} | line {"cochain": {"N", "exp"}}
///   kernel:  {"target", "source"} plus either bundle fields or kind identity | regular
///   extension: {"G", "K": {"cyclic_factors"}, "action", "phiK"}
/// Every loaded object is validated; failures throw ValidationError.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path base = ".") : base_(std::move(base)) {}

  Json read(const std::filesystem::path& file) const;
  /// Follows references until reaching an inline object.
  Json resolve(const Json& j) const;

  GroupPtr group(const Json& j);
  GSetPtr gset(const Json& j);
  Cocycle2 cocycle(const Json& j, GSetPtr default_gset = nullptr);
  GerbePtr gerbe(const Json& j);
  EquivBundle bundle(const Json& j);
  Kernel kernel(const Json& j);
  AbelianExtension extension(const Json& j);

 private:
  std::filesystem::path base_;
};

/// "group", "gset", "cocycle", "gerbe", "bundle", "kernel" or "extension": the explicit
/// "type" field if present, otherwise inferred from the keys.
std::string infer_type(const Json& j);

Json to_json(const FiniteGroup& g);
Json to_json(const GSet& s);
Json to_json(const Cocycle2& c);
Json to_json(const Cochain1& c);
Json to_json(const Gerbe& x);
Json to_json(const EquivBundle& e);
Json to_json(Complex z);
Json to_json(const MatrixXc& m);

}  // namespace fgerbe
