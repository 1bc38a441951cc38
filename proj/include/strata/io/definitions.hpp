#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "strata/algebra/basic.hpp"
#include "strata/lie/lie.hpp"
#include "strata/strata/poset.hpp"

namespace strata::io {

using json = nlohmann::ordered_json;

struct LoadIssue {
  std::string file;
  std::string location;
  std::string message;

  std::string to_string() const;
};

class LoadError : public std::runtime_error {
 public:
  explicit LoadError(std::vector<LoadIssue> issues);
  const std::vector<LoadIssue>& issues() const { return issues_; }

 private:
  std::vector<LoadIssue> issues_;
};

/// Unknown algebra, module or order name.
class NameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using CoverPairs = std::vector<std::pair<std::size_t, std::size_t>>;

struct AlgebraEntry {
  algebra::AlgebraPtr algebra;
  /// Present when the file lists idempotents.
  algebra::BasicAlgebraPtr basic;
  /// Named orders; the file's "order" key is stored as "default".
  std::vector<std::pair<std::string, CoverPairs>> orders;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> segments;
  std::string path;

  const algebra::BasicAlgebra& require_basic() const;
  std::optional<CoverPairs> find_order(const std::string& name) const;
  std::optional<std::vector<std::size_t>> find_segment(const std::string& name) const;
};

struct ModuleEntry {
  std::string name;
  std::string algebra;
  algebra::Module module;
  std::string path;
};

struct LieAlgebraEntry {
  lie::LieAlgebraPtr algebra;
  std::string path;
};

struct LieModuleEntry {
  std::string name;
  std::string lie_algebra;
  lie::LieModule module;
  std::string path;
};

struct Workspace {
  std::map<std::string, AlgebraEntry> algebras;
  std::map<std::string, ModuleEntry> modules;
  std::map<std::string, LieAlgebraEntry> lie_algebras;
  std::map<std::string, LieModuleEntry> lie_modules;

  bool empty() const;
  const AlgebraEntry& algebra(const std::string& name) const;
  const LieAlgebraEntry& lie_algebra(const std::string& name) const;
};

/// Files and directories (every *.json inside, sorted). Validates every
/// object and cross-reference; throws LoadError listing all issues.
Workspace load_definitions(const std::vector<std::string>& paths);
/// Adds the definitions of one JSON document (object or {"definitions": [...]}).
void load_document(Workspace& ws, const json& doc, const std::string& origin);

/// Field-appropriate scalar JSON: "p/q" strings over Q, integers over F_p.
json scalar_to_json(const linalg::Scalar& s);
linalg::Scalar scalar_from_json(const linalg::Field& f, const json& j);
json matrix_to_json(const linalg::Matrix& m);

json algebra_to_json(const AlgebraEntry& e);
json module_to_json(const ModuleEntry& e);
json lie_algebra_to_json(const LieAlgebraEntry& e);
json lie_module_to_json(const LieModuleEntry& e);
/// Every entry, as a {"definitions": [...]} document.
json workspace_to_json(const Workspace& ws);

/// Order by name, "antichain", or comma-separated "x<y" pairs of family labels.
strata::Poset resolve_order(const AlgebraEntry& e, const std::optional<std::string>& text);
/// Segment by name or comma-separated family labels.
std::vector<std::size_t> resolve_segment(const AlgebraEntry& e, const std::string& text);

/// S<x>/L<x> simple, P<x> projective, I<x> injective, M<x> standard (needs
/// an order), A regular, or a module loaded for this algebra.
algebra::Module resolve_module(const Workspace& ws, const std::string& algebra_name,
                               const std::string& name,
                               const std::optional<strata::Poset>& order = std::nullopt);
/// "trivial", "adjoint", or a loaded Lie module.
lie::LieModule resolve_lie_module(const Workspace& ws, const std::string& lie_algebra,
                                  const std::string& name);

/// Ideal generated by tokens: basis labels, family labels (e_x), "rad", "A".
algebra::Ideal resolve_ideal(const AlgebraEntry& e, const std::vector<std::string>& tokens);

}  // namespace strata::io
