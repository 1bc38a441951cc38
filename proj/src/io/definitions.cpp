#include "strata/io/definitions.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "strata/strata/standard.hpp"

namespace strata::io {

namespace fs = std::filesystem;
using algebra::Algebra;
using algebra::IdempotentFamily;
using algebra::Module;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Vec;

std::string LoadIssue::to_string() const {
  std::string s = file;
  if (!location.empty()) s += ": " + location;
  return s + ": " + message;
}

namespace {

std::string join_issues(const std::vector<LoadIssue>& issues) {
  std::string s;
  for (std::size_t i = 0; i < issues.size(); ++i) s += (i ? "; " : "") + issues[i].to_string();
  return s.empty() ? "load failed" : s;
}

/// Thrown inside one definition; becomes a LoadIssue.
struct Fail {
  std::string location;
  std::string message;
};

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Fail{where, std::string("missing key '") + key + "'"};
  return j.at(key);
}

std::string need_string(const json& j, const char* key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw Fail{where + "." + key, "expected a string"};
  return v.get<std::string>();
}

std::size_t index_of(const std::vector<std::string>& labels, const json& token,
                     const std::string& where) {
  if (token.is_number_unsigned() || token.is_number_integer()) {
    auto i = token.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size())
      throw Fail{where, "index " + std::to_string(i) + " out of range"};
    return static_cast<std::size_t>(i);
  }
  if (token.is_string()) {
    auto it = std::find(labels.begin(), labels.end(), token.get<std::string>());
    if (it == labels.end()) throw Fail{where, "unknown label '" + token.get<std::string>() + "'"};
    return static_cast<std::size_t>(it - labels.begin());
  }
  throw Fail{where, "expected an index or a label"};
}

Vec vector_from_json(const Field& f, const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw Fail{where, "expected an array of " + std::to_string(n) + " coefficients"};
  Vec v;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      v.push_back(scalar_from_json(f, j[i]));
    } catch (const std::exception& e) {
      throw Fail{where + "[" + std::to_string(i) + "]", e.what()};
    }
  }
  return v;
}

Matrix matrix_from_json(const Field& f, const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw Fail{where, "expected " + std::to_string(n) + " rows"};
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    m.set_row(r, vector_from_json(f, j[r], n, where + "[" + std::to_string(r) + "]"));
  return m;
}

std::vector<std::string> labels_from_json(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array() || j.size() != dim)
    throw Fail{where, "expected " + std::to_string(dim) + " basis labels"};
  std::vector<std::string> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw Fail{where, "labels must be strings"};
    if (std::find(out.begin(), out.end(), l.get<std::string>()) != out.end())
      throw Fail{where, "duplicate label '" + l.get<std::string>() + "'"};
    out.push_back(l.get<std::string>());
  }
  return out;
}

std::size_t need_dim(const json& j, const std::string& where) {
  const json& d = need(j, "dim", where);
  if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long long>() >= 0))
    throw Fail{where + ".dim", "expected a nonnegative integer"};
  return d.get<std::size_t>();
}

/// Structure constants from sparse [i, j, k, c] entries (b_i * b_j += c b_k).
std::vector<std::vector<Vec>> sparse_table(const Field& f, const std::vector<std::string>& labels,
                                           const json& entries, const std::string& where) {
  std::size_t n = labels.size();
  std::vector<std::vector<Vec>> t(n, std::vector<Vec>(n, linalg::zero_vec(f, n)));
  if (!entries.is_array()) throw Fail{where, "expected an array of [i, j, k, c] entries"};
  for (std::size_t e = 0; e < entries.size(); ++e) {
    std::string at = where + "[" + std::to_string(e) + "]";
    const json& row = entries[e];
    if (!row.is_array() || row.size() != 4) throw Fail{at, "expected [i, j, k, c]"};
    std::size_t i = index_of(labels, row[0], at), j = index_of(labels, row[1], at),
                k = index_of(labels, row[2], at);
    try {
      t[i][j][k] += scalar_from_json(f, row[3]);
    } catch (const std::exception& ex) {
      throw Fail{at, ex.what()};
    }
  }
  return t;
}

CoverPairs order_from_json(const std::vector<std::string>& family, const json& j,
                           const std::string& where) {
  if (!j.is_array()) throw Fail{where, "expected an array of [x, y] pairs"};
  CoverPairs out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw Fail{at, "expected [x, y]"};
    out.emplace_back(index_of(family, j[i][0], at), index_of(family, j[i][1], at));
  }
  try {
    strata::Poset::from_covers(family, out);
  } catch (const algebra::ValidationError& e) {
    throw Fail{where, e.what()};
  }
  return out;
}

void load_algebra(Workspace& ws, const json& j, const std::string& path) {
  std::string name = need_string(j, "name", "algebra");
  std::string where = "algebra '" + name + "'";
  if (ws.algebras.count(name)) throw Fail{where, "defined twice"};
  Field f;
  try {
    f = Field::parse(need_string(j, "field", where));
  } catch (const Fail&) {
    throw;
  } catch (const std::exception& e) {
    throw Fail{where + ".field", e.what()};
  }
  std::size_t dim = need_dim(j, where);
  Algebra::Table t;
  t.name = name;
  t.field = f;
  t.labels = labels_from_json(need(j, "basis", where), dim, where + ".basis");
  t.mult = sparse_table(f, t.labels, need(j, "mult", where), where + ".mult");
  t.one = vector_from_json(f, need(j, "one", where), dim, where + ".one");
  if (j.contains("radical")) {
    std::vector<Vec> rad;
    const json& r = j.at("radical");
    if (!r.is_array()) throw Fail{where + ".radical", "expected an array of vectors"};
    for (std::size_t i = 0; i < r.size(); ++i)
      rad.push_back(vector_from_json(f, r[i], dim, where + ".radical[" + std::to_string(i) + "]"));
    t.radical = std::move(rad);
  }
  auto violations = Algebra::check(t);
  if (!violations.empty()) throw Fail{where, violations.front().to_string()};
  AlgebraEntry e;
  try {
    e.algebra = Algebra::create(std::move(t));
  } catch (const std::exception& ex) {
    throw Fail{where, ex.what()};
  }
  e.path = path;
  if (j.contains("idempotents")) {
    const json& idem = j.at("idempotents");
    if (!idem.is_object()) throw Fail{where + ".idempotents", "expected an object label -> vector"};
    std::vector<std::string> labels;
    std::vector<Vec> elements;
    for (auto it = idem.begin(); it != idem.end(); ++it) {
      labels.push_back(it.key());
      elements.push_back(vector_from_json(f, it.value(), dim, where + ".idempotents." + it.key()));
    }
    try {
      auto fam = IdempotentFamily::validate(*e.algebra, labels, elements);
      e.basic = algebra::BasicAlgebra::create(e.algebra, std::move(fam));
    } catch (const std::exception& ex) {
      throw Fail{where + ".idempotents", ex.what()};
    }
    const auto& fl = e.basic->family().labels;
    if (j.contains("order")) e.orders.emplace_back("default", order_from_json(fl, j.at("order"), where + ".order"));
    if (j.contains("orders")) {
      const json& os = j.at("orders");
      if (!os.is_object()) throw Fail{where + ".orders", "expected an object name -> pairs"};
      for (auto it = os.begin(); it != os.end(); ++it) {
        if (it.key() == "default" || it.key() == "antichain")
          throw Fail{where + ".orders", "reserved order name '" + it.key() + "'"};
        e.orders.emplace_back(it.key(), order_from_json(fl, it.value(), where + ".orders." + it.key()));
      }
    }
    if (j.contains("segments")) {
      const json& ss = j.at("segments");
      if (!ss.is_object()) throw Fail{where + ".segments", "expected an object name -> labels"};
      for (auto it = ss.begin(); it != ss.end(); ++it) {
        std::vector<std::size_t> seg;
        if (!it.value().is_array()) throw Fail{where + ".segments." + it.key(), "expected labels"};
        for (const auto& l : it.value()) seg.push_back(index_of(fl, l, where + ".segments." + it.key()));
        std::sort(seg.begin(), seg.end());
        e.segments.emplace_back(it.key(), std::move(seg));
      }
    }
  } else if (j.contains("order") || j.contains("orders") || j.contains("segments")) {
    throw Fail{where, "orders and segments need an idempotent family"};
  }
  ws.algebras.emplace(name, std::move(e));
}

void load_module(Workspace& ws, const json& j, const std::string& path) {
  std::string name = need_string(j, "name", "module");
  std::string where = "module '" + name + "'";
  if (ws.modules.count(name)) throw Fail{where, "defined twice"};
  std::string alg = need_string(j, "algebra", where);
  auto it = ws.algebras.find(alg);
  if (it == ws.algebras.end()) throw Fail{where + ".algebra", "unknown algebra '" + alg + "'"};
  const Algebra& a = *it->second.algebra;
  std::size_t dim = need_dim(j, where);
  const json& act = need(j, "action", where);
  if (!act.is_object()) throw Fail{where + ".action", "expected an object label -> matrix"};
  std::vector<Matrix> action(a.dim(), Matrix(a.field(), dim, dim));
  for (auto m = act.begin(); m != act.end(); ++m) {
    std::size_t i = index_of(a.labels(), json(m.key()), where + ".action");
    action[i] = matrix_from_json(a.field(), m.value(), dim, where + ".action." + m.key());
  }
  auto violations = Module::check(a, action);
  if (!violations.empty()) throw Fail{where, violations.front().to_string()};
  ws.modules.emplace(name, ModuleEntry{name, alg, Module::create(it->second.algebra, std::move(action)), path});
}

void load_lie_algebra(Workspace& ws, const json& j, const std::string& path) {
  std::string name = need_string(j, "name", "Lie algebra");
  std::string where = "Lie algebra '" + name + "'";
  if (ws.lie_algebras.count(name)) throw Fail{where, "defined twice"};
  lie::LieAlgebra::Table t;
  t.name = name;
  try {
    t.field = Field::parse(need_string(j, "field", where));
  } catch (const Fail&) {
    throw;
  } catch (const std::exception& e) {
    throw Fail{where + ".field", e.what()};
  }
  std::size_t dim = need_dim(j, where);
  t.labels = labels_from_json(need(j, "basis", where), dim, where + ".basis");
  t.bracket = sparse_table(t.field, t.labels, need(j, "bracket", where), where + ".bracket");
  auto violations = lie::LieAlgebra::check(t);
  if (!violations.empty()) throw Fail{where, violations.front().to_string()};
  ws.lie_algebras.emplace(name, LieAlgebraEntry{lie::LieAlgebra::create(std::move(t)), path});
}

void load_lie_module(Workspace& ws, const json& j, const std::string& path) {
  std::string name = need_string(j, "name", "Lie module");
  std::string where = "Lie module '" + name + "'";
  if (ws.lie_modules.count(name) || name == "trivial" || name == "adjoint")
    throw Fail{where, "defined twice or reserved"};
  std::string alg = need_string(j, "lie_algebra", where);
  auto it = ws.lie_algebras.find(alg);
  if (it == ws.lie_algebras.end()) throw Fail{where + ".lie_algebra", "unknown Lie algebra '" + alg + "'"};
  const lie::LieAlgebra& g = *it->second.algebra;
  std::size_t dim = need_dim(j, where);
  const json& act = need(j, "action", where);
  if (!act.is_object()) throw Fail{where + ".action", "expected an object label -> matrix"};
  std::vector<Matrix> action(g.dim(), Matrix(g.field(), dim, dim));
  for (auto m = act.begin(); m != act.end(); ++m) {
    std::size_t i = index_of(g.labels(), json(m.key()), where + ".action");
    action[i] = matrix_from_json(g.field(), m.value(), dim, where + ".action." + m.key());
  }
  auto violations = lie::LieModule::check(g, action);
  if (!violations.empty()) throw Fail{where, violations.front().to_string()};
  ws.lie_modules.emplace(
      name, LieModuleEntry{name, alg, lie::LieModule::create(it->second.algebra, std::move(action), name), path});
}

enum class Kind { algebra, module, lie_algebra, lie_module, unknown };

Kind kind_of(const json& j) {
  if (!j.is_object()) return Kind::unknown;
  if (j.contains("mult")) return Kind::algebra;
  if (j.contains("bracket")) return Kind::lie_algebra;
  if (j.contains("lie_algebra")) return Kind::lie_module;
  if (j.contains("algebra")) return Kind::module;
  return Kind::unknown;
}

std::vector<json> split(const json& doc) {
  if (doc.is_object() && doc.contains("definitions")) {
    std::vector<json> out;
    for (const auto& d : doc.at("definitions")) out.push_back(d);
    return out;
  }
  if (doc.is_array()) return std::vector<json>(doc.begin(), doc.end());
  return {doc};
}

/// Loads in dependency order: algebras and Lie algebras before their modules.
void load_all(Workspace& ws, const std::vector<std::pair<json, std::string>>& defs,
              std::vector<LoadIssue>& issues) {
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& [j, origin] : defs) {
      Kind k = kind_of(j);
      bool first = k == Kind::algebra || k == Kind::lie_algebra || k == Kind::unknown;
      if ((pass == 0) != first) continue;
      try {
        switch (k) {
          case Kind::algebra: load_algebra(ws, j, origin); break;
          case Kind::lie_algebra: load_lie_algebra(ws, j, origin); break;
          case Kind::module: load_module(ws, j, origin); break;
          case Kind::lie_module: load_lie_module(ws, j, origin); break;
          case Kind::unknown: throw Fail{"", "unrecognized definition (no mult, bracket or action)"};
        }
      } catch (const Fail& f) {
        issues.push_back({origin, f.location, f.message});
      } catch (const std::exception& e) {
        issues.push_back({origin, "", e.what()});
      }
    }
}

std::string order_pair_labels(const std::vector<std::string>& labels, const std::string& text,
                              CoverPairs& out) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto lt = item.find('<');
    if (lt == std::string::npos) return "expected x<y, got '" + item + "'";
    std::string x = item.substr(0, lt), y = item.substr(lt + 1);
    auto ix = std::find(labels.begin(), labels.end(), x), iy = std::find(labels.begin(), labels.end(), y);
    if (ix == labels.end() || iy == labels.end()) return "unknown label in '" + item + "'";
    out.emplace_back(ix - labels.begin(), iy - labels.begin());
  }
  return {};
}

}  // namespace

LoadError::LoadError(std::vector<LoadIssue> issues)
    : std::runtime_error(join_issues(issues)), issues_(std::move(issues)) {}

const algebra::BasicAlgebra& AlgebraEntry::require_basic() const {
  if (!basic)
    throw algebra::PreconditionError("algebra '" + algebra->name() + "' has no idempotent family");
  return *basic;
}

std::optional<CoverPairs> AlgebraEntry::find_order(const std::string& name) const {
  for (const auto& [n, o] : orders)
    if (n == name) return o;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> AlgebraEntry::find_segment(const std::string& name) const {
  for (const auto& [n, s] : segments)
    if (n == name) return s;
  return std::nullopt;
}

bool Workspace::empty() const {
  return algebras.empty() && modules.empty() && lie_algebras.empty() && lie_modules.empty();
}

const AlgebraEntry& Workspace::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw NameError("unknown algebra '" + name + "'");
  return it->second;
}

const LieAlgebraEntry& Workspace::lie_algebra(const std::string& name) const {
  auto it = lie_algebras.find(name);
  if (it == lie_algebras.end()) throw NameError("unknown Lie algebra '" + name + "'");
  return it->second;
}

Workspace load_definitions(const std::vector<std::string>& paths) {
  std::vector<LoadIssue> issues;
  std::vector<std::pair<json, std::string>> defs;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          found.push_back(entry.path().string());
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) {
      issues.push_back({file, "", "cannot read file"});
      continue;
    }
    try {
      json doc = json::parse(in);
      for (auto& d : split(doc)) defs.emplace_back(std::move(d), file);
    } catch (const json::parse_error& e) {
      issues.push_back({file, "byte " + std::to_string(e.byte), "JSON parse error"});
    }
  }
  Workspace ws;
  load_all(ws, defs, issues);
  if (!issues.empty()) throw LoadError(std::move(issues));
  return ws;
}

void load_document(Workspace& ws, const json& doc, const std::string& origin) {
  std::vector<LoadIssue> issues;
  std::vector<std::pair<json, std::string>> defs;
  for (auto& d : split(doc)) defs.emplace_back(std::move(d), origin);
  load_all(ws, defs, issues);
  if (!issues.empty()) throw LoadError(std::move(issues));
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Scalar scalar_from_json(const Field& f, const json& j) {
  if (j.is_string()) return f.parse_scalar(j.get<std::string>());
  if (j.is_number_integer() || j.is_number_unsigned()) return f.from_int(j.get<long long>());
  throw std::invalid_argument("scalars must be strings or integers");
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json vec_json(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

json sparse_json(const std::vector<std::vector<Vec>>& t) {
  json out = json::array();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j)
      for (std::size_t k = 0; k < t[i][j].size(); ++k)
        if (!t[i][j][k].is_zero()) out.push_back(json::array({i, j, k, scalar_to_json(t[i][j][k])}));
  return out;
}

json order_json(const std::vector<std::string>& labels, const CoverPairs& pairs) {
  json out = json::array();
  for (auto [x, y] : pairs) out.push_back(json::array({labels[x], labels[y]}));
  return out;
}

json action_json(const std::vector<std::string>& labels, const std::vector<Matrix>& action) {
  json out = json::object();
  for (std::size_t i = 0; i < action.size(); ++i)
    if (!action[i].is_zero()) out[labels[i]] = matrix_to_json(action[i]);
  return out;
}

}  // namespace

json algebra_to_json(const AlgebraEntry& e) {
  const Algebra& a = *e.algebra;
  json j;
  j["name"] = a.name();
  j["field"] = a.field().name();
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  j["mult"] = sparse_json(a.table().mult);
  j["one"] = vec_json(a.one());
  if (a.table().radical) {
    json r = json::array();
    for (const auto& v : *a.table().radical) r.push_back(vec_json(v));
    j["radical"] = std::move(r);
  }
  if (e.basic) {
    const auto& fam = e.basic->family();
    json idem = json::object();
    for (std::size_t x = 0; x < fam.size(); ++x) idem[fam.labels[x]] = vec_json(fam.elements[x]);
    j["idempotents"] = std::move(idem);
    json named = json::object();
    for (const auto& [name, pairs] : e.orders) {
      if (name == "default")
        j["order"] = order_json(fam.labels, pairs);
      else
        named[name] = order_json(fam.labels, pairs);
    }
    if (!named.empty()) j["orders"] = std::move(named);
    if (!e.segments.empty()) {
      json segs = json::object();
      for (const auto& [name, s] : e.segments) {
        json labels = json::array();
        for (auto x : s) labels.push_back(fam.labels[x]);
        segs[name] = std::move(labels);
      }
      j["segments"] = std::move(segs);
    }
  }
  return j;
}

json module_to_json(const ModuleEntry& e) {
  json j;
  j["name"] = e.name;
  j["algebra"] = e.algebra;
  j["dim"] = e.module.dim();
  j["action"] = action_json(e.module.algebra()->labels(), e.module.action());
  return j;
}

json lie_algebra_to_json(const LieAlgebraEntry& e) {
  const lie::LieAlgebra& g = *e.algebra;
  json j;
  j["name"] = g.name();
  j["field"] = g.field().name();
  j["dim"] = g.dim();
  j["basis"] = g.labels();
  j["bracket"] = sparse_json(g.table().bracket);
  return j;
}

json lie_module_to_json(const LieModuleEntry& e) {
  json j;
  j["name"] = e.name;
  j["lie_algebra"] = e.lie_algebra;
  j["dim"] = e.module.dim();
  j["action"] = action_json(e.module.algebra()->labels(), e.module.action());
  return j;
}

json workspace_to_json(const Workspace& ws) {
  json defs = json::array();
  for (const auto& [_, e] : ws.algebras) defs.push_back(algebra_to_json(e));
  for (const auto& [_, e] : ws.lie_algebras) defs.push_back(lie_algebra_to_json(e));
  for (const auto& [_, e] : ws.modules) defs.push_back(module_to_json(e));
  for (const auto& [_, e] : ws.lie_modules) defs.push_back(lie_module_to_json(e));
  json out;
  out["definitions"] = std::move(defs);
  return out;
}

strata::Poset resolve_order(const AlgebraEntry& e, const std::optional<std::string>& text) {
  const auto& labels = e.require_basic().family().labels;
  std::string s = text.value_or("default");
  if (s == "antichain") return strata::Poset::antichain(labels);
  if (auto named = e.find_order(s)) return strata::Poset::from_covers(labels, *named);
  if (!text) return strata::Poset::antichain(labels);
  CoverPairs pairs;
  std::string err = order_pair_labels(labels, s, pairs);
  if (!err.empty()) throw NameError("order '" + s + "': " + err);
  return strata::Poset::from_covers(labels, pairs);
}

std::vector<std::size_t> resolve_segment(const AlgebraEntry& e, const std::string& text) {
  if (auto named = e.find_segment(text)) return *named;
  const auto& labels = e.require_basic().family().labels;
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end()) throw NameError("segment '" + text + "': unknown label '" + item + "'");
    out.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Module resolve_module(const Workspace& ws, const std::string& algebra_name, const std::string& name,
                      const std::optional<strata::Poset>& order) {
  const AlgebraEntry& e = ws.algebra(algebra_name);
  auto loaded = ws.modules.find(name);
  if (loaded != ws.modules.end()) {
    if (loaded->second.algebra != algebra_name)
      throw NameError("module '" + name + "' is defined over '" + loaded->second.algebra + "'");
    return loaded->second.module;
  }
  if (name == "A") return algebra::regular_module(e.algebra);
  if (name.size() >= 2 && e.basic) {
    const auto& fam = e.basic->family();
    if (auto x = fam.find(name.substr(1))) {
      switch (name[0]) {
        case 'S':
        case 'L': return e.basic->simple(*x);
        case 'P': return e.basic->projective(*x).module;
        case 'I': return e.basic->injective(*x);
        case 'M': {
          strata::Poset p = order ? *order : resolve_order(e, std::nullopt);
          return strata::segment_projective(*e.basic, p.down_set(*x), *x);
        }
        default: break;
      }
    }
  }
  throw NameError("unknown module '" + name + "' over '" + algebra_name + "'");
}

lie::LieModule resolve_lie_module(const Workspace& ws, const std::string& lie_algebra,
                                  const std::string& name) {
  const LieAlgebraEntry& g = ws.lie_algebra(lie_algebra);
  if (name == "trivial") return lie::LieModule::trivial(g.algebra);
  if (name == "adjoint") return lie::LieModule::adjoint(g.algebra);
  auto it = ws.lie_modules.find(name);
  if (it == ws.lie_modules.end() || it->second.lie_algebra != lie_algebra)
    throw NameError("unknown Lie module '" + name + "' over '" + lie_algebra + "'");
  return it->second.module;
}

algebra::Ideal resolve_ideal(const AlgebraEntry& e, const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw NameError("no ideal generators given");
  std::vector<Vec> gens;
  for (const auto& t : tokens) {
    if (t == "A") return algebra::whole_ideal(e.algebra);
    if (t == "rad") {
      auto r = algebra::jacobson_radical(e.algebra);
      auto v = r.space.vectors();
      gens.insert(gens.end(), v.begin(), v.end());
      continue;
    }
    if (auto i = e.algebra->find_label(t)) {
      gens.push_back(e.algebra->basis_vector(*i));
      continue;
    }
    if (e.basic) {
      std::string key = t.size() > 1 && t[0] == 'e' ? t.substr(1) : t;
      if (auto x = e.basic->family().find(key)) {
        gens.push_back(e.basic->idempotent(*x));
        continue;
      }
    }
    throw NameError("unknown ideal generator '" + t + "'");
  }
  return algebra::two_sided_ideal(e.algebra, gens);
}

}  // namespace strata::io
