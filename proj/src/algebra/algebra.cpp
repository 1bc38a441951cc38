#include "strata/algebra/algebra.hpp"

#include <sstream>

namespace strata::algebra {

namespace {

constexpr std::size_t kMaxReported = 32;

std::string vec_string(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].to_string();
  os << ')';
  return os.str();
}

std::vector<Matrix> build_left(const Algebra::Table& t) {
  const std::size_t n = t.labels.size();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix m(t.field, n, n);
    for (std::size_t j = 0; j < n; ++j) m.set_column(j, t.mult[i][j]);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> build_right(const Algebra::Table& t) {
  const std::size_t n = t.labels.size();
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < n; ++j) {
    Matrix m(t.field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_column(i, t.mult[i][j]);
    out.push_back(std::move(m));
  }
  return out;
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& x, const Field& f,
               std::size_t n) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * mats[i];
  return out;
}

}  // namespace

std::string Violation::to_string() const {
  std::string s = axiom;
  if (!where.empty()) {
    s += " at (";
    for (std::size_t i = 0; i < where.size(); ++i) s += (i ? ", " : "") + where[i];
    s += ")";
  }
  if (!detail.empty()) s += ": " + detail;
  return s;
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(violations.empty() ? std::string("validation failed")
                                            : violations.front().to_string()),
      violations_(std::move(violations)) {}

std::vector<Violation> Algebra::check(const Table& t) {
  std::vector<Violation> out;
  const std::size_t n = t.labels.size();
  auto shape_ok = [&](const Vec& v) { return v.size() == n; };
  if (t.mult.size() != n) {
    out.push_back({"shape", {}, "multiplication table has " + std::to_string(t.mult.size()) +
                                    " rows for " + std::to_string(n) + " basis elements"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t.mult[i].size() != n) {
      out.push_back({"shape", {t.labels[i]}, "multiplication row has wrong length"});
      return out;
    }
    for (const auto& v : t.mult[i])
      if (!shape_ok(v)) {
        out.push_back({"shape", {t.labels[i]}, "product vector has wrong length"});
        return out;
      }
  }
  if (!shape_ok(t.one)) {
    out.push_back({"shape", {"one"}, "unit vector has wrong length"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& v : t.mult[i])
      for (const auto& c : v)
        if (!(c.field() == t.field)) {
          out.push_back({"field", {t.labels[i]}, "structure constant outside " + t.field.name()});
          return out;
        }

  auto left = build_left(t);
  auto right = build_right(t);
  for (std::size_t i = 0; i < n && out.size() < kMaxReported; ++i)
    for (std::size_t j = 0; j < n && out.size() < kMaxReported; ++j)
      for (std::size_t k = 0; k < n && out.size() < kMaxReported; ++k) {
        Vec lhs = right[k].apply(t.mult[i][j]);
        Vec rhs = left[i].apply(t.mult[j][k]);
        if (lhs != rhs)
          out.push_back({"associativity",
                         {t.labels[i], t.labels[j], t.labels[k]},
                         "(b_i b_j) b_k = " + vec_string(lhs) + " but b_i (b_j b_k) = " +
                             vec_string(rhs)});
      }
  Matrix lone = combine(left, t.one, t.field, n);
  Matrix rone = combine(right, t.one, t.field, n);
  Matrix id = Matrix::identity(t.field, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lone.column(i) != id.column(i))
      out.push_back({"left unit", {t.labels[i]}, "1 * b = " + vec_string(lone.column(i))});
    if (rone.column(i) != id.column(i))
      out.push_back({"right unit", {t.labels[i]}, "b * 1 = " + vec_string(rone.column(i))});
  }
  return out;
}

std::shared_ptr<const Algebra> Algebra::create(Table table) {
  auto violations = check(table);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  auto a = std::shared_ptr<const Algebra>(new Algebra(std::move(table)));
  if (a->table_.radical) {
    Ideal r = two_sided_ideal(a, *a->table_.radical);
    Subspace given = Subspace::span(a->field(), a->dim(), *a->table_.radical);
    std::vector<Violation> bad;
    if (!(r.space == given))
      bad.push_back({"radical", {}, "supplied radical is not a two-sided ideal"});
    else if (!is_nilpotent(r))
      bad.push_back({"radical", {}, "supplied radical is not nilpotent"});
    if (!bad.empty()) throw ValidationError(std::move(bad));
  }
  return a;
}

Algebra::Algebra(Table table)
    : table_(std::move(table)), left_(build_left(table_)), right_(build_right(table_)) {}

std::optional<std::size_t> Algebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (table_.labels[i] == label) return i;
  return std::nullopt;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
  return left_multiplication(x).apply(y);
}

Matrix Algebra::left_multiplication(const Vec& x) const {
  return combine(left_, x, field(), dim());
}

Matrix Algebra::right_multiplication(const Vec& x) const {
  return combine(right_, x, field(), dim());
}

std::optional<std::size_t> IdempotentFamily::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  return std::nullopt;
}

std::vector<Violation> IdempotentFamily::check(const Algebra& a,
                                               const IdempotentFamily& family) {
  std::vector<Violation> out;
  if (family.labels.size() != family.elements.size()) {
    out.push_back({"shape", {}, "labels and elements differ in number"});
    return out;
  }
  for (std::size_t x = 0; x < family.size(); ++x)
    if (family.elements[x].size() != a.dim()) {
      out.push_back({"shape", {family.labels[x]}, "coordinate vector has wrong length"});
      return out;
    }
  Vec total = a.zero();
  for (std::size_t x = 0; x < family.size(); ++x) {
    total = linalg::add(total, family.elements[x]);
    for (std::size_t y = 0; y < family.size(); ++y) {
      Vec prod = a.multiply(family.elements[x], family.elements[y]);
      Vec expect = x == y ? family.elements[x] : a.zero();
      if (prod != expect)
        out.push_back({x == y ? "idempotence" : "orthogonality",
                       {family.labels[x], family.labels[y]},
                       "e_x e_y = " + vec_string(prod)});
    }
  }
  if (total != a.one())
    out.push_back({"completeness", {}, "sum of the family is " + vec_string(total)});
  return out;
}

IdempotentFamily IdempotentFamily::validate(const Algebra& a, std::vector<std::string> labels,
                                            std::vector<Vec> elements) {
  IdempotentFamily f{std::move(labels), std::move(elements)};
  auto v = check(a, f);
  if (!v.empty()) throw ValidationError(std::move(v));
  return f;
}

IdempotentFamily IdempotentFamily::trivial(const Algebra& a) {
  return {{"1"}, {a.one()}};
}

std::vector<Violation> Ideal::check() const {
  std::vector<Violation> out;
  const Algebra& a = *algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t v = 0; v < space.dim(); ++v) {
      if (!space.contains(a.left(i).apply(space.vector(v))))
        out.push_back({"left closure", {a.labels()[i]}, "b * v leaves the ideal"});
      if (!space.contains(a.right(i).apply(space.vector(v))))
        out.push_back({"right closure", {a.labels()[i]}, "v * b leaves the ideal"});
    }
  return out;
}

Ideal two_sided_ideal(const AlgebraPtr& a, const std::vector<Vec>& generators) {
  Subspace s = Subspace::span(a->field(), a->dim(), generators);
  while (true) {
    std::vector<Vec> vecs = s.vectors();
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t v = 0; v < s.dim(); ++v) {
        vecs.push_back(a->left(i).apply(s.vector(v)));
        vecs.push_back(a->right(i).apply(s.vector(v)));
      }
    Subspace next = Subspace::span(a->field(), a->dim(), vecs);
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  return {a, std::move(s)};
}

Ideal zero_ideal(const AlgebraPtr& a) { return {a, Subspace(a->field(), a->dim())}; }

Ideal whole_ideal(const AlgebraPtr& a) { return {a, Subspace::full(a->field(), a->dim())}; }

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  const Algebra& a = *i.algebra;
  std::vector<Vec> vecs;
  for (std::size_t p = 0; p < i.dim(); ++p) {
    Matrix l = a.left_multiplication(i.space.vector(p));
    for (std::size_t q = 0; q < j.dim(); ++q) vecs.push_back(l.apply(j.space.vector(q)));
  }
  return {i.algebra, Subspace::span(a.field(), a.dim(), vecs)};
}

Ideal ideal_power(const Ideal& i, std::size_t k) {
  Ideal acc = whole_ideal(i.algebra);
  for (std::size_t n = 0; n < k; ++n) {
    Ideal next = ideal_product(acc, i);
    if (next.space == acc.space) break;
    acc = std::move(next);
  }
  return acc;
}

Ideal idempotent_ideal(const AlgebraPtr& a, const IdempotentFamily& family,
                       const std::vector<std::size_t>& members) {
  std::vector<Vec> gens;
  for (auto x : members) gens.push_back(family.elements.at(x));
  return two_sided_ideal(a, gens);
}

bool is_nilpotent(const Ideal& i) {
  return ideal_power(i, i.algebra->dim() + 1).is_zero();
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Ideal& ideal, std::string name) {
  const Field& f = a->field();
  const std::size_t n = a->dim();
  auto kept = ideal.space.complement_indices();
  const std::size_t m = kept.size();
  Matrix proj(f, m, n);
  for (std::size_t j = 0; j < n; ++j)
    proj.set_column(j, ideal.space.quotient_coordinates(a->basis_vector(j)));
  Matrix sec(f, n, m);
  for (std::size_t k = 0; k < m; ++k) sec(kept[k], k) = f.one();

  Algebra::Table t;
  t.name = name.empty() ? a->name() + "/I" : std::move(name);
  t.field = f;
  for (auto j : kept) t.labels.push_back(a->labels()[j]);
  t.mult.assign(m, std::vector<Vec>(m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      t.mult[p][q] = proj.apply(a->product(kept[p], kept[q]));
  t.one = proj.apply(a->one());
  if (a->table().radical) {
    std::vector<Vec> r;
    for (const auto& v : *a->table().radical) {
      Vec pv = proj.apply(v);
      if (!linalg::is_zero(pv)) r.push_back(std::move(pv));
    }
    t.radical = std::move(r);
  }
  return {Algebra::create(std::move(t)), ideal, std::move(proj), std::move(sec),
          std::move(kept)};
}

IdempotentFamily project_family(const QuotientAlgebra& q, const IdempotentFamily& family,
                                const std::vector<std::size_t>& members) {
  IdempotentFamily out;
  for (auto x : members) {
    out.labels.push_back(family.labels.at(x));
    out.elements.push_back(q.project(family.elements.at(x)));
  }
  return IdempotentFamily::validate(*q.quotient, out.labels, out.elements);
}

Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Scalar> traces;
  for (std::size_t l = 0; l < n; ++l) {
    Scalar t = a.field().zero();
    for (std::size_t k = 0; k < n; ++k) t += a.left(l)(k, k);
    traces.push_back(t);
  }
  Matrix g(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar s = a.field().zero();
      const Vec& p = a.product(i, j);
      for (std::size_t l = 0; l < n; ++l)
        if (!p[l].is_zero()) s += p[l] * traces[l];
      g(i, j) = s;
    }
  return g;
}

Ideal jacobson_radical(const AlgebraPtr& a) {
  if (a->table().radical) return two_sided_ideal(a, *a->table().radical);
  if (!a->field().is_rational())
    throw UnsupportedConfiguration("algebra '" + a->name() + "' is over " +
                                   a->field().name() +
                                   "; the radical must be supplied in characteristic p");
  // x is radical iff tr(L_{xy}) = 0 for all y: kernel of G^T (G symmetric in char 0).
  Subspace k = linalg::rank_kernel(trace_form(*a).transpose()).kernel;
  return {a, std::move(k)};
}

}  // namespace strata::algebra
