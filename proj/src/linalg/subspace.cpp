#include "strata/linalg/subspace.hpp"

#include <stdexcept>

namespace strata::linalg {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("subspaces live in k^" + std::to_string(u.ambient_dim()) +
                                " and k^" + std::to_string(w.ambient_dim()));
  if (!(u.field() == w.field()))
    throw FieldMismatch("subspaces over " + u.field().name() + " and " +
                        w.field().name());
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = row_echelon(m);
  Subspace s(m.field(), m.cols());
  s.pivots_ = e.pivots;
  s.basis_ = e.reduced.block(0, 0, e.pivots.size(), m.cols());
  return s;
}

Subspace Subspace::column_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::span(const Field& field, std::size_t ambient_dim,
                        const std::vector<Vec>& vectors) {
  if (vectors.empty()) return Subspace(field, ambient_dim);
  return row_space(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::full(const Field& field, std::size_t n) {
  return row_space(Matrix::identity(field, n));
}

std::vector<Vec> Subspace::vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(vector(i));
  return out;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) +
                                " in k^" + std::to_string(ambient_));
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return linalg::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector does not lie in the subspace");
  Vec c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Vec Subspace::quotient_coordinates(const Vec& v) const {
  Vec r = reduce(v);
  Vec out;
  for (auto j : complement_indices()) out.push_back(r[j]);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

RankKernel rank_kernel(const Matrix& m) {
  Echelon e = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.field(), cols);
    v[f] = m.field().one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return {e.pivots.size(), Subspace::span(m.field(), cols, basis)};
}

Subspace sum(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  return Subspace::row_space(vstack(u.basis(), w.basis()));
}

Subspace intersection(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  if (u.is_zero() || w.is_zero()) return Subspace(u.field(), u.ambient_dim());
  // (a, b) with a U = b W; the intersection is {a U}.
  Matrix m = hstack(u.basis().transpose(), w.basis().transpose());
  Subspace ker = rank_kernel(m).kernel;
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    Vec k = ker.vector(i);
    Vec a(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(u.dim()));
    vecs.push_back(u.basis().transpose().apply(a));
  }
  return Subspace::span(u.field(), u.ambient_dim(), vecs);
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (u.ambient_dim() != m.cols()) throw std::invalid_argument("image: dimension mismatch");
  std::vector<Vec> vecs;
  for (std::size_t i = 0; i < u.dim(); ++i) vecs.push_back(m.apply(u.vector(i)));
  return Subspace::span(m.field(), m.rows(), vecs);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (target.ambient_dim() != m.rows())
    throw std::invalid_argument("preimage: dimension mismatch");
  // x with M x reduced to zero modulo target: rows of M at complement indices.
  auto comp = target.complement_indices();
  Matrix q(m.field(), comp.size(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec red = target.quotient_coordinates(m.column(c));
    for (std::size_t r = 0; r < comp.size(); ++r) q(r, c) = red[r];
  }
  return rank_kernel(q).kernel;
}

SubspaceCalculus subspace_calculus(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  SubspaceCalculus out{sum(u, w), intersection(u, w), {}};
  for (auto j : u.complement_indices())
    out.quotient_reps.push_back(unit_vec(u.field(), u.ambient_dim(), j));
  return out;
}

std::vector<Vec> extend_basis(const Subspace& base, const std::vector<Vec>& candidates) {
  std::vector<Vec> chosen;
  Subspace acc = base;
  for (const auto& v : candidates) {
    if (acc.contains(v)) continue;
    chosen.push_back(v);
    acc = sum(acc, Subspace::span(base.field(), base.ambient_dim(), {v}));
  }
  return chosen;
}

}  // namespace strata::linalg
