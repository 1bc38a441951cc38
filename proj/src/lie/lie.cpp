#include "strata/lie/lie.hpp"

#include <stdexcept>

namespace strata::lie {

std::vector<Violation> LieAlgebra::check(const Table& t) {
  std::vector<Violation> out;
  std::size_t d = t.labels.size();
  if (t.field.characteristic() != 0)
    out.push_back({"characteristic", {}, "Lie algebras must be defined over Q"});
  if (t.bracket.size() != d) {
    out.push_back({"shape", {}, "bracket table needs one row per basis element"});
    return out;
  }
  for (const auto& row : t.bracket) {
    if (row.size() != d) {
      out.push_back({"shape", {}, "bracket table is not square"});
      return out;
    }
    for (const auto& v : row)
      if (v.size() != d) {
        out.push_back({"shape", {}, "bracket value has the wrong length"});
        return out;
      }
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (!linalg::is_zero(t.bracket[i][i]))
      out.push_back({"antisymmetry", {t.labels[i], t.labels[i]}, "[x, x] != 0"});
    for (std::size_t j = i + 1; j < d; ++j)
      if (!linalg::is_zero(linalg::add(t.bracket[i][j], t.bracket[j][i])))
        out.push_back({"antisymmetry", {t.labels[i], t.labels[j]}, "[x, y] != -[y, x]"});
  }
  if (!out.empty()) return out;
  auto br = [&](const Vec& x, std::size_t k) {
    Vec r = linalg::zero_vec(t.field, d);
    for (std::size_t i = 0; i < d; ++i)
      if (!x[i].is_zero()) linalg::axpy(r, x[i], t.bracket[i][k]);
    return r;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        // [[b_i, b_j], b_k] + [[b_j, b_k], b_i] + [[b_k, b_i], b_j] = 0.
        Vec s = br(t.bracket[i][j], k);
        s = linalg::add(s, br(t.bracket[j][k], i));
        s = linalg::add(s, br(t.bracket[k][i], j));
        if (!linalg::is_zero(s))
          out.push_back({"Jacobi", {t.labels[i], t.labels[j], t.labels[k]}, "cyclic sum is nonzero"});
      }
  return out;
}

std::shared_ptr<const LieAlgebra> LieAlgebra::create(Table table) {
  auto v = check(table);
  if (!v.empty()) throw algebra::ValidationError(std::move(v));
  return std::shared_ptr<const LieAlgebra>(new LieAlgebra(std::move(table)));
}

std::optional<std::size_t> LieAlgebra::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (table_.labels[i] == label) return i;
  return std::nullopt;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r = linalg::zero_vec(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero()) linalg::axpy(r, x[i] * y[j], table_.bracket[i][j]);
  }
  return r;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, table_.bracket[i][j]);
  return m;
}

std::vector<Violation> LieModule::check(const LieAlgebra& g, const std::vector<Matrix>& action) {
  std::vector<Violation> out;
  if (action.size() != g.dim()) {
    out.push_back({"shape", {}, "one action matrix per basis element required"});
    return out;
  }
  std::size_t n = action.empty() ? 0 : action[0].rows();
  for (std::size_t i = 0; i < action.size(); ++i)
    if (action[i].rows() != n || action[i].cols() != n) {
      out.push_back({"shape", {g.labels()[i]}, "action matrices must be square of equal size"});
      return out;
    }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(g.field(), n, n);
      const Vec& c = g.bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!c[k].is_zero()) lhs = lhs + c[k] * action[k];
      if (!(lhs == linalg::commutator(action[i], action[j])))
        out.push_back({"bracket compatibility", {g.labels()[i], g.labels()[j]},
                       "rho([x, y]) != [rho(x), rho(y)]"});
    }
  return out;
}

LieModule LieModule::create(LieAlgebraPtr g, std::vector<Matrix> action, std::string name) {
  auto v = check(*g, action);
  if (!v.empty()) throw algebra::ValidationError(std::move(v));
  std::size_t n = action.empty() ? 0 : action[0].rows();
  return LieModule(std::move(g), n, std::move(action), std::move(name));
}

LieModule LieModule::trivial(LieAlgebraPtr g, std::size_t dim) {
  std::vector<Matrix> action(g->dim(), Matrix(g->field(), dim, dim));
  return LieModule(std::move(g), dim, std::move(action), "trivial");
}

LieModule LieModule::adjoint(LieAlgebraPtr g) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g->dim(); ++i) action.push_back(g->ad(i));
  std::size_t d = g->dim();
  return LieModule(std::move(g), d, std::move(action), "adjoint");
}

Matrix LieModule::act(const Vec& x) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m = m + x[i] * action_[i];
  return m;
}

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Matrix unflatten_map(const Field& f, std::size_t rows, std::size_t cols, const Vec& v) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

LieModule hom_module(const LieModule& x, const LieModule& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("hom_module: different Lie algebras");
  const Field& f = x.field();
  Matrix ix = Matrix::identity(f, x.dim()), iy = Matrix::identity(f, y.dim());
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < x.algebra()->dim(); ++i)
    action.push_back(linalg::kron(y.action(i), ix) - linalg::kron(iy, x.action(i).transpose()));
  return LieModule::create(x.algebra(), std::move(action),
                           "Hom(" + x.name() + ", " + y.name() + ")");
}

Subspace invariants(const LieModule& m) {
  Matrix stacked(m.field(), 0, m.dim());
  for (const auto& a : m.action()) stacked = linalg::vstack(stacked, a);
  return linalg::rank_kernel(stacked).kernel;
}

Subspace intertwiners(const LieModule& x, const LieModule& y) {
  // Unknown f (dim Y x dim X, row-major); equations rho_Y(b) f - f rho_X(b) = 0 entrywise.
  const Field& fld = x.field();
  std::size_t n = y.dim() * x.dim();
  Matrix sys(fld, 0, n);
  for (std::size_t b = 0; b < x.algebra()->dim(); ++b) {
    Matrix block(fld, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      Matrix unit = unflatten_map(fld, y.dim(), x.dim(), linalg::unit_vec(fld, n, k));
      block.set_column(k, flatten(y.action(b) * unit - unit * x.action(b)));
    }
    sys = linalg::vstack(sys, block);
  }
  return linalg::rank_kernel(sys).kernel;
}

}  // namespace strata::lie
