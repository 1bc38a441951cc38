#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "strata/algebra/algebra.hpp"

namespace strata::lie {

using algebra::Violation;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vec;

/// Finite-dimensional Lie algebra over Q: bracket[i][j] = coordinates of [b_i, b_j].
class LieAlgebra {
 public:
  struct Table {
    std::string name;
    Field field;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> bracket;
  };

  /// Characteristic, shape, antisymmetry and Jacobi violations.
  static std::vector<Violation> check(const Table& table);
  static std::shared_ptr<const LieAlgebra> create(Table table);

  const std::string& name() const { return table_.name; }
  const Field& field() const { return table_.field; }
  std::size_t dim() const { return table_.labels.size(); }
  const std::vector<std::string>& labels() const { return table_.labels; }
  std::optional<std::size_t> find_label(const std::string& label) const;
  const Table& table() const { return table_; }
  const Vec& bracket(std::size_t i, std::size_t j) const { return table_.bracket[i][j]; }
  Vec bracket(const Vec& x, const Vec& y) const;
  /// ad(b_i) in the basis.
  Matrix ad(std::size_t i) const;

 private:
  explicit LieAlgebra(Table table) : table_(std::move(table)) {}
  Table table_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Representation rho : g -> gl(V), one matrix per basis element.
class LieModule {
 public:
  LieModule() = default;
  /// rho([b_i, b_j]) = [rho(b_i), rho(b_j)] for all i < j.
  static std::vector<Violation> check(const LieAlgebra& g, const std::vector<Matrix>& action);
  static LieModule create(LieAlgebraPtr g, std::vector<Matrix> action, std::string name = {});
  static LieModule trivial(LieAlgebraPtr g, std::size_t dim = 1);
  static LieModule adjoint(LieAlgebraPtr g);

  const LieAlgebraPtr& algebra() const { return g_; }
  const Field& field() const { return g_->field(); }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  Matrix act(const Vec& x) const;

 private:
  LieModule(LieAlgebraPtr g, std::size_t dim, std::vector<Matrix> action, std::string name)
      : g_(std::move(g)), dim_(dim), action_(std::move(action)), name_(std::move(name)) {}
  LieAlgebraPtr g_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
  std::string name_;
};

/// Hom(X, Y) with (xi f) = rho_Y(xi) f - f rho_X(xi); basis = row-major
/// dim Y x dim X matrix units.
LieModule hom_module(const LieModule& x, const LieModule& y);
Vec flatten(const Matrix& m);
Matrix unflatten_map(const Field& f, std::size_t rows, std::size_t cols, const Vec& v);

/// g-invariants {v : rho(b_i) v = 0 for all i}.
Subspace invariants(const LieModule& m);
/// Intertwiners X -> Y solved directly as {f : rho_Y f = f rho_X}.
Subspace intertwiners(const LieModule& x, const LieModule& y);

}  // namespace strata::lie
