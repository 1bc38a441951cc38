#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/linalg/subspace.hpp"

namespace strata::algebra {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vec;

/// One violated axiom: what failed and at which labelled indices.
struct Violation {
  std::string axiom;
  std::vector<std::string> where;
  std::string detail;

  std::string to_string() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised for inputs outside what the exact kernels support, e.g. a
/// characteristic-p algebra without a supplied radical.
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A check was asked of inputs that violate its precondition (e.g. a module
/// not supported on the requested segment).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite-dimensional unital associative algebra given by structure
/// constants: mult[i][j] holds the coordinates of b_i * b_j.
class Algebra {
 public:
  struct Table {
    std::string name;
    Field field;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> mult;
    Vec one;
    /// Spanning vectors of the Jacobson radical; mandatory in characteristic p.
    std::optional<std::vector<Vec>> radical;
  };

  /// Every violated associativity triple and unit identity.
  static std::vector<Violation> check(const Table& table);
  /// Validates and builds; throws ValidationError naming violated triples.
  static std::shared_ptr<const Algebra> create(Table table);

  const std::string& name() const { return table_.name; }
  const Field& field() const { return table_.field; }
  std::size_t dim() const { return table_.labels.size(); }
  const std::vector<std::string>& labels() const { return table_.labels; }
  std::optional<std::size_t> find_label(const std::string& label) const;
  const Table& table() const { return table_; }

  const Vec& one() const { return table_.one; }
  Vec zero() const { return linalg::zero_vec(field(), dim()); }
  Vec basis_vector(std::size_t i) const { return linalg::unit_vec(field(), dim(), i); }
  const Vec& product(std::size_t i, std::size_t j) const { return table_.mult[i][j]; }
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Left multiplication by b_i in the basis (column j = b_i b_j).
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  Matrix left_multiplication(const Vec& x) const;
  Matrix right_multiplication(const Vec& x) const;

 private:
  explicit Algebra(Table table);
  Table table_;
  std::vector<Matrix> left_;
  std::vector<Matrix> right_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Complete family of orthogonal idempotents: sum = 1, e_x e_y = delta_xy e_x.
struct IdempotentFamily {
  std::vector<std::string> labels;
  std::vector<Vec> elements;

  std::size_t size() const { return labels.size(); }
  std::optional<std::size_t> find(const std::string& label) const;

  static std::vector<Violation> check(const Algebra& a, const IdempotentFamily& family);
  /// Throws ValidationError naming the violating pair.
  static IdempotentFamily validate(const Algebra& a, std::vector<std::string> labels,
                                   std::vector<Vec> elements);
  /// The family {1}.
  static IdempotentFamily trivial(const Algebra& a);
};

/// Two-sided ideal of an algebra, kept as a canonical subspace.
struct Ideal {
  AlgebraPtr algebra;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool is_zero() const { return space.is_zero(); }
  bool is_whole() const { return space.is_full(); }
  /// Re-checks closure under left and right multiplication.
  std::vector<Violation> check() const;
};

/// Smallest two-sided ideal containing `generators` (saturation).
Ideal two_sided_ideal(const AlgebraPtr& a, const std::vector<Vec>& generators);
Ideal zero_ideal(const AlgebraPtr& a);
Ideal whole_ideal(const AlgebraPtr& a);
/// Ideal spanned by products i * j.
Ideal ideal_product(const Ideal& i, const Ideal& j);
Ideal ideal_power(const Ideal& i, std::size_t k);
/// Sum_{x} A e_x A over the given family members.
Ideal idempotent_ideal(const AlgebraPtr& a, const IdempotentFamily& family,
                       const std::vector<std::size_t>& members);
bool is_nilpotent(const Ideal& i);

struct QuotientAlgebra {
  AlgebraPtr quotient;
  Ideal kernel;
  /// dim(quotient) x dim(A).
  Matrix projection;
  /// dim(A) x dim(quotient): canonical coset representatives (unit vectors).
  Matrix section;
  /// Basis indices of A kept as representatives.
  std::vector<std::size_t> kept;

  Vec project(const Vec& x) const { return projection.apply(x); }
  Vec lift(const Vec& y) const { return section.apply(y); }
  bool is_zero_ring() const { return kept.empty(); }
};

/// A / I. Basis of the quotient = basis elements of A at the non-pivot
/// columns of I (labels kept). The radical, when A carries a supplied one,
/// is projected along.
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Ideal& ideal,
                                 std::string name = {});

/// Image of the family in a quotient, restricted to the listed members.
IdempotentFamily project_family(const QuotientAlgebra& q, const IdempotentFamily& family,
                                const std::vector<std::size_t>& members);

/// Gram matrix of the trace form (x, y) -> tr(L_{xy}).
Matrix trace_form(const Algebra& a);
/// Jacobson radical: trace-form kernel in characteristic 0, the supplied
/// radical in characteristic p (UnsupportedConfiguration when absent).
Ideal jacobson_radical(const AlgebraPtr& a);

}  // namespace strata::algebra
