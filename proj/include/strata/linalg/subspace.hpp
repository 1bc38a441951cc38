#pragma once

#include <cstddef>
#include <vector>

#include "strata/linalg/matrix.hpp"

namespace strata::linalg {

/// Subspace of k^n stored by its reduced row-echelon basis. The
/// representation is canonical: equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of k^n.
  Subspace(Field field, std::size_t ambient_dim);

  static Subspace span(const Field& field, std::size_t ambient_dim,
                       const std::vector<Vec>& vectors);
  /// Row space of `m`.
  static Subspace row_space(const Matrix& m);
  /// Column space of `m`.
  static Subspace column_space(const Matrix& m);
  static Subspace full(const Field& field, std::size_t n);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vec vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Normal form of v modulo this subspace: zero at every pivot.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates in the canonical basis; throws if v is not contained.
  Vec coordinates(const Vec& v) const;

  /// Non-pivot columns; the unit vectors there represent ambient/this.
  std::vector<std::size_t> complement_indices() const;
  /// Coordinates of v + this in ambient/this, read at complement_indices().
  Vec quotient_coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct RankKernel {
  std::size_t rank = 0;
  Subspace kernel;
};

/// Rank and full right null space {x : M x = 0}.
RankKernel rank_kernel(const Matrix& m);

Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersection(const Subspace& u, const Subspace& w);
/// Image of a subspace of the source under the linear map x -> M x.
Subspace image(const Matrix& m, const Subspace& u);
/// {x : M x in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

struct SubspaceCalculus {
  Subspace sum;
  Subspace intersection;
  /// Unit-vector representatives of ambient / U.
  std::vector<Vec> quotient_reps;
};
SubspaceCalculus subspace_calculus(const Subspace& u, const Subspace& w);

/// Vectors from `candidates` (in order) that extend a basis of `base` to a
/// basis of base + span(candidates).
std::vector<Vec> extend_basis(const Subspace& base, const std::vector<Vec>& candidates);

}  // namespace strata::linalg
