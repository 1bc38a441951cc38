#pragma once

#include <cstddef>
#include <vector>

#include "strata/linalg/subspace.hpp"

namespace strata::linalg {

/// Finite cochain complex C^0 -> C^1 -> ... ; differential(n) maps C^n to
/// C^{n+1}. Missing differentials past the last stored one are zero.
struct CochainComplex {
  Field field;
  std::vector<std::size_t> dims;
  std::vector<Matrix> differentials;

  Matrix differential(std::size_t n) const;
  /// Largest n with d^{n+1} d^n != 0, or nullopt when d o d = 0 throughout.
  std::optional<std::size_t> first_square_failure() const;
};

/// H^n = Z^n / B^n with canonical representatives: the normal forms of
/// cocycles modulo coboundaries form a subspace whose canonical basis is
/// the representative set.
class CohomologyGroup {
 public:
  CohomologyGroup() = default;
  CohomologyGroup(Subspace cocycles, Subspace coboundaries);

  std::size_t dim() const { return classes_.dim(); }
  const Subspace& cocycles() const { return cocycles_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  std::vector<Vec> representatives() const { return classes_.vectors(); }
  /// Coordinates of [z] in the representative basis; z must be a cocycle.
  Vec class_coordinates(const Vec& z) const;
  bool is_coboundary(const Vec& z) const { return coboundaries_.contains(z); }

 private:
  Subspace cocycles_;
  Subspace coboundaries_;
  Subspace classes_;
};

CohomologyGroup cohomology(const CochainComplex& c, std::size_t n);

/// Matrix of the map H^n(src) -> H^n(dst) induced by a cochain map given
/// on C^n by `chain_map` (rows = dst dim, cols = src dim).
Matrix induced_on_cohomology(const CohomologyGroup& src, const CohomologyGroup& dst,
                             const Matrix& chain_map);

}  // namespace strata::linalg
