#pragma once

#include <cstddef>
#include <vector>

#include "strata/lie/lie.hpp"
#include "strata/linalg/complex.hpp"

namespace strata::lie {

/// Increasing index tuples of size n from {0..d-1}, lexicographic.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t d, std::size_t n);

/// CE(X, Y) = Hom(Lambda^. g, Hom(X, Y)). A degree-n cochain has coordinate
/// t * dim Hom(X, Y) + m for the t-th increasing tuple and the m-th basis
/// map of Hom(X, Y).
struct CEComplex {
  LieModule source;
  LieModule target;
  LieModule coefficients;
  /// tuples[n] indexes the basis of Lambda^n g.
  std::vector<std::vector<std::vector<std::size_t>>> tuples;
  linalg::CochainComplex complex;

  std::size_t degree_dim(std::size_t n) const { return complex.dims.at(n); }
  std::size_t top_degree() const { return tuples.size() - 1; }
  /// Position of an increasing tuple in tuples[n].
  std::size_t tuple_index(const std::vector<std::size_t>& t) const;
  /// phi(b_t) as a dim Y x dim X matrix.
  Matrix value(std::size_t n, const Vec& phi, std::size_t tuple) const;
  /// Cochain with the given value matrices, one per tuple.
  Vec cochain(std::size_t n, const std::vector<Matrix>& values) const;
  Vec differentiate(std::size_t n, const Vec& phi) const;
};

/// Standard differential
///   (d phi)(x_0..x_n) = sum_i (-1)^i x_i . phi(..^x_i..)
///                     + sum_{i<j} (-1)^{i+j} phi([x_i, x_j], ..^x_i..^x_j..).
CEComplex ce_complex(const LieModule& x, const LieModule& y);

struct CECohomology {
  CEComplex complex;
  std::vector<std::size_t> dims;
  std::vector<linalg::CohomologyGroup> groups;
};
/// H^0..H^{n_max}; n_max is clamped to dim g.
CECohomology ce_cohomology(const LieModule& x, const LieModule& y, std::size_t n_max);

/// (u cup v)(x_1..x_{p+q}) = sum over (p, q)-shuffles s of sgn(s)
///   u(x_{s(1)}..x_{s(p)}) o v(x_{s(p+1)}..x_{s(p+q)}),
/// u in CE(Y, Z) of degree p, v in CE(X, Y) of degree q, result in CE(X, Z).
Vec cup_product(const CEComplex& yz, std::size_t p, const Vec& u, const CEComplex& xy,
                std::size_t q, const Vec& v, const CEComplex& xz);

/// Sign of the permutation taking the concatenation a ++ b to sorted order;
/// 0 if they share an element.
int merge_sign(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

}  // namespace strata::lie
