#pragma once

#include <cstddef>
#include <vector>

#include "strata/algebra/basic.hpp"

namespace strata::homology {

using algebra::BasicAlgebra;
using algebra::Module;
using algebra::Violation;
using linalg::Field;
using linalg::Matrix;
using linalg::Subspace;
using linalg::Vec;

/// P = (+)_k A e_{x_k}. Basis: the canonical bases of the summands, in order.
struct ProjectiveModule {
  Module module;
  /// Family index of each summand.
  std::vector<std::size_t> summands;
  /// First basis index of each summand.
  std::vector<std::size_t> offsets;
  /// Algebra element for each basis vector.
  std::vector<Vec> elements;
  /// Coordinates in P of the generator e_{x_k} of summand k.
  std::vector<Vec> generators;

  std::size_t dim() const { return module.dim(); }
  std::size_t rank() const { return summands.size(); }
  std::vector<std::size_t> multiplicities(std::size_t family_size) const;
};

/// The idempotent e_{x_k} generating summand k, as an algebra element.
Vec generator_element(const ProjectiveModule& p, std::size_t k);

ProjectiveModule projective_sum(const BasicAlgebra& a, const std::vector<std::size_t>& summands);
/// Padded copy: P (+) A e_x appended as a last summand.
ProjectiveModule append_summand(const BasicAlgebra& a, const ProjectiveModule& p, std::size_t x);

/// The A-map P -> M sending generator k to images[k]; images[k] must lie in
/// e_{x_k} M. M may be any module over the algebra of P.
Matrix map_from_projective(const ProjectiveModule& p, const Module& m,
                           const std::vector<Vec>& images);

/// The map P -> M whose composite with t : M -> N equals `target` : P -> N,
/// built from canonical particular solutions. With `perturb`, each lift is
/// shifted by a kernel element when one exists (used to test independence
/// of choices). Throws std::domain_error when no lift exists.
Matrix lift_through(const ProjectiveModule& p, const Module& m, const Matrix& t,
                    const Matrix& target, bool perturb = false);

struct ProjectiveCover {
  ProjectiveModule projective;
  /// Surjection P -> V with kernel inside rad P.
  Matrix cover;
};
ProjectiveCover projective_cover(const BasicAlgebra& a, const Module& v);

/// Truncated projective resolution P_n -> ... -> P_0 -> V.
struct Resolution {
  Module target;
  std::vector<ProjectiveModule> terms;
  Matrix augmentation;
  /// differentials[j - 1] = d_j : P_j -> P_{j-1}.
  std::vector<Matrix> differentials;
  std::size_t truncation_degree = 0;
  /// True when some syzygy vanished within the truncation degree.
  bool complete = false;
  /// Syzygy periods detected (Omega_i isomorphic to Omega_j, i < j), informative only.
  std::vector<std::pair<std::size_t, std::size_t>> repeats;

  /// Index of the last nonzero term (projective dimension when complete).
  std::size_t length() const;
  /// d_j for j >= 1, zero when out of range.
  Matrix differential(std::size_t j) const;
  std::size_t term_dim(std::size_t j) const;
  std::vector<std::vector<std::size_t>> multiplicities(std::size_t family_size) const;
};

/// Iterated projective covers of syzygies through degree n_max.
Resolution minimal_resolution(const BasicAlgebra& a, const Module& v, std::size_t n_max);

/// Exactness at every computed spot (rank checks), surjective augmentation,
/// d o d = 0; with `minimal`, also im d_{j+1} inside rad P_j.
std::vector<Violation> check_resolution(const BasicAlgebra& a, const Resolution& r,
                                        bool minimal = true);

/// Adds the trivial complex A e_x --id--> A e_x in degrees degree+1, degree.
Resolution pad_resolution(const BasicAlgebra& a, const Resolution& r, std::size_t degree,
                          std::size_t x);

}  // namespace strata::homology
