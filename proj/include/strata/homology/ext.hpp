#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strata/homology/resolution.hpp"
#include "strata/linalg/complex.hpp"

namespace strata::homology {

using linalg::CochainComplex;
using linalg::CohomologyGroup;

/// Coordinates on Hom_A(P, W) = (+)_k e_{x_k} W: block k holds the
/// coordinates of the generator image in the canonical basis of e_{x_k} W.
struct HomCoordinates {
  std::vector<Subspace> blocks;
  std::vector<std::size_t> offsets;
  std::size_t dim = 0;

  HomCoordinates(const ProjectiveModule& p, const Module& w);
  Vec coordinates(const ProjectiveModule& p, const Matrix& f) const;
  Matrix map(const ProjectiveModule& p, const Module& w, const Vec& c) const;
};

/// Hom_A(P_., W) in degrees 0..n_max + 1 with coboundary f -> f o d_{j+1}.
CochainComplex hom_complex(const Resolution& r, const Module& w, std::size_t n_max);

/// Cochain map Hom(Q_j, W_q) -> Hom(P_j, W_p), f -> f o phi; W_q and W_p
/// share an underlying vector space (W_p may be an inflation of W_q).
Matrix precompose(const ProjectiveModule& p, const Module& w_p, const ProjectiveModule& q,
                  const Module& w_q, const Matrix& phi);
/// Cochain map Hom(P, W1) -> Hom(P, W2), f -> h o f.
Matrix postcompose(const ProjectiveModule& p, const Module& w1, const Module& w2,
                   const Matrix& h);

struct ExtTable {
  std::size_t max_degree = 0;
  std::vector<std::size_t> dims;
  /// The resolution of V terminated within the computed range.
  bool complete = false;
  Resolution resolution;
  Module target;
  CochainComplex complex;
  /// groups[n] = Ext^n as cocycles in Hom(P_n, W) modulo coboundaries.
  std::vector<CohomologyGroup> groups;

  std::vector<Vec> representatives(std::size_t n) const { return groups.at(n).representatives(); }
};

/// Ext^n_A(V, W) for n <= n_max from a minimal resolution through n_max + 1.
ExtTable ext_table(const BasicAlgebra& a, const Module& v, const Module& w, std::size_t n_max);
/// Same, from a given resolution (which must reach n_max + 1 or be complete).
ExtTable ext_from_resolution(const Resolution& r, const Module& w, std::size_t n_max);

/// Map Ext^n(V, W1) -> Ext^n(V, W2) induced by h : W1 -> W2; both tables
/// must come from the same resolution.
Matrix ext_map_in_target(const ExtTable& from, const ExtTable& to, const Matrix& h,
                         std::size_t n);

enum class Mode { projective, injective };

struct HomologicalVerdict {
  bool holds = true;
  /// dim Ext^1(M, S_x) (projective) or dim Ext^1(S_x, M) (injective).
  std::vector<std::size_t> ext1;
  std::optional<std::size_t> witness_simple;
  /// Nonzero cocycle in Hom(P_1, -) representing the failing class.
  std::optional<Vec> witness_cocycle;
};
HomologicalVerdict homological_test(const BasicAlgebra& a, const Module& m, Mode mode);

struct ComparisonDegree {
  std::size_t n = 0;
  std::size_t dim_sub = 0;
  std::size_t dim_amb = 0;
  std::size_t rank = 0;
  /// dim_amb x dim_sub in the representative bases.
  Matrix map;
  std::string verdict;
  bool iso() const { return verdict == "iso"; }
};

/// Ext_{A_Y}(V, W) -> Ext_A(V, W) for V, W supported on Y.
struct ComparisonMap {
  std::vector<std::size_t> segment;
  algebra::SegmentQuotient quotient;
  ExtTable sub;
  ExtTable amb;
  /// phi_j : P_j -> Q_j lifting the identity of V (Q inflated to A).
  std::vector<Matrix> chain_map;
  std::vector<ComparisonDegree> degrees;
  /// The degree-0 map is the identity on Hom(V, W) (checked on maps).
  bool degree0_identity = false;

  bool all_iso() const;
};

/// Throws algebra::PreconditionError naming an idempotent outside Y that
/// does not annihilate V or W.
ComparisonMap comparison_map(const BasicAlgebra& a, const std::vector<std::size_t>& segment,
                             const Module& v, const Module& w, std::size_t n_max,
                             bool perturb = false);

/// g : V -> E with g o incl = f, if any. incl : W -> V monic.
std::optional<Matrix> extend_morphism(const algebra::ModuleMap& incl, const algebra::ModuleMap& f);

}  // namespace strata::homology
