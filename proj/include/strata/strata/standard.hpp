#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strata/algebra/basic.hpp"
#include "strata/strata/poset.hpp"

namespace strata::strata {

using algebra::BasicAlgebra;
using algebra::Module;
using algebra::Violation;
using linalg::Matrix;
using linalg::Subspace;
using linalg::Vec;

/// A_Y e_y as an A-module: A e_y / (sum_{x not in Y} A e_x A) e_y.
Module segment_projective(const BasicAlgebra& a, const std::vector<std::size_t>& segment,
                          std::size_t y);

struct StandardFailure {
  std::vector<std::size_t> segment;
  std::size_t y = 0;
  /// Idempotent outside {x <= y} acting nonzero, when that is the failure.
  std::optional<std::size_t> offending;
  std::string reason;
};

struct StandardModuleSet {
  /// modules[y] = M_y = A_{<=y} e_y.
  std::vector<Module> modules;
  std::vector<StandardFailure> failures;
  /// Number of (Y, y) pairs, y maximal in Y, where A_Y e_y was checked against M_y.
  std::size_t cross_checks = 0;

  bool pass() const { return failures.empty(); }
};

/// M_y for every y, with the support condition checked on every initial
/// segment Y in which y is maximal (A_Y e_y supported on {x <= y} and
/// isomorphic to M_y).
StandardModuleSet standard_modules(const BasicAlgebra& a, const Poset& order);

/// One layer F_i / F_{i-1} = M_x^m.
struct FiltrationLayer {
  std::size_t x = 0;
  std::size_t multiplicity = 0;
  /// F_i as a subspace of V.
  Subspace top;
  /// Isomorphism M_x^m -> F_i / F_{i-1}, the target in the canonical basis
  /// of the image of F_i in V / F_{i-1}.
  Matrix iso;
};

/// 0 = F_0 < F_1 < ... < F_m = V.
struct FiltrationCertificate {
  std::vector<FiltrationLayer> layers;
};

struct DeltaResult {
  bool member = false;
  std::optional<FiltrationCertificate> certificate;
  /// "greedy" or "exhaustive" for members.
  std::string method;
  /// Blocking stage when not a member.
  std::string failure;
  /// Search nodes visited by the exhaustive search.
  std::size_t nodes = 0;
};

/// Which standards may appear; empty means all.
using Allowed = std::vector<bool>;

/// Trace peeling: the layer at each step is the trace of A e_x in the
/// residual quotient, x maximal (label tie-break) in its support.
DeltaResult delta_greedy(const BasicAlgebra& a, const Poset& order, const StandardModuleSet& s,
                         const Module& v, const Allowed& allowed = {});
/// Depth-first search over every choice of x in the residual support.
DeltaResult delta_exhaustive(const BasicAlgebra& a, const StandardModuleSet& s, const Module& v,
                             const Allowed& allowed = {});
/// Greedy, then the exhaustive search when dim V <= exhaustive_bound.
/// Certificates are re-validated before being returned.
DeltaResult delta_membership(const BasicAlgebra& a, const Poset& order, const StandardModuleSet& s,
                             const Module& v, std::size_t exhaustive_bound = 8,
                             const Allowed& allowed = {});

/// Independent re-validation: submodule chain, strict growth, layer
/// isomorphisms, and F_m = V.
std::vector<Violation> verify_certificate(const BasicAlgebra& a, const StandardModuleSet& s,
                                          const Module& v, const FiltrationCertificate& c);

}  // namespace strata::strata
