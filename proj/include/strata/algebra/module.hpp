#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/algebra/algebra.hpp"

namespace strata::algebra {

/// Finite-dimensional left module: one action matrix per algebra basis element.
class Module {
 public:
  Module() = default;

  static std::vector<Violation> check(const Algebra& a, const std::vector<Matrix>& action);
  /// Validates the action against the multiplication table; throws ValidationError.
  static Module create(AlgebraPtr algebra, std::vector<Matrix> action);
  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Field& field() const { return algebra_->field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }

  /// Matrix of the algebra element x acting on the module.
  Matrix act(const Vec& x) const;
  Vec act(const Vec& x, const Vec& v) const { return act(x).apply(v); }

 private:
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action)
      : algebra_(std::move(algebra)), dim_(dim), action_(std::move(action)) {}
  friend Module make_module_unchecked(AlgebraPtr, std::size_t, std::vector<Matrix>);

  AlgebraPtr algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

/// For constructions that are module structures by construction.
Module make_module_unchecked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action);

/// A-linear map given by its matrix (target dim x source dim).
struct ModuleMap {
  Module source;
  Module target;
  Matrix matrix;

  bool is_homomorphism() const;
};

/// Left regular module A.
Module regular_module(const AlgebraPtr& a);
/// Submodule closure of a set of vectors.
Subspace generated_submodule(const Module& v, const std::vector<Vec>& generators);
bool is_submodule(const Module& v, const Subspace& u);

struct Submodule {
  Module module;
  /// dim V x dim U; columns are the canonical basis of U.
  Matrix inclusion;
  Subspace space;
};
Submodule submodule(const Module& v, const Subspace& u);

struct QuotientModule {
  Module module;
  /// dim(V/U) x dim V.
  Matrix projection;
  /// dim V x dim(V/U): unit-vector coset representatives.
  Matrix section;
  Subspace kernel;
};
QuotientModule quotient_module(const Module& v, const Subspace& u);

Module direct_sum(const std::vector<Module>& summands);
/// The module T V T^{-1} (same module in the basis given by the columns of T^{-1}).
Module change_basis(const Module& v, const Matrix& t);

/// Hom_A(V, W) as a subspace of k^{dim W * dim V} (row-major W x V matrices).
Subspace hom_space(const Module& v, const Module& w);
Matrix hom_matrix(const Module& v, const Module& w, const Vec& flat);
std::vector<Matrix> hom_basis(const Module& v, const Module& w);

/// An isomorphism M^copies -> T when one is found. Candidates are seeded
/// pseudo-random combinations of a Hom basis, each verified exactly; the
/// search is deterministic for a given seed.
std::optional<Matrix> find_isomorphism_from_power(const Module& m, std::size_t copies,
                                                  const Module& t,
                                                  std::uint64_t seed = 0x5eedULL);
std::optional<Matrix> find_isomorphism(const Module& v, const Module& w,
                                       std::uint64_t seed = 0x5eedULL);
bool is_isomorphism(const Module& v, const Module& w, const Matrix& m);

/// dim e_x V for each family member.
std::vector<std::size_t> dimension_vector(const Module& v, const IdempotentFamily& family);

struct SupportDecomposition {
  std::vector<std::size_t> support;
  std::vector<std::size_t> components;
};
SupportDecomposition support_decomposition(const Module& v, const IdempotentFamily& family);

/// I * U for a subspace U of V.
Subspace ideal_times(const Ideal& ideal, const Module& v, const Subspace& u);
/// {v : I v = 0}.
Subspace annihilated_by(const Ideal& ideal, const Module& v);
/// rad(A) V and soc V for a given radical.
Subspace radical_submodule(const Module& v, const Ideal& radical);
Subspace socle(const Module& v, const Ideal& radical);

/// A e as a left ideal, viewed as a module (basis: canonical basis of A e).
struct LeftIdealModule {
  Module module;
  /// Algebra elements corresponding to the module basis.
  std::vector<Vec> elements;
  Subspace space;
};
LeftIdealModule left_ideal_module(const AlgebraPtr& a, const Vec& idempotent);
/// Linear dual of the right module e A with the contragredient left action.
Module dual_of_right_ideal(const AlgebraPtr& a, const Vec& idempotent);

struct Carriers {
  LeftIdealModule projective;
  Module injective;
};
Carriers projective_and_injective_carriers(const AlgebraPtr& a, const IdempotentFamily& family,
                                           std::size_t x);

/// Inflation of an A/I-module to an A-module along the projection.
Module inflate(const Module& v, const QuotientAlgebra& q, const AlgebraPtr& a);
/// The A/I-module underlying an A-module annihilated by I; throws otherwise.
Module deflate(const Module& v, const QuotientAlgebra& q);

struct Torsion {
  Submodule part;
  /// Stabilized power I^N with N = dim V.
  Ideal stable_power;
};
/// V_I = {v : I^n v = 0 for some n} = ker(I^{dim V}).
Torsion torsion_submodule(const Module& v, const Ideal& ideal);

struct ArtinReesResult {
  bool pass = false;
  std::size_t witness_k = 0;
  /// Stabilized I^k V (pass or fail) and I^n W.
  Subspace stable_power_v;
  Subspace power_w;
  /// On failure: a vector of W cap I^omega V outside I^n W.
  std::optional<Vec> counterexample;
  std::size_t searched_up_to = 0;
};
/// Searches k <= dim V + n with W cap I^k V inside I^n W.
ArtinReesResult artin_rees_test(const Ideal& ideal, const Module& v, const Subspace& w,
                                std::size_t n);

}  // namespace strata::algebra
