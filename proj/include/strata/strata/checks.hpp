#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strata/homology/ext.hpp"
#include "strata/strata/standard.hpp"

namespace strata::strata {

using algebra::Ideal;
using homology::ComparisonMap;
using homology::ExtTable;
using homology::HomologicalVerdict;

/// (A e_x)^n -> A e_y -> V -> 0 for x maximal, n = dim Hom(A e_x, A e_y).
struct ExactSequenceCheck {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t n = 0;
  /// dim(A e_y) x n dim(A e_x), assembled from a Hom basis.
  Matrix map;
  Subspace image;
  Module cokernel;
  /// rank(map) = dim image and dim V = dim A e_y - rank(map).
  bool exact = false;
  bool killed_by_ex = false;
  /// V in the filtration class of the standards M_z, z != x.
  DeltaResult certificate;

  bool holds() const { return exact && killed_by_ex && certificate.member; }
};
ExactSequenceCheck top_stratum_sequence(const BasicAlgebra& a, const Poset& order,
                                        const StandardModuleSet& s, std::size_t x, std::size_t y,
                                        std::size_t exhaustive_bound = 8);

/// The ideal I = A e_x A for x maximal.
struct IdealAnalysis {
  std::size_t x = 0;
  Ideal ideal;
  /// I as a left A-module.
  Module module;
  HomologicalVerdict projective;
  /// I = (A e_x)^copies, with the explicit isomorphism when found.
  bool decomposed = false;
  std::size_t copies = 0;
  std::optional<Matrix> decomposition;
  /// dim Hom_A(I, A / I).
  std::size_t hom_to_quotient = 0;
};
IdealAnalysis analyse_top_ideal(const BasicAlgebra& a, std::size_t x);

/// Stage of the co-maximal chain X > X \ {x1} > X \ {x1, x2} > ...
struct ChainStage {
  std::vector<std::size_t> segment;
  std::size_t removed = 0;
  bool pass = false;
  std::string failure;
};

struct StratificationReport {
  Poset order;
  std::vector<Violation> idempotent_violations;
  StandardModuleSet standards;
  /// membership[x] for A e_x.
  std::vector<DeltaResult> membership;
  std::vector<IdealAnalysis> ideal_analyses;
  std::vector<ChainStage> chain;

  bool idempotents_ok() const { return idempotent_violations.empty(); }
  bool support_ok() const { return standards.pass(); }
  bool membership_ok() const;
  bool chain_ok() const;
  bool pass() const { return idempotents_ok() && support_ok() && membership_ok() && chain_ok(); }
  /// Name of the first failing hypothesis, empty on pass.
  std::string first_failure(const BasicAlgebra& a) const;
};

/// Idempotent axioms, support condition with independence of Y, filtration
/// membership of every A e_x; on pass, the top-ideal analysis for each
/// maximal x and (with `chain`) the same hypotheses re-checked on each A_Y
/// of a co-maximal chain.
StratificationReport check_stratification(const BasicAlgebra& a, const Poset& order,
                                          std::size_t exhaustive_bound = 8, bool chain = true);

/// (A_Y, Y) with the induced order.
struct SegmentAlgebra {
  algebra::SegmentQuotient quotient;
  Poset order;
};
SegmentAlgebra segment_algebra(const BasicAlgebra& a, const Poset& order,
                               const std::vector<std::size_t>& segment);

struct NamedModule {
  std::string name;
  Module module;
};

struct EmbeddingPair {
  std::string v;
  std::string w;
  ComparisonMap map;
};
struct EmbeddingReport {
  std::vector<std::size_t> segment;
  std::size_t max_degree = 0;
  std::vector<EmbeddingPair> pairs;
  bool pass() const;
};
/// Comparison Ext_{A_Y} -> Ext_A for each pair. Y must be an initial segment.
EmbeddingReport embedding_check(const BasicAlgebra& a, const Poset& order,
                                const std::vector<std::size_t>& segment,
                                const std::vector<std::pair<NamedModule, NamedModule>>& pairs,
                                std::size_t n_max);
/// All pairs of simples supported on Y.
std::vector<std::pair<NamedModule, NamedModule>> simple_pairs(const BasicAlgebra& a,
                                                              const std::vector<std::size_t>& segment);

/// B = A / I as a left A-module.
Module quotient_as_module(const Ideal& ideal);

struct VanishingReport {
  Ideal ideal;
  Module quotient;
  /// Family indices of the simples killed by I.
  std::vector<std::size_t> quotient_simples;
  std::size_t max_degree = 0;
  /// Resolution of B terminated within the computed range.
  bool complete = false;
  std::vector<std::size_t> self_ext;
  std::optional<std::size_t> self_ext_failure;
  /// ext_to_simples[k] = dims of Ext_A^n(B, S) for quotient_simples[k].
  std::vector<std::vector<std::size_t>> ext_to_simples;
  std::optional<std::size_t> least_p;
  bool step1_checked = false;
  bool step1_pass = false;
  /// "pass", "fail", or "inconclusive beyond degree d".
  std::string verdict;
};
/// Ext_A^n(B, B) = 0 for 0 < n <= n_max, the least p, and the spot check
/// Ext_A^n(B, S) = 0 for B-simples S (the reduction used for all B-modules).
VanishingReport check_self_ext_vanishing(const BasicAlgebra& a, const Ideal& ideal,
                                         std::size_t n_max);

struct ResolutionHomReport {
  Ideal ideal;
  homology::Resolution resolution;
  std::vector<std::size_t> quotient_simples;
  bool applicable = false;
  std::size_t length = 0;
  struct Nonzero {
    std::size_t j;
    std::size_t simple;
    std::size_t dim;
  };
  std::vector<Nonzero> nonzero;
  /// "pass", "fail", or "inapplicable (no finite projective resolution found)".
  std::string verdict;
  bool pass() const { return verdict == "pass"; }
};
/// Hom_A(P_j, S) = 0 for j >= 1 and B-simples S along a finite minimal resolution of B.
ResolutionHomReport check_resolution_homs(const BasicAlgebra& a, const Ideal& ideal,
                                          std::size_t n_max);

struct ArtinReesCase {
  std::string name;
  algebra::ArtinReesResult result;
};
struct ArtinReesPair {
  std::string name;
  Module v;
  Subspace w;
  std::size_t n = 1;
};

struct ExtensionFailure {
  std::size_t x;
  std::string submodule;
  std::size_t map_index;
};

struct TorsionInjectivityReport {
  Ideal ideal;
  HomologicalVerdict e_injective;
  algebra::Torsion torsion;
  HomologicalVerdict torsion_injective;
  std::vector<ArtinReesCase> artin_rees;
  std::size_t extensions_tried = 0;
  std::vector<ExtensionFailure> extension_failures;
  /// Injectivity of E_I over A / I when I is generated by family idempotents.
  std::optional<HomologicalVerdict> quotient_injective;
  std::string quotient_reading;

  bool artin_rees_pass() const;
  bool injective_pass() const { return torsion_injective.holds && extension_failures.empty(); }
};
/// E_I for injective E: injectivity in Mod A by Ext^1 and by extending maps
/// from submodules of the indecomposable projectives, alongside Artin-Rees
/// tests on the given pairs. Throws algebra::PreconditionError if E is not injective.
TorsionInjectivityReport check_torsion_injectivity(const BasicAlgebra& a, const Ideal& ideal,
                                                   const Module& e,
                                                   const std::vector<ArtinReesPair>& pairs);
/// Socle and radical of each A e_x, with n = 1.
std::vector<ArtinReesPair> default_artin_rees_pairs(const BasicAlgebra& a);

}  // namespace strata::strata
