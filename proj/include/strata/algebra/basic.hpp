#pragma once

#include <memory>
#include <vector>

#include "strata/algebra/module.hpp"

namespace strata::algebra {

struct RadicalAndSimples {
  Ideal radical;
  /// simples[x] = top of A e_x, ordered like the idempotent family.
  std::vector<Module> simples;
};

/// Radical (trace form or supplied) and the tops (A/rad A) e_x. Each top must
/// be simple with one-dimensional endomorphisms and the tops pairwise
/// non-isomorphic; otherwise UnsupportedConfiguration.
RadicalAndSimples radical_and_simples(const AlgebraPtr& a, const IdempotentFamily& family);

/// Algebra with a complete family of primitive orthogonal idempotents whose
/// simple tops are split and pairwise distinct, together with the data every
/// resolution needs: radical, simples, indecomposable projectives, injectives.
class BasicAlgebra {
 public:
  static std::shared_ptr<const BasicAlgebra> create(AlgebraPtr a, IdempotentFamily family);

  const AlgebraPtr& algebra() const { return algebra_; }
  const IdempotentFamily& family() const { return family_; }
  std::size_t size() const { return family_.size(); }
  const std::string& label(std::size_t x) const { return family_.labels[x]; }
  const Ideal& radical() const { return radical_; }
  const Module& simple(std::size_t x) const { return simples_[x]; }
  const LeftIdealModule& projective(std::size_t x) const { return projectives_[x]; }
  const Module& injective(std::size_t x) const { return injectives_[x]; }
  const Vec& idempotent(std::size_t x) const { return family_.elements[x]; }

  /// Multiplicity of S_x in the top of V for each x.
  std::vector<std::size_t> top_multiplicities(const Module& v) const;
  /// Simples S with I S = 0 (the simple A/I-modules), as family indices.
  std::vector<std::size_t> simples_killed_by(const Ideal& ideal) const;

 private:
  BasicAlgebra() = default;
  AlgebraPtr algebra_;
  IdempotentFamily family_;
  Ideal radical_;
  std::vector<Module> simples_;
  std::vector<LeftIdealModule> projectives_;
  std::vector<Module> injectives_;
};

using BasicAlgebraPtr = std::shared_ptr<const BasicAlgebra>;

/// A_Y = A / sum_{x not in Y} A e_x A with the image family on Y.
struct SegmentQuotient {
  QuotientAlgebra quotient;
  BasicAlgebraPtr basic;
  /// members[k] = index in the parent family of the k-th family member of A_Y.
  std::vector<std::size_t> members;
};
SegmentQuotient segment_quotient(const BasicAlgebra& a, const std::vector<std::size_t>& segment);

}  // namespace strata::algebra
