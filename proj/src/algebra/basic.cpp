#include "strata/algebra/basic.hpp"

#include <algorithm>

namespace strata::algebra {

RadicalAndSimples radical_and_simples(const AlgebraPtr& a, const IdempotentFamily& family) {
  RadicalAndSimples out{jacobson_radical(a), {}};
  for (std::size_t x = 0; x < family.size(); ++x) {
    LeftIdealModule p = left_ideal_module(a, family.elements[x]);
    if (p.module.dim() == 0)
      throw UnsupportedConfiguration("idempotent '" + family.labels[x] + "' is zero");
    Module top = quotient_module(p.module, radical_submodule(p.module, out.radical)).module;
    if (hom_space(top, top).dim() != 1)
      throw UnsupportedConfiguration("top of A e_" + family.labels[x] +
                                     " is not a split simple module (idempotent not primitive?)");
    out.simples.push_back(std::move(top));
  }
  for (std::size_t x = 0; x < family.size(); ++x)
    for (std::size_t y = 0; y < family.size(); ++y)
      if (x != y && !out.simples[x].act(family.elements[y]).is_zero())
        throw UnsupportedConfiguration("simple tops at '" + family.labels[x] + "' and '" +
                                       family.labels[y] + "' are isomorphic (algebra not basic)");
  return out;
}

std::shared_ptr<const BasicAlgebra> BasicAlgebra::create(AlgebraPtr a, IdempotentFamily family) {
  auto violations = IdempotentFamily::check(*a, family);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  auto rs = radical_and_simples(a, family);
  auto b = std::shared_ptr<BasicAlgebra>(new BasicAlgebra());
  b->algebra_ = a;
  b->family_ = std::move(family);
  b->radical_ = std::move(rs.radical);
  b->simples_ = std::move(rs.simples);
  for (std::size_t x = 0; x < b->family_.size(); ++x) {
    auto c = projective_and_injective_carriers(a, b->family_, x);
    b->projectives_.push_back(std::move(c.projective));
    b->injectives_.push_back(std::move(c.injective));
  }
  return b;
}

std::vector<std::size_t> BasicAlgebra::top_multiplicities(const Module& v) const {
  Subspace rad = radical_submodule(v, radical_);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    Subspace ex = Subspace::column_space(v.act(idempotent(x)));
    out.push_back(ex.dim() - linalg::intersection(ex, rad).dim());
  }
  return out;
}

std::vector<std::size_t> BasicAlgebra::simples_killed_by(const Ideal& ideal) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x)
    if (annihilated_by(ideal, simples_[x]).dim() == simples_[x].dim()) out.push_back(x);
  return out;
}

SegmentQuotient segment_quotient(const BasicAlgebra& a, const std::vector<std::size_t>& segment) {
  std::vector<std::size_t> outside;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (std::find(segment.begin(), segment.end(), x) == segment.end()) outside.push_back(x);
  std::vector<std::size_t> members = segment;
  std::sort(members.begin(), members.end());
  Ideal ideal = idempotent_ideal(a.algebra(), a.family(), outside);
  std::string name = a.algebra()->name() + "_{";
  for (std::size_t k = 0; k < members.size(); ++k) name += (k ? "," : "") + a.label(members[k]);
  name += "}";
  QuotientAlgebra q = quotient_algebra(a.algebra(), ideal, name);
  if (members.empty()) return {std::move(q), nullptr, {}};
  IdempotentFamily fam = project_family(q, a.family(), members);
  auto basic = BasicAlgebra::create(q.quotient, std::move(fam));
  return {std::move(q), std::move(basic), std::move(members)};
}

}  // namespace strata::algebra
