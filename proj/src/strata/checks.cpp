#include "strata/strata/checks.hpp"

#include <algorithm>

namespace strata::strata {

namespace {

std::string segment_name(const BasicAlgebra& a, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + a.label(s[i]);
  return out + "}";
}

bool is_maximal(const Poset& order, std::size_t x) {
  auto m = order.maximal_elements();
  return std::find(m.begin(), m.end(), x) != m.end();
}

}  // namespace

ExactSequenceCheck top_stratum_sequence(const BasicAlgebra& a, const Poset& order,
                                        const StandardModuleSet& s, std::size_t x, std::size_t y,
                                        std::size_t exhaustive_bound) {
  if (!is_maximal(order, x))
    throw algebra::PreconditionError(a.label(x) + " is not maximal in the order " +
                                     order.to_string());
  ExactSequenceCheck c;
  c.x = x;
  c.y = y;
  const Module& px = a.projective(x).module;
  const Module& py = a.projective(y).module;
  auto basis = algebra::hom_basis(px, py);
  c.n = basis.size();
  c.map = Matrix(py.field(), py.dim(), 0);
  for (const auto& b : basis) c.map = linalg::hstack(c.map, b);
  c.image = Subspace::column_space(c.map);
  bool linear =
      c.n == 0 ||
      algebra::ModuleMap{algebra::direct_sum(std::vector<Module>(c.n, px)), py, c.map}.is_homomorphism();
  bool closed = algebra::is_submodule(py, c.image);
  c.cokernel = algebra::quotient_module(py, c.image).module;
  std::size_t rank = linalg::rank(c.map);
  c.exact = linear && closed && rank == c.image.dim() && c.cokernel.dim() + rank == py.dim();
  c.killed_by_ex = c.cokernel.act(a.idempotent(x)).is_zero();
  Allowed allowed(a.size(), true);
  allowed[x] = false;
  c.certificate = delta_membership(a, order, s, c.cokernel, exhaustive_bound, allowed);
  return c;
}

Module quotient_as_module(const Ideal& ideal) {
  return algebra::quotient_module(algebra::regular_module(ideal.algebra), ideal.space).module;
}

IdealAnalysis analyse_top_ideal(const BasicAlgebra& a, std::size_t x) {
  IdealAnalysis r;
  r.x = x;
  r.ideal = algebra::idempotent_ideal(a.algebra(), a.family(), {x});
  r.module = algebra::submodule(algebra::regular_module(a.algebra()), r.ideal.space).module;
  r.projective = homology::homological_test(a, r.module, homology::Mode::projective);
  const Module& px = a.projective(x).module;
  if (r.module.dim() % px.dim() == 0) {
    std::size_t copies = r.module.dim() / px.dim();
    r.decomposition = algebra::find_isomorphism_from_power(px, copies, r.module);
    if (r.decomposition) {
      r.decomposed = true;
      r.copies = copies;
    }
  }
  r.hom_to_quotient = algebra::hom_space(r.module, quotient_as_module(r.ideal)).dim();
  return r;
}

bool StratificationReport::membership_ok() const {
  return std::all_of(membership.begin(), membership.end(), [](const auto& d) { return d.member; });
}

bool StratificationReport::chain_ok() const {
  return std::all_of(chain.begin(), chain.end(), [](const auto& c) { return c.pass; });
}

std::string StratificationReport::first_failure(const BasicAlgebra& a) const {
  if (!idempotents_ok()) return "idempotent axioms: " + idempotent_violations.front().to_string();
  if (!support_ok()) {
    const auto& f = standards.failures.front();
    return "support condition at (Y = " + segment_name(a, f.segment) + ", y = " + a.label(f.y) +
           "): " + f.reason;
  }
  for (std::size_t x = 0; x < membership.size(); ++x)
    if (!membership[x].member)
      return "filtration membership of P_" + a.label(x) + ": " + membership[x].failure;
  for (const auto& c : chain)
    if (!c.pass) return "co-maximal chain at Y = " + segment_name(a, c.segment) + ": " + c.failure;
  return {};
}

SegmentAlgebra segment_algebra(const BasicAlgebra& a, const Poset& order,
                               const std::vector<std::size_t>& segment) {
  if (segment.empty()) throw algebra::PreconditionError("empty segment has no algebra");
  SegmentAlgebra s{algebra::segment_quotient(a, segment), {}};
  s.order = order.restrict(s.quotient.members);
  return s;
}

StratificationReport check_stratification(const BasicAlgebra& a, const Poset& order,
                                          std::size_t exhaustive_bound, bool chain) {
  StratificationReport r;
  r.order = order;
  r.idempotent_violations = algebra::IdempotentFamily::check(*a.algebra(), a.family());
  r.standards = standard_modules(a, order);
  for (std::size_t x = 0; x < a.size(); ++x)
    r.membership.push_back(
        delta_membership(a, order, r.standards, a.projective(x).module, exhaustive_bound));
  if (!(r.idempotents_ok() && r.support_ok() && r.membership_ok())) return r;
  for (auto x : order.maximal_elements()) r.ideal_analyses.push_back(analyse_top_ideal(a, x));
  if (!chain) return r;
  std::vector<std::size_t> current(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) current[x] = x;
  while (current.size() > 1) {
    std::size_t top = order.maximal_elements(current).front();
    current.erase(std::find(current.begin(), current.end(), top));
    SegmentAlgebra s = segment_algebra(a, order, current);
    auto sub = check_stratification(*s.quotient.basic, s.order, exhaustive_bound, false);
    ChainStage stage{current, top, sub.idempotents_ok() && sub.support_ok() && sub.membership_ok(),
                     sub.first_failure(*s.quotient.basic)};
    for (const auto& an : sub.ideal_analyses)
      if (!an.projective.holds || an.hom_to_quotient != 0) {
        stage.pass = false;
        stage.failure = "ideal of the top stratum is not projective with Hom(I, B) = 0";
      }
    r.chain.push_back(std::move(stage));
  }
  return r;
}

bool EmbeddingReport::pass() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.map.all_iso(); });
}

EmbeddingReport embedding_check(const BasicAlgebra& a, const Poset& order,
                                const std::vector<std::size_t>& segment,
                                const std::vector<std::pair<NamedModule, NamedModule>>& pairs,
                                std::size_t n_max) {
  if (!order.is_initial_segment(segment))
    throw algebra::PreconditionError(segment_name(a, segment) +
                                     " is not an initial segment of " + order.to_string());
  EmbeddingReport r;
  r.segment = segment;
  r.max_degree = n_max;
  for (const auto& [v, w] : pairs)
    r.pairs.push_back({v.name, w.name, homology::comparison_map(a, segment, v.module, w.module, n_max)});
  return r;
}

std::vector<std::pair<NamedModule, NamedModule>> simple_pairs(const BasicAlgebra& a,
                                                              const std::vector<std::size_t>& segment) {
  std::vector<std::pair<NamedModule, NamedModule>> out;
  for (auto x : segment)
    for (auto y : segment)
      out.push_back({{"S" + a.label(x), a.simple(x)}, {"S" + a.label(y), a.simple(y)}});
  return out;
}

VanishingReport check_self_ext_vanishing(const BasicAlgebra& a, const Ideal& ideal,
                                         std::size_t n_max) {
  VanishingReport r;
  r.ideal = ideal;
  r.quotient = quotient_as_module(ideal);
  r.quotient_simples = a.simples_killed_by(ideal);
  r.max_degree = n_max;
  auto res = homology::minimal_resolution(a, r.quotient, n_max + 1);
  r.complete = res.complete;
  r.self_ext = homology::ext_from_resolution(res, r.quotient, n_max).dims;
  for (std::size_t n = 1; n <= n_max; ++n)
    if (r.self_ext[n] != 0) {
      r.self_ext_failure = n;
      break;
    }
  for (auto x : r.quotient_simples)
    r.ext_to_simples.push_back(homology::ext_from_resolution(res, a.simple(x), n_max).dims);
  for (std::size_t p = 0; p <= n_max; ++p) {
    bool vanish = true;
    for (const auto& dims : r.ext_to_simples)
      for (std::size_t n = p + 1; n <= n_max; ++n) vanish = vanish && dims[n] == 0;
    if (vanish && (r.complete || p < n_max)) {
      r.least_p = p;
      break;
    }
  }
  if (!r.self_ext_failure) {
    r.step1_checked = true;
    r.step1_pass = true;
    for (const auto& dims : r.ext_to_simples)
      for (std::size_t n = 1; n <= n_max; ++n) r.step1_pass = r.step1_pass && dims[n] == 0;
  }
  if (r.self_ext_failure || (r.step1_checked && !r.step1_pass))
    r.verdict = "fail";
  else if (r.complete)
    r.verdict = "pass";
  else
    r.verdict = "inconclusive beyond degree " + std::to_string(n_max);
  return r;
}

ResolutionHomReport check_resolution_homs(const BasicAlgebra& a, const Ideal& ideal,
                                          std::size_t n_max) {
  ResolutionHomReport r;
  r.ideal = ideal;
  r.quotient_simples = a.simples_killed_by(ideal);
  r.resolution = homology::minimal_resolution(a, quotient_as_module(ideal), n_max);
  r.applicable = r.resolution.complete;
  if (!r.applicable) {
    r.verdict = "inapplicable (no finite projective resolution found)";
    return r;
  }
  r.length = r.resolution.length();
  for (std::size_t j = 1; j < r.resolution.terms.size(); ++j)
    for (auto x : r.quotient_simples) {
      std::size_t d = algebra::hom_space(r.resolution.terms[j].module, a.simple(x)).dim();
      if (d != 0) r.nonzero.push_back({j, x, d});
    }
  r.verdict = r.nonzero.empty() ? "pass" : "fail";
  return r;
}

bool TorsionInjectivityReport::artin_rees_pass() const {
  return std::all_of(artin_rees.begin(), artin_rees.end(),
                     [](const auto& c) { return c.result.pass; });
}

std::vector<ArtinReesPair> default_artin_rees_pairs(const BasicAlgebra& a) {
  std::vector<ArtinReesPair> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Module& p = a.projective(x).module;
    Subspace soc = algebra::socle(p, a.radical());
    Subspace rad = algebra::radical_submodule(p, a.radical());
    out.push_back({"soc P_" + a.label(x) + " in P_" + a.label(x), p, soc, 1});
    if (!rad.is_zero() && !(rad == soc))
      out.push_back({"rad P_" + a.label(x) + " in P_" + a.label(x), p, rad, 1});
  }
  return out;
}

TorsionInjectivityReport check_torsion_injectivity(const BasicAlgebra& a, const Ideal& ideal,
                                                   const Module& e,
                                                   const std::vector<ArtinReesPair>& pairs) {
  TorsionInjectivityReport r;
  r.ideal = ideal;
  r.e_injective = homology::homological_test(a, e, homology::Mode::injective);
  if (!r.e_injective.holds)
    throw algebra::PreconditionError("E is not injective: Ext^1(S_" +
                                     a.label(*r.e_injective.witness_simple) + ", E) != 0");
  r.torsion = algebra::torsion_submodule(e, ideal);
  const Module& et = r.torsion.part.module;
  r.torsion_injective = homology::homological_test(a, et, homology::Mode::injective);
  for (const auto& p : pairs)
    r.artin_rees.push_back({p.name, algebra::artin_rees_test(ideal, p.v, p.w, p.n)});

  for (std::size_t x = 0; x < a.size(); ++x) {
    const Module& px = a.projective(x).module;
    std::vector<std::pair<std::string, Subspace>> subs;
    Subspace full = Subspace::full(px.field(), px.dim());
    Subspace layer = full;
    for (std::size_t k = 1;; ++k) {
      layer = algebra::ideal_times(a.radical(), px, layer);
      if (layer.is_zero()) break;
      subs.emplace_back("rad^" + std::to_string(k), layer);
    }
    Subspace soc = algebra::socle(px, a.radical());
    if (!soc.is_full() && std::none_of(subs.begin(), subs.end(),
                                       [&](const auto& s) { return s.second == soc; }))
      subs.emplace_back("soc", soc);
    for (const auto& [name, w] : subs) {
      auto sub = algebra::submodule(px, w);
      algebra::ModuleMap incl{sub.module, px, sub.inclusion};
      auto basis = algebra::hom_basis(sub.module, et);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        ++r.extensions_tried;
        if (!homology::extend_morphism(incl, {sub.module, et, basis[i]}))
          r.extension_failures.push_back({x, name, i});
      }
    }
  }

  std::vector<std::size_t> inside, outside;
  for (std::size_t x = 0; x < a.size(); ++x)
    (ideal.space.contains(a.idempotent(x)) ? inside : outside).push_back(x);
  auto generated = algebra::idempotent_ideal(a.algebra(), a.family(), inside);
  if (outside.empty()) {
    r.quotient_reading = "A / I is the zero ring; E_I = 0";
  } else if (!(generated.space == ideal.space)) {
    r.quotient_reading = "not available: I is not generated by family idempotents";
  } else {
    auto q = algebra::segment_quotient(a, outside);
    Module deflated = algebra::deflate(et, q.quotient);
    r.quotient_injective = homology::homological_test(*q.basic, deflated, homology::Mode::injective);
    r.quotient_reading = "E_I as a module over A / I";
  }
  return r;
}

}  // namespace strata::strata
