#include "strata/strata/standard.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata::strata {

namespace {

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (std::find(s.begin(), s.end(), x) == s.end()) out.push_back(x);
  return out;
}

std::string segment_name(const BasicAlgebra& a, const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + a.label(s[i]);
  return out + "}";
}

Module power(const Module& m, std::size_t copies) {
  return algebra::direct_sum(std::vector<Module>(copies, m));
}

bool allowed_at(const Allowed& allowed, std::size_t x) { return allowed.empty() || allowed[x]; }

/// Residual V / F with F tracked inside V.
struct Residual {
  Subspace f;
  algebra::QuotientModule q;
};

Residual residual(const Module& v, const Subspace& f) { return {f, algebra::quotient_module(v, f)}; }

struct Peel {
  FiltrationLayer layer;
  std::string failure;
  bool ok() const { return failure.empty(); }
};

Peel peel(const BasicAlgebra& a, const StandardModuleSet& s, const Residual& r, std::size_t x) {
  Peel p;
  p.layer.x = x;
  const Module& q = r.q.module;
  Subspace ex = Subspace::column_space(q.act(a.idempotent(x)));
  Subspace trace = algebra::generated_submodule(q, ex.vectors());
  algebra::Submodule layer = algebra::submodule(q, trace);
  const Module& mx = s.modules[x];
  std::size_t per_copy = Subspace::column_space(mx.act(a.idempotent(x))).dim();
  std::string what = "trace of P_" + a.label(x) + " in the residual module (dim " +
                     std::to_string(trace.dim()) + ")";
  if (per_copy == 0 || ex.dim() % per_copy != 0 ||
      trace.dim() != (ex.dim() / per_copy) * mx.dim()) {
    p.failure = what + " has the wrong dimension for a power of M_" + a.label(x);
    return p;
  }
  std::size_t m = ex.dim() / per_copy;
  auto iso = algebra::find_isomorphism_from_power(mx, m, layer.module);
  if (!iso) {
    p.failure = what + " is not isomorphic to M_" + a.label(x) + "^" + std::to_string(m);
    return p;
  }
  p.layer.multiplicity = m;
  p.layer.iso = *iso;
  p.layer.top = linalg::preimage(r.q.projection, trace);
  return p;
}

std::vector<std::size_t> residual_support(const BasicAlgebra& a, const Residual& r) {
  return algebra::support_decomposition(r.q.module, a.family()).support;
}

std::string describe_support(const BasicAlgebra& a, const std::vector<std::size_t>& support) {
  return "support " + segment_name(a, support);
}

}  // namespace

Module segment_projective(const BasicAlgebra& a, const std::vector<std::size_t>& segment,
                          std::size_t y) {
  const Module& p = a.projective(y).module;
  algebra::Ideal ideal =
      algebra::idempotent_ideal(a.algebra(), a.family(), complement(a.size(), segment));
  Subspace kill = algebra::ideal_times(ideal, p, Subspace::full(p.field(), p.dim()));
  return algebra::quotient_module(p, kill).module;
}

StandardModuleSet standard_modules(const BasicAlgebra& a, const Poset& order) {
  StandardModuleSet s;
  for (std::size_t y = 0; y < a.size(); ++y) {
    auto down = order.down_set(y);
    Module m = segment_projective(a, down, y);
    auto support = algebra::support_decomposition(m, a.family()).support;
    for (auto x : support)
      if (!order.leq(x, y)) {
        s.failures.push_back({down, y, x,
                              "M_" + a.label(y) + " has e_" + a.label(x) + " M_" + a.label(y) +
                                  " != 0 although " + a.label(x) + " is not below " + a.label(y)});
        break;
      }
    s.modules.push_back(std::move(m));
  }
  for (const auto& seg : order.initial_segments()) {
    for (auto y : order.maximal_elements(seg)) {
      ++s.cross_checks;
      Module m = segment_projective(a, seg, y);
      auto support = algebra::support_decomposition(m, a.family()).support;
      auto bad = std::find_if(support.begin(), support.end(),
                              [&](std::size_t x) { return !order.leq(x, y); });
      if (bad != support.end()) {
        s.failures.push_back({seg, y, *bad,
                              "A_Y e_" + a.label(y) + " for Y = " + segment_name(a, seg) +
                                  " has e_" + a.label(*bad) + " acting nonzero"});
        continue;
      }
      const Module& my = s.modules[y];
      if (m.dim() != my.dim() || !algebra::find_isomorphism(m, my))
        s.failures.push_back({seg, y, std::nullopt,
                              "A_Y e_" + a.label(y) + " for Y = " + segment_name(a, seg) +
                                  " is not isomorphic to M_" + a.label(y)});
    }
  }
  return s;
}

DeltaResult delta_greedy(const BasicAlgebra& a, const Poset& order, const StandardModuleSet& s,
                         const Module& v, const Allowed& allowed) {
  DeltaResult out;
  FiltrationCertificate cert;
  Residual r = residual(v, Subspace(v.field(), v.dim()));
  for (std::size_t stage = 1; r.f.dim() < v.dim(); ++stage) {
    auto support = residual_support(a, r);
    std::size_t x = order.maximal_elements(support).front();
    std::string where = "stage " + std::to_string(stage) + " (" + describe_support(a, support) +
                        ", residual dim " + std::to_string(v.dim() - r.f.dim()) + "): ";
    if (!allowed_at(allowed, x)) {
      out.failure = where + "M_" + a.label(x) + " is not an admissible layer";
      return out;
    }
    Peel p = peel(a, s, r, x);
    if (!p.ok()) {
      out.failure = where + p.failure;
      return out;
    }
    r = residual(v, p.layer.top);
    cert.layers.push_back(std::move(p.layer));
  }
  out.member = true;
  out.method = "greedy";
  out.certificate = std::move(cert);
  return out;
}

namespace {

/// Coefficient vectors for combinations of a Hom basis: every vector when
/// the field is finite and small, else 0/1 combinations (all of them for up
/// to four basis maps, otherwise units and the full sum).
std::vector<std::vector<long long>> combinations(const linalg::Field& f, std::size_t n) {
  std::vector<std::vector<long long>> out;
  std::uint64_t p = f.characteristic();
  std::uint64_t base = 2;
  if (p != 0) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n && total <= 256; ++i) total *= p;
    if (total <= 256) base = p;
  }
  if (base == 2 && n > 4) {
    for (std::size_t i = 0; i < n; ++i) {
      out.emplace_back(n, 0);
      out.back()[i] = 1;
    }
    out.emplace_back(n, 1);
    return out;
  }
  std::vector<long long> c(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && c[i] + 1 == static_cast<long long>(base)) c[i++] = 0;
    if (i == n) break;
    ++c[i];
    out.push_back(c);
  }
  return out;
}

/// Layer candidates for label x: the trace layer, then images of single
/// embeddings M_x -> V/F lifted to V.
std::vector<FiltrationLayer> layer_choices(const BasicAlgebra& a, const StandardModuleSet& s,
                                           const Residual& r, std::size_t x) {
  std::vector<FiltrationLayer> out;
  Peel p = peel(a, s, r, x);
  if (p.ok()) out.push_back(std::move(p.layer));
  const Module& mx = s.modules[x];
  const Module& q = r.q.module;
  auto basis = algebra::hom_basis(mx, q);
  if (basis.empty()) return out;
  for (const auto& c : combinations(q.field(), basis.size())) {
    Matrix h(q.field(), q.dim(), mx.dim());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c[i] != 0) h = h + q.field().from_int(c[i]) * basis[i];
    if (linalg::rank(h) != mx.dim()) continue;
    Subspace top = linalg::preimage(r.q.projection, Subspace::column_space(h));
    if (std::any_of(out.begin(), out.end(), [&](const FiltrationLayer& l) { return l.top == top; }))
      continue;
    FiltrationLayer l;
    l.x = x;
    l.multiplicity = 1;
    l.top = std::move(top);
    auto image = algebra::submodule(q, Subspace::column_space(h));
    auto iso = algebra::find_isomorphism_from_power(mx, 1, image.module);
    if (!iso) continue;
    l.iso = std::move(*iso);
    out.push_back(std::move(l));
  }
  return out;
}

bool dfs(const BasicAlgebra& a, const StandardModuleSet& s, const Module& v, const Allowed& allowed,
         const Residual& r, FiltrationCertificate& cert, std::vector<Subspace>& dead,
         std::size_t& nodes) {
  ++nodes;
  if (r.f.dim() == v.dim()) return true;
  if (std::find(dead.begin(), dead.end(), r.f) != dead.end()) return false;
  for (auto x : residual_support(a, r)) {
    if (!allowed_at(allowed, x)) continue;
    for (auto& layer : layer_choices(a, s, r, x)) {
      Residual next = residual(v, layer.top);
      cert.layers.push_back(std::move(layer));
      if (dfs(a, s, v, allowed, next, cert, dead, nodes)) return true;
      cert.layers.pop_back();
    }
  }
  dead.push_back(r.f);
  return false;
}

}  // namespace

DeltaResult delta_exhaustive(const BasicAlgebra& a, const StandardModuleSet& s, const Module& v,
                             const Allowed& allowed) {
  DeltaResult out;
  FiltrationCertificate cert;
  std::vector<Subspace> dead;
  if (dfs(a, s, v, allowed, residual(v, Subspace(v.field(), v.dim())), cert, dead, out.nodes)) {
    out.member = true;
    out.method = "exhaustive";
    out.certificate = std::move(cert);
  } else {
    out.failure = "no choice of layers yields a filtration by standard modules";
  }
  return out;
}

DeltaResult delta_membership(const BasicAlgebra& a, const Poset& order, const StandardModuleSet& s,
                             const Module& v, std::size_t exhaustive_bound,
                             const Allowed& allowed) {
  DeltaResult out = delta_greedy(a, order, s, v, allowed);
  if (!out.member) {
    if (v.dim() <= exhaustive_bound) {
      DeltaResult ex = delta_exhaustive(a, s, v, allowed);
      if (ex.member) {
        out = std::move(ex);
      } else {
        out.nodes = ex.nodes;
        out.failure += "; exhaustive search over " + std::to_string(ex.nodes) +
                       " nodes found no filtration either";
      }
    } else {
      out.failure += "; exhaustive fallback skipped (dim " + std::to_string(v.dim()) +
                     " exceeds bound " + std::to_string(exhaustive_bound) + ")";
    }
  }
  if (out.member) {
    auto bad = verify_certificate(a, s, v, *out.certificate);
    if (!bad.empty())
      throw std::logic_error("filtration certificate failed re-validation: " + bad.front().to_string());
  }
  return out;
}

std::vector<Violation> verify_certificate(const BasicAlgebra& a, const StandardModuleSet& s,
                                          const Module& v, const FiltrationCertificate& c) {
  std::vector<Violation> out;
  Subspace f(v.field(), v.dim());
  for (std::size_t i = 0; i < c.layers.size(); ++i) {
    const FiltrationLayer& l = c.layers[i];
    std::vector<std::string> at{"layer " + std::to_string(i + 1), "x = " + a.label(l.x)};
    if (!algebra::is_submodule(v, l.top)) out.push_back({"submodule", at, "F_i is not a submodule"});
    if (!l.top.contains(f) || l.top.dim() <= f.dim())
      out.push_back({"strict chain", at, "F_{i-1} is not properly contained in F_i"});
    auto q = algebra::quotient_module(v, f);
    Subspace image = linalg::image(q.projection, l.top);
    if (algebra::is_submodule(q.module, image)) {
      auto layer = algebra::submodule(q.module, image);
      Module expected = power(s.modules[l.x], l.multiplicity);
      if (l.iso.rows() != layer.module.dim() || l.iso.cols() != expected.dim() ||
          !algebra::is_isomorphism(expected, layer.module, l.iso))
        out.push_back({"layer isomorphism", at, "matrix is not an isomorphism onto F_i/F_{i-1}"});
    }
    f = l.top;
  }
  if (f.dim() != v.dim()) out.push_back({"exhaustive chain", {}, "F_m != V"});
  return out;
}

}  // namespace strata::strata
