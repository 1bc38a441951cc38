#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "support.hpp"

#include "strata/lie/ce.hpp"

// Independent recomputations used as test oracles. They share only the
// exact field, matrices and module primitives with the library.

namespace strata::test::oracle {

/// Ext^n(V, W), n <= n_max, from the non-minimal resolution whose terms are
/// (+)_x (A e_x)^{dim e_x K} for each syzygy K, by ranks of Hom complexes.
inline std::vector<std::size_t> ext_dims(const algebra::BasicAlgebra& a, const Module& v,
                                         const Module& w, std::size_t n_max) {
  const Field& f = v.field();
  std::vector<Module> terms;
  std::vector<Matrix> diffs;  // diffs[j] : P_{j+1} -> P_j
  Module k = v;
  Matrix into_prev;  // K_j -> P_{j-1}
  for (std::size_t j = 0; j <= n_max + 1; ++j) {
    std::vector<Module> parts;
    std::vector<Vec> columns;
    for (std::size_t x = 0; x < a.size(); ++x) {
      Subspace ex = Subspace::column_space(k.act(a.idempotent(x)));
      for (const auto& m : ex.vectors()) {
        const auto& p = a.projective(x);
        parts.push_back(p.module);
        for (const auto& u : p.elements) columns.push_back(k.act(u, m));
      }
    }
    Module pj = parts.empty() ? Module::zero(a.algebra()) : algebra::direct_sum(parts);
    Matrix onto = Matrix::from_columns(f, k.dim(), columns);
    if (columns.empty()) onto = Matrix(f, k.dim(), 0);
    if (j > 0) diffs.push_back(into_prev * onto);
    terms.push_back(pj);
    auto ker = linalg::rank_kernel(onto).kernel;
    auto sub = algebra::submodule(pj, ker);
    k = sub.module;
    into_prev = sub.inclusion;
  }
  // rank of f -> f o d_j on Hom(P_{j}, W) -> Hom(P_{j+1}, W)
  std::vector<std::size_t> hom_dim, coboundary_rank;
  for (std::size_t j = 0; j <= n_max + 1; ++j) {
    auto basis = algebra::hom_basis(terms[j], w);
    hom_dim.push_back(basis.size());
    if (j <= n_max) {
      std::vector<Vec> images;
      for (const auto& h : basis) images.push_back((h * diffs[j]).entries());
      coboundary_rank.push_back(
          Subspace::span(f, w.dim() * terms[j + 1].dim(), images).dim());
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j <= n_max; ++j)
    out.push_back(hom_dim[j] - coboundary_rank[j] - (j ? coboundary_rank[j - 1] : 0));
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sign of a permutation given as a sequence of distinct values.
inline int permutation_sign(std::vector<std::size_t> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

/// Value of an alternating cochain on an arbitrary tuple of basis indices.
inline Matrix evaluate(const lie::CEComplex& c, std::size_t n, const Vec& phi,
                       const std::vector<std::size_t>& tuple) {
  std::vector<std::size_t> sorted = tuple;
  std::sort(sorted.begin(), sorted.end());
  Matrix zero(c.coefficients.field(), c.target.dim(), c.source.dim());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return zero;
  std::vector<std::size_t> ranks;
  for (auto t : tuple) ranks.push_back(std::lower_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
  Matrix v = c.value(n, phi, c.tuple_index(sorted));
  return permutation_sign(ranks) < 0 ? c.coefficients.field().from_int(-1) * v : v;
}

/// CE differential from the alternating formula over all index tuples,
/// expanding brackets linearly.
inline Vec differential(const lie::CEComplex& c, std::size_t n, const Vec& phi) {
  const auto& g = *c.source.algebra();
  const Field& f = g.field();
  std::vector<Matrix> values;
  for (const auto& t : c.tuples.at(n + 1)) {
    Matrix acc(f, c.target.dim(), c.source.dim());
    for (std::size_t i = 0; i <= n; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) rest.push_back(t[k]);
      Matrix val = evaluate(c, n, phi, rest);
      Matrix xi = c.target.action(t[i]) * val - val * c.source.action(t[i]);
      acc = acc + (i % 2 ? f.from_int(-1) * xi : xi);
    }
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Vec br = g.bracket(t[i], t[j]);
        for (std::size_t b = 0; b < br.size(); ++b) {
          if (br[b].is_zero()) continue;
          std::vector<std::size_t> args{b};
          for (std::size_t k = 0; k <= n; ++k)
            if (k != i && k != j) args.push_back(t[k]);
          Matrix val = evaluate(c, n, phi, args);
          Scalar coeff = (i + j) % 2 ? -br[b] : br[b];
          acc = acc + coeff * val;
        }
      }
    values.push_back(acc);
  }
  return c.cochain(n + 1, values);
}

/// Cup product as (1 / p! q!) sum over all permutations of the arguments.
inline Vec cup(const lie::CEComplex& yz, std::size_t p, const Vec& u, const lie::CEComplex& xy,
               std::size_t q, const Vec& v, const lie::CEComplex& xz) {
  const Field& f = xz.coefficients.field();
  long long fact = 1;
  for (std::size_t i = 2; i <= p; ++i) fact *= static_cast<long long>(i);
  for (std::size_t i = 2; i <= q; ++i) fact *= static_cast<long long>(i);
  Scalar norm = f.from_int(fact).inverse();
  std::vector<Matrix> values;
  for (const auto& t : xz.tuples.at(p + q)) {
    std::vector<std::size_t> perm(p + q);
    std::iota(perm.begin(), perm.end(), 0);
    Matrix acc(f, xz.target.dim(), xz.source.dim());
    do {
      std::vector<std::size_t> a, b;
      for (std::size_t i = 0; i < p; ++i) a.push_back(t[perm[i]]);
      for (std::size_t i = p; i < p + q; ++i) b.push_back(t[perm[i]]);
      Matrix term = evaluate(yz, p, u, a) * evaluate(xy, q, v, b);
      acc = acc + (permutation_sign(perm) < 0 ? f.from_int(-1) * term : term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    values.push_back(norm * acc);
  }
  return xz.cochain(p + q, values);
}

}  // namespace strata::test::oracle
