#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "strata/io/definitions.hpp"
#include "strata/strata/checks.hpp"

#ifndef STRATA_DATA_DIR
#define STRATA_DATA_DIR "data"
#endif
#ifndef STRATA_FIXTURE_DIR
#define STRATA_FIXTURE_DIR "tests/fixtures"
#endif

namespace strata::test {

using algebra::Module;
using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using linalg::Subspace;
using linalg::Vec;

inline const io::Workspace& bundled() {
  static const io::Workspace ws = io::load_definitions({STRATA_DATA_DIR});
  return ws;
}

inline std::string fixture(const std::string& name) { return std::string(STRATA_FIXTURE_DIR) + "/" + name; }

inline const algebra::BasicAlgebra& basic(const std::string& name) {
  return bundled().algebra(name).require_basic();
}

inline strata::Poset order_of(const std::string& algebra, const std::string& order = "default") {
  return io::resolve_order(bundled().algebra(algebra), order);
}

inline Module module_of(const std::string& algebra, const std::string& name,
                        const std::optional<strata::Poset>& order = std::nullopt) {
  return io::resolve_module(bundled(), algebra, name, order);
}

inline std::size_t label_index(const algebra::BasicAlgebra& a, const std::string& label) {
  return *a.family().find(label);
}

/// Seed from STRATA_EXT_SEED when set, else the fixed default; printed once per use.
inline std::uint64_t test_seed(const std::string& what) {
  std::uint64_t seed = 20240601;
  std::string source = "default";
  if (const char* s = std::getenv("STRATA_EXT_SEED")) {
    seed = std::strtoull(s, nullptr, 10);
    source = "STRATA_EXT_SEED";
  }
  std::cout << "[seed] " << what << ": " << seed << " (" << source << ")\n";
  return seed;
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return f.from_int(d(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, const Field& f, std::size_t r, std::size_t c,
                            int bound = 3) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(rng, f, bound);
  return m;
}

inline Vec random_vec(std::mt19937_64& rng, const Field& f, std::size_t n, int bound = 3) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(rng, f, bound));
  return v;
}

inline Matrix random_invertible(std::mt19937_64& rng, const Field& f, std::size_t n) {
  while (true) {
    Matrix m = random_matrix(rng, f, n, n, 2);
    if (linalg::rank(m) == n) return m;
  }
}

/// Matrix of rank at most r: a product of random n x r and r x m factors.
inline Matrix random_low_rank(std::mt19937_64& rng, const Field& f, std::size_t n, std::size_t m,
                              std::size_t r) {
  return random_matrix(rng, f, n, r) * random_matrix(rng, f, r, m);
}

/// P_x / rad^k P_x for k >= 1, up to isomorphism. For every bundled algebra
/// (all Nakayama) these are all the indecomposables.
inline std::vector<Module> indecomposables(const algebra::BasicAlgebra& a) {
  std::vector<Module> out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    const Module& p = a.projective(x).module;
    Subspace r = Subspace::full(p.field(), p.dim());
    while (!r.is_zero()) {
      Subspace rk = algebra::ideal_times(a.radical(), p, r);
      Module q = algebra::quotient_module(p, rk).module;
      bool seen = false;
      for (const auto& m : out)
        if (m.dim() == q.dim() && algebra::find_isomorphism(m, q)) seen = true;
      if (!seen) out.push_back(q);
      r = rk;
    }
  }
  return out;
}

/// Direct sums of indecomposables with total dimension <= bound.
inline std::vector<Module> module_catalogue(const algebra::BasicAlgebra& a, std::size_t bound) {
  auto ind = indecomposables(a);
  std::vector<Module> out;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start, std::size_t dim) -> void {
    if (!pick.empty()) {
      std::vector<Module> parts;
      for (auto i : pick) parts.push_back(ind[i]);
      out.push_back(algebra::direct_sum(parts));
    }
    for (std::size_t i = start; i < ind.size(); ++i)
      if (dim + ind[i].dim() <= bound) {
        pick.push_back(i);
        self(self, i, dim + ind[i].dim());
        pick.pop_back();
      }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace strata::test
