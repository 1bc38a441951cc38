#include "strata/lie/ce.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata::lie {

namespace {

void combinations(std::size_t d, std::size_t n, std::size_t start, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    cur.push_back(i);
    combinations(d, n, i + 1, cur, out);
    cur.pop_back();
  }
}

bool same_module(const LieModule& a, const LieModule& b) {
  return a.algebra() == b.algebra() && a.dim() == b.dim() && a.action() == b.action();
}

}  // namespace

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (n <= d) combinations(d, n, 0, cur, out);
  return out;
}

int merge_sign(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  int inversions = 0;
  for (auto x : a)
    for (auto y : b) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  return inversions % 2 ? -1 : 1;
}

std::size_t CEComplex::tuple_index(const std::vector<std::size_t>& t) const {
  const auto& list = tuples.at(t.size());
  auto it = std::lower_bound(list.begin(), list.end(), t);
  if (it == list.end() || *it != t) throw std::invalid_argument("not an increasing tuple");
  return static_cast<std::size_t>(it - list.begin());
}

Matrix CEComplex::value(std::size_t, const Vec& phi, std::size_t tuple) const {
  std::size_t m = coefficients.dim();
  Vec slice(phi.begin() + static_cast<std::ptrdiff_t>(tuple * m),
            phi.begin() + static_cast<std::ptrdiff_t>((tuple + 1) * m));
  return unflatten_map(source.field(), target.dim(), source.dim(), slice);
}

Vec CEComplex::cochain(std::size_t n, const std::vector<Matrix>& values) const {
  if (values.size() != tuples.at(n).size()) throw std::invalid_argument("one value per tuple");
  Vec out;
  for (const auto& v : values) {
    Vec f = flatten(v);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

Vec CEComplex::differentiate(std::size_t n, const Vec& phi) const {
  return complex.differential(n).apply(phi);
}

CEComplex ce_complex(const LieModule& x, const LieModule& y) {
  const LieAlgebra& g = *x.algebra();
  const Field& f = x.field();
  CEComplex c{x, y, hom_module(x, y), {}, {f, {}, {}}};
  std::size_t d = g.dim();
  std::size_t m = c.coefficients.dim();
  for (std::size_t n = 0; n <= d; ++n) {
    c.tuples.push_back(increasing_tuples(d, n));
    c.complex.dims.push_back(c.tuples.back().size() * m);
  }
  for (std::size_t n = 0; n < d; ++n) {
    Matrix dn(f, c.complex.dims[n + 1], c.complex.dims[n]);
    for (std::size_t jt = 0; jt < c.tuples[n + 1].size(); ++jt) {
      const auto& j = c.tuples[n + 1][jt];
      auto add_block = [&](std::size_t it, const Matrix& block) {
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t s = 0; s < m; ++s)
            if (!block(r, s).is_zero()) dn(jt * m + r, it * m + s) += block(r, s);
      };
      for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> rest = j;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        Matrix block = c.coefficients.action(j[k]);
        if (k % 2) block = f.from_int(-1) * block;
        add_block(c.tuple_index(rest), block);
      }
      for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t l = k + 1; l <= n; ++l) {
          std::vector<std::size_t> rest;
          for (std::size_t i = 0; i <= n; ++i)
            if (i != k && i != l) rest.push_back(j[i]);
          const Vec& br = g.bracket(j[k], j[l]);
          for (std::size_t b = 0; b < d; ++b) {
            if (br[b].is_zero()) continue;
            int sign = merge_sign({b}, rest);
            if (sign == 0) continue;
            std::vector<std::size_t> tuple = rest;
            tuple.insert(std::upper_bound(tuple.begin(), tuple.end(), b), b);
            Scalar coeff = br[b] * f.from_int(((k + l) % 2 ? -1 : 1) * sign);
            add_block(c.tuple_index(tuple), coeff * Matrix::identity(f, m));
          }
        }
    }
    c.complex.differentials.push_back(std::move(dn));
  }
  return c;
}

CECohomology ce_cohomology(const LieModule& x, const LieModule& y, std::size_t n_max) {
  CECohomology out{ce_complex(x, y), {}, {}};
  n_max = std::min(n_max, out.complex.top_degree());
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.groups.push_back(linalg::cohomology(out.complex.complex, n));
    out.dims.push_back(out.groups.back().dim());
  }
  return out;
}

Vec cup_product(const CEComplex& yz, std::size_t p, const Vec& u, const CEComplex& xy,
                std::size_t q, const Vec& v, const CEComplex& xz) {
  if (!same_module(yz.source, xy.target))
    throw std::invalid_argument("cup_product: middle modules differ");
  if (!same_module(xz.source, xy.source) || !same_module(xz.target, yz.target))
    throw std::invalid_argument("cup_product: result complex has the wrong modules");
  std::size_t n = p + q;
  if (n > xz.top_degree()) return {};
  const Field& f = xz.source.field();
  std::vector<Matrix> values;
  for (const auto& j : xz.tuples[n]) {
    Matrix acc(f, xz.target.dim(), xz.source.dim());
    for (const auto& s : increasing_tuples(n, p)) {
      std::vector<std::size_t> a, b;
      for (std::size_t i = 0, k = 0; i < n; ++i) {
        if (k < s.size() && s[k] == i) {
          a.push_back(j[i]);
          ++k;
        } else {
          b.push_back(j[i]);
        }
      }
      Matrix term = yz.value(p, u, yz.tuple_index(a)) * xy.value(q, v, xy.tuple_index(b));
      acc = merge_sign(a, b) > 0 ? acc + term : acc - term;
    }
    values.push_back(std::move(acc));
  }
  return xz.cochain(n, values);
}

}  // namespace strata::lie
