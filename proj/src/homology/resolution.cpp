#include "strata/homology/resolution.hpp"

#include <stdexcept>

namespace strata::homology {

using algebra::LeftIdealModule;

std::vector<std::size_t> ProjectiveModule::multiplicities(std::size_t family_size) const {
  std::vector<std::size_t> m(family_size, 0);
  for (auto x : summands) ++m.at(x);
  return m;
}

Vec generator_element(const ProjectiveModule& p, std::size_t k) {
  Vec e = p.module.algebra()->zero();
  const Vec& g = p.generators[k];
  for (std::size_t b = 0; b < g.size(); ++b)
    if (!g[b].is_zero()) linalg::axpy(e, g[b], p.elements[b]);
  return e;
}

ProjectiveModule projective_sum(const BasicAlgebra& a, const std::vector<std::size_t>& summands) {
  ProjectiveModule p;
  p.summands = summands;
  if (summands.empty()) {
    p.module = Module::zero(a.algebra());
    return p;
  }
  std::vector<Module> parts;
  std::size_t offset = 0;
  for (auto x : summands) {
    const LeftIdealModule& q = a.projective(x);
    parts.push_back(q.module);
    p.offsets.push_back(offset);
    p.elements.insert(p.elements.end(), q.elements.begin(), q.elements.end());
    offset += q.module.dim();
  }
  p.module = algebra::direct_sum(parts);
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const LeftIdealModule& q = a.projective(summands[k]);
    Vec g = linalg::zero_vec(a.algebra()->field(), offset);
    Vec local = q.space.coordinates(a.idempotent(summands[k]));
    for (std::size_t i = 0; i < local.size(); ++i) g[p.offsets[k] + i] = local[i];
    p.generators.push_back(std::move(g));
  }
  return p;
}

ProjectiveModule append_summand(const BasicAlgebra& a, const ProjectiveModule& p, std::size_t x) {
  auto s = p.summands;
  s.push_back(x);
  return projective_sum(a, s);
}

Matrix map_from_projective(const ProjectiveModule& p, const Module& m,
                           const std::vector<Vec>& images) {
  if (images.size() != p.rank())
    throw std::invalid_argument("map_from_projective: one image per summand required");
  Matrix f(m.field(), m.dim(), p.dim());
  for (std::size_t k = 0; k < p.rank(); ++k) {
    std::size_t end = k + 1 < p.rank() ? p.offsets[k + 1] : p.dim();
    for (std::size_t b = p.offsets[k]; b < end; ++b)
      f.set_column(b, m.act(p.elements[b], images[k]));
  }
  return f;
}

Matrix lift_through(const ProjectiveModule& p, const Module& m, const Matrix& t,
                    const Matrix& target, bool perturb) {
  std::vector<Vec> images;
  for (std::size_t k = 0; k < p.rank(); ++k) {
    Vec want = target.apply(p.generators[k]);
    // Generator k is e_x; its image must lie in e_x M.
    Vec idem = generator_element(p, k);
    Subspace ex = Subspace::column_space(m.act(idem));
    Matrix basis = ex.basis().transpose();
    Matrix sys = t * basis;
    auto c = linalg::solve(sys, want);
    if (!c) throw std::domain_error("no lift through the given map exists");
    if (perturb) {
      Subspace ker = linalg::rank_kernel(sys).kernel;
      if (!ker.is_zero()) *c = linalg::add(*c, ker.vector(0));
    }
    images.push_back(basis.apply(*c));
  }
  return map_from_projective(p, m, images);
}

ProjectiveCover projective_cover(const BasicAlgebra& a, const Module& v) {
  Subspace rad = algebra::radical_submodule(v, a.radical());
  std::vector<std::size_t> summands;
  std::vector<Vec> images;
  for (std::size_t x = 0; x < a.size(); ++x) {
    Subspace ex = Subspace::column_space(v.act(a.idempotent(x)));
    auto chosen = linalg::extend_basis(linalg::intersection(ex, rad), ex.vectors());
    for (auto& c : chosen) {
      summands.push_back(x);
      images.push_back(std::move(c));
    }
  }
  ProjectiveModule p = projective_sum(a, summands);
  Matrix cover = map_from_projective(p, v, images);
  return {std::move(p), std::move(cover)};
}

std::size_t Resolution::length() const {
  std::size_t last = 0;
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (terms[j].dim() > 0) last = j;
  return last;
}

Matrix Resolution::differential(std::size_t j) const {
  if (j >= 1 && j - 1 < differentials.size()) return differentials[j - 1];
  const Field& f = target.field();
  return Matrix(f, term_dim(j - 1), term_dim(j));
}

std::size_t Resolution::term_dim(std::size_t j) const {
  return j < terms.size() ? terms[j].dim() : 0;
}

std::vector<std::vector<std::size_t>> Resolution::multiplicities(std::size_t family_size) const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& t : terms) out.push_back(t.multiplicities(family_size));
  return out;
}

Resolution minimal_resolution(const BasicAlgebra& a, const Module& v, std::size_t n_max) {
  Resolution r;
  r.target = v;
  r.truncation_degree = n_max;
  ProjectiveCover c0 = projective_cover(a, v);
  r.augmentation = c0.cover;
  r.terms.push_back(std::move(c0.projective));
  Subspace kernel = linalg::rank_kernel(r.augmentation).kernel;
  std::vector<Module> syzygies;
  for (std::size_t j = 1; j <= n_max && !kernel.is_zero(); ++j) {
    algebra::Submodule omega = algebra::submodule(r.terms[j - 1].module, kernel);
    for (std::size_t i = 0; i < syzygies.size(); ++i)
      if (syzygies[i].dim() == omega.module.dim() &&
          algebra::dimension_vector(syzygies[i], a.family()) ==
              algebra::dimension_vector(omega.module, a.family()) &&
          algebra::find_isomorphism(syzygies[i], omega.module))
        r.repeats.emplace_back(i + 1, j);
    syzygies.push_back(omega.module);
    ProjectiveCover c = projective_cover(a, omega.module);
    kernel = linalg::rank_kernel(c.cover).kernel;
    r.differentials.push_back(omega.inclusion * c.cover);
    r.terms.push_back(std::move(c.projective));
  }
  r.complete = kernel.is_zero();
  return r;
}

std::vector<Violation> check_resolution(const BasicAlgebra& a, const Resolution& r, bool minimal) {
  std::vector<Violation> out;
  auto at = [](std::size_t j) { return std::vector<std::string>{"degree " + std::to_string(j)}; };
  if (linalg::rank(r.augmentation) != r.target.dim())
    out.push_back({"augmentation surjective", {}, "image is a proper subspace"});
  if (!algebra::ModuleMap{r.terms[0].module, r.target, r.augmentation}.is_homomorphism())
    out.push_back({"homomorphism", {"augmentation"}, ""});
  for (std::size_t j = 1; j < r.terms.size(); ++j) {
    Matrix d = r.differential(j);
    if (!algebra::ModuleMap{r.terms[j].module, r.terms[j - 1].module, d}.is_homomorphism())
      out.push_back({"homomorphism", at(j), "d_j is not A-linear"});
    Matrix prev = j == 1 ? r.augmentation : r.differential(j - 1);
    if (!(prev * d).is_zero()) out.push_back({"complex", at(j), "d o d != 0"});
    std::size_t kernel_dim = r.term_dim(j - 1) - linalg::rank(prev);
    if (linalg::rank(d) != kernel_dim)
      out.push_back({"exactness", at(j - 1), "image of d_j differs from the kernel below"});
    if (minimal) {
      Subspace rad = algebra::radical_submodule(r.terms[j - 1].module, a.radical());
      if (!rad.contains(Subspace::column_space(d)))
        out.push_back({"minimality", at(j), "image of d_j leaves rad P_{j-1}"});
    }
  }
  if (r.complete) {
    std::size_t last = r.terms.size() - 1;
    Matrix d = last == 0 ? r.augmentation : r.differential(last);
    if (linalg::rank(d) != r.term_dim(last))
      out.push_back({"exactness", at(last), "resolution flagged complete but last map not injective"});
  }
  return out;
}

Resolution pad_resolution(const BasicAlgebra& a, const Resolution& r, std::size_t degree,
                          std::size_t x) {
  Resolution p = r;
  while (p.terms.size() < degree + 2) {
    p.terms.push_back(projective_sum(a, {}));
    std::size_t j = p.terms.size() - 1;
    p.differentials.push_back(Matrix(a.algebra()->field(), p.term_dim(j - 1), 0));
  }
  const Field& f = a.algebra()->field();
  for (std::size_t j : {degree, degree + 1}) {
    std::size_t old_dim = p.terms[j].dim();
    p.terms[j] = append_summand(a, p.terms[j], x);
    std::size_t extra = p.terms[j].dim() - old_dim;
    // Widen the outgoing map (extra columns zero) and the incoming map (extra rows zero).
    if (j == 0) {
      p.augmentation = linalg::hstack(p.augmentation, Matrix(f, p.augmentation.rows(), extra));
    } else {
      Matrix& out = p.differentials[j - 1];
      out = linalg::hstack(out, Matrix(f, out.rows(), extra));
    }
    if (j < p.differentials.size()) {
      Matrix& in = p.differentials[j];
      in = linalg::vstack(in, Matrix(f, extra, in.cols()));
    }
  }
  // The trivial piece: identity from the new summand of P_{degree+1} onto that of P_degree.
  Matrix& d = p.differentials[degree];
  std::size_t extra = a.projective(x).module.dim();
  std::size_t rows = d.rows(), cols = d.cols();
  d.set_block(rows - extra, cols - extra, Matrix::identity(f, extra));
  return p;
}

}  // namespace strata::homology
