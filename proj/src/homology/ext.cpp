#include "strata/homology/ext.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata::homology {

namespace {

ProjectiveModule term_or_zero(const Resolution& r, std::size_t j) {
  if (j < r.terms.size()) return r.terms[j];
  ProjectiveModule z;
  z.module = Module::zero(r.target.algebra());
  return z;
}

Vec flatten(const Matrix& m) {
  Vec out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

}  // namespace

HomCoordinates::HomCoordinates(const ProjectiveModule& p, const Module& w) {
  for (std::size_t k = 0; k < p.rank(); ++k) {
    offsets.push_back(dim);
    blocks.push_back(Subspace::column_space(w.act(generator_element(p, k))));
    dim += blocks.back().dim();
  }
}

Vec HomCoordinates::coordinates(const ProjectiveModule& p, const Matrix& f) const {
  Vec out;
  out.reserve(dim);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Vec c = blocks[k].coordinates(f.apply(p.generators[k]));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

Matrix HomCoordinates::map(const ProjectiveModule& p, const Module& w, const Vec& c) const {
  std::vector<Vec> images;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Vec img = linalg::zero_vec(w.field(), w.dim());
    for (std::size_t i = 0; i < blocks[k].dim(); ++i)
      if (!c[offsets[k] + i].is_zero()) linalg::axpy(img, c[offsets[k] + i], blocks[k].vector(i));
    images.push_back(std::move(img));
  }
  return map_from_projective(p, w, images);
}

CochainComplex hom_complex(const Resolution& r, const Module& w, std::size_t n_max) {
  CochainComplex c{w.field(), {}, {}};
  std::vector<ProjectiveModule> terms;
  std::vector<HomCoordinates> coords;
  for (std::size_t j = 0; j <= n_max + 1; ++j) {
    terms.push_back(term_or_zero(r, j));
    coords.emplace_back(terms.back(), w);
    c.dims.push_back(coords.back().dim);
  }
  for (std::size_t j = 0; j <= n_max; ++j) {
    Matrix d = r.differential(j + 1);
    Matrix delta(w.field(), c.dims[j + 1], c.dims[j]);
    for (std::size_t i = 0; i < c.dims[j]; ++i) {
      Matrix f = coords[j].map(terms[j], w, linalg::unit_vec(w.field(), c.dims[j], i));
      delta.set_column(i, coords[j + 1].coordinates(terms[j + 1], f * d));
    }
    c.differentials.push_back(std::move(delta));
  }
  return c;
}

Matrix precompose(const ProjectiveModule& p, const Module& w_p, const ProjectiveModule& q,
                  const Module& w_q, const Matrix& phi) {
  HomCoordinates hp(p, w_p), hq(q, w_q);
  Matrix out(w_p.field(), hp.dim, hq.dim);
  for (std::size_t i = 0; i < hq.dim; ++i) {
    Matrix f = hq.map(q, w_q, linalg::unit_vec(w_q.field(), hq.dim, i));
    out.set_column(i, hp.coordinates(p, f * phi));
  }
  return out;
}

Matrix postcompose(const ProjectiveModule& p, const Module& w1, const Module& w2,
                   const Matrix& h) {
  HomCoordinates h1(p, w1), h2(p, w2);
  Matrix out(w1.field(), h2.dim, h1.dim);
  for (std::size_t i = 0; i < h1.dim; ++i) {
    Matrix f = h1.map(p, w1, linalg::unit_vec(w1.field(), h1.dim, i));
    out.set_column(i, h2.coordinates(p, h * f));
  }
  return out;
}

ExtTable ext_from_resolution(const Resolution& r, const Module& w, std::size_t n_max) {
  if (!r.complete && r.terms.size() < n_max + 2)
    throw std::invalid_argument("resolution too short for Ext through degree " +
                                std::to_string(n_max));
  ExtTable t;
  t.max_degree = n_max;
  t.complete = r.complete;
  t.resolution = r;
  t.target = w;
  t.complex = hom_complex(r, w, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    t.groups.push_back(linalg::cohomology(t.complex, n));
    t.dims.push_back(t.groups.back().dim());
  }
  return t;
}

ExtTable ext_table(const BasicAlgebra& a, const Module& v, const Module& w, std::size_t n_max) {
  if (v.algebra() != w.algebra() || v.algebra() != a.algebra())
    throw std::invalid_argument("ext_table: modules over different algebras");
  return ext_from_resolution(minimal_resolution(a, v, n_max + 1), w, n_max);
}

Matrix ext_map_in_target(const ExtTable& from, const ExtTable& to, const Matrix& h,
                         std::size_t n) {
  ProjectiveModule p = term_or_zero(from.resolution, n);
  Matrix chain = postcompose(p, from.target, to.target, h);
  return linalg::induced_on_cohomology(from.groups.at(n), to.groups.at(n), chain);
}

HomologicalVerdict homological_test(const BasicAlgebra& a, const Module& m, Mode mode) {
  HomologicalVerdict out;
  for (std::size_t x = 0; x < a.size(); ++x) {
    ExtTable t = mode == Mode::projective ? ext_table(a, m, a.simple(x), 1)
                                          : ext_table(a, a.simple(x), m, 1);
    out.ext1.push_back(t.dims[1]);
    if (t.dims[1] != 0 && out.holds) {
      out.holds = false;
      out.witness_simple = x;
      out.witness_cocycle = t.representatives(1).front();
    }
  }
  return out;
}

bool ComparisonMap::all_iso() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.iso(); });
}

ComparisonMap comparison_map(const BasicAlgebra& a, const std::vector<std::size_t>& segment,
                             const Module& v, const Module& w, std::size_t n_max, bool perturb) {
  if (segment.empty()) throw algebra::PreconditionError("comparison over the empty segment");
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (std::find(segment.begin(), segment.end(), x) != segment.end()) continue;
    for (const Module* m : {&v, &w})
      if (!m->act(a.idempotent(x)).is_zero())
        throw algebra::PreconditionError(std::string(m == &v ? "V" : "W") +
                                         " is not supported on the segment: e_" + a.label(x) +
                                         " acts nonzero");
  }
  ComparisonMap c;
  c.segment = segment;
  c.quotient = algebra::segment_quotient(a, segment);
  const algebra::QuotientAlgebra& q = c.quotient.quotient;
  Module v_sub = algebra::deflate(v, q), w_sub = algebra::deflate(w, q);
  c.amb = ext_table(a, v, w, n_max);
  c.sub = ext_table(*c.quotient.basic, v_sub, w_sub, n_max);
  const Resolution& rp = c.amb.resolution;
  const Resolution& rq = c.sub.resolution;

  Matrix prev;
  for (std::size_t j = 0; j <= n_max; ++j) {
    ProjectiveModule pj = term_or_zero(rp, j);
    ProjectiveModule qj = term_or_zero(rq, j);
    Module q_infl = algebra::inflate(qj.module, q, a.algebra());
    Matrix phi = j == 0 ? lift_through(pj, q_infl, rq.augmentation, rp.augmentation, perturb)
                        : lift_through(pj, q_infl, rq.differential(j), prev * rp.differential(j),
                                       perturb);
    c.chain_map.push_back(phi);
    prev = phi;

    ComparisonDegree d;
    d.n = j;
    d.dim_sub = c.sub.dims[j];
    d.dim_amb = c.amb.dims[j];
    Matrix cochain = precompose(pj, w, qj, w_sub, phi);
    d.map = linalg::induced_on_cohomology(c.sub.groups[j], c.amb.groups[j], cochain);
    d.rank = linalg::rank(d.map);
    if (d.rank < d.dim_sub)
      d.verdict = "not injective";
    else if (d.rank < d.dim_amb)
      d.verdict = "not surjective";
    else
      d.verdict = "iso";
    c.degrees.push_back(std::move(d));
  }

  // Degree 0: a class f in Hom(Q_0, W) factors as g o aug_Q; its image must be g o aug_P.
  ProjectiveModule p0 = term_or_zero(rp, 0), q0 = term_or_zero(rq, 0);
  HomCoordinates h0(q0, w_sub);
  c.degree0_identity = c.sub.dims[0] == c.amb.dims[0];
  for (const Vec& u : c.sub.representatives(0)) {
    Matrix f = h0.map(q0, w_sub, u);
    Matrix g(w.field(), w.dim(), v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
      auto pre = linalg::solve(rq.augmentation, linalg::unit_vec(v.field(), v.dim(), i));
      g.set_column(i, f.apply(*pre));
    }
    if (!(g * rq.augmentation == f) || !(f * c.chain_map[0] == g * rp.augmentation))
      c.degree0_identity = false;
  }
  return c;
}

std::optional<Matrix> extend_morphism(const algebra::ModuleMap& incl, const algebra::ModuleMap& f) {
  const Module& v = incl.target;
  const Module& e = f.target;
  if (linalg::rank(incl.matrix) != incl.source.dim())
    throw std::invalid_argument("extend_morphism: inclusion is not monic");
  auto basis = algebra::hom_basis(v, e);
  Vec rhs = flatten(f.matrix);
  Matrix sys(v.field(), rhs.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) sys.set_column(k, flatten(basis[k] * incl.matrix));
  auto c = linalg::solve(sys, rhs);
  if (!c) return std::nullopt;
  Matrix g(v.field(), e.dim(), v.dim());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!(*c)[k].is_zero()) g = g + (*c)[k] * basis[k];
  return g;
}

}  // namespace strata::homology
