#include "strata/algebra/module.hpp"

#include <random>

namespace strata::algebra {

namespace {

constexpr int kIsoAttempts = 12;

Matrix stacked_action(const Module& v, const std::vector<Vec>& elements) {
  Matrix out(v.field(), 0, v.dim());
  for (const auto& x : elements) out = linalg::vstack(out, v.act(x));
  return out;
}

}  // namespace

std::vector<Violation> Module::check(const Algebra& a, const std::vector<Matrix>& action) {
  std::vector<Violation> out;
  if (action.size() != a.dim()) {
    out.push_back({"shape", {}, "expected " + std::to_string(a.dim()) + " action matrices, got " +
                                    std::to_string(action.size())});
    return out;
  }
  const std::size_t d = action.empty() ? 0 : action.front().rows();
  for (std::size_t i = 0; i < action.size(); ++i) {
    if (action[i].rows() != d || action[i].cols() != d) {
      out.push_back({"shape", {a.labels()[i]}, "action matrix is not " + std::to_string(d) +
                                                   "x" + std::to_string(d)});
      return out;
    }
    try {
      action[i].check_field();
    } catch (const linalg::FieldMismatch& e) {
      out.push_back({"field", {a.labels()[i]}, e.what()});
      return out;
    }
    if (!(action[i].field() == a.field())) {
      out.push_back({"field", {a.labels()[i]}, "action over " + action[i].field().name()});
      return out;
    }
  }
  auto combine = [&](const Vec& x) {
    Matrix m(a.field(), d, d);
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!x[k].is_zero()) m += x[k] * action[k];
    return m;
  };
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!(action[i] * action[j] == combine(a.product(i, j))))
        out.push_back({"action", {a.labels()[i], a.labels()[j]},
                       "rho(b_i) rho(b_j) differs from rho(b_i b_j)"});
  if (!(combine(a.one()) == Matrix::identity(a.field(), d)))
    out.push_back({"unit action", {}, "the unit does not act as the identity"});
  return out;
}

Module Module::create(AlgebraPtr algebra, std::vector<Matrix> action) {
  auto v = check(*algebra, action);
  if (!v.empty()) throw ValidationError(std::move(v));
  std::size_t d = action.empty() ? 0 : action.front().rows();
  return Module(std::move(algebra), d, std::move(action));
}

Module Module::zero(AlgebraPtr algebra) {
  std::vector<Matrix> action(algebra->dim(), Matrix(algebra->field(), 0, 0));
  return Module(std::move(algebra), 0, std::move(action));
}

Module make_module_unchecked(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action) {
  return Module(std::move(algebra), dim, std::move(action));
}

Matrix Module::act(const Vec& x) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) m += x[k] * action_[k];
  return m;
}

bool ModuleMap::is_homomorphism() const {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) return false;
  for (std::size_t i = 0; i < source.algebra()->dim(); ++i)
    if (!(matrix * source.action(i) == target.action(i) * matrix)) return false;
  return true;
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->left(i));
  return make_module_unchecked(a, a->dim(), std::move(action));
}

Subspace generated_submodule(const Module& v, const std::vector<Vec>& generators) {
  Subspace s = Subspace::span(v.field(), v.dim(), generators);
  while (true) {
    std::vector<Vec> vecs = s.vectors();
    for (std::size_t i = 0; i < v.algebra()->dim(); ++i)
      for (std::size_t k = 0; k < s.dim(); ++k) vecs.push_back(v.action(i).apply(s.vector(k)));
    Subspace next = Subspace::span(v.field(), v.dim(), vecs);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

bool is_submodule(const Module& v, const Subspace& u) {
  for (std::size_t i = 0; i < v.algebra()->dim(); ++i)
    for (std::size_t k = 0; k < u.dim(); ++k)
      if (!u.contains(v.action(i).apply(u.vector(k)))) return false;
  return true;
}

Submodule submodule(const Module& v, const Subspace& u) {
  Matrix incl = u.basis().transpose();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < v.algebra()->dim(); ++i) {
    Matrix m(v.field(), u.dim(), u.dim());
    for (std::size_t k = 0; k < u.dim(); ++k)
      m.set_column(k, u.coordinates(v.action(i).apply(u.vector(k))));
    action.push_back(std::move(m));
  }
  return {make_module_unchecked(v.algebra(), u.dim(), std::move(action)), std::move(incl), u};
}

QuotientModule quotient_module(const Module& v, const Subspace& u) {
  auto comp = u.complement_indices();
  const std::size_t q = comp.size();
  Matrix proj(v.field(), q, v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j)
    proj.set_column(j, u.quotient_coordinates(linalg::unit_vec(v.field(), v.dim(), j)));
  Matrix sec(v.field(), v.dim(), q);
  for (std::size_t k = 0; k < q; ++k) sec(comp[k], k) = v.field().one();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < v.algebra()->dim(); ++i) action.push_back(proj * v.action(i) * sec);
  return {make_module_unchecked(v.algebra(), q, std::move(action)), std::move(proj),
          std::move(sec), u};
}

Module direct_sum(const std::vector<Module>& summands) {
  if (summands.empty()) throw std::invalid_argument("direct_sum of nothing");
  const AlgebraPtr& a = summands.front().algebra();
  std::vector<Matrix> action;
  std::size_t d = 0;
  for (const auto& s : summands) d += s.dim();
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(a->field(), d, d);
    std::size_t off = 0;
    for (const auto& s : summands) {
      m.set_block(off, off, s.action(i));
      off += s.dim();
    }
    action.push_back(std::move(m));
  }
  return make_module_unchecked(a, d, std::move(action));
}

Module change_basis(const Module& v, const Matrix& t) {
  auto inv = linalg::inverse(t);
  if (!inv) throw std::invalid_argument("change_basis: matrix is singular");
  std::vector<Matrix> action;
  for (const auto& m : v.action()) action.push_back(t * m * *inv);
  return make_module_unchecked(v.algebra(), v.dim(), std::move(action));
}

Subspace hom_space(const Module& v, const Module& w) {
  const Field& f = v.field();
  const std::size_t n = w.dim() * v.dim();
  if (n == 0) return Subspace(f, 0);
  Matrix iv = Matrix::identity(f, v.dim());
  Matrix iw = Matrix::identity(f, w.dim());
  Matrix eqs(f, 0, n);
  for (std::size_t i = 0; i < v.algebra()->dim(); ++i) {
    // vec(A F - F B) = (A (x) I - I (x) B^T) vec(F) in row-major vec.
    Matrix block = linalg::kron(w.action(i), iv) - linalg::kron(iw, v.action(i).transpose());
    eqs = linalg::vstack(eqs, block);
    eqs = linalg::Subspace::row_space(eqs).basis();
  }
  return linalg::rank_kernel(eqs).kernel;
}

Matrix hom_matrix(const Module& v, const Module& w, const Vec& flat) {
  return Matrix::unflatten(v.field(), w.dim(), v.dim(), flat);
}

std::vector<Matrix> hom_basis(const Module& v, const Module& w) {
  Subspace h = hom_space(v, w);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < h.dim(); ++k) out.push_back(hom_matrix(v, w, h.vector(k)));
  return out;
}

bool is_isomorphism(const Module& v, const Module& w, const Matrix& m) {
  if (v.dim() != w.dim()) return false;
  ModuleMap map{v, w, m};
  return map.is_homomorphism() && linalg::rank(m) == v.dim();
}

std::optional<Matrix> find_isomorphism_from_power(const Module& m, std::size_t copies,
                                                  const Module& t, std::uint64_t seed) {
  const Field& f = m.field();
  if (m.dim() * copies != t.dim()) return std::nullopt;
  if (t.dim() == 0) return Matrix(f, 0, 0);
  auto basis = hom_basis(m, t);
  if (basis.size() < copies) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coeff(-97, 97);
  auto try_matrix = [&](const std::vector<Matrix>& maps) -> std::optional<Matrix> {
    Matrix block(f, t.dim(), 0);
    for (const auto& h : maps) block = linalg::hstack(block, h);
    if (linalg::rank(block) == t.dim()) return block;
    return std::nullopt;
  };
  // Deterministic first guess: the first `copies` basis maps.
  if (auto hit = try_matrix({basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(copies)}))
    return hit;
  for (int attempt = 0; attempt < kIsoAttempts; ++attempt) {
    std::vector<Matrix> maps;
    for (std::size_t c = 0; c < copies; ++c) {
      Matrix h(f, t.dim(), m.dim());
      for (const auto& b : basis) h += f.from_int(coeff(rng)) * b;
      maps.push_back(std::move(h));
    }
    if (auto hit = try_matrix(maps)) return hit;
  }
  return std::nullopt;
}

std::optional<Matrix> find_isomorphism(const Module& v, const Module& w, std::uint64_t seed) {
  return find_isomorphism_from_power(v, 1, w, seed);
}

std::vector<std::size_t> dimension_vector(const Module& v, const IdempotentFamily& family) {
  std::vector<std::size_t> out;
  for (const auto& e : family.elements) out.push_back(linalg::rank(v.act(e)));
  return out;
}

SupportDecomposition support_decomposition(const Module& v, const IdempotentFamily& family) {
  SupportDecomposition d;
  d.components = dimension_vector(v, family);
  for (std::size_t x = 0; x < d.components.size(); ++x)
    if (d.components[x] > 0) d.support.push_back(x);
  return d;
}

Subspace ideal_times(const Ideal& ideal, const Module& v, const Subspace& u) {
  std::vector<Vec> vecs;
  for (std::size_t p = 0; p < ideal.dim(); ++p) {
    Matrix act = v.act(ideal.space.vector(p));
    for (std::size_t k = 0; k < u.dim(); ++k) vecs.push_back(act.apply(u.vector(k)));
  }
  return Subspace::span(v.field(), v.dim(), vecs);
}

Subspace annihilated_by(const Ideal& ideal, const Module& v) {
  if (v.dim() == 0) return Subspace(v.field(), 0);
  return linalg::rank_kernel(stacked_action(v, ideal.space.vectors())).kernel;
}

Subspace radical_submodule(const Module& v, const Ideal& radical) {
  return ideal_times(radical, v, Subspace::full(v.field(), v.dim()));
}

Subspace socle(const Module& v, const Ideal& radical) { return annihilated_by(radical, v); }

LeftIdealModule left_ideal_module(const AlgebraPtr& a, const Vec& idempotent) {
  Subspace space = Subspace::column_space(a->right_multiplication(idempotent));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix m(a->field(), space.dim(), space.dim());
    for (std::size_t k = 0; k < space.dim(); ++k)
      m.set_column(k, space.coordinates(a->left(i).apply(space.vector(k))));
    action.push_back(std::move(m));
  }
  return {make_module_unchecked(a, space.dim(), std::move(action)), space.vectors(), space};
}

Module dual_of_right_ideal(const AlgebraPtr& a, const Vec& idempotent) {
  Subspace space = Subspace::column_space(a->left_multiplication(idempotent));
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) {
    Matrix rho(a->field(), space.dim(), space.dim());
    for (std::size_t k = 0; k < space.dim(); ++k)
      rho.set_column(k, space.coordinates(a->right(i).apply(space.vector(k))));
    action.push_back(rho.transpose());
  }
  return make_module_unchecked(a, space.dim(), std::move(action));
}

Carriers projective_and_injective_carriers(const AlgebraPtr& a, const IdempotentFamily& family,
                                           std::size_t x) {
  return {left_ideal_module(a, family.elements.at(x)),
          dual_of_right_ideal(a, family.elements.at(x))};
}

Module inflate(const Module& v, const QuotientAlgebra& q, const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(v.act(q.project(a->basis_vector(i))));
  return make_module_unchecked(a, v.dim(), std::move(action));
}

Module deflate(const Module& v, const QuotientAlgebra& q) {
  for (std::size_t p = 0; p < q.kernel.dim(); ++p)
    if (!v.act(q.kernel.space.vector(p)).is_zero())
      throw std::invalid_argument("module is not annihilated by the ideal");
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < q.quotient->dim(); ++k)
    action.push_back(v.act(q.lift(q.quotient->basis_vector(k))));
  return make_module_unchecked(q.quotient, v.dim(), std::move(action));
}

Torsion torsion_submodule(const Module& v, const Ideal& ideal) {
  Ideal power = ideal_power(ideal, v.dim());
  Subspace part = annihilated_by(power, v);
  return {submodule(v, part), std::move(power)};
}

ArtinReesResult artin_rees_test(const Ideal& ideal, const Module& v, const Subspace& w,
                                std::size_t n) {
  if (!is_submodule(v, w)) throw std::invalid_argument("W is not a submodule of V");
  ArtinReesResult r;
  Subspace pw = w;
  for (std::size_t k = 0; k < n; ++k) pw = ideal_times(ideal, v, pw);
  r.power_w = pw;
  Subspace pv = Subspace::full(v.field(), v.dim());
  r.searched_up_to = v.dim() + n;
  for (std::size_t k = 0; k <= r.searched_up_to; ++k) {
    if (k > 0) {
      Subspace next = ideal_times(ideal, v, pv);
      bool stable = next == pv;
      pv = std::move(next);
      if (stable) {
        // I^k V = I^{k-1} V: every later k repeats the failed check.
        r.searched_up_to = k - 1;
        break;
      }
    }
    Subspace meet = linalg::intersection(w, pv);
    if (pw.contains(meet)) {
      r.pass = true;
      r.witness_k = k;
      r.stable_power_v = pv;
      return r;
    }
  }
  r.stable_power_v = pv;
  Subspace meet = linalg::intersection(w, pv);
  for (std::size_t k = 0; k < meet.dim(); ++k)
    if (!pw.contains(meet.vector(k))) {
      r.counterexample = meet.vector(k);
      break;
    }
  return r;
}

}  // namespace strata::algebra
