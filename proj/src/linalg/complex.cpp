#include "strata/linalg/complex.hpp"

#include <stdexcept>

namespace strata::linalg {

Matrix CochainComplex::differential(std::size_t n) const {
  if (n < differentials.size()) return differentials[n];
  std::size_t from = n < dims.size() ? dims[n] : 0;
  std::size_t to = n + 1 < dims.size() ? dims[n + 1] : 0;
  return Matrix(field, to, from);
}

std::optional<std::size_t> CochainComplex::first_square_failure() const {
  for (std::size_t n = 0; n + 1 < differentials.size(); ++n)
    if (!(differential(n + 1) * differential(n)).is_zero()) return n;
  return std::nullopt;
}

CohomologyGroup::CohomologyGroup(Subspace cocycles, Subspace coboundaries)
    : cocycles_(std::move(cocycles)), coboundaries_(std::move(coboundaries)) {
  std::vector<Vec> forms;
  for (std::size_t i = 0; i < cocycles_.dim(); ++i)
    forms.push_back(coboundaries_.reduce(cocycles_.vector(i)));
  classes_ = Subspace::span(cocycles_.field(), cocycles_.ambient_dim(), forms);
}

Vec CohomologyGroup::class_coordinates(const Vec& z) const {
  if (!cocycles_.contains(z)) throw std::invalid_argument("not a cocycle");
  return classes_.coordinates(coboundaries_.reduce(z));
}

CohomologyGroup cohomology(const CochainComplex& c, std::size_t n) {
  std::size_t dim = n < c.dims.size() ? c.dims[n] : 0;
  Subspace z = rank_kernel(c.differential(n)).kernel;
  Subspace b = n == 0 ? Subspace(c.field, dim)
                      : Subspace::column_space(c.differential(n - 1));
  if (b.ambient_dim() != dim) b = Subspace(c.field, dim);
  return CohomologyGroup(std::move(z), std::move(b));
}

Matrix induced_on_cohomology(const CohomologyGroup& src, const CohomologyGroup& dst,
                             const Matrix& chain_map) {
  auto reps = src.representatives();
  Matrix out(chain_map.field(), dst.dim(), reps.size());
  for (std::size_t j = 0; j < reps.size(); ++j)
    out.set_column(j, dst.class_coordinates(chain_map.apply(reps[j])));
  return out;
}

}  // namespace strata::linalg
