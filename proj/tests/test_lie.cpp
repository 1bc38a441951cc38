#include <doctest.h>

#include "oracles.hpp"

using namespace strata::test;
namespace lie = strata::lie;
namespace io = strata::io;

using Dims = std::vector<std::size_t>;

namespace {

lie::LieModule lmod(const std::string& g, const std::string& name) {
  return io::resolve_lie_module(bundled(), g, name);
}

Dims ce(const std::string& g, const std::string& x, const std::string& y) {
  auto gx = lmod(g, x);
  return lie::ce_cohomology(gx, lmod(g, y), gx.algebra()->dim()).dims;
}

struct Triple {
  std::string g, x, y, z;
};

const std::vector<Triple> kTriples{{"sl2", "adjoint", "adjoint", "adjoint"},
                                   {"sl2", "trivial", "sl2_standard", "adjoint"},
                                   {"sl2", "sl2_standard", "trivial", "sl2_standard"},
                                   {"abelian2", "trivial", "trivial", "trivial"},
                                   {"abelian3", "trivial", "adjoint", "trivial"}};

}  // namespace

TEST_CASE("Lie algebra validation") {
  const auto& g = *bundled().lie_algebra("sl2").algebra;
  CHECK(lie::LieAlgebra::check(g.table()).empty());
  try {
    io::load_definitions({fixture("broken_jacobi.json")});
    FAIL("expected a load error");
  } catch (const io::LoadError& e) {
    CHECK(e.issues().front().to_string().find("Jacobi") != std::string::npos);
  }
  auto t = g.table();
  t.bracket[1][2] = strata::linalg::zero_vec(t.field, 3);
  auto v = lie::LieAlgebra::check(t);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().axiom == "antisymmetry");
}

TEST_CASE("representations: adjoint, standard and Hom modules") {
  auto g = bundled().lie_algebra("sl2").algebra;
  auto ad = lie::LieModule::adjoint(g);
  auto st = lmod("sl2", "sl2_standard");
  CHECK(lie::LieModule::check(*g, ad.action()).empty());
  auto h = lie::hom_module(st, ad);
  CHECK(h.dim() == 6);
  CHECK(lie::LieModule::check(*g, h.action()).empty());
  CHECK(lie::invariants(lie::hom_module(ad, ad)).dim() == 1);
  CHECK(lie::intertwiners(st, st).dim() == 1);
  CHECK(lie::intertwiners(st, ad).dim() == 0);
}

TEST_CASE("oracle: CE cohomology dimensions") {
  for (std::size_t d = 1; d <= 3; ++d) {
    auto dims = ce("abelian" + std::to_string(d), "trivial", "trivial");
    REQUIRE(dims.size() == d + 1);
    for (std::size_t n = 0; n <= d; ++n) CHECK(dims[n] == oracle::binomial(d, n));
  }
  CHECK(ce("sl2", "trivial", "trivial") == Dims{1, 0, 0, 1});
  CHECK(ce("sl2", "adjoint", "adjoint") == Dims{1, 0, 0, 1});
  CHECK(ce("sl2", "trivial", "adjoint") == Dims{0, 0, 0, 0});
}

TEST_CASE("merge signs") {
  CHECK(lie::merge_sign({0}, {1}) == 1);
  CHECK(lie::merge_sign({1}, {0}) == -1);
  CHECK(lie::merge_sign({0, 2}, {1}) == -1);
  CHECK(lie::merge_sign({1, 2}, {0}) == 1);
  CHECK(lie::merge_sign({0}, {0}) == 0);
  CHECK(lie::increasing_tuples(3, 2).size() == 3);
}

TEST_CASE("property: the CE differential matches the alternating formula and squares to zero") {
  std::mt19937_64 rng(test_seed("CE differential"));
  for (const auto& t : kTriples) {
    auto c = lie::ce_complex(lmod(t.g, t.x), lmod(t.g, t.y));
    CHECK_FALSE(c.complex.first_square_failure());
    for (std::size_t n = 0; n < c.top_degree(); ++n)
      for (int trial = 0; trial < 3; ++trial) {
        Vec phi = random_vec(rng, c.coefficients.field(), c.degree_dim(n));
        CHECK(c.differentiate(n, phi) == oracle::differential(c, n, phi));
      }
  }
}

TEST_CASE("property: shuffle cup product matches the permutation formula") {
  std::mt19937_64 rng(test_seed("cup oracle"));
  for (const auto& t : kTriples) {
    auto x = lmod(t.g, t.x), y = lmod(t.g, t.y), z = lmod(t.g, t.z);
    auto yz = lie::ce_complex(y, z), xy = lie::ce_complex(x, y), xz = lie::ce_complex(x, z);
    std::size_t d = x.algebra()->dim();
    for (std::size_t p = 0; p <= d; ++p)
      for (std::size_t q = 0; p + q <= d; ++q) {
        const Field& f = x.field();
        Vec u = random_vec(rng, f, yz.degree_dim(p));
        Vec v = random_vec(rng, f, xy.degree_dim(q));
        CHECK(lie::cup_product(yz, p, u, xy, q, v, xz) == oracle::cup(yz, p, u, xy, q, v, xz));
      }
  }
}

TEST_CASE("property: graded Leibniz rule on at least 100 random pairs") {
  std::mt19937_64 rng(test_seed("Leibniz"));
  std::size_t tested = 0;
  for (const auto& t : kTriples) {
    auto x = lmod(t.g, t.x), y = lmod(t.g, t.y), z = lmod(t.g, t.z);
    auto yz = lie::ce_complex(y, z), xy = lie::ce_complex(x, y), xz = lie::ce_complex(x, z);
    std::size_t d = x.algebra()->dim();
    const Field& f = x.field();
    for (int trial = 0; trial < 8; ++trial)
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; p + q < d; ++q) {
          Vec u = random_vec(rng, f, yz.degree_dim(p));
          Vec v = random_vec(rng, f, xy.degree_dim(q));
          Vec lhs = xz.differentiate(p + q, lie::cup_product(yz, p, u, xy, q, v, xz));
          Vec a = lie::cup_product(yz, p + 1, yz.differentiate(p, u), xy, q, v, xz);
          Vec b = lie::cup_product(yz, p, u, xy, q + 1, xy.differentiate(q, v), xz);
          CHECK(lhs == (p % 2 ? strata::linalg::sub(a, b) : strata::linalg::add(a, b)));
          ++tested;
        }
  }
  CHECK(tested >= 100);
}

TEST_CASE("degree zero cup product is composition of intertwiners") {
  for (const auto& t : kTriples) {
    auto x = lmod(t.g, t.x), y = lmod(t.g, t.y), z = lmod(t.g, t.z);
    auto yz = lie::ce_complex(y, z), xy = lie::ce_complex(x, y), xz = lie::ce_complex(x, z);
    for (const auto& u : lie::intertwiners(y, z).vectors())
      for (const auto& v : lie::intertwiners(x, y).vectors()) {
        Matrix comp = lie::unflatten_map(x.field(), z.dim(), y.dim(), u) *
                      lie::unflatten_map(x.field(), y.dim(), x.dim(), v);
        Vec prod = lie::cup_product(yz, 0, u, xy, 0, v, xz);
        CHECK(prod == lie::flatten(comp));
        CHECK(lie::intertwiners(x, z).contains(prod));
      }
  }
}

TEST_CASE("cup product rejects mismatched middle modules") {
  auto g = bundled().lie_algebra("sl2").algebra;
  auto ad = lie::LieModule::adjoint(g);
  auto tr = lie::LieModule::trivial(g);
  auto yz = lie::ce_complex(ad, ad), xy = lie::ce_complex(tr, tr), xz = lie::ce_complex(tr, ad);
  CHECK_THROWS(lie::cup_product(yz, 0, Vec(9, g->field().zero()), xy, 0, Vec(1, g->field().zero()), xz));
}
