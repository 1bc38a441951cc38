#include <doctest.h>

#include "support.hpp"

using namespace strata::test;
namespace alg = strata::algebra;
namespace io = strata::io;

namespace {

Vec element(const alg::Algebra& a, const std::string& label) {
  return a.basis_vector(*a.find_label(label));
}

bool load_fails_with(const std::vector<std::string>& paths, const std::string& needle) {
  try {
    io::load_definitions(paths);
  } catch (const io::LoadError& e) {
    for (const auto& i : e.issues())
      if (i.to_string().find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("bundled algebras validate with the expected shapes") {
  struct Shape {
    std::string name;
    std::size_t dim, idempotents, radical;
  };
  for (const auto& s : std::vector<Shape>{{"t2", 3, 2, 1}, {"t3", 6, 3, 3}, {"zigzag", 4, 2, 2}, {"sl2O", 5, 2, 3}}) {
    CAPTURE(s.name);
    const auto& a = basic(s.name);
    CHECK(a.algebra()->dim() == s.dim);
    CHECK(a.size() == s.idempotents);
    CHECK(a.radical().dim() == s.radical);
    CHECK(alg::is_nilpotent(a.radical()));
    CHECK(alg::IdempotentFamily::check(*a.algebra(), a.family()).empty());
  }
}

TEST_CASE("associativity failures name the triple") {
  CHECK(load_fails_with({fixture("broken_assoc.json")}, "associativity at (p, p, p)"));
}

TEST_CASE("modules over unknown algebras are reported") {
  CHECK(load_fails_with({STRATA_DATA_DIR, fixture("dangling_module.json")}, "no_such_algebra"));
}

TEST_CASE("characteristic p needs a supplied radical") {
  auto ws = io::load_definitions({fixture("t2_f5.json")});
  const auto& a = ws.algebra("t2_f5").require_basic();
  CHECK(a.radical().dim() == 1);
  CHECK(a.algebra()->field() == Field::prime(5));
  CHECK_THROWS_AS(io::load_definitions({fixture("t2_f5_no_radical.json")}), io::LoadError);
}

TEST_CASE("projectives of T2 are the columns of the upper triangular matrices") {
  const auto& a = basic("t2");
  CHECK(a.projective(label_index(a, "1")).module.dim() == 1);
  CHECK(a.projective(label_index(a, "2")).module.dim() == 2);
  CHECK(a.injective(label_index(a, "1")).dim() == 2);
  CHECK(a.injective(label_index(a, "2")).dim() == 1);
  for (std::size_t x = 0; x < a.size(); ++x) CHECK(a.simple(x).dim() == 1);
}

TEST_CASE("two-sided ideals and quotients") {
  const auto& a = basic("sl2O");
  const auto& A = a.algebra();
  auto i = alg::two_sided_ideal(A, {element(*A, "e1")});
  CHECK(i.dim() == 4);
  CHECK(i.check().empty());
  CHECK(alg::ideal_power(i, 2).space == i.space);
  auto r = alg::ideal_power(a.radical(), 2);
  CHECK(r.dim() == 1);
  CHECK(alg::ideal_power(a.radical(), 3).is_zero());
  auto q = alg::quotient_algebra(A, i);
  CHECK(q.quotient->dim() == 1);
  CHECK(q.projection * q.section == Matrix::identity(A->field(), 1));
  CHECK(alg::quotient_algebra(A, alg::whole_ideal(A)).is_zero_ring());
}

TEST_CASE("Hom between projectives has dimension dim e_x A e_y") {
  for (const auto& name : {"t2", "t3", "zigzag", "sl2O"}) {
    const auto& a = basic(name);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < a.size(); ++y) {
        Matrix exAey = a.algebra()->left_multiplication(a.idempotent(x)) *
                       a.algebra()->right_multiplication(a.idempotent(y));
        CHECK(alg::hom_basis(a.projective(x).module, a.projective(y).module).size() ==
              strata::linalg::rank(exAey));
      }
  }
}

TEST_CASE("a module in a twisted basis is recognised as P2") {
  auto ws = io::load_definitions({STRATA_DATA_DIR, fixture("t2_modules.json")});
  const auto& a = ws.algebra("t2").require_basic();
  const Module& m = ws.modules.at("t2_p2_twisted").module;
  auto iso = alg::find_isomorphism(a.projective(label_index(a, "2")).module, m);
  REQUIRE(iso);
  CHECK(alg::is_isomorphism(a.projective(label_index(a, "2")).module, m, *iso));
  CHECK_FALSE(alg::find_isomorphism(a.simple(0), a.simple(1)));
}

TEST_CASE("property: Hom(P_x, V) = e_x V and invariance under change of basis") {
  std::mt19937_64 rng(test_seed("hom from projectives"));
  for (const auto& name : {"t2", "t3", "zigzag", "sl2O"}) {
    const auto& a = basic(name);
    for (const auto& v : module_catalogue(a, 4)) {
      Module w = alg::change_basis(v, random_invertible(rng, v.field(), v.dim()));
      CHECK(alg::Module::check(*a.algebra(), w.action()).empty());
      CHECK(alg::dimension_vector(v, a.family()) == alg::dimension_vector(w, a.family()));
      auto iso = alg::find_isomorphism(v, w);
      REQUIRE(iso);
      CHECK(alg::is_isomorphism(v, w, *iso));
      auto dv = alg::dimension_vector(v, a.family());
      for (std::size_t x = 0; x < a.size(); ++x)
        CHECK(alg::hom_basis(a.projective(x).module, w).size() == dv[x]);
      for (const auto& h : alg::hom_basis(v, w)) {
        alg::ModuleMap m{v, w, h};
        CHECK(m.is_homomorphism());
      }
    }
  }
}

TEST_CASE("radical, socle and top multiplicities of sl2O projectives") {
  const auto& a = basic("sl2O");
  const Module& p2 = a.projective(label_index(a, "2")).module;
  CHECK(alg::dimension_vector(p2, a.family()) == std::vector<std::size_t>{1, 2});
  CHECK(alg::radical_submodule(p2, a.radical()).dim() == 2);
  CHECK(alg::socle(p2, a.radical()).dim() == 1);
  CHECK(a.top_multiplicities(p2) == std::vector<std::size_t>{0, 1});
  CHECK(a.simples_killed_by(alg::two_sided_ideal(a.algebra(), {a.idempotent(0)})) ==
        std::vector<std::size_t>{1});
}

TEST_CASE("torsion along a nilpotent ideal is everything; along A it is zero") {
  const auto& a = basic("sl2O");
  const Module& p2 = a.projective(1).module;
  CHECK(alg::torsion_submodule(p2, a.radical()).part.module.dim() == p2.dim());
  CHECK(alg::torsion_submodule(p2, alg::whole_ideal(a.algebra())).part.module.dim() == 0);
  auto t = alg::torsion_submodule(p2, alg::two_sided_ideal(a.algebra(), {a.idempotent(0)}));
  CHECK(t.part.module.dim() == 1);
}

TEST_CASE("Artin-Rees holds for nilpotent ideals and fails on the socle of P1 for A e1 A") {
  const auto& a = basic("sl2O");
  const Module& p1 = a.projective(0).module;
  Subspace soc = alg::socle(p1, a.radical());
  CHECK(alg::artin_rees_test(a.radical(), p1, soc, 1).pass);
  auto bad = alg::artin_rees_test(alg::two_sided_ideal(a.algebra(), {a.idempotent(0)}), p1, soc, 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.counterexample);
}

TEST_CASE("segment quotients") {
  const auto& a = basic("t3");
  auto q = alg::segment_quotient(a, {0, 1});
  CHECK(q.basic->algebra()->dim() == 3);
  CHECK(q.members == std::vector<std::size_t>{0, 1});
  auto s = alg::segment_quotient(basic("sl2O"), {1});
  CHECK(s.basic->algebra()->dim() == 1);
}
