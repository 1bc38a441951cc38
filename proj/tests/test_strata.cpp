#include <doctest.h>

#include "support.hpp"

using namespace strata::test;
namespace alg = strata::algebra;
namespace st = strata::strata;
namespace io = strata::io;

using Dims = std::vector<std::size_t>;

namespace {

alg::Ideal ideal_of(const std::string& algebra, const std::vector<std::string>& tokens) {
  return io::resolve_ideal(bundled().algebra(algebra), tokens);
}

const std::vector<std::string> kAlgebras{"t2", "t3", "zigzag", "sl2O"};

std::vector<std::string> order_names(const std::string& algebra) {
  std::vector<std::string> out;
  for (const auto& [name, pairs] : bundled().algebra(algebra).orders) out.push_back(name);
  out.push_back("antichain");
  return out;
}

}  // namespace

TEST_CASE("posets: closure, antisymmetry and initial segments") {
  auto p = st::Poset::from_covers({"1", "2", "3"}, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.initial_segments() ==
        std::vector<std::vector<std::size_t>>{{}, {0}, {0, 1}, {0, 1, 2}});
  CHECK(p.maximal_elements() == std::vector<std::size_t>{2});
  CHECK(p.to_string() == "1<2, 2<3");
  CHECK_THROWS_AS(st::Poset::from_covers({"1", "2"}, {{0, 1}, {1, 0}}), alg::ValidationError);
  auto a = st::Poset::antichain({"b", "a"});
  CHECK(a.maximal_elements() == std::vector<std::size_t>{1, 0});
  CHECK(a.initial_segments().size() == 4);
  CHECK(a.to_string() == "antichain");
}

TEST_CASE("standard modules") {
  const auto& t3 = basic("t3");
  auto s = st::standard_modules(t3, order_of("t3"));
  CHECK(s.pass());
  CHECK(s.modules[0].dim() == 1);
  CHECK(s.modules[1].dim() == 2);
  CHECK(s.modules[2].dim() == 3);
  const auto& o = basic("sl2O");
  auto so = st::standard_modules(o, order_of("sl2O"));
  CHECK(so.pass());
  CHECK(alg::dimension_vector(so.modules[0], o.family()) == Dims{1, 1});
  CHECK(alg::dimension_vector(so.modules[1], o.family()) == Dims{0, 1});
}

TEST_CASE("stratification verdicts on the bundled algebras") {
  CHECK(st::check_stratification(basic("t2"), order_of("t2")).pass());
  CHECK(st::check_stratification(basic("t3"), order_of("t3")).pass());
  CHECK(st::check_stratification(basic("sl2O"), order_of("sl2O", "antidominant-first")).pass());

  const auto& o = basic("sl2O");
  auto wrong = st::check_stratification(o, order_of("sl2O", "dominant-first"));
  CHECK_FALSE(wrong.pass());
  CHECK(wrong.support_ok());
  CHECK_FALSE(wrong.membership[label_index(o, "1")].member);
  CHECK(wrong.first_failure(o).find("P_1") != std::string::npos);

  auto anti = st::check_stratification(o, order_of("sl2O", "antichain"));
  CHECK_FALSE(anti.support_ok());

  for (const auto& n : {"1-first", "2-first"})
    CHECK_FALSE(st::check_stratification(basic("zigzag"), order_of("zigzag", n)).pass());

  const auto& t2 = basic("t2");
  auto t2a = st::check_stratification(t2, order_of("t2", "antichain"));
  REQUIRE_FALSE(t2a.standards.failures.empty());
  CHECK(t2a.standards.failures.front().segment == std::vector<std::size_t>{0, 1});
  CHECK(t2a.standards.failures.front().y == label_index(t2, "2"));
}

TEST_CASE("certificates re-verify and tampering is detected") {
  const auto& o = basic("sl2O");
  auto order = order_of("sl2O");
  auto s = st::standard_modules(o, order);
  const Module& p2 = o.projective(1).module;
  auto d = st::delta_membership(o, order, s, p2);
  REQUIRE(d.member);
  CHECK(st::verify_certificate(o, s, p2, *d.certificate).empty());
  REQUIRE(d.certificate->layers.size() == 2);
  auto tampered = *d.certificate;
  std::swap(tampered.layers[0].x, tampered.layers[1].x);
  CHECK_FALSE(st::verify_certificate(o, s, p2, tampered).empty());
  auto truncated = *d.certificate;
  truncated.layers.pop_back();
  CHECK_FALSE(st::verify_certificate(o, s, p2, truncated).empty());
}

TEST_CASE("exhaustive search finds filtrations the trace strategy misses") {
  const auto& o = basic("sl2O");
  auto order = order_of("sl2O", "antichain");
  auto s = st::standard_modules(o, order);
  const Module& p2 = o.projective(1).module;
  CHECK_FALSE(st::delta_greedy(o, order, s, p2, {}).member);
  auto ex = st::delta_exhaustive(o, s, p2, {});
  REQUIRE(ex.member);
  CHECK(st::verify_certificate(o, s, p2, *ex.certificate).empty());
}

TEST_CASE("property: greedy and exhaustive agree on modules of dimension <= 6 for stratifying orders") {
  std::mt19937_64 rng(test_seed("greedy vs exhaustive"));
  for (const auto& name : kAlgebras) {
    const auto& a = basic(name);
    for (const auto& on : order_names(name)) {
      auto order = order_of(name, on);
      if (!st::check_stratification(a, order, 8, false).pass()) continue;
      auto s = st::standard_modules(a, order);
      for (const auto& m : module_catalogue(a, 6)) {
        Module v = alg::change_basis(m, random_invertible(rng, m.field(), m.dim()));
        auto g = st::delta_greedy(a, order, s, v, {});
        auto e = st::delta_exhaustive(a, s, v, {});
        CAPTURE(name);
        CAPTURE(on);
        CHECK(g.member == e.member);
        if (g.member) CHECK(st::verify_certificate(a, s, v, *g.certificate).empty());
        if (e.member) CHECK(st::verify_certificate(a, s, v, *e.certificate).empty());
      }
    }
  }
}

TEST_CASE("top stratum sequences") {
  const auto& o = basic("sl2O");
  auto order = order_of("sl2O");
  auto s = st::standard_modules(o, order);
  std::size_t x = label_index(o, "1"), y = label_index(o, "2");
  auto seq = st::top_stratum_sequence(o, order, s, x, y);
  CHECK(seq.exact);
  CHECK(seq.killed_by_ex);
  CHECK(seq.certificate.member);
  // dim e_1 A e_2 = [P_2 : L_1] = 1 in this presentation.
  CHECK(seq.n == 1);
  CHECK(seq.image == alg::radical_submodule(o.projective(y).module, o.radical()));
  CHECK(alg::find_isomorphism(seq.cokernel, s.modules[y]));

  auto same = st::top_stratum_sequence(o, order, s, x, x);
  CHECK(same.cokernel.dim() == 0);
  CHECK(same.holds());

  const auto& t3 = basic("t3");
  auto o3 = order_of("t3");
  auto s3 = st::standard_modules(t3, o3);
  auto seq3 = st::top_stratum_sequence(t3, o3, s3, 2, 0);
  CHECK(seq3.n == 0);
  CHECK(seq3.cokernel.dim() == 1);
  CHECK(seq3.holds());
  CHECK_THROWS_AS(st::top_stratum_sequence(t3, o3, s3, 0, 1), alg::PreconditionError);
}

TEST_CASE("property: top stratum sequences are exact with e_x V = 0 on passing instances") {
  for (const auto& [name, on] : std::vector<std::pair<std::string, std::string>>{
           {"t2", "default"}, {"t3", "default"}, {"sl2O", "antidominant-first"}}) {
    const auto& a = basic(name);
    auto order = order_of(name, on);
    auto s = st::standard_modules(a, order);
    for (auto x : order.maximal_elements())
      for (std::size_t y = 0; y < a.size(); ++y) {
        auto seq = st::top_stratum_sequence(a, order, s, x, y);
        CHECK(seq.holds());
        CHECK(strata::linalg::rank(seq.map) == seq.image.dim());
        CHECK(seq.cokernel.dim() + seq.image.dim() == a.projective(y).module.dim());
        CHECK(seq.cokernel.act(a.idempotent(x)).is_zero());
      }
  }
}

TEST_CASE("top ideal analysis") {
  for (const auto& [name, on] : std::vector<std::pair<std::string, std::string>>{
           {"t2", "default"}, {"t3", "default"}, {"sl2O", "antidominant-first"}}) {
    const auto& a = basic(name);
    auto order = order_of(name, on);
    for (auto x : order.maximal_elements()) {
      auto an = st::analyse_top_ideal(a, x);
      CHECK(an.projective.holds);
      CHECK(an.decomposed);
      REQUIRE(an.decomposition);
      CHECK(an.copies * a.projective(x).module.dim() == an.ideal.dim());
      CHECK(an.hom_to_quotient == 0);
    }
  }
  const auto& z = basic("zigzag");
  for (std::size_t x = 0; x < z.size(); ++x) CHECK_FALSE(st::analyse_top_ideal(z, x).projective.holds);
}

TEST_CASE("property: hypotheses are inherited by every initial segment algebra") {
  for (const auto& name : kAlgebras) {
    const auto& a = basic(name);
    for (const auto& on : order_names(name)) {
      auto order = order_of(name, on);
      if (!st::check_stratification(a, order).pass()) continue;
      for (const auto& seg : order.initial_segments()) {
        if (seg.empty()) continue;
        auto sub = st::segment_algebra(a, order, seg);
        CAPTURE(name);
        CAPTURE(on);
        CHECK(st::check_stratification(*sub.quotient.basic, sub.order).pass());
      }
    }
  }
}

TEST_CASE("property: passing instances embed in every degree up to 2 dim A") {
  for (const auto& name : kAlgebras) {
    const auto& a = basic(name);
    for (const auto& on : order_names(name)) {
      auto order = order_of(name, on);
      if (!st::check_stratification(a, order).pass()) continue;
      for (const auto& seg : order.initial_segments()) {
        if (seg.empty()) continue;
        auto rep = st::embedding_check(a, order, seg, st::simple_pairs(a, seg), 2 * a.algebra()->dim());
        CAPTURE(name);
        CAPTURE(on);
        CHECK(rep.pass());
        for (const auto& p : rep.pairs) CHECK(p.map.degree0_identity);
      }
    }
  }
}

TEST_CASE("embedding check rejects non-initial segments") {
  const auto& t3 = basic("t3");
  CHECK_THROWS_AS(st::embedding_check(t3, order_of("t3"), {1}, st::simple_pairs(t3, {1}), 2),
                  alg::PreconditionError);
}

TEST_CASE("self-Ext vanishing suite") {
  auto t2 = st::check_self_ext_vanishing(basic("t2"), ideal_of("t2", {"E22"}), 6);
  CHECK(t2.verdict == "pass");
  CHECK(t2.least_p == std::optional<std::size_t>(0));
  auto z = st::check_self_ext_vanishing(basic("zigzag"), ideal_of("zigzag", {"e2"}), 8);
  CHECK(z.verdict == "fail");
  CHECK(z.self_ext_failure == std::optional<std::size_t>(2));
  CHECK(st::check_self_ext_vanishing(basic("sl2O"), ideal_of("sl2O", {"e1"}), 10).verdict == "pass");
}

TEST_CASE("resolution-Hom suite") {
  auto t2 = st::check_resolution_homs(basic("t2"), ideal_of("t2", {"E22"}), 6);
  CHECK(t2.pass());
  CHECK(t2.length == 0);
  auto o = st::check_resolution_homs(basic("sl2O"), ideal_of("sl2O", {"e1"}), 10);
  CHECK(o.pass());
  CHECK(o.length == 1);
  auto z = st::check_resolution_homs(basic("zigzag"), ideal_of("zigzag", {"e1"}), 8);
  CHECK_FALSE(z.applicable);
  CHECK(z.verdict == "inapplicable (no finite projective resolution found)");
}

TEST_CASE("torsion injectivity and the Artin-Rees condition fail together for A e1 A") {
  const auto& o = basic("sl2O");
  const Module& e = o.projective(label_index(o, "2")).module;
  auto pairs = st::default_artin_rees_pairs(o);
  auto r = st::check_torsion_injectivity(o, ideal_of("sl2O", {"e1"}), e, pairs);
  CHECK(r.e_injective.holds);
  CHECK(r.torsion.part.module.dim() == 1);
  CHECK_FALSE(r.artin_rees_pass());
  CHECK_FALSE(r.torsion_injective.holds);
  CHECK(r.torsion_injective.witness_simple == std::optional<std::size_t>(label_index(o, "1")));
  CHECK_FALSE(r.extension_failures.empty());

  auto rad = st::check_torsion_injectivity(o, o.radical(), e, pairs);
  CHECK(rad.artin_rees_pass());
  CHECK(rad.injective_pass());
  CHECK(rad.torsion.part.module.dim() == e.dim());

  auto whole = st::check_torsion_injectivity(o, ideal_of("sl2O", {"A"}), e, pairs);
  CHECK(whole.injective_pass());
  CHECK(whole.torsion.part.module.dim() == 0);

  CHECK_THROWS_AS(st::check_torsion_injectivity(o, o.radical(), o.simple(0), pairs), alg::PreconditionError);
}
