#include <doctest.h>

#include "gammalib/filtration.hpp"
#include "support/corpus.hpp"

using namespace gammalib;

TEST_CASE("filtration checks pass on the corpus") {
  CHECK(check_filtration(corpus::z4f()).status == Verdict::Status::pass);
  CHECK(check_filtration(corpus::p2f()).status == Verdict::Status::pass);
  GammaRing z2 = corpus::z2();
  Filtration triv{z2, {AbelianGroup::subgroup(z2.carrier(),
                                              z2.carrier().elements())}};
  CHECK(check_filtration(triv).status == Verdict::Status::pass);
}

TEST_CASE("filtration violations carry witnesses") {
  GammaRing z4 = corpus::z4();
  AbelianGroup two = AbelianGroup::subgroup(z4.carrier(), {{0}, {2}});
  AbelianGroup zero = trivial_subgroup(z4.carrier());
  AbelianGroup whole =
      AbelianGroup::subgroup(z4.carrier(), z4.carrier().elements());

  Verdict mono = check_filtration(Filtration{z4, {two, zero, whole}});
  CHECK(mono.status == Verdict::Status::fail);
  CHECK(mono.law == "monotonicity");
  CHECK(mono.witness == "i=0, x=(2)");

  Verdict exh = check_filtration(Filtration{z4, {zero, two}});
  CHECK(exh.status == Verdict::Status::fail);
  CHECK(exh.law == "exhaustion");
  CHECK(exh.witness == "x=(1) is outside level 1");

  GammaRing p2 = corpus::poly(2).ring();
  AbelianGroup xonly =
      AbelianGroup::subgroup(p2.carrier(), {{0, 0, 0}, {0, 1, 0}});
  AbelianGroup pwhole =
      AbelianGroup::subgroup(p2.carrier(), p2.carrier().elements());
  Verdict comp = check_filtration(Filtration{p2, {xonly, pwhole}});
  CHECK(comp.status == Verdict::Status::fail);
  CHECK(comp.law == "compatibility");
  CHECK(comp.witness ==
        "i=0, j=0, x=(0,1,0), alpha=(1), y=(0,1,0), product=(0,0,1)");
}

TEST_CASE("a graded ring yields its level filtration") {
  Filtration f = corpus::p2f();
  REQUIRE(f.chain.size() == 3);
  CHECK(f.chain[0].size() == 2);
  CHECK(f.chain[1].size() == 4);
  CHECK(f.chain[2].size() == 8);

  // a clamp-graded ring whose overflow products do not vanish is rejected
  FiniteSemigroup clamp = truncated_addition_monoid(1);
  AbelianGroup z2 = AbelianGroup::cyclic_product({2});
  GradedGammaRing sticky = GradedGammaRing::from_components(
      clamp, z2, {z2, z2},
      [](std::size_t, std::size_t, const Element& x, const Element& a,
         const Element& y) {
        return Element{(x[0] * a[0] * y[0]) % 2};
      });
  CHECK_THROWS_AS(filtration_from_grading(sticky), PreconditionError);
}

TEST_CASE("chain level quotients have the expected sizes") {
  std::vector<AbelianGroup> q = chain_level_quotients(corpus::z4f().chain);
  REQUIRE(q.size() == 3);
  CHECK(q[0].size() == 2);
  CHECK(q[1].size() == 2);
  CHECK(q[2].size() == 1);
}

TEST_CASE("the associated graded ring is a graded ring") {
  GradedGammaRing gr = associated_graded(corpus::z4f());
  CHECK(gr.type().same_semigroup(truncated_addition_monoid(2)));
  CHECK(gr.component(0).size() == 2);
  CHECK(gr.component(1).size() == 2);
  CHECK(gr.component(2).size() == 1);
  CHECK(check_axioms(gr.ring()).status == Verdict::Status::pass);
  CHECK(check_internal_grading(as_internal(gr)).status ==
        Verdict::Status::pass);

  GradedGammaRing grp = associated_graded(corpus::p2f());
  CHECK(grp.ring().carrier().size() == 8);
  CHECK(check_axioms(grp.ring()).status == Verdict::Status::pass);
}

TEST_CASE("clamp-graded rings round trip through their filtration") {
  CHECK(grading_roundtrip_iso(corpus::poly(1)).status ==
        Verdict::Status::pass);
  CHECK(grading_roundtrip_iso(corpus::poly(2)).status ==
        Verdict::Status::pass);
  CHECK_THROWS_AS(grading_roundtrip_iso(corpus::rc2()),
                  UnsupportedStructureError);
}

TEST_CASE("ideal powers stabilize") {
  GammaRing z4 = corpus::z4();
  AdicChain a = adic_chain(
      z4, make_ideal(z4, {{0}, {2}}, Sidedness::two_sided));
  CHECK(a.stabilization == 2);
  REQUIRE(a.chain.size() == 3);
  CHECK(a.chain[0].size() == 4);
  CHECK(a.chain[1].size() == 2);
  CHECK(a.chain[2].size() == 1);

  CHECK(adic_chain(z4, make_ideal(z4, {{0}}, Sidedness::two_sided))
            .stabilization == 1);
  CHECK(adic_chain(z4, make_ideal(z4, {{0}, {1}, {2}, {3}},
                                  Sidedness::two_sided))
            .stabilization == 1);
}
