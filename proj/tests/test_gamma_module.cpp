#include <doctest.h>

#include "gammalib/gamma_module.hpp"
#include "support/corpus.hpp"

using namespace gammalib;

TEST_CASE("regular modules satisfy the module laws") {
  CHECK(check_module_axioms(corpus::rc2m()).status == Verdict::Status::pass);
  CHECK(check_module_axioms(corpus::z4m()).status == Verdict::Status::pass);
}

TEST_CASE("zero absorbs through the action") {
  for (const GammaModule& m : {corpus::rc2m(), corpus::z4m()}) {
    const GammaRing& r = m.ring();
    for (const Element& x : r.carrier().elements()) {
      for (const Element& a : r.gamma().elements()) {
        for (const Element& v : m.carrier().elements()) {
          CHECK(m.act(r.carrier().zero(), a, v) == m.carrier().zero());
          CHECK(m.act(x, r.gamma().zero(), v) == m.carrier().zero());
          CHECK(m.act(x, a, m.carrier().zero()) == m.carrier().zero());
        }
      }
    }
  }
}

TEST_CASE("a non-associative action is caught with a witness") {
  GammaRing z2 = corpus::z2();
  AbelianGroup z4 = AbelianGroup::cyclic_product({4});
  GammaModule bad(z2, z4,
                  [](const Element& r, const Element& a, const Element& m) {
                    return Element{(2 * r[0] * a[0] * m[0]) % 4};
                  });
  Verdict v = check_module_axioms(bad);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "associativity");
  CHECK(v.witness == "r=(1), a=(1), s=(1), b=(1), m=(1)");
}

TEST_CASE("action membership is validated") {
  GammaModule m = corpus::z4m();
  CHECK_THROWS_AS(m.act({5}, {1}, {1}), MalformedElementError);
  CHECK_THROWS_AS(m.act({1}, {1}, {9}), MalformedElementError);
}

TEST_CASE("submodule detection") {
  GammaModule m = corpus::rc2m();
  AbelianGroup diag = AbelianGroup::subgroup(m.carrier(), {{0, 0}, {1, 1}});
  CHECK(check_submodule(m, diag).status == Verdict::Status::pass);

  AbelianGroup gpart = AbelianGroup::subgroup(m.carrier(), {{0, 0}, {0, 1}});
  Verdict v = check_submodule(m, gpart);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "action closure");
  CHECK(v.witness == "r=(0,1), alpha=(1), m=(0,1)");
}

TEST_CASE("right modules run through the opposite ring") {
  GammaRing z4 = corpus::z4();
  GammaModule m = right_module(
      z4, z4.carrier(),
      [&z4](const Element& v, const Element& b, const Element& s) {
        return z4.product(v, b, s);
      });
  CHECK(check_module_axioms(m).status == Verdict::Status::pass);
}

TEST_CASE("module gradings verify and fail with witnesses") {
  CHECK(check_module_grading(as_internal(corpus::rc2gm())).status ==
        Verdict::Status::pass);
  CHECK(check_module_grading(as_internal(corpus::swapgm())).status ==
        Verdict::Status::pass);

  GammaModule m = corpus::rc2m();
  InternalModuleGrading bad{
      corpus::rc2(), m,
      {AbelianGroup::subgroup(m.carrier(), {{0, 0}, {1, 1}}),
       AbelianGroup::subgroup(m.carrier(), {{0, 0}, {0, 1}})}};
  Verdict v = check_module_grading(bad);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "containment");
  CHECK(v.witness == "g=g, h=e, r=(0,1), alpha=(1), m=(1,1), value=(1,1)");
  CHECK_THROWS_AS(grade_module(bad), InvalidStructureError);
}

TEST_CASE("the regular graded module mirrors the ring grading") {
  GradedGammaModule m = regular_graded_module(corpus::rc2());
  GradedGammaModule n = corpus::rc2gm();
  REQUIRE(m.degrees() == n.degrees());
  for (std::size_t d = 0; d < m.degrees(); ++d) {
    CHECK(m.component(d).same_group(n.component(d)));
  }
  CHECK(m.support() == std::vector<std::size_t>{0, 1});
  auto parts = m.decompose({1, 1});
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == Element{1, 0});
  CHECK(parts[1].second == Element{0, 1});
}

TEST_CASE("quotient modules report directness") {
  GradedGammaModule m = corpus::rc2gm();
  QuotientModuleReport diag = quotient_module(
      m, AbelianGroup::subgroup(m.module().carrier(), {{0, 0}, {1, 1}}));
  CHECK(diag.quotient.carrier().size() == 2);
  REQUIRE(diag.components.size() == 2);
  CHECK(diag.components[0].size() == 2);
  CHECK(diag.components[1].size() == 2);
  CHECK_FALSE(diag.direct);
  CHECK_FALSE(diag.graded.has_value());

  QuotientModuleReport zero = quotient_module(
      m, trivial_subgroup(m.module().carrier()));
  CHECK(zero.quotient.carrier().size() == 4);
  CHECK(zero.direct);
  REQUIRE(zero.graded.has_value());
  CHECK(zero.graded->component(0).size() == 2);
  CHECK(check_module_grading(as_internal(*zero.graded)).status ==
        Verdict::Status::pass);

  CHECK_THROWS_AS(
      quotient_module(m, AbelianGroup::subgroup(m.module().carrier(),
                                                {{0, 0}, {0, 1}})),
      PreconditionError);
}

TEST_CASE("the maximal graded submodule is the graded core") {
  GradedGammaModule m = corpus::rc2gm();
  GradedSubmodulePart diag = maximal_graded_submodule(
      m, AbelianGroup::subgroup(m.module().carrier(), {{0, 0}, {1, 1}}));
  CHECK(diag.submodule.size() == 1);
  REQUIRE(diag.parts.size() == 2);
  CHECK(diag.parts[0].size() == 1);
  CHECK(diag.parts[1].size() == 1);

  GradedSubmodulePart whole = maximal_graded_submodule(
      m, AbelianGroup::subgroup(m.module().carrier(),
                                m.module().carrier().elements()));
  CHECK(whole.submodule.size() == 4);
  CHECK(whole.parts[0].size() == 2);
}

TEST_CASE("filtered modules check and grade") {
  FilteredModule fm = corpus::z4fm();
  CHECK(check_filtered_module(fm).status == Verdict::Status::pass);

  GradedPair pair = gr_module(fm);
  CHECK(pair.module.degrees() == 3);
  CHECK(pair.module.component(0).size() == 2);
  CHECK(pair.module.component(1).size() == 2);
  CHECK(pair.module.component(2).size() == 1);
  CHECK(check_module_grading(as_internal(pair.module)).status ==
        Verdict::Status::pass);

  FilteredModule broken = fm;
  broken.chain = {trivial_subgroup(fm.module.carrier()),
                  AbelianGroup::subgroup(fm.module.carrier(), {{0}, {2}})};
  Verdict v = check_filtered_module(broken);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "exhaustion");
}

TEST_CASE("chains intersect a submodule levelwise") {
  GammaModule m = corpus::z4m();
  AbelianGroup k = AbelianGroup::subgroup(m.carrier(), {{0}, {2}});
  std::vector<AbelianGroup> levels =
      intersect_chain(m.carrier(), k, corpus::z4fm().chain);
  REQUIRE(levels.size() == 2);
  CHECK(levels[0].size() == 2);
  CHECK(levels[1].size() == 2);
  for (const AbelianGroup& level : levels) {
    CHECK(check_submodule(m, level).status == Verdict::Status::pass);
  }
}

TEST_CASE("module ideal powers descend") {
  GammaRing z4 = corpus::z4();
  AdicChain chain = adic_module_chain(
      z4, make_ideal(z4, {{0}, {2}}, Sidedness::two_sided), corpus::z4m());
  CHECK(chain.stabilization == 2);
  REQUIRE(chain.chain.size() == 3);
  CHECK(chain.chain[0].size() == 4);
  CHECK(chain.chain[1].size() == 2);
  CHECK(chain.chain[2].size() == 1);
}

TEST_CASE("bimodules check both actions and compatibility") {
  GammaRing rc2 = corpus::rc2().ring();
  Bimodule b{rc2, rc2, rc2.carrier(),
             [rc2](const Element& r, const Element& a, const Element& m) {
               return rc2.product(r, a, m);
             },
             [rc2](const Element& m, const Element& a, const Element& s) {
               return rc2.product(m, a, s);
             }};
  CHECK(check_bimodule(b).status == Verdict::Status::pass);

  GammaRing z4 = corpus::z4();
  Bimodule broken{z4, z4, z4.carrier(),
                  [z4](const Element& r, const Element& a, const Element& m) {
                    return z4.product(r, a, m);
                  },
                  [z4](const Element& m, const Element& a, const Element& s) {
                    return z4.carrier().scale(2, z4.product(m, a, s));
                  }};
  Verdict v = check_bimodule(broken);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "right associativity");
}

TEST_CASE("graded bimodule over the ring grading") {
  GradedGammaRing g = corpus::rc2();
  GammaRing r = g.ring();
  Bimodule b{r, r, r.carrier(),
             [r](const Element& x, const Element& a, const Element& m) {
               return r.product(x, a, m);
             },
             [r](const Element& m, const Element& a, const Element& s) {
               return r.product(m, a, s);
             }};
  std::vector<AbelianGroup> assignment = {g.component(0), g.component(1)};
  CHECK(check_graded_bimodule(b, g, g, assignment).status ==
        Verdict::Status::pass);
}

TEST_CASE("finite generation") {
  GammaModule m = corpus::rc2m();
  CHECK(check_finitely_generated(m, {{1, 0}}).status ==
        Verdict::Status::pass);
  CHECK(check_finitely_generated(m, {{1, 1}}).status ==
        Verdict::Status::fail);
  CHECK(is_finitely_generated(m));
  CHECK(is_finitely_generated(corpus::z4m()));
}

TEST_CASE("strongly graded modules") {
  CHECK(strongly_graded_module_check(corpus::rc2gm()).strongly_graded);
  CHECK(strongly_graded_module_check(corpus::swapgm()).strongly_graded);

  StrongReport weak =
      strongly_graded_module_check(regular_graded_module(corpus::poly(1)));
  CHECK_FALSE(weak.strongly_graded);
  REQUIRE(weak.failing_pair.has_value());
  CHECK(*weak.failing_pair == std::pair<std::size_t, std::size_t>{1, 1});
}
