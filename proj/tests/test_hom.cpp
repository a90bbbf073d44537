#include <doctest.h>

#include <algorithm>

#include "gammalib/hom.hpp"
#include "support/corpus.hpp"

using namespace gammalib;

TEST_CASE("homomorphism checks and witnesses") {
  CHECK(check_hom(corpus::hid()).status == Verdict::Status::pass);
  CHECK(check_hom(corpus::hrg()).status == Verdict::Status::pass);
  CHECK(check_hom(corpus::hsum()).status == Verdict::Status::pass);

  GammaModule m = corpus::rc2m();
  std::vector<Element> shifted;
  for (const Element& x : m.carrier().elements()) {
    shifted.push_back(m.carrier().add(x, {1, 0}));
  }
  Verdict v = check_hom(ModuleHom{m, m, shifted});
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "additivity");
  CHECK(v.witness == "x=(0,0), y=(0,0)");
}

TEST_CASE("apply validates the table") {
  ModuleHom f = corpus::hrg();
  CHECK(f.apply({0, 1}) == Element{1, 0});
  CHECK_THROWS_AS(f.apply({2, 0}), MalformedElementError);
}

TEST_CASE("twisted equivariance") {
  GammaModule m = corpus::z4m();
  std::vector<Element> triple;
  for (const Element& x : m.carrier().elements()) {
    triple.push_back(m.carrier().scale(3, x));
  }
  std::vector<Element> id_phi = {{0}, {1}, {2}, {3}};
  std::vector<Element> tri_phi = {{0}, {3}, {2}, {1}};
  CHECK(check_hom_phi(ModuleHom{m, m, triple}, id_phi).status ==
        Verdict::Status::pass);

  std::vector<Element> ident;
  for (const Element& x : m.carrier().elements()) ident.push_back(x);
  Verdict v = check_hom_phi(ModuleHom{m, m, ident}, tri_phi);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "equivariance");
  CHECK(v.witness == "r=(1), a=(1), m=(1)");
}

TEST_CASE("hom algebra") {
  ModuleHom sum = add_homs(corpus::hid(), corpus::hrg());
  CHECK(sum.values ==
        std::vector<Element>{{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  CHECK(sum.values == corpus::hsum().values);

  ModuleHom twice = compose_homs(corpus::hrg(), corpus::hrg());
  CHECK(twice.values == corpus::hid().values);

  GammaModule m = corpus::rc2m();
  CHECK(zero_hom(m, m).values ==
        std::vector<Element>(4, Element{0, 0}));
}

TEST_CASE("degrees of homogeneous maps") {
  GradedGammaModule g = corpus::rc2gm();
  CHECK(hom_has_degree(g, g, corpus::hid(), 0));
  CHECK_FALSE(hom_has_degree(g, g, corpus::hid(), 1));
  CHECK(hom_has_degree(g, g, corpus::hrg(), 1));
  CHECK_FALSE(hom_has_degree(g, g, corpus::hrg(), 0));

  CHECK(hom_degrees(g, g, zero_hom(g.module(), g.module())) ==
        std::vector<std::size_t>{0, 1});
  CHECK(hom_degrees(g, g, corpus::hsum()).empty());
}

TEST_CASE("decomposition splits a map into degree parts") {
  GradedGammaModule g = corpus::rc2gm();
  HomDecomposition d = decompose_hom(g, g, corpus::hsum());
  CHECK(d.support == std::vector<std::size_t>{0, 1});
  REQUIRE(d.components.size() == 2);
  CHECK(d.components[0].values == corpus::hid().values);
  CHECK(d.components[1].values == corpus::hrg().values);

  HomDecomposition only = decompose_hom(g, g, corpus::hid());
  CHECK(only.support == std::vector<std::size_t>{0});
  CHECK(hom_component(g, g, corpus::hsum(), 1).values ==
        corpus::hrg().values);
}

TEST_CASE("all endomorphisms of the regular module") {
  GammaModule m = corpus::rc2m();
  std::vector<ModuleHom> homs = enumerate_homs(m, m);
  REQUIRE(homs.size() == 4);
  CHECK(homs[0].values ==
        std::vector<Element>{{0, 0}, {0, 0}, {0, 0}, {0, 0}});
  CHECK(homs[1].values ==
        std::vector<Element>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(homs[2].values ==
        std::vector<Element>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(homs[3].values ==
        std::vector<Element>{{0, 0}, {1, 1}, {1, 1}, {0, 0}});
  for (const ModuleHom& f : homs) {
    CHECK(check_hom(f).status == Verdict::Status::pass);
  }

  CHECK(enumerate_homs(corpus::z4m(), corpus::z4m()).size() == 4);
  CHECK_THROWS_AS(enumerate_homs(corpus::rc2m(), corpus::z4m()),
                  IncompatibilityError);
}

TEST_CASE("the endomorphism ring is graded by composition degree") {
  EndomorphismReport rep = endomorphism_graded_ring(corpus::rc2gm());
  REQUIRE(rep.homs.size() == 4);
  CHECK(rep.ring.ring().carrier().size() == 4);
  CHECK(check_axioms(rep.ring.ring()).status == Verdict::Status::pass);
  CHECK(check_internal_grading(as_internal(rep.ring)).status ==
        Verdict::Status::pass);
  CHECK(rep.ring.component(0).size() == 2);
  CHECK(rep.ring.component(1).size() == 2);

  // gamma-1-scaled composition is the ring product: rmul * rmul = id
  std::size_t id_i = 0, rg_i = 0;
  for (std::size_t i = 0; i < rep.homs.size(); ++i) {
    if (rep.homs[i].values == corpus::hid().values) id_i = i;
    if (rep.homs[i].values == corpus::hrg().values) rg_i = i;
  }
  const GammaRing& e = rep.ring.ring();
  REQUIRE(e.gamma().size() == 2);  // carrier exponent of RC2M
  Element rg = e.carrier().element(rg_i);
  Element id = e.carrier().element(id_i);
  CHECK(e.product(rg, Element{1}, rg) == id);
  CHECK(e.product(rg, Element{0}, rg) == e.carrier().zero());

  // (id, 1) is a unity of the endomorphism ring
  std::vector<Unity> unities = find_unities(e);
  REQUIRE(unities.size() == 1);
  CHECK(unities[0].one == id);
  CHECK(unities[0].gamma0 == Element{1});
}
