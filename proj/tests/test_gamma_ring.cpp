#include <doctest.h>

#include <array>
#include <map>

#include "gammalib/gamma_ring.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace gammalib;

TEST_CASE("axioms pass on the scalar rings") {
  CHECK(check_axioms(corpus::z2()).status == Verdict::Status::pass);
  CHECK(check_axioms(corpus::z4()).status == Verdict::Status::pass);
  CHECK(check_axioms(corpus::m12()).status == Verdict::Status::pass);
}

TEST_CASE("library products match the reference arithmetic") {
  struct Pair {
    GammaRing lib;
    oracle::DenseRing ref;
  };
  std::vector<Pair> pairs;
  pairs.push_back({corpus::z4(), oracle::zmod(4)});
  pairs.push_back({corpus::m12(), oracle::m12()});
  pairs.push_back({corpus::rc2().ring(), oracle::conv(2)});
  pairs.push_back({corpus::poly(2).ring(), oracle::poly(2)});
  pairs.push_back({corpus::prod2().ring(),
                   oracle::prod_of(oracle::conv(2), oracle::conv(2))});
  pairs.push_back({corpus::opp2().ring(), oracle::opp(oracle::conv(2))});
  for (const Pair& p : pairs) {
    REQUIRE(p.lib.carrier().elements() == oracle::tuples(p.ref.carrier));
    REQUIRE(p.lib.gamma().elements() == oracle::tuples(p.ref.gamma));
    for (const Element& x : p.lib.carrier().elements()) {
      for (const Element& a : p.lib.gamma().elements()) {
        for (const Element& y : p.lib.carrier().elements()) {
          REQUIRE(p.lib.product(x, a, y) == p.ref.prod(x, a, y));
        }
      }
    }
  }
}

TEST_CASE("a flipped table entry is caught with the reference witness") {
  oracle::DenseRing ref = oracle::zmod(2);
  auto table = oracle::table_of(ref);
  std::array<Element, 3> key{Element{0}, Element{1}, Element{1}};
  table[key] = Element{1};
  oracle::DenseRing mutref = oracle::from_table(ref.carrier, ref.gamma, table);

  AbelianGroup z = AbelianGroup::cyclic_product({2});
  GammaRing mut(z, z,
                [table](const Element& x, const Element& a, const Element& y) {
                  return table.at({x, a, y});
                });
  Verdict v = check_axioms(mut);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "left distributivity");
  CHECK(v.witness == "x=(0), y=(0), a=(1), z=(1)");

  auto violation = oracle::first_violation(mutref);
  REQUIRE(violation.has_value());
  CHECK(violation->law == v.law);
  CHECK(violation->witness == v.witness);
}

TEST_CASE("a product leaving the carrier raises") {
  AbelianGroup z = AbelianGroup::cyclic_product({2});
  GammaRing bad(z, z,
                [](const Element& x, const Element& a, const Element& y) {
                  if (x == Element{1} && a == Element{1} && y == Element{1}) {
                    return Element{2};
                  }
                  return Element{(x[0] * a[0] * y[0]) % 2};
                });
  CHECK_THROWS_WITH_AS(
      check_axioms(bad),
      "product rule leaves the carrier at x=(1), a=(1), y=(1): (2)",
      InvalidStructureError);
}

TEST_CASE("table construction round trips") {
  GammaRing z4 = corpus::z4();
  std::vector<std::uint32_t> dense = dense_product_table(z4);
  GammaRing back =
      GammaRing::from_dense_table(z4.carrier(), z4.gamma(), dense);
  for (const Element& x : z4.carrier().elements()) {
    for (const Element& a : z4.gamma().elements()) {
      for (const Element& y : z4.carrier().elements()) {
        CHECK(back.product(x, a, y) == z4.product(x, a, y));
      }
    }
  }
  // sparse form: omitted entries default to zero
  GammaRing sparse = GammaRing::from_table(
      z4.carrier(), z4.gamma(),
      {{Element{1}, Element{1}, Element{1}, Element{1}},
       {Element{1}, Element{1}, Element{2}, Element{2}}});
  CHECK(sparse.product({1}, {1}, {1}) == Element{1});
  CHECK(sparse.product({3}, {3}, {3}) == Element{0});
}

TEST_CASE("ideals and their witnesses") {
  GammaRing rc2 = corpus::rc2().ring();
  AbelianGroup good = AbelianGroup::subgroup(rc2.carrier(), {{0, 0}, {1, 1}});
  CHECK(is_ideal(rc2, good, Sidedness::two_sided).status ==
        Verdict::Status::pass);

  AbelianGroup bad = AbelianGroup::subgroup(rc2.carrier(), {{0, 0}, {0, 1}});
  Verdict v = is_ideal(rc2, bad, Sidedness::left);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "left ideality");
  CHECK(v.witness == "r=(0,1), alpha=(1), a=(0,1)");

  CHECK_THROWS_AS(make_ideal(rc2, {{0, 0}, {0, 1}}, Sidedness::two_sided),
                  InvalidStructureError);
}

TEST_CASE("quotient by an ideal") {
  GammaRing q = corpus::quo();
  CHECK(q.carrier().size() == 2);
  CHECK(check_axioms(q).status == Verdict::Status::pass);
  CHECK(q.carrier().elements() == std::vector<Element>{{0, 0}, {0, 1}});

  // quotient by the zero ideal is the ring itself on identical elements
  GammaRing rc2 = corpus::rc2().ring();
  GammaRing q0 = quotient_by_ideal(
      rc2, make_ideal(rc2, {{0, 0}}, Sidedness::two_sided));
  CHECK(q0.carrier().size() == rc2.carrier().size());
  std::vector<Element> id_table = rc2.carrier().elements();
  CHECK(is_gamma_ring_isomorphism(rc2, q0, id_table));
}

TEST_CASE("unities are found in scan order") {
  std::vector<Unity> u2 = find_unities(corpus::rc2().ring());
  REQUIRE(u2.size() == 1);
  CHECK(u2[0].one == Element{1, 0});
  CHECK(u2[0].gamma0 == Element{1});

  std::vector<Unity> u4 = find_unities(corpus::z4());
  REQUIRE(u4.size() == 2);
  CHECK(u4[0].one == Element{1});
  CHECK(u4[0].gamma0 == Element{1});
  CHECK(u4[1].one == Element{3});
  CHECK(u4[1].gamma0 == Element{3});

  CHECK(find_unities(corpus::m12()).empty());

  // agreement with the reference scan
  auto ref = oracle::unities(oracle::conv(2));
  REQUIRE(ref.size() == 1);
  CHECK(ref[0].second == u2[0].one);
  CHECK(ref[0].first == u2[0].gamma0);
}

TEST_CASE("units and inverses") {
  GammaRing rc2 = corpus::rc2().ring();
  Unity unity = find_unities(rc2).front();
  UnitGroup ug = unit_group(rc2, unity);
  REQUIRE(ug.units.size() == 2);
  CHECK(ug.units[0] == Element{0, 1});
  CHECK(ug.units[1] == Element{1, 0});
  CHECK(ug.inverses[0] == Element{0, 1});
  CHECK(inverse_of(rc2, unity, {1, 1}) == std::nullopt);
  CHECK(inverse_of(rc2, unity, {0, 1}) == Element{0, 1});
}

TEST_CASE("twisted ring maps check additivity of both layers") {
  GammaRing z4 = corpus::z4();
  std::vector<Element> f = {{0}, {3}, {2}, {1}};    // x -> 3x
  std::vector<Element> phi3 = {{0}, {3}, {2}, {1}}; // a -> 3a
  std::vector<Element> id = {{0}, {1}, {2}, {3}};
  CHECK(check_phi_homomorphism(z4, z4, f, phi3).status ==
        Verdict::Status::pass);
  Verdict v = check_phi_homomorphism(z4, z4, f, id);
  CHECK(v.status == Verdict::Status::fail);
  CHECK(v.law == "multiplicativity");
  CHECK(v.witness == "x=(1), alpha=(1), y=(1)");
}

TEST_CASE("opposite is an involution and products swap") {
  GammaRing rc4 = corpus::rc4().ring();
  GammaRing op = opposite(rc4);
  GammaRing opop = opposite(op);
  for (const Element& x : rc4.carrier().elements()) {
    for (const Element& a : rc4.gamma().elements()) {
      for (const Element& y : rc4.carrier().elements()) {
        CHECK(op.product(x, a, y) == rc4.product(y, a, x));
        CHECK(opop.product(x, a, y) == rc4.product(x, a, y));
      }
    }
  }
}

TEST_CASE("direct products work componentwise over a shared gamma") {
  GammaRing a = corpus::rc2().ring();
  GammaRing p = direct_product({a, a});
  CHECK(p.carrier().size() == 16);
  CHECK(p.gamma().size() == 2);
  for (const Element& x : a.carrier().elements()) {
    for (const Element& y : a.carrier().elements()) {
      Element xx = {x[0], x[1], y[0], y[1]};
      Element want = a.product(x, {1}, x);
      Element tail = a.product(y, {1}, y);
      want.insert(want.end(), tail.begin(), tail.end());
      CHECK(p.product(xx, {1}, xx) == want);
    }
  }
  CHECK(check_axioms(p).status == Verdict::Status::pass);
  CHECK_THROWS_AS(direct_product({corpus::z2(), corpus::z4()}),
                  IncompatibilityError);
}

TEST_CASE("incompatible flat rings are rejected") {
  CHECK_THROWS_AS(require_same_flat_ring(corpus::z2(), corpus::z4()),
                  IncompatibilityError);
}
