#include "gammalib/gamma_ring.hpp"

#include <algorithm>

#include "gammalib/errors.hpp"

namespace gammalib {

struct GammaRing::Impl {
  AbelianGroup carrier;
  AbelianGroup gamma;
  ProductFn fn;                      // empty when table-backed
  std::vector<std::uint32_t> table;  // dense, may be empty
};

namespace {

std::uint64_t dense_size(const AbelianGroup& carrier,
                         const AbelianGroup& gamma) {
  return static_cast<std::uint64_t>(carrier.size()) * carrier.size() *
         gamma.size();
}

void check_dense_cap(const AbelianGroup& carrier, const AbelianGroup& gamma) {
  constexpr std::uint64_t kMaxDense = 1'000'000;
  if (dense_size(carrier, gamma) > kMaxDense) {
    throw BudgetExceededError(
        "dense product table would need " +
        std::to_string(dense_size(carrier, gamma)) +
        " entries, exceeding the cap of " + std::to_string(kMaxDense));
  }
}

}  // namespace

GammaRing::GammaRing(AbelianGroup carrier, AbelianGroup gamma,
                     ProductFn product) {
  auto impl = std::make_shared<Impl>(
      Impl{std::move(carrier), std::move(gamma), std::move(product), {}});
  if (!impl->fn) {
    throw InvalidStructureError("a ring needs a product rule");
  }
  impl_ = std::move(impl);
}

GammaRing GammaRing::from_table(
    AbelianGroup carrier, AbelianGroup gamma,
    const std::vector<std::array<Element, 4>>& entries) {
  check_dense_cap(carrier, gamma);
  std::size_t nr = carrier.size(), ng = gamma.size();
  std::uint32_t zero_idx =
      static_cast<std::uint32_t>(carrier.index_of(carrier.zero()));
  std::vector<std::uint32_t> table(nr * nr * ng, zero_idx);
  std::vector<bool> seen(table.size(), false);
  for (const auto& e : entries) {
    if (!carrier.contains(e[0]) || !carrier.contains(e[2]) ||
        !carrier.contains(e[3])) {
      throw MalformedElementError(
          "product entry uses elements outside the carrier: " +
          format_element(e[0]) + " " + format_element(e[1]) + " " +
          format_element(e[2]) + " -> " + format_element(e[3]));
    }
    if (!gamma.contains(e[1])) {
      throw MalformedElementError("product entry coefficient " +
                                  format_element(e[1]) +
                                  " is outside gamma");
    }
    std::size_t idx = (carrier.index_of(e[0]) * ng + gamma.index_of(e[1])) *
                          nr +
                      carrier.index_of(e[2]);
    if (seen[idx]) {
      throw InvalidStructureError(
          "duplicate product entry for " + format_element(e[0]) + " " +
          format_element(e[1]) + " " + format_element(e[2]));
    }
    seen[idx] = true;
    table[idx] = static_cast<std::uint32_t>(carrier.index_of(e[3]));
  }
  return from_dense_table(std::move(carrier), std::move(gamma),
                          std::move(table));
}

GammaRing GammaRing::from_dense_table(AbelianGroup carrier, AbelianGroup gamma,
                                      std::vector<std::uint32_t> table) {
  check_dense_cap(carrier, gamma);
  if (table.size() != dense_size(carrier, gamma)) {
    throw InvalidStructureError("dense product table has the wrong size");
  }
  for (std::uint32_t v : table) {
    if (v >= carrier.size()) {
      throw InvalidStructureError("dense product table result out of range");
    }
  }
  GammaRing r;
  r.impl_ = std::make_shared<Impl>(
      Impl{std::move(carrier), std::move(gamma), nullptr, std::move(table)});
  return r;
}

const AbelianGroup& GammaRing::carrier() const { return impl_->carrier; }
const AbelianGroup& GammaRing::gamma() const { return impl_->gamma; }

Element GammaRing::product(const Element& r, const Element& g,
                           const Element& s) const {
  if (!impl_->carrier.contains(r) || !impl_->carrier.contains(s)) {
    throw MalformedElementError("product operand outside the carrier: " +
                                format_element(r) + ", " + format_element(s));
  }
  if (!impl_->gamma.contains(g)) {
    throw MalformedElementError("product coefficient outside gamma: " +
                                format_element(g));
  }
  if (!impl_->table.empty()) {
    std::size_t idx = (impl_->carrier.index_of(r) * impl_->gamma.size() +
                       impl_->gamma.index_of(g)) *
                          impl_->carrier.size() +
                      impl_->carrier.index_of(s);
    return impl_->carrier.element(impl_->table[idx]);
  }
  return impl_->fn(r, g, s);
}

std::vector<std::uint32_t> dense_product_table(const GammaRing& r) {
  check_dense_cap(r.carrier(), r.gamma());
  const auto& re = r.carrier().elements();
  const auto& ge = r.gamma().elements();
  std::vector<std::uint32_t> table;
  table.reserve(re.size() * re.size() * ge.size());
  for (const Element& x : re) {
    for (const Element& g : ge) {
      for (const Element& y : re) {
        table.push_back(
            static_cast<std::uint32_t>(r.carrier().index_of(r.product(x, g, y))));
      }
    }
  }
  return table;
}

namespace {

std::string w2(const char* n1, const Element& e1, const char* n2,
               const Element& e2) {
  return std::string(n1) + "=" + format_element(e1) + ", " + n2 + "=" +
         format_element(e2);
}

std::string w4(const char* n1, const Element& e1, const char* n2,
               const Element& e2, const char* n3, const Element& e3,
               const char* n4, const Element& e4) {
  return w2(n1, e1, n2, e2) + ", " + w2(n3, e3, n4, e4);
}

std::string w5(const char* n1, const Element& e1, const char* n2,
               const Element& e2, const char* n3, const Element& e3,
               const char* n4, const Element& e4, const char* n5,
               const Element& e5) {
  return w4(n1, e1, n2, e2, n3, e3, n4, e4) + ", " + n5 + "=" +
         format_element(e5);
}

}  // namespace

Verdict check_axioms(const GammaRing& r, const EnumBudget& budget) {
  const AbelianGroup& R = r.carrier();
  const AbelianGroup& G = r.gamma();
  const auto& re = R.elements();
  const auto& ge = G.elements();

  // Closure scan: a product value outside the carrier is an error in the
  // rule itself, not a law violation.
  for (const Element& x : re) {
    for (const Element& a : ge) {
      for (const Element& y : re) {
        budget.charge();
        Element p = r.product(x, a, y);
        if (!R.contains(p)) {
          throw InvalidStructureError(
              "product rule leaves the carrier at " +
              w2("x", x, "a", a) + ", y=" + format_element(y) + ": " +
              format_element(p));
        }
      }
    }
  }

  for (const Element& x : re) {
    for (const Element& y : re) {
      for (const Element& a : ge) {
        for (const Element& z : re) {
          budget.charge();
          if (r.product(R.add(x, y), a, z) !=
              R.add(r.product(x, a, z), r.product(y, a, z))) {
            return Verdict::fail("left distributivity",
                                 w4("x", x, "y", y, "a", a, "z", z));
          }
        }
      }
    }
  }
  for (const Element& x : re) {
    for (const Element& a : ge) {
      for (const Element& b : ge) {
        for (const Element& z : re) {
          budget.charge();
          if (r.product(x, G.add(a, b), z) !=
              R.add(r.product(x, a, z), r.product(x, b, z))) {
            return Verdict::fail("gamma additivity",
                                 w4("x", x, "a", a, "b", b, "z", z));
          }
        }
      }
    }
  }
  for (const Element& x : re) {
    for (const Element& a : ge) {
      for (const Element& y : re) {
        for (const Element& z : re) {
          budget.charge();
          if (r.product(x, a, R.add(y, z)) !=
              R.add(r.product(x, a, y), r.product(x, a, z))) {
            return Verdict::fail("right distributivity",
                                 w4("x", x, "a", a, "y", y, "z", z));
          }
        }
      }
    }
  }
  for (const Element& x : re) {
    for (const Element& a : ge) {
      for (const Element& y : re) {
        for (const Element& b : ge) {
          for (const Element& z : re) {
            budget.charge();
            if (r.product(r.product(x, a, y), b, z) !=
                r.product(x, a, r.product(y, b, z))) {
              return Verdict::fail(
                  "associativity", w5("x", x, "a", a, "y", y, "b", b, "z", z));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict is_ideal(const GammaRing& r, const AbelianGroup& candidate,
                 Sidedness side, const EnumBudget& budget) {
  if (!candidate.subset_of(r.carrier())) {
    throw InvalidStructureError(
        "ideal candidate is not a subgroup of the carrier");
  }
  if (side == Sidedness::left || side == Sidedness::two_sided) {
    for (const Element& x : r.carrier().elements()) {
      for (const Element& a : r.gamma().elements()) {
        for (const Element& i : candidate.elements()) {
          budget.charge();
          if (!candidate.contains(r.product(x, a, i))) {
            return Verdict::fail("left ideality",
                                 w2("r", x, "alpha", a) +
                                     ", a=" + format_element(i));
          }
        }
      }
    }
  }
  if (side == Sidedness::right || side == Sidedness::two_sided) {
    for (const Element& i : candidate.elements()) {
      for (const Element& a : r.gamma().elements()) {
        for (const Element& x : r.carrier().elements()) {
          budget.charge();
          if (!candidate.contains(r.product(i, a, x))) {
            return Verdict::fail("right ideality",
                                 w2("a", i, "alpha", a) +
                                     ", r=" + format_element(x));
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Ideal make_ideal(const GammaRing& r, const std::vector<Element>& elements,
                 Sidedness side) {
  AbelianGroup sub = AbelianGroup::subgroup(r.carrier(), elements);
  Verdict v = is_ideal(r, sub, side);
  if (!v.passed()) {
    throw InvalidStructureError("not an ideal: " + v.law + " fails at " +
                                v.witness);
  }
  return Ideal{std::move(sub), side};
}

std::vector<Unity> find_unities(const GammaRing& r) {
  std::vector<Unity> out;
  for (const Element& g0 : r.gamma().elements()) {
    std::vector<Element> ones;
    for (const Element& one : r.carrier().elements()) {
      bool ok = true;
      for (const Element& a : r.carrier().elements()) {
        if (r.product(a, g0, one) != a || r.product(one, g0, a) != a) {
          ok = false;
          break;
        }
      }
      if (ok) ones.push_back(one);
    }
    if (ones.size() > 1) {
      throw InternalAssertionError(
          "two distinct unities for the same coefficient " +
          format_element(g0));
    }
    if (!ones.empty()) out.push_back(Unity{ones[0], g0});
  }
  return out;
}

std::optional<Element> inverse_of(const GammaRing& r, const Unity& unity,
                                  const Element& x) {
  std::vector<Element> found;
  for (const Element& s : r.carrier().elements()) {
    if (r.product(x, unity.gamma0, s) == unity.one &&
        r.product(s, unity.gamma0, x) == unity.one) {
      found.push_back(s);
    }
  }
  if (found.size() > 1) {
    throw InternalAssertionError("two inverses for " + format_element(x));
  }
  if (found.empty()) return std::nullopt;
  return found[0];
}

UnitGroup unit_group(const GammaRing& r, const Unity& unity) {
  UnitGroup out{unity, {}, {}};
  for (const Element& x : r.carrier().elements()) {
    if (auto inv = inverse_of(r, unity, x)) {
      out.units.push_back(x);
      out.inverses.push_back(*inv);
    }
  }
  // Closure under x gamma0 y is forced for a genuine unity; verify anyway.
  for (const Element& u : out.units) {
    for (const Element& v : out.units) {
      Element p = r.product(u, unity.gamma0, v);
      if (!std::binary_search(out.units.begin(), out.units.end(), p)) {
        throw InternalAssertionError(
            "units are not closed under the unity product at " +
            w2("u", u, "v", v));
      }
    }
  }
  return out;
}

Verdict check_phi_homomorphism(const GammaRing& src, const GammaRing& dst,
                               const std::vector<Element>& f,
                               const std::vector<Element>& phi,
                               const EnumBudget& budget) {
  const auto& se = src.carrier().elements();
  const auto& sg = src.gamma().elements();
  if (f.size() != se.size()) {
    throw InvalidStructureError("carrier map has the wrong size");
  }
  if (phi.size() != sg.size()) {
    throw InvalidStructureError("gamma map has the wrong size");
  }
  for (const Element& v : f) {
    if (!dst.carrier().contains(v)) {
      throw MalformedElementError("carrier map value " + format_element(v) +
                                  " is outside the target carrier");
    }
  }
  for (const Element& v : phi) {
    if (!dst.gamma().contains(v)) {
      throw MalformedElementError("gamma map value " + format_element(v) +
                                  " is outside the target gamma");
    }
  }
  auto fx = [&](const Element& x) { return f[src.carrier().index_of(x)]; };
  auto px = [&](const Element& g) { return phi[src.gamma().index_of(g)]; };

  for (const Element& x : se) {
    for (const Element& y : se) {
      budget.charge();
      if (fx(src.carrier().add(x, y)) != dst.carrier().add(fx(x), fx(y))) {
        return Verdict::fail("additivity", w2("x", x, "y", y));
      }
    }
  }
  for (const Element& a : sg) {
    for (const Element& b : sg) {
      budget.charge();
      if (px(src.gamma().add(a, b)) != dst.gamma().add(px(a), px(b))) {
        return Verdict::fail("gamma additivity", w2("a", a, "b", b));
      }
    }
  }
  for (const Element& x : se) {
    for (const Element& a : sg) {
      for (const Element& y : se) {
        budget.charge();
        if (fx(src.product(x, a, y)) != dst.product(fx(x), px(a), fx(y))) {
          return Verdict::fail("multiplicativity",
                               w2("x", x, "alpha", a) +
                                   ", y=" + format_element(y));
        }
      }
    }
  }
  return Verdict::pass();
}

void require_same_flat_ring(const GammaRing& a, const GammaRing& b,
                            const EnumBudget& budget) {
  if (!a.carrier().same_group(b.carrier()) ||
      !a.gamma().same_group(b.gamma())) {
    throw IncompatibilityError("the two rings have different shapes");
  }
  for (const Element& x : a.carrier().elements()) {
    for (const Element& g : a.gamma().elements()) {
      for (const Element& y : a.carrier().elements()) {
        budget.charge();
        if (a.product(x, g, y) != b.product(x, g, y)) {
          throw IncompatibilityError(
              "the two rings multiply differently at x=" + format_element(x) +
              ", a=" + format_element(g) + ", y=" + format_element(y));
        }
      }
    }
  }
}

bool is_gamma_ring_isomorphism(const GammaRing& src, const GammaRing& dst,
                               const std::vector<Element>& f,
                               const EnumBudget& budget) {
  if (!src.gamma().same_group(dst.gamma())) return false;
  if (src.carrier().size() != dst.carrier().size()) return false;
  std::vector<Element> phi = src.gamma().elements();
  if (!check_phi_homomorphism(src, dst, f, phi, budget).passed()) return false;
  std::vector<Element> image = f;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image.size() == dst.carrier().size();
}

GammaRing matrix_gamma_ring(Int k, std::size_t m, std::size_t n) {
  if (k < 1) {
    throw InvalidStructureError("matrix entries need a modulus >= 1");
  }
  if (m == 0 || n == 0) {
    throw InvalidStructureError("matrix shape must be positive");
  }
  AbelianGroup carrier =
      AbelianGroup::cyclic_product(std::vector<Int>(m * n, k));
  AbelianGroup gamma = AbelianGroup::cyclic_product(std::vector<Int>(n * m, k));
  ProductFn fn = [k, m, n](const Element& r, const Element& g,
                           const Element& s) {
    // r: m x n, g: n x m, s: m x n, all row-major.
    std::vector<Int> rg(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Int acc = 0;
        for (std::size_t t = 0; t < n; ++t) {
          acc = (acc + r[i * n + t] * g[t * m + j]) % k;
        }
        rg[i * m + j] = acc;
      }
    }
    Element out(m * n, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Int acc = 0;
        for (std::size_t t = 0; t < m; ++t) {
          acc = (acc + rg[i * m + t] * s[t * n + j]) % k;
        }
        out[i * n + j] = acc;
      }
    }
    return out;
  };
  return GammaRing(std::move(carrier), std::move(gamma), std::move(fn));
}

GammaRing direct_product(const std::vector<GammaRing>& factors) {
  if (factors.empty()) {
    throw InvalidStructureError("a direct product needs at least one factor");
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!factors[i].gamma().same_group(factors[0].gamma())) {
      throw IncompatibilityError(
          "direct product factors must share an identical gamma group");
    }
  }
  std::vector<AbelianGroup> carriers;
  for (const GammaRing& f : factors) carriers.push_back(f.carrier());
  AbelianGroup carrier = AbelianGroup::direct_sum(std::move(carriers));
  AbelianGroup gamma = factors[0].gamma();
  std::vector<GammaRing> fs = factors;
  ProductFn fn = [carrier, fs](const Element& r, const Element& g,
                               const Element& s) {
    Element out;
    out.reserve(carrier.arity());
    for (std::size_t i = 0; i < fs.size(); ++i) {
      Element part =
          fs[i].product(carrier.project(i, r), g, carrier.project(i, s));
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  };
  return GammaRing(carrier, std::move(gamma), std::move(fn));
}

GammaRing opposite(const GammaRing& r) {
  GammaRing base = r;
  ProductFn fn = [base](const Element& x, const Element& g, const Element& y) {
    return base.product(y, g, x);
  };
  return GammaRing(r.carrier(), r.gamma(), std::move(fn));
}

GammaRing quotient_by_ideal(const GammaRing& r, const Ideal& ideal,
                            const EnumBudget& budget) {
  if (ideal.side != Sidedness::two_sided) {
    throw PreconditionError("quotients require a two-sided ideal");
  }
  AbelianGroup q = AbelianGroup::quotient(r.carrier(), ideal.subgroup);
  GammaRing base = r;
  ProductFn fn = [q, base](const Element& x, const Element& g,
                           const Element& y) {
    return q.reduce(base.product(x, g, y));
  };
  GammaRing out(q, r.gamma(), std::move(fn));
  // Independence from representative choice is forced for a two-sided
  // ideal; recheck exhaustively.
  for (const Element& x : r.carrier().elements()) {
    for (const Element& g : r.gamma().elements()) {
      for (const Element& y : r.carrier().elements()) {
        budget.charge();
        if (q.reduce(r.product(x, g, y)) !=
            out.product(q.reduce(x), g, q.reduce(y))) {
          throw InternalAssertionError(
              "quotient product depends on representatives at " +
              w2("x", x, "gamma", g) + ", y=" + format_element(y));
        }
      }
    }
  }
  return out;
}

}  // namespace gammalib
