#include "gammalib/filtration.hpp"

#include <algorithm>
#include <set>

#include "gammalib/errors.hpp"

namespace gammalib {

namespace {

std::string elem_witness(const char* name, const Element& e) {
  return std::string(name) + "=" + format_element(e);
}

}  // namespace

Verdict check_filtration(const Filtration& f, const EnumBudget& budget) {
  if (f.chain.empty()) {
    throw InvalidStructureError("a filtration needs at least one level");
  }
  const AbelianGroup& carrier = f.ring.carrier();
  for (const AbelianGroup& level : f.chain) {
    if (!level.subset_of(carrier)) {
      throw InvalidStructureError(
          "a filtration level is not a subgroup of the carrier");
    }
  }
  std::size_t top = f.chain.size() - 1;
  for (std::size_t i = 0; i < top; ++i) {
    for (const Element& x : f.chain[i].elements()) {
      budget.charge();
      if (!f.chain[i + 1].contains(x)) {
        return Verdict::fail("monotonicity", "i=" + std::to_string(i) + ", " +
                                                 elem_witness("x", x));
      }
    }
  }
  if (f.chain[top].size() != carrier.size()) {
    for (const Element& x : carrier.elements()) {
      if (!f.chain[top].contains(x)) {
        return Verdict::fail("exhaustion",
                             elem_witness("x", x) + " is outside level " +
                                 std::to_string(top));
      }
    }
  }
  for (std::size_t i = 0; i <= top; ++i) {
    for (std::size_t j = 0; j <= top; ++j) {
      const AbelianGroup& target = f.chain[std::min(i + j, top)];
      for (const Element& x : f.chain[i].elements()) {
        for (const Element& a : f.ring.gamma().elements()) {
          for (const Element& y : f.chain[j].elements()) {
            budget.charge();
            Element p = f.ring.product(x, a, y);
            if (!target.contains(p)) {
              return Verdict::fail(
                  "compatibility",
                  "i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                      ", " + elem_witness("x", x) + ", " +
                      elem_witness("alpha", a) + ", " + elem_witness("y", y) +
                      ", product=" + format_element(p));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Filtration filtration_from_grading(const GradedGammaRing& g,
                                   const EnumBudget& budget) {
  std::size_t cap = g.degrees() - 1;
  if (!g.type().same_semigroup(truncated_addition_monoid(cap))) {
    throw UnsupportedStructureError(
        "filtrations come from gradings by the clamped-addition monoid");
  }
  const Element zero = g.ring().carrier().zero();
  for (std::size_t i = 0; i <= cap; ++i) {
    for (std::size_t j = 0; j <= cap; ++j) {
      if (i + j <= cap) continue;
      for (const Element& x : g.component(i).elements()) {
        for (const Element& a : g.ring().gamma().elements()) {
          for (const Element& y : g.component(j).elements()) {
            budget.charge();
            if (g.ring().product(x, a, y) != zero) {
              throw PreconditionError(
                  "degrees " + std::to_string(i) + " and " +
                  std::to_string(j) +
                  " overflow the cap with a nonzero product");
            }
          }
        }
      }
    }
  }
  std::vector<AbelianGroup> chain;
  std::vector<AbelianGroup> parts;
  for (std::size_t k = 0; k <= cap; ++k) {
    parts.push_back(g.component(k));
    chain.push_back(subgroup_sum(g.ring().carrier(), parts));
  }
  Filtration out{g.ring(), std::move(chain)};
  Verdict v = check_filtration(out, budget);
  if (!v.passed()) {
    throw InternalAssertionError(
        "the filtration of a grading failed validation: " + v.law);
  }
  return out;
}

std::vector<AbelianGroup> chain_level_quotients(
    const std::vector<AbelianGroup>& chain) {
  if (chain.empty()) {
    throw InvalidStructureError("a chain needs at least one level");
  }
  std::vector<AbelianGroup> out;
  std::size_t top = chain.size() - 1;
  for (std::size_t k = 0; k <= top; ++k) {
    AbelianGroup kernel =
        k == 0 ? trivial_subgroup(chain[0])
               : AbelianGroup::subgroup(chain[k], chain[k - 1].elements());
    out.push_back(quotient_group(chain[k], kernel));
  }
  out.push_back(quotient_group(
      chain[top], AbelianGroup::subgroup(chain[top], chain[top].elements())));
  return out;
}

GradedGammaRing associated_graded(const Filtration& f,
                                  const EnumBudget& budget) {
  Verdict ok = check_filtration(f, budget);
  if (!ok.passed()) {
    throw InvalidStructureError("not a filtration: " + ok.law + " fails at " +
                                ok.witness);
  }
  std::size_t top = f.chain.size() - 1;
  std::vector<AbelianGroup> quotients = chain_level_quotients(f.chain);
  for (std::size_t m = 0; m <= top; ++m) {
    for (std::size_t n = 0; n <= top && m + n <= top; ++n) {
      const AbelianGroup& qt = quotients[m + n];
      for (const Element& x : f.chain[m].elements()) {
        Element xr = quotients[m].reduce(x);
        for (const Element& a : f.ring.gamma().elements()) {
          for (const Element& y : f.chain[n].elements()) {
            budget.charge();
            Element yr = quotients[n].reduce(y);
            if (qt.reduce(f.ring.product(x, a, y)) !=
                qt.reduce(f.ring.product(xr, a, yr))) {
              throw InternalAssertionError(
                  "coset products depend on the representative at levels " +
                  std::to_string(m) + "," + std::to_string(n));
            }
          }
        }
      }
    }
  }
  GammaRing base = f.ring;
  std::vector<AbelianGroup> comps = quotients;
  std::size_t capk = top + 1;
  GradedGammaRing::DegreeProductFn rule =
      [base, comps, capk](std::size_t m, std::size_t n, const Element& x,
                          const Element& a, const Element& y) {
        std::size_t t = std::min(m + n, capk);
        if (t == capk) return comps[capk].zero();
        return comps[t].reduce(base.product(x, a, y));
      };
  return GradedGammaRing::from_components(truncated_addition_monoid(capk),
                                          f.ring.gamma(),
                                          std::move(quotients),
                                          std::move(rule));
}

Verdict grading_roundtrip_iso(const GradedGammaRing& g,
                              const EnumBudget& budget) {
  Filtration fil = filtration_from_grading(g, budget);
  GradedGammaRing gr = associated_graded(fil, budget);
  std::vector<AbelianGroup> quotients = chain_level_quotients(fil.chain);
  const AbelianGroup& src = g.ring().carrier();
  const AbelianGroup& dst = gr.ring().carrier();
  std::size_t cap = g.degrees() - 1;

  std::vector<Element> f(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    Element image = dst.zero();
    for (std::size_t k = 0; k <= cap; ++k) {
      Element part = g.component_part(src.element(i), k);
      image = dst.add(image, dst.embed(k, quotients[k].reduce(part)));
    }
    f[i] = std::move(image);
  }

  std::set<Element> image_set(f.begin(), f.end());
  if (image_set.size() != dst.size()) {
    return Verdict::fail("bijectivity",
                         "the canonical map reaches " +
                             std::to_string(image_set.size()) + " of " +
                             std::to_string(dst.size()) + " elements");
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      budget.charge();
      Element sum = src.add(src.element(i), src.element(j));
      if (f[src.index_of(sum)] != dst.add(f[i], f[j])) {
        return Verdict::fail("additivity",
                             elem_witness("x", src.element(i)) + ", " +
                                 elem_witness("y", src.element(j)));
      }
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (const Element& a : g.ring().gamma().elements()) {
      for (std::size_t j = 0; j < src.size(); ++j) {
        budget.charge();
        Element p = g.ring().product(src.element(i), a, src.element(j));
        if (f[src.index_of(p)] != gr.ring().product(f[i], a, f[j])) {
          return Verdict::fail("multiplicativity",
                               elem_witness("x", src.element(i)) + ", " +
                                   elem_witness("alpha", a) + ", " +
                                   elem_witness("y", src.element(j)));
        }
      }
    }
  }
  for (std::size_t k = 0; k <= cap; ++k) {
    for (const Element& x : g.component(k).elements()) {
      budget.charge();
      if (!gr.component(k).contains(f[src.index_of(x)])) {
        return Verdict::fail("degree preservation",
                             "degree=" + std::to_string(k) + ", " +
                                 elem_witness("x", x));
      }
    }
  }
  return Verdict::pass();
}

AdicChain adic_chain(const GammaRing& r, const Ideal& ideal,
                     const EnumBudget& budget) {
  if (!ideal.subgroup.subset_of(r.carrier())) {
    throw InvalidStructureError("the ideal lives in a different ring");
  }
  AdicChain out;
  out.chain.push_back(
      AbelianGroup::subgroup(r.carrier(), r.carrier().elements()));
  out.chain.push_back(
      AbelianGroup::subgroup(r.carrier(), ideal.subgroup.elements()));
  for (;;) {
    const AbelianGroup& prev = out.chain.back();
    std::vector<Element> products;
    for (const Element& x : prev.elements()) {
      for (const Element& a : r.gamma().elements()) {
        for (const Element& y : ideal.subgroup.elements()) {
          budget.charge();
          products.push_back(r.product(x, a, y));
        }
      }
    }
    AbelianGroup next = subgroup_generated(r.carrier(), products);
    if (next.elements() == prev.elements()) {
      out.stabilization = out.chain.size() - 1;
      return out;
    }
    out.chain.push_back(std::move(next));
  }
}

}  // namespace gammalib
