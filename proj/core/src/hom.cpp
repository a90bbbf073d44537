#include "gammalib/hom.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gammalib/errors.hpp"

namespace gammalib {

namespace {

std::string ew(const char* name, const Element& e) {
  return std::string(name) + "=" + format_element(e);
}

void require_shape(const ModuleHom& f) {
  if (f.values.size() != f.source.carrier().size()) {
    throw IncompatibilityError("hom value table has the wrong length");
  }
  for (const Element& v : f.values) {
    if (!f.target.carrier().contains(v)) {
      throw MalformedElementError("hom value outside the target: " +
                                  format_element(v));
    }
  }
}

// Same carrier and pointwise equal actions over the same flat ring.
void require_same_flat_module(const GammaModule& a, const GammaModule& b,
                              const EnumBudget& budget) {
  require_same_flat_ring(a.ring(), b.ring(), budget);
  if (!a.carrier().same_group(b.carrier())) {
    throw IncompatibilityError("the two modules have different carriers");
  }
  for (const Element& r : a.ring().carrier().elements()) {
    for (const Element& g : a.ring().gamma().elements()) {
      for (const Element& m : a.carrier().elements()) {
        budget.charge();
        if (a.act(r, g, m) != b.act(r, g, m)) {
          throw IncompatibilityError("the two modules act differently at " +
                                     ew("r", r) + ", " + ew("a", g) + ", " +
                                     ew("m", m));
        }
      }
    }
  }
}

void require_graded_pair(const GradedGammaModule& m, const GradedGammaModule& k,
                         const ModuleHom& f, const EnumBudget& budget) {
  if (!m.type().same_semigroup(k.type())) {
    throw IncompatibilityError("the two gradings must share a type");
  }
  require_same_flat_module(f.source, m.module(), budget);
  require_same_flat_module(f.target, k.module(), budget);
  require_shape(f);
}

}  // namespace

Element ModuleHom::apply(const Element& m) const {
  if (values.size() != source.carrier().size()) {
    throw IncompatibilityError("hom value table has the wrong length");
  }
  return values.at(source.carrier().index_of(m));
}

Verdict check_hom_phi(const ModuleHom& f, const std::vector<Element>& phi,
                      const EnumBudget& budget) {
  require_same_flat_ring(f.source.ring(), f.target.ring(), budget);
  require_shape(f);
  const AbelianGroup& src = f.source.carrier();
  const AbelianGroup& dst = f.target.carrier();
  const AbelianGroup& G = f.source.ring().gamma();
  if (phi.size() != G.size()) {
    throw IncompatibilityError("gamma map table has the wrong length");
  }
  for (const Element& p : phi) {
    if (!G.contains(p)) {
      throw MalformedElementError("gamma map value outside gamma: " +
                                  format_element(p));
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < src.size(); ++j) {
      budget.charge();
      Element sum = src.add(src.element(i), src.element(j));
      if (f.values[src.index_of(sum)] != dst.add(f.values[i], f.values[j])) {
        return Verdict::fail("additivity", ew("x", src.element(i)) + ", " +
                                               ew("y", src.element(j)));
      }
    }
  }
  for (const Element& r : f.source.ring().carrier().elements()) {
    for (std::size_t gi = 0; gi < G.size(); ++gi) {
      for (std::size_t mi = 0; mi < src.size(); ++mi) {
        budget.charge();
        Element moved = f.source.act(r, G.element(gi), src.element(mi));
        if (f.values[src.index_of(moved)] !=
            f.target.act(r, phi[gi], f.values[mi])) {
          return Verdict::fail("equivariance",
                               ew("r", r) + ", " + ew("a", G.element(gi)) +
                                   ", " + ew("m", src.element(mi)));
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_hom(const ModuleHom& f, const EnumBudget& budget) {
  return check_hom_phi(f, f.source.ring().gamma().elements(), budget);
}

ModuleHom zero_hom(const GammaModule& m, const GammaModule& k) {
  std::vector<Element> values(m.carrier().size(), k.carrier().zero());
  return ModuleHom{m, k, std::move(values)};
}

ModuleHom identity_hom(const GammaModule& m) {
  return ModuleHom{m, m, m.carrier().elements()};
}

ModuleHom add_homs(const ModuleHom& f, const ModuleHom& g) {
  require_shape(f);
  require_shape(g);
  if (!f.source.carrier().same_group(g.source.carrier()) ||
      !f.target.carrier().same_group(g.target.carrier())) {
    throw IncompatibilityError("hom sum needs matching sources and targets");
  }
  std::vector<Element> values;
  values.reserve(f.values.size());
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    values.push_back(f.target.carrier().add(f.values[i], g.values[i]));
  }
  return ModuleHom{f.source, f.target, std::move(values)};
}

ModuleHom compose_homs(const ModuleHom& second, const ModuleHom& first) {
  require_shape(first);
  require_shape(second);
  if (!first.target.carrier().same_group(second.source.carrier())) {
    throw IncompatibilityError(
        "composition needs the first target to be the second source");
  }
  std::vector<Element> values;
  values.reserve(first.values.size());
  for (const Element& v : first.values) {
    values.push_back(second.values[second.source.carrier().index_of(v)]);
  }
  return ModuleHom{first.source, second.target, std::move(values)};
}

bool hom_has_degree(const GradedGammaModule& m, const GradedGammaModule& k,
                    const ModuleHom& f, std::size_t h,
                    const EnumBudget& budget) {
  require_graded_pair(m, k, f, budget);
  if (h >= m.degrees()) {
    throw UnresolvedReferenceError("degree index out of range");
  }
  const AbelianGroup& src = m.module().carrier();
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    const AbelianGroup& target = k.component(m.type().mul(h, g));
    for (const Element& x : m.component(g).elements()) {
      budget.charge();
      if (!target.contains(f.values[src.index_of(x)])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> hom_degrees(const GradedGammaModule& m,
                                     const GradedGammaModule& k,
                                     const ModuleHom& f,
                                     const EnumBudget& budget) {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < m.degrees(); ++h) {
    if (hom_has_degree(m, k, f, h, budget)) out.push_back(h);
  }
  return out;
}

ModuleHom hom_component(const GradedGammaModule& m, const GradedGammaModule& k,
                        const ModuleHom& f, std::size_t g,
                        const EnumBudget& budget) {
  if (!m.type().is_group()) {
    throw UnsupportedStructureError(
        "hom components need a group-type grading");
  }
  require_graded_pair(m, k, f, budget);
  if (g >= m.degrees()) {
    throw UnresolvedReferenceError("degree index out of range");
  }
  Verdict v = check_hom(f, budget);
  if (!v.passed()) {
    throw PreconditionError("not a module homomorphism: " + v.law +
                            " fails at " + v.witness);
  }
  const AbelianGroup& src = m.module().carrier();
  const AbelianGroup& dst = k.module().carrier();
  std::size_t ginv = m.type().inverse(g);
  std::vector<Element> values;
  values.reserve(src.size());
  for (const Element& x : src.elements()) {
    Element acc = dst.zero();
    for (std::size_t h = 0; h < m.degrees(); ++h) {
      budget.charge();
      Element part = m.component_part(x, m.type().mul(ginv, h));
      acc = dst.add(acc,
                    k.component_part(f.values[src.index_of(part)], h));
    }
    values.push_back(std::move(acc));
  }
  return ModuleHom{m.module(), k.module(), std::move(values)};
}

HomDecomposition decompose_hom(const GradedGammaModule& m,
                               const GradedGammaModule& k, const ModuleHom& f,
                               const EnumBudget& budget) {
  Verdict v = check_hom(f, budget);
  if (!v.passed()) {
    throw PreconditionError("not a module homomorphism: " + v.law +
                            " fails at " + v.witness);
  }
  if (!is_finitely_generated(m.module(), budget)) {
    throw PreconditionError("the source module is not finitely generated");
  }
  HomDecomposition out;
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    out.components.push_back(hom_component(m, k, f, g, budget));
  }
  const AbelianGroup& src = m.module().carrier();
  const AbelianGroup& dst = k.module().carrier();
  for (std::size_t i = 0; i < src.size(); ++i) {
    budget.charge();
    Element sum = dst.zero();
    for (const ModuleHom& c : out.components) {
      sum = dst.add(sum, c.values[i]);
    }
    if (sum != f.values[i]) {
      throw InternalAssertionError("hom components do not sum to the original");
    }
  }
  for (std::size_t g = 0; g < out.components.size(); ++g) {
    const ModuleHom& c = out.components[g];
    if (!check_hom(c, budget).passed()) {
      throw InternalAssertionError("a hom component is not a homomorphism");
    }
    if (!hom_has_degree(m, k, c, g, budget)) {
      throw InternalAssertionError("a hom component misses its degree");
    }
    bool nonzero = false;
    for (const Element& val : c.values) {
      if (val != dst.zero()) {
        nonzero = true;
        break;
      }
    }
    if (!nonzero) continue;
    out.support.push_back(g);
    for (std::size_t h = 0; h < out.components.size(); ++h) {
      if (h != g && hom_has_degree(m, k, c, h, budget)) {
        throw InternalAssertionError("a nonzero hom component has two degrees");
      }
    }
  }
  return out;
}

std::vector<ModuleHom> enumerate_homs(const GammaModule& m,
                                      const GammaModule& k,
                                      const EnumBudget& budget) {
  require_same_flat_ring(m.ring(), k.ring(), budget);
  const AbelianGroup& src = m.carrier();
  const AbelianGroup& dst = k.carrier();
  CyclicBasis basis = cyclic_basis(src);
  std::size_t nb = basis.basis.size();

  // A generator of order n can only go to an image killed by n.
  std::vector<std::vector<Element>> choices(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    for (const Element& y : dst.elements()) {
      if (dst.scale(basis.orders[i], y) == dst.zero()) {
        choices[i].push_back(y);
      }
    }
  }
  std::uint64_t total = 1;
  for (const auto& c : choices) total *= c.size();

  std::vector<ModuleHom> out;
  std::vector<std::size_t> idx(nb, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    budget.charge();
    std::vector<Element> values(src.size());
    for (std::size_t xi = 0; xi < src.size(); ++xi) {
      budget.charge();
      Element v = dst.zero();
      for (std::size_t i = 0; i < nb; ++i) {
        v = dst.add(v, dst.scale(basis.coefficients[xi][i],
                                 choices[i][idx[i]]));
      }
      values[xi] = std::move(v);
    }
    ModuleHom f{m, k, std::move(values)};
    if (check_hom(f, budget).passed()) {
      out.push_back(std::move(f));
    }
    for (std::size_t i = nb; i-- > 0;) {
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ModuleHom& a, const ModuleHom& b) {
              return a.values < b.values;
            });

  // Hom is a group under pointwise addition; the enumeration must be closed.
  std::set<std::vector<Element>> tables;
  for (const ModuleHom& f : out) tables.insert(f.values);
  for (const ModuleHom& f : out) {
    for (const ModuleHom& g : out) {
      budget.charge();
      if (tables.find(add_homs(f, g).values) == tables.end()) {
        throw InternalAssertionError(
            "the homomorphisms are not closed under addition");
      }
    }
  }
  return out;
}

EndomorphismReport endomorphism_graded_ring(const GradedGammaModule& m,
                                            const EnumBudget& budget) {
  if (!m.type().is_group()) {
    throw UnsupportedStructureError(
        "endomorphism gradings need a group-type grading");
  }
  if (!is_finitely_generated(m.module(), budget)) {
    throw PreconditionError("the module is not finitely generated");
  }
  std::vector<ModuleHom> homs =
      enumerate_homs(m.module(), m.module(), budget);
  const AbelianGroup& M = m.module().carrier();

  // Function space M -> M under pointwise addition; homs sit inside it as
  // value-table tuples.
  std::vector<AbelianGroup> copies(M.size(), M);
  AbelianGroup parent = AbelianGroup::direct_sum(copies);
  auto encode = [](const ModuleHom& f) {
    Element e;
    for (const Element& v : f.values) e.insert(e.end(), v.begin(), v.end());
    return e;
  };
  std::vector<Element> encoded;
  encoded.reserve(homs.size());
  for (const ModuleHom& f : homs) encoded.push_back(encode(f));
  AbelianGroup carrier = AbelianGroup::subgroup(parent, encoded);
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    if (carrier.element(i) != encoded[i]) {
      throw InternalAssertionError("hom order diverges from carrier order");
    }
  }
  // Plain composition cannot be gamma-additive (it would force f g = 2 f g),
  // so gamma is Z_e for the carrier exponent e, acting by scaling.
  Int exponent = 1;
  for (const Element& x : M.elements()) {
    exponent = std::lcm(exponent, M.order_of(x));
  }
  AbelianGroup gamma = AbelianGroup::cyclic_product({exponent});
  std::vector<ModuleHom> table = homs;
  AbelianGroup car = carrier;
  AbelianGroup srcgrp = M;
  ProductFn fn = [table, car, srcgrp](const Element& x, const Element& a,
                                      const Element& y) {
    const ModuleHom& f = table[car.index_of(x)];
    const ModuleHom& g = table[car.index_of(y)];
    Element enc;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      Element v = srcgrp.scale(a[0], f.values[srcgrp.index_of(g.values[i])]);
      enc.insert(enc.end(), v.begin(), v.end());
    }
    return enc;
  };
  GammaRing ring(carrier, gamma, std::move(fn));
  try {
    Verdict ax = check_axioms(ring, budget);
    if (!ax.passed()) {
      throw InternalAssertionError(
          "the endomorphism ring fails the ring laws: " + ax.law);
    }
  } catch (const InvalidStructureError& e) {
    throw InternalAssertionError(
        std::string("composition leaves the homomorphisms: ") + e.what());
  }
  std::vector<AbelianGroup> assignment;
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    std::vector<Element> members;
    for (std::size_t i = 0; i < homs.size(); ++i) {
      if (hom_has_degree(m, m, homs[i], g, budget)) {
        members.push_back(carrier.element(i));
      }
    }
    assignment.push_back(AbelianGroup::subgroup(carrier, std::move(members)));
  }
  try {
    GradedGammaRing graded =
        grade(InternalGrading{ring, m.type(), std::move(assignment)}, budget);
    return EndomorphismReport{std::move(graded), std::move(homs)};
  } catch (const InvalidStructureError& e) {
    throw InternalAssertionError(
        std::string("the endomorphism ring is not graded: ") + e.what());
  }
}

}  // namespace gammalib
