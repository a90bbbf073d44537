#include "gammalib/grading.hpp"

#include <algorithm>
#include <set>

#include "gammalib/errors.hpp"

namespace gammalib {

struct GradedGammaRing::Impl {
  FiniteSemigroup type;
  GammaRing ring;
  std::vector<AbelianGroup> components;    // subgroup views of the carrier
  std::vector<std::vector<Element>> parts; // [carrier index][degree]
};

namespace {

void require_commutative_type(const FiniteSemigroup& type) {
  if (!type.is_commutative()) {
    throw UnsupportedStructureError("grading types must be commutative");
  }
}

std::string elem_witness(const char* name, const Element& e) {
  return std::string(name) + "=" + format_element(e);
}

}  // namespace

Verdict check_internal_grading(const InternalGrading& candidate,
                               const EnumBudget& budget) {
  require_commutative_type(candidate.type);
  const AbelianGroup& carrier = candidate.ring.carrier();
  if (candidate.assignment.size() != candidate.type.size()) {
    throw IncompatibilityError(
        "assignment must name one component per degree");
  }
  for (const AbelianGroup& c : candidate.assignment) {
    if (!c.subset_of(carrier)) {
      throw InvalidStructureError(
          "a component is not a subgroup of the carrier");
    }
  }
  DirectSumScan scan =
      scan_internal_direct_sum(carrier, candidate.assignment, budget);
  if (!scan.ok) {
    return Verdict::fail("direct sum", scan.witness);
  }
  const FiniteSemigroup& type = candidate.type;
  for (std::size_t g = 0; g < type.size(); ++g) {
    for (std::size_t h = 0; h < type.size(); ++h) {
      const AbelianGroup& target = candidate.assignment[type.mul(g, h)];
      for (const Element& x : candidate.assignment[g].elements()) {
        for (const Element& a : candidate.ring.gamma().elements()) {
          for (const Element& y : candidate.assignment[h].elements()) {
            budget.charge();
            Element p = candidate.ring.product(x, a, y);
            if (!target.contains(p)) {
              return Verdict::fail(
                  "containment",
                  "g=" + type.label(g) + ", h=" + type.label(h) + ", " +
                      elem_witness("x", x) + ", " + elem_witness("alpha", a) +
                      ", " + elem_witness("y", y) + ", product=" +
                      format_element(p));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

GradedGammaRing grade(const InternalGrading& candidate,
                      const EnumBudget& budget) {
  Verdict v = check_internal_grading(candidate, budget);
  if (!v.passed()) {
    throw InvalidStructureError("not a grading: " + v.law + " fails at " +
                                v.witness);
  }
  const AbelianGroup& carrier = candidate.ring.carrier();
  std::vector<AbelianGroup> components;
  for (const AbelianGroup& c : candidate.assignment) {
    components.push_back(AbelianGroup::subgroup(carrier, c.elements()));
  }
  DirectSumScan scan = scan_internal_direct_sum(carrier, components, budget);
  if (!scan.ok) {
    throw InternalAssertionError("direct-sum scan diverged between passes");
  }
  GradedGammaRing out;
  out.impl_ = std::make_shared<GradedGammaRing::Impl>(GradedGammaRing::Impl{
      candidate.type, candidate.ring, std::move(components),
      std::move(scan.parts)});
  return out;
}

GradedGammaRing GradedGammaRing::from_components(
    FiniteSemigroup type, AbelianGroup gamma,
    std::vector<AbelianGroup> components, DegreeProductFn rule) {
  require_commutative_type(type);
  if (components.size() != type.size()) {
    throw IncompatibilityError("expected one component per degree");
  }
  if (!rule) {
    throw InvalidStructureError("a graded ring needs a per-degree rule");
  }
  AbelianGroup carrier = AbelianGroup::direct_sum(components);
  std::size_t n = components.size();
  FiniteSemigroup t = type;
  std::vector<AbelianGroup> comps = components;
  ProductFn fn = [carrier, t, comps, rule](const Element& r, const Element& g,
                                           const Element& s) {
    Element acc = carrier.zero();
    for (std::size_t a = 0; a < comps.size(); ++a) {
      Element xa = carrier.project(a, r);
      for (std::size_t b = 0; b < comps.size(); ++b) {
        Element yb = carrier.project(b, s);
        Element val = rule(a, b, xa, g, yb);
        std::size_t ab = t.mul(a, b);
        if (!comps[ab].contains(val)) {
          throw InvalidStructureError(
              "per-degree product leaves its target component at degrees " +
              t.label(a) + "," + t.label(b));
        }
        acc = carrier.add(acc, carrier.embed(ab, val));
      }
    }
    return acc;
  };
  GammaRing flat(carrier, std::move(gamma), std::move(fn));

  std::vector<AbelianGroup> views;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Element> view;
    view.reserve(components[g].size());
    for (const Element& c : components[g].elements()) {
      view.push_back(carrier.embed(g, c));
    }
    views.push_back(AbelianGroup::subgroup(carrier, std::move(view)));
  }
  std::vector<std::vector<Element>> parts_table;
  parts_table.reserve(carrier.size());
  for (const Element& x : carrier.elements()) {
    std::vector<Element> parts(n);
    for (std::size_t g = 0; g < n; ++g) {
      parts[g] = carrier.embed(g, carrier.project(g, x));
    }
    parts_table.push_back(std::move(parts));
  }
  GradedGammaRing out;
  out.impl_ = std::make_shared<Impl>(Impl{std::move(type), std::move(flat),
                                          std::move(views),
                                          std::move(parts_table)});
  return out;
}

const FiniteSemigroup& GradedGammaRing::type() const { return impl_->type; }
const GammaRing& GradedGammaRing::ring() const { return impl_->ring; }
std::size_t GradedGammaRing::degrees() const { return impl_->type.size(); }

const AbelianGroup& GradedGammaRing::component(std::size_t g) const {
  return impl_->components.at(g);
}

std::vector<std::size_t> GradedGammaRing::support() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < impl_->components.size(); ++g) {
    if (impl_->components[g].size() > 1) out.push_back(g);
  }
  return out;
}

std::vector<std::pair<std::size_t, Element>> GradedGammaRing::decompose(
    const Element& x) const {
  std::size_t i = impl_->ring.carrier().index_of(x);
  Element zero = impl_->ring.carrier().zero();
  std::vector<std::pair<std::size_t, Element>> out;
  for (std::size_t g = 0; g < impl_->components.size(); ++g) {
    if (impl_->parts[i][g] != zero) out.emplace_back(g, impl_->parts[i][g]);
  }
  return out;
}

Element GradedGammaRing::component_part(const Element& x,
                                        std::size_t g) const {
  std::size_t i = impl_->ring.carrier().index_of(x);
  return impl_->parts.at(i).at(g);
}

InternalGrading as_internal(const GradedGammaRing& g) {
  std::vector<AbelianGroup> assignment;
  for (std::size_t i = 0; i < g.degrees(); ++i) {
    assignment.push_back(g.component(i));
  }
  return InternalGrading{g.ring(), g.type(), std::move(assignment)};
}

GradedGammaRing regrade_epimorphism(const GradedGammaRing& g,
                                    const SemigroupMap& phi,
                                    const EnumBudget& budget) {
  if (!phi.domain().same_semigroup(g.type())) {
    throw IncompatibilityError("the map's domain is not the grading type");
  }
  if (!phi.is_surjective()) {
    throw PreconditionError("regrading requires a surjective map");
  }
  const FiniteSemigroup& h = phi.codomain();
  std::vector<AbelianGroup> assignment;
  for (std::size_t target = 0; target < h.size(); ++target) {
    std::vector<AbelianGroup> fiber_parts;
    for (std::size_t source : phi.fiber(target)) {
      fiber_parts.push_back(g.component(source));
    }
    assignment.push_back(subgroup_sum(g.ring().carrier(), fiber_parts));
  }
  return grade(InternalGrading{g.ring(), h, std::move(assignment)}, budget);
}

GradedGammaRing restrict_subsemigroup(const GradedGammaRing& g,
                                      const std::vector<std::size_t>& members,
                                      const EnumBudget& budget) {
  FiniteSemigroup sub = subsemigroup(g.type(), members);
  std::vector<std::size_t> ms = members;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<AbelianGroup> kept;
  for (std::size_t m : ms) kept.push_back(g.component(m));
  AbelianGroup sub_carrier = subgroup_sum(g.ring().carrier(), kept);
  GammaRing base = g.ring();
  ProductFn fn = [base](const Element& x, const Element& a, const Element& y) {
    return base.product(x, a, y);
  };
  GammaRing sub_ring(sub_carrier, g.ring().gamma(), std::move(fn));
  std::vector<AbelianGroup> assignment;
  for (std::size_t m : ms) {
    assignment.push_back(
        AbelianGroup::subgroup(sub_carrier, g.component(m).elements()));
  }
  return grade(InternalGrading{sub_ring, sub, std::move(assignment)}, budget);
}

GradedGammaRing coarsen_by_quotient(const GradedGammaRing& g,
                                    const std::vector<std::size_t>& subgroup,
                                    const EnumBudget& budget) {
  if (!g.type().is_group()) {
    throw UnsupportedStructureError(
        "coarsening is defined only for group-type gradings");
  }
  QuotientSemigroup qs = quotient_group_semigroup(g.type(), subgroup);
  SemigroupMap phi(g.type(), qs.quotient, qs.coset_of);
  return regrade_epimorphism(g, phi, budget);
}

GradedGammaRing opposite_graded(const GradedGammaRing& g,
                                const EnumBudget& budget) {
  InternalGrading internal = as_internal(g);
  internal.ring = opposite(internal.ring);
  return grade(internal, budget);
}

GradedGammaRing product_graded(const std::vector<GradedGammaRing>& factors,
                               const EnumBudget& budget) {
  if (factors.empty()) {
    throw InvalidStructureError("a product grading needs at least one factor");
  }
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (!factors[i].type().same_semigroup(factors[0].type())) {
      throw IncompatibilityError("product factors must share the grading type");
    }
  }
  std::vector<GammaRing> rings;
  for (const GradedGammaRing& f : factors) rings.push_back(f.ring());
  GammaRing flat = direct_product(rings);
  const AbelianGroup& carrier = flat.carrier();
  std::vector<AbelianGroup> assignment;
  for (std::size_t g = 0; g < factors[0].degrees(); ++g) {
    // Cartesian product of the factor components, as flat elements.
    std::vector<Element> elems;
    std::vector<std::size_t> idx(factors.size(), 0);
    std::uint64_t total = 1;
    for (const GradedGammaRing& f : factors) total *= f.component(g).size();
    for (std::uint64_t step = 0; step < total; ++step) {
      Element e;
      for (std::size_t f = 0; f < factors.size(); ++f) {
        const Element& part = factors[f].component(g).element(idx[f]);
        e.insert(e.end(), part.begin(), part.end());
      }
      elems.push_back(std::move(e));
      for (std::size_t f = factors.size(); f-- > 0;) {
        if (++idx[f] < factors[f].component(g).size()) break;
        idx[f] = 0;
      }
    }
    assignment.push_back(AbelianGroup::subgroup(carrier, std::move(elems)));
  }
  return grade(InternalGrading{flat, factors[0].type(), std::move(assignment)},
               budget);
}

IdentityComponentReport identity_component_facts(const GradedGammaRing& g,
                                                 const EnumBudget& budget) {
  auto e = g.type().identity();
  if (!e) {
    throw UnsupportedStructureError(
        "the grading type has no identity element");
  }
  IdentityComponentReport out;
  out.identity_degree = *e;
  out.subring = Verdict::pass();
  const AbelianGroup& re = g.component(*e);
  for (const Element& x : re.elements()) {
    for (const Element& a : g.ring().gamma().elements()) {
      for (const Element& y : re.elements()) {
        budget.charge();
        Element p = g.ring().product(x, a, y);
        if (!re.contains(p)) {
          out.subring = Verdict::fail(
              "identity-component closure",
              elem_witness("x", x) + ", " + elem_witness("alpha", a) + ", " +
                  elem_witness("y", y));
        }
      }
    }
  }
  out.unities = find_unities(g.ring());
  for (const Unity& u : out.unities) {
    out.unity_in_identity.push_back(re.contains(u.one));
  }
  return out;
}

namespace {

void require_unity(const GammaRing& r, const Unity& unity) {
  if (!r.carrier().contains(unity.one) || !r.gamma().contains(unity.gamma0)) {
    throw MalformedElementError("unity does not live in this ring");
  }
  for (const Element& a : r.carrier().elements()) {
    if (r.product(a, unity.gamma0, unity.one) != a ||
        r.product(unity.one, unity.gamma0, a) != a) {
      throw PreconditionError("the supplied pair is not a unity");
    }
  }
}

}  // namespace

HomogeneousInverseReport homogeneous_inverse_check(const GradedGammaRing& g,
                                                   const Unity& unity,
                                                   const Element& r) {
  if (!g.type().is_group()) {
    throw UnsupportedStructureError(
        "inverse degrees need a group-type grading");
  }
  require_unity(g.ring(), unity);
  auto parts = g.decompose(r);
  if (parts.size() > 1) {
    throw PreconditionError("element " + format_element(r) +
                            " is not homogeneous");
  }
  std::size_t degree =
      parts.empty() ? *g.type().identity() : parts[0].first;
  auto inv = inverse_of(g.ring(), unity, r);
  if (!inv) {
    throw PreconditionError("element " + format_element(r) +
                            " is not invertible");
  }
  auto inv_parts = g.decompose(*inv);
  if (inv_parts.size() > 1) {
    throw InternalAssertionError(
        "the inverse of a homogeneous unit is not homogeneous");
  }
  std::size_t inv_degree =
      inv_parts.empty() ? *g.type().identity() : inv_parts[0].first;
  if (inv_degree != g.type().inverse(degree)) {
    throw InternalAssertionError(
        "the inverse of a homogeneous unit has the wrong degree");
  }
  return HomogeneousInverseReport{*inv, degree, inv_degree};
}

GradedIdealReport graded_ideal_check(const GradedGammaRing& g,
                                     const Ideal& ideal,
                                     const EnumBudget& budget) {
  if (ideal.side != Sidedness::two_sided) {
    throw PreconditionError("graded quotients require a two-sided ideal");
  }
  if (!ideal.subgroup.subset_of(g.ring().carrier())) {
    throw InvalidStructureError("the ideal lives in a different ring");
  }
  GradedIdealReport out;
  for (const Element& i : ideal.subgroup.elements()) {
    for (const auto& [degree, part] : g.decompose(i)) {
      budget.charge();
      if (!ideal.subgroup.contains(part)) {
        out.verdict = Verdict::fail(
            "graded ideal",
            elem_witness("i", i) + ", degree=" + g.type().label(degree) +
                ", part=" + format_element(part));
        return out;
      }
    }
  }
  out.verdict = Verdict::pass();
  GammaRing q = quotient_by_ideal(g.ring(), ideal, budget);
  const AbelianGroup& qc = q.carrier();
  std::vector<AbelianGroup> assignment;
  for (std::size_t degree = 0; degree < g.degrees(); ++degree) {
    std::set<Element> reduced;
    for (const Element& x : g.component(degree).elements()) {
      reduced.insert(qc.reduce(x));
    }
    assignment.push_back(AbelianGroup::subgroup(
        qc, std::vector<Element>(reduced.begin(), reduced.end())));
  }
  try {
    out.quotient =
        grade(InternalGrading{q, g.type(), std::move(assignment)}, budget);
  } catch (const InvalidStructureError& e) {
    throw InternalAssertionError(
        std::string("the quotient of a graded ideal failed to grade: ") +
        e.what());
  }
  return out;
}

namespace {

AbelianGroup generated_component_product(const GradedGammaRing& g,
                                         std::size_t a, std::size_t b,
                                         const EnumBudget& budget) {
  std::vector<Element> products;
  for (const Element& x : g.component(a).elements()) {
    for (const Element& ga : g.ring().gamma().elements()) {
      for (const Element& y : g.component(b).elements()) {
        budget.charge();
        products.push_back(g.ring().product(x, ga, y));
      }
    }
  }
  return subgroup_generated(g.ring().carrier(), products);
}

}  // namespace

StrongReport strongly_graded_check(const GradedGammaRing& g,
                                   const EnumBudget& budget) {
  StrongReport out;
  for (std::size_t a = 0; a < g.degrees(); ++a) {
    for (std::size_t b = 0; b < g.degrees(); ++b) {
      AbelianGroup gen = generated_component_product(g, a, b, budget);
      if (gen.elements() != g.component(g.type().mul(a, b)).elements()) {
        out.failing_pair = {a, b};
        return out;
      }
    }
  }
  out.strongly_graded = true;
  return out;
}

UnitCriterionReport strong_criterion_unit(const GradedGammaRing& g,
                                          const Unity& unity,
                                          const EnumBudget& budget) {
  if (!g.type().is_group()) {
    throw UnsupportedStructureError(
        "the unit criterion needs a group-type grading");
  }
  require_unity(g.ring(), unity);
  UnitCriterionReport out;
  for (std::size_t a = 0; a < g.degrees(); ++a) {
    AbelianGroup gen =
        generated_component_product(g, a, g.type().inverse(a), budget);
    if (!gen.contains(unity.one)) {
      out.failing_degree = a;
      return out;
    }
  }
  out.holds = true;
  return out;
}

CrossedProductReport crossed_product_check(const GradedGammaRing& g,
                                           const Unity& unity,
                                           const EnumBudget& budget) {
  if (!g.type().is_group()) {
    throw UnsupportedStructureError(
        "crossed products need a group-type grading");
  }
  require_unity(g.ring(), unity);
  CrossedProductReport out;
  UnitGroup units = unit_group(g.ring(), unity);
  for (std::size_t degree = 0; degree < g.degrees(); ++degree) {
    for (const Element& u : units.units) {
      if (g.component(degree).contains(u)) {
        out.unit_support.push_back(degree);
        break;
      }
    }
  }
  out.support = g.support();
  out.crossed = out.unit_support.size() == g.degrees();
  out.strong = strongly_graded_check(g, budget);

  // Homogeneous units multiply to homogeneous units, so the unit support is
  // closed under the group product.
  for (std::size_t a : out.unit_support) {
    for (std::size_t b : out.unit_support) {
      std::size_t ab = g.type().mul(a, b);
      if (!std::binary_search(out.unit_support.begin(), out.unit_support.end(),
                              ab)) {
        throw InternalAssertionError(
            "unit support is not closed under the degree product");
      }
    }
  }
  if (out.crossed && !out.strong.strongly_graded) {
    throw InternalAssertionError(
        "a crossed product failed the strongly-graded check");
  }
  if (out.strong.strongly_graded && g.ring().carrier().size() > 1 &&
      out.support.size() != g.degrees()) {
    throw InternalAssertionError(
        "a strongly graded ring has a trivial component");
  }
  return out;
}

PushforwardReport strong_pushforward_check(const GradedGammaRing& src,
                                           const GradedGammaRing& dst,
                                           const std::vector<Element>& f,
                                           const Unity& src_unity,
                                           const EnumBudget& budget) {
  if (!src.type().same_semigroup(dst.type())) {
    throw IncompatibilityError(
        "pushforward requires matching grading types");
  }
  if (!src.ring().gamma().same_group(dst.ring().gamma())) {
    throw IncompatibilityError("pushforward requires matching gamma groups");
  }
  require_unity(src.ring(), src_unity);
  if (!strongly_graded_check(src, budget).strongly_graded) {
    throw PreconditionError("the source is not strongly graded");
  }
  PushforwardReport out;
  std::vector<Element> phi = src.ring().gamma().elements();
  out.map_check = check_phi_homomorphism(src.ring(), dst.ring(), f, phi,
                                         budget);
  if (!out.map_check.passed()) return out;

  const AbelianGroup& sc = src.ring().carrier();
  for (std::size_t degree = 0; degree < src.degrees(); ++degree) {
    for (const Element& x : src.component(degree).elements()) {
      budget.charge();
      Element fx = f[sc.index_of(x)];
      if (!dst.component(degree).contains(fx)) {
        out.map_check =
            Verdict::fail("degree preservation",
                          "degree=" + src.type().label(degree) + ", " +
                              elem_witness("x", x) + ", image=" +
                              format_element(fx));
        return out;
      }
    }
  }
  std::set<Element> image(f.begin(), f.end());
  if (image.size() != dst.ring().carrier().size()) {
    out.map_check = Verdict::fail(
        "surjectivity", "image covers " + std::to_string(image.size()) +
                            " of " +
                            std::to_string(dst.ring().carrier().size()) +
                            " elements");
    return out;
  }
  Element one_image = f[sc.index_of(src_unity.one)];
  for (const Element& b : dst.ring().carrier().elements()) {
    budget.charge();
    if (dst.ring().product(b, src_unity.gamma0, one_image) != b ||
        dst.ring().product(one_image, src_unity.gamma0, b) != b) {
      out.map_check = Verdict::fail(
          "unity image", "f(1)=" + format_element(one_image) +
                             " is not a unity for gamma0=" +
                             format_element(src_unity.gamma0));
      return out;
    }
  }
  out.target = strongly_graded_check(dst, budget);
  if (!out.target.strongly_graded) {
    throw InternalAssertionError(
        "a degree-preserving epimorphism of a strongly graded ring produced "
        "a target that is not strongly graded");
  }
  return out;
}

GradedGammaRing semigroup_gamma_ring(const GammaRing& base,
                                     const FiniteSemigroup& G) {
  require_commutative_type(G);
  std::vector<AbelianGroup> components(G.size(), base.carrier());
  GammaRing b = base;
  GradedGammaRing::DegreeProductFn rule =
      [b](std::size_t, std::size_t, const Element& x, const Element& g,
          const Element& y) { return b.product(x, g, y); };
  return GradedGammaRing::from_components(G, base.gamma(),
                                          std::move(components),
                                          std::move(rule));
}

GradedGammaRing polynomial_gamma_ring(const GammaRing& base,
                                      std::size_t cap) {
  FiniteSemigroup type = truncated_addition_monoid(cap);
  std::vector<AbelianGroup> components(cap + 1, base.carrier());
  GammaRing b = base;
  Element zero = base.carrier().zero();
  GradedGammaRing::DegreeProductFn rule =
      [b, cap, zero](std::size_t i, std::size_t j, const Element& x,
                     const Element& g, const Element& y) {
        if (i + j > cap) return zero;  // truncated: high-degree terms vanish
        return b.product(x, g, y);
      };
  return GradedGammaRing::from_components(std::move(type), base.gamma(),
                                          std::move(components),
                                          std::move(rule));
}

}  // namespace gammalib
