#include "gammalib/gamma_module.hpp"

#include <algorithm>
#include <set>

#include "gammalib/errors.hpp"

namespace gammalib {

struct GammaModule::Impl {
  GammaRing ring;
  AbelianGroup carrier;
  ActionFn action;
};

GammaModule::GammaModule(GammaRing ring, AbelianGroup carrier,
                         ActionFn action) {
  if (!action) {
    throw InvalidStructureError("a module needs an action rule");
  }
  impl_ = std::make_shared<Impl>(
      Impl{std::move(ring), std::move(carrier), std::move(action)});
}

const GammaRing& GammaModule::ring() const { return impl_->ring; }
const AbelianGroup& GammaModule::carrier() const { return impl_->carrier; }

Element GammaModule::act(const Element& r, const Element& g,
                         const Element& m) const {
  if (!impl_->ring.carrier().contains(r)) {
    throw MalformedElementError("action operand outside the ring: " +
                                format_element(r));
  }
  if (!impl_->ring.gamma().contains(g)) {
    throw MalformedElementError("action coefficient outside gamma: " +
                                format_element(g));
  }
  if (!impl_->carrier.contains(m)) {
    throw MalformedElementError("action operand outside the module: " +
                                format_element(m));
  }
  return impl_->action(r, g, m);
}

GammaModule regular_module(const GammaRing& r) {
  GammaRing base = r;
  return GammaModule(r, r.carrier(),
                     [base](const Element& x, const Element& a,
                            const Element& m) { return base.product(x, a, m); });
}

GammaModule right_module(const GammaRing& r, AbelianGroup carrier,
                         RightActionFn action) {
  if (!action) {
    throw InvalidStructureError("a module needs an action rule");
  }
  RightActionFn fn = std::move(action);
  GammaModule::ActionFn left = [fn](const Element& s, const Element& a,
                                    const Element& m) { return fn(m, a, s); };
  return GammaModule(opposite(r), std::move(carrier), std::move(left));
}

namespace {

std::string ew(const char* name, const Element& e) {
  return std::string(name) + "=" + format_element(e);
}

std::string w4(const char* n1, const Element& e1, const char* n2,
               const Element& e2, const char* n3, const Element& e3,
               const char* n4, const Element& e4) {
  return ew(n1, e1) + ", " + ew(n2, e2) + ", " + ew(n3, e3) + ", " +
         ew(n4, e4);
}

}  // namespace

Verdict check_module_axioms(const GammaModule& m, const EnumBudget& budget) {
  const AbelianGroup& R = m.ring().carrier();
  const AbelianGroup& G = m.ring().gamma();
  const AbelianGroup& M = m.carrier();
  for (const Element& r : R.elements()) {
    for (const Element& a : G.elements()) {
      for (const Element& x : M.elements()) {
        budget.charge();
        Element v = m.act(r, a, x);
        if (!M.contains(v)) {
          throw InvalidStructureError("action value outside the module at " +
                                      ew("r", r) + ", " + ew("a", a) + ", " +
                                      ew("m", x));
        }
      }
    }
  }
  for (const Element& r : R.elements()) {
    for (const Element& s : R.elements()) {
      for (const Element& a : G.elements()) {
        for (const Element& x : M.elements()) {
          budget.charge();
          if (m.act(R.add(r, s), a, x) !=
              M.add(m.act(r, a, x), m.act(s, a, x))) {
            return Verdict::fail("left distributivity",
                                 w4("r", r, "s", s, "a", a, "m", x));
          }
        }
      }
    }
  }
  for (const Element& r : R.elements()) {
    for (const Element& a : G.elements()) {
      for (const Element& b : G.elements()) {
        for (const Element& x : M.elements()) {
          budget.charge();
          if (m.act(r, G.add(a, b), x) !=
              M.add(m.act(r, a, x), m.act(r, b, x))) {
            return Verdict::fail("gamma additivity",
                                 w4("r", r, "a", a, "b", b, "m", x));
          }
        }
      }
    }
  }
  for (const Element& r : R.elements()) {
    for (const Element& a : G.elements()) {
      for (const Element& x : M.elements()) {
        for (const Element& y : M.elements()) {
          budget.charge();
          if (m.act(r, a, M.add(x, y)) !=
              M.add(m.act(r, a, x), m.act(r, a, y))) {
            return Verdict::fail("right distributivity",
                                 w4("r", r, "a", a, "m", x, "n", y));
          }
        }
      }
    }
  }
  for (const Element& r : R.elements()) {
    for (const Element& a : G.elements()) {
      for (const Element& s : R.elements()) {
        for (const Element& b : G.elements()) {
          for (const Element& x : M.elements()) {
            budget.charge();
            if (m.act(m.ring().product(r, a, s), b, x) !=
                m.act(r, a, m.act(s, b, x))) {
              return Verdict::fail("associativity",
                                   w4("r", r, "a", a, "s", s, "b", b) +
                                       ", " + ew("m", x));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_submodule(const GammaModule& m, const AbelianGroup& candidate,
                        const EnumBudget& budget) {
  if (!candidate.subset_of(m.carrier())) {
    throw InvalidStructureError(
        "the candidate is not a subgroup of the module carrier");
  }
  for (const Element& r : m.ring().carrier().elements()) {
    for (const Element& a : m.ring().gamma().elements()) {
      for (const Element& x : candidate.elements()) {
        budget.charge();
        if (!candidate.contains(m.act(r, a, x))) {
          return Verdict::fail("action closure",
                               ew("r", r) + ", " + ew("alpha", a) + ", " +
                                   ew("m", x));
        }
      }
    }
  }
  return Verdict::pass();
}

struct GradedGammaModule::Impl {
  GradedGammaRing ring;
  GammaModule module;
  std::vector<AbelianGroup> components;
  std::vector<std::vector<Element>> parts;
};

Verdict check_module_grading(const InternalModuleGrading& candidate,
                             const EnumBudget& budget) {
  require_same_flat_ring(candidate.module.ring(), candidate.ring.ring(),
                         budget);
  const AbelianGroup& carrier = candidate.module.carrier();
  if (candidate.assignment.size() != candidate.ring.degrees()) {
    throw IncompatibilityError("assignment must name one component per degree");
  }
  for (const AbelianGroup& c : candidate.assignment) {
    if (!c.subset_of(carrier)) {
      throw InvalidStructureError(
          "a component is not a subgroup of the module carrier");
    }
  }
  DirectSumScan scan =
      scan_internal_direct_sum(carrier, candidate.assignment, budget);
  if (!scan.ok) {
    return Verdict::fail("direct sum", scan.witness);
  }
  const FiniteSemigroup& type = candidate.ring.type();
  for (std::size_t g = 0; g < type.size(); ++g) {
    for (std::size_t h = 0; h < type.size(); ++h) {
      const AbelianGroup& target = candidate.assignment[type.mul(g, h)];
      for (const Element& x : candidate.ring.component(g).elements()) {
        for (const Element& a : candidate.ring.ring().gamma().elements()) {
          for (const Element& mm : candidate.assignment[h].elements()) {
            budget.charge();
            Element v = candidate.module.act(x, a, mm);
            if (!target.contains(v)) {
              return Verdict::fail(
                  "containment",
                  "g=" + type.label(g) + ", h=" + type.label(h) + ", " +
                      ew("r", x) + ", " + ew("alpha", a) + ", " + ew("m", mm) +
                      ", value=" + format_element(v));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

GradedGammaModule grade_module(const InternalModuleGrading& candidate,
                               const EnumBudget& budget) {
  Verdict v = check_module_grading(candidate, budget);
  if (!v.passed()) {
    throw InvalidStructureError("not a module grading: " + v.law +
                                " fails at " + v.witness);
  }
  const AbelianGroup& carrier = candidate.module.carrier();
  std::vector<AbelianGroup> components;
  for (const AbelianGroup& c : candidate.assignment) {
    components.push_back(AbelianGroup::subgroup(carrier, c.elements()));
  }
  DirectSumScan scan = scan_internal_direct_sum(carrier, components, budget);
  if (!scan.ok) {
    throw InternalAssertionError("direct-sum scan diverged between passes");
  }
  GradedGammaModule out;
  out.impl_ = std::make_shared<GradedGammaModule::Impl>(
      GradedGammaModule::Impl{candidate.ring, candidate.module,
                              std::move(components), std::move(scan.parts)});
  return out;
}

GradedGammaModule GradedGammaModule::from_components(
    GradedGammaRing ring, std::vector<AbelianGroup> components,
    DegreeActionFn rule) {
  if (components.size() != ring.degrees()) {
    throw IncompatibilityError("expected one component per degree");
  }
  if (!rule) {
    throw InvalidStructureError("a graded module needs a per-degree rule");
  }
  AbelianGroup carrier = AbelianGroup::direct_sum(components);
  std::size_t n = components.size();
  GradedGammaRing rg = ring;
  FiniteSemigroup t = ring.type();
  std::vector<AbelianGroup> comps = components;
  GammaModule::ActionFn fn = [carrier, rg, t, comps, rule](
                                 const Element& r, const Element& a,
                                 const Element& m) {
    Element acc = carrier.zero();
    for (std::size_t g = 0; g < comps.size(); ++g) {
      Element rpart = rg.component_part(r, g);
      for (std::size_t h = 0; h < comps.size(); ++h) {
        Element mh = carrier.project(h, m);
        Element val = rule(g, h, rpart, a, mh);
        std::size_t gh = t.mul(g, h);
        if (!comps[gh].contains(val)) {
          throw InvalidStructureError(
              "per-degree action leaves its target component at degrees " +
              t.label(g) + "," + t.label(h));
        }
        acc = carrier.add(acc, carrier.embed(gh, val));
      }
    }
    return acc;
  };
  GammaModule module(ring.ring(), carrier, std::move(fn));

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
  GradedGammaModule out;
  out.impl_ = std::make_shared<Impl>(Impl{std::move(ring), std::move(module),
                                          std::move(views),
                                          std::move(parts_table)});
  return out;
}

const GradedGammaRing& GradedGammaModule::graded_ring() const {
  return impl_->ring;
}
const GammaModule& GradedGammaModule::module() const { return impl_->module; }
const FiniteSemigroup& GradedGammaModule::type() const {
  return impl_->ring.type();
}
std::size_t GradedGammaModule::degrees() const { return impl_->ring.degrees(); }

const AbelianGroup& GradedGammaModule::component(std::size_t g) const {
  return impl_->components.at(g);
}

std::vector<std::size_t> GradedGammaModule::support() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < impl_->components.size(); ++g) {
    if (impl_->components[g].size() > 1) out.push_back(g);
  }
  return out;
}

std::vector<std::pair<std::size_t, Element>> GradedGammaModule::decompose(
    const Element& m) const {
  std::size_t i = impl_->module.carrier().index_of(m);
  Element zero = impl_->module.carrier().zero();
  std::vector<std::pair<std::size_t, Element>> out;
  for (std::size_t g = 0; g < impl_->components.size(); ++g) {
    if (impl_->parts[i][g] != zero) out.emplace_back(g, impl_->parts[i][g]);
  }
  return out;
}

Element GradedGammaModule::component_part(const Element& m,
                                          std::size_t g) const {
  std::size_t i = impl_->module.carrier().index_of(m);
  return impl_->parts.at(i).at(g);
}

InternalModuleGrading as_internal(const GradedGammaModule& m) {
  std::vector<AbelianGroup> assignment;
  for (std::size_t i = 0; i < m.degrees(); ++i) {
    assignment.push_back(m.component(i));
  }
  return InternalModuleGrading{m.graded_ring(), m.module(),
                               std::move(assignment)};
}

GradedGammaModule regular_graded_module(const GradedGammaRing& g) {
  std::vector<AbelianGroup> assignment;
  for (std::size_t i = 0; i < g.degrees(); ++i) {
    assignment.push_back(g.component(i));
  }
  return grade_module(InternalModuleGrading{g, regular_module(g.ring()),
                                            std::move(assignment)});
}

QuotientModuleReport quotient_module(const GradedGammaModule& m,
                                     const AbelianGroup& submodule,
                                     const EnumBudget& budget) {
  Verdict sub = check_submodule(m.module(), submodule, budget);
  if (!sub.passed()) {
    throw PreconditionError("not a submodule: " + sub.law + " fails at " +
                            sub.witness);
  }
  const AbelianGroup& M = m.module().carrier();
  AbelianGroup kernel = AbelianGroup::subgroup(M, submodule.elements());
  AbelianGroup Q = quotient_group(M, kernel);
  GammaModule base = m.module();
  for (const Element& r : base.ring().carrier().elements()) {
    for (const Element& a : base.ring().gamma().elements()) {
      for (const Element& x : M.elements()) {
        budget.charge();
        if (Q.reduce(base.act(r, a, x)) !=
            Q.reduce(base.act(r, a, Q.reduce(x)))) {
          throw InternalAssertionError(
              "coset actions depend on the representative");
        }
      }
    }
  }
  AbelianGroup q = Q;
  GammaModule::ActionFn fn = [base, q](const Element& r, const Element& a,
                                       const Element& x) {
    return q.reduce(base.act(r, a, x));
  };
  QuotientModuleReport out{GammaModule(base.ring(), Q, std::move(fn)),
                           {},
                           false,
                           std::nullopt};
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    std::set<Element> image;
    for (const Element& x : m.component(g).elements()) {
      image.insert(Q.reduce(x));
    }
    out.components.push_back(AbelianGroup::subgroup(
        Q, std::vector<Element>(image.begin(), image.end())));
  }
  std::uint64_t total = 1;
  for (const AbelianGroup& c : out.components) total *= c.size();
  out.direct = total == Q.size();
  if (out.direct) {
    try {
      out.graded = grade_module(
          InternalModuleGrading{m.graded_ring(), out.quotient,
                                out.components},
          budget);
    } catch (const InvalidStructureError& e) {
      throw InternalAssertionError(
          std::string("a direct quotient failed to grade: ") + e.what());
    }
  }
  return out;
}

GradedSubmodulePart maximal_graded_submodule(const GradedGammaModule& m,
                                             const AbelianGroup& submodule,
                                             const EnumBudget& budget) {
  Verdict sub = check_submodule(m.module(), submodule, budget);
  if (!sub.passed()) {
    throw PreconditionError("not a submodule: " + sub.law + " fails at " +
                            sub.witness);
  }
  const AbelianGroup& M = m.module().carrier();
  AbelianGroup k = AbelianGroup::subgroup(M, submodule.elements());
  std::vector<AbelianGroup> parts;
  std::vector<Element> gens;
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    AbelianGroup inter = subgroup_intersection(M, {k, m.component(g)});
    for (const Element& e : inter.elements()) gens.push_back(e);
    parts.push_back(std::move(inter));
  }
  AbelianGroup core = subgroup_generated(M, gens);
  for (const Element& e : core.elements()) {
    budget.charge();
    if (!submodule.contains(e)) {
      throw InternalAssertionError("the graded core left the submodule");
    }
    for (const auto& [degree, part] : m.decompose(e)) {
      if (!core.contains(part)) {
        throw InternalAssertionError("the graded core is not graded");
      }
    }
  }
  Verdict v = check_submodule(m.module(), core, budget);
  if (!v.passed()) {
    throw InternalAssertionError("the graded core is not a submodule");
  }
  return GradedSubmodulePart{std::move(core), std::move(parts)};
}

Verdict check_filtered_module(const FilteredModule& f,
                              const EnumBudget& budget) {
  if (f.chain.empty()) {
    throw InvalidStructureError("a module filtration needs at least one level");
  }
  Verdict ring_ok = check_filtration(f.ring_filtration, budget);
  if (!ring_ok.passed()) {
    throw PreconditionError("the ring filtration is invalid: " + ring_ok.law +
                            " fails at " + ring_ok.witness);
  }
  require_same_flat_ring(f.module.ring(), f.ring_filtration.ring, budget);
  const AbelianGroup& M = f.module.carrier();
  for (const AbelianGroup& level : f.chain) {
    if (!level.subset_of(M)) {
      throw InvalidStructureError(
          "a filtration level is not a subgroup of the module carrier");
    }
  }
  std::size_t top = f.chain.size() - 1;
  for (std::size_t j = 0; j < top; ++j) {
    for (const Element& x : f.chain[j].elements()) {
      budget.charge();
      if (!f.chain[j + 1].contains(x)) {
        return Verdict::fail("monotonicity", "i=" + std::to_string(j) + ", " +
                                                 ew("m", x));
      }
    }
  }
  if (f.chain[top].size() != M.size()) {
    for (const Element& x : M.elements()) {
      if (!f.chain[top].contains(x)) {
        return Verdict::fail("exhaustion", ew("m", x) + " is outside level " +
                                               std::to_string(top));
      }
    }
  }
  std::size_t rtop = f.ring_filtration.chain.size() - 1;
  for (std::size_t i = 0; i <= rtop; ++i) {
    for (std::size_t j = 0; j <= top; ++j) {
      const AbelianGroup& target = f.chain[std::min(i + j, top)];
      for (const Element& r : f.ring_filtration.chain[i].elements()) {
        for (const Element& a : f.module.ring().gamma().elements()) {
          for (const Element& x : f.chain[j].elements()) {
            budget.charge();
            Element v = f.module.act(r, a, x);
            if (!target.contains(v)) {
              return Verdict::fail(
                  "compatibility",
                  "i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                      ", " + ew("r", r) + ", " + ew("alpha", a) + ", " +
                      ew("m", x) + ", value=" + format_element(v));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

GradedPair gr_module(const FilteredModule& f, const EnumBudget& budget) {
  Verdict ok = check_filtered_module(f, budget);
  if (!ok.passed()) {
    throw InvalidStructureError("not a module filtration: " + ok.law +
                                " fails at " + ok.witness);
  }
  // Pad both chains to a common top so the graded types line up.
  std::size_t n =
      std::max(f.ring_filtration.chain.size(), f.chain.size()) - 1;
  Filtration rf = f.ring_filtration;
  while (rf.chain.size() - 1 < n) rf.chain.push_back(rf.chain.back());
  std::vector<AbelianGroup> mchain = f.chain;
  while (mchain.size() - 1 < n) mchain.push_back(mchain.back());

  GradedGammaRing gr_ring = associated_graded(rf, budget);
  std::vector<AbelianGroup> rq = chain_level_quotients(rf.chain);
  std::vector<AbelianGroup> mq = chain_level_quotients(mchain);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; i + j <= n; ++j) {
      const AbelianGroup& qt = mq[i + j];
      for (const Element& x : rf.chain[i].elements()) {
        Element xr = rq[i].reduce(x);
        for (const Element& a : f.module.ring().gamma().elements()) {
          for (const Element& mm : mchain[j].elements()) {
            budget.charge();
            Element mr = mq[j].reduce(mm);
            if (qt.reduce(f.module.act(x, a, mm)) !=
                qt.reduce(f.module.act(xr, a, mr))) {
              throw InternalAssertionError(
                  "coset actions depend on the representative at levels " +
                  std::to_string(i) + "," + std::to_string(j));
            }
          }
        }
      }
    }
  }
  GammaModule base = f.module;
  std::vector<AbelianGroup> comps = mq;
  std::size_t capk = n + 1;
  AbelianGroup grc = gr_ring.ring().carrier();
  GradedGammaModule::DegreeActionFn rule =
      [base, comps, capk, grc](std::size_t g, std::size_t h,
                               const Element& rpart, const Element& a,
                               const Element& mh) {
        std::size_t t = std::min(g + h, capk);
        if (t == capk) return comps[capk].zero();
        return comps[t].reduce(base.act(grc.project(g, rpart), a, mh));
      };
  GradedGammaModule gm =
      GradedGammaModule::from_components(gr_ring, std::move(mq),
                                         std::move(rule));
  return GradedPair{std::move(gr_ring), std::move(gm)};
}

std::vector<AbelianGroup> intersect_chain(
    const AbelianGroup& parent, const AbelianGroup& subgroup,
    const std::vector<AbelianGroup>& chain) {
  std::vector<AbelianGroup> out;
  out.reserve(chain.size());
  for (const AbelianGroup& level : chain) {
    out.push_back(subgroup_intersection(parent, {subgroup, level}));
  }
  return out;
}

AdicChain adic_module_chain(const GammaRing& r, const Ideal& ideal,
                            const GammaModule& m, const EnumBudget& budget) {
  require_same_flat_ring(m.ring(), r, budget);
  if (!ideal.subgroup.subset_of(r.carrier())) {
    throw InvalidStructureError("the ideal lives in a different ring");
  }
  AdicChain out;
  out.chain.push_back(
      AbelianGroup::subgroup(m.carrier(), m.carrier().elements()));
  for (;;) {
    const AbelianGroup& prev = out.chain.back();
    std::vector<Element> values;
    for (const Element& i : ideal.subgroup.elements()) {
      for (const Element& a : r.gamma().elements()) {
        for (const Element& x : prev.elements()) {
          budget.charge();
          values.push_back(m.act(i, a, x));
        }
      }
    }
    AbelianGroup next = subgroup_generated(m.carrier(), values);
    if (out.chain.size() >= 2 && next.elements() == prev.elements()) {
      out.stabilization = out.chain.size() - 1;
      return out;
    }
    out.chain.push_back(std::move(next));
  }
}

Verdict check_bimodule(const Bimodule& b, const EnumBudget& budget) {
  if (!b.left_action || !b.right_action) {
    throw InvalidStructureError("a bimodule needs both actions");
  }
  GammaModule left(b.left_ring, b.carrier, b.left_action);
  Verdict lv = check_module_axioms(left, budget);
  if (!lv.passed()) {
    return Verdict::fail("left " + lv.law, lv.witness);
  }
  GammaModule right = right_module(b.right_ring, b.carrier, b.right_action);
  Verdict rv = check_module_axioms(right, budget);
  if (!rv.passed()) {
    return Verdict::fail("right " + rv.law, rv.witness);
  }
  for (const Element& r : b.left_ring.carrier().elements()) {
    for (const Element& a : b.left_ring.gamma().elements()) {
      for (const Element& x : b.carrier.elements()) {
        for (const Element& bt : b.right_ring.gamma().elements()) {
          for (const Element& s : b.right_ring.carrier().elements()) {
            budget.charge();
            if (b.right_action(b.left_action(r, a, x), bt, s) !=
                b.left_action(r, a, b.right_action(x, bt, s))) {
              return Verdict::fail("compatibility",
                                   w4("r", r, "a", a, "m", x, "b", bt) +
                                       ", " + ew("s", s));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_graded_bimodule(const Bimodule& b, const GradedGammaRing& left,
                              const GradedGammaRing& right,
                              const std::vector<AbelianGroup>& assignment,
                              const EnumBudget& budget) {
  if (!left.type().same_semigroup(right.type())) {
    throw IncompatibilityError("the two gradings must share a type");
  }
  require_same_flat_ring(b.left_ring, left.ring(), budget);
  require_same_flat_ring(b.right_ring, right.ring(), budget);
  if (assignment.size() != left.degrees()) {
    throw IncompatibilityError("assignment must name one component per degree");
  }
  for (const AbelianGroup& c : assignment) {
    if (!c.subset_of(b.carrier)) {
      throw InvalidStructureError(
          "a component is not a subgroup of the bimodule carrier");
    }
  }
  DirectSumScan scan = scan_internal_direct_sum(b.carrier, assignment, budget);
  if (!scan.ok) {
    return Verdict::fail("direct sum", scan.witness);
  }
  const FiniteSemigroup& type = left.type();
  for (std::size_t g = 0; g < type.size(); ++g) {
    for (std::size_t h = 0; h < type.size(); ++h) {
      const AbelianGroup& target = assignment[type.mul(g, h)];
      for (const Element& x : left.component(g).elements()) {
        for (const Element& a : b.left_ring.gamma().elements()) {
          for (const Element& mm : assignment[h].elements()) {
            budget.charge();
            Element v = b.left_action(x, a, mm);
            if (!b.carrier.contains(v)) {
              throw InvalidStructureError(
                  "left action value outside the carrier");
            }
            if (!target.contains(v)) {
              return Verdict::fail(
                  "left containment",
                  "g=" + type.label(g) + ", h=" + type.label(h) + ", " +
                      ew("r", x) + ", " + ew("alpha", a) + ", " + ew("m", mm) +
                      ", value=" + format_element(v));
            }
          }
        }
      }
    }
  }
  for (std::size_t h = 0; h < type.size(); ++h) {
    for (std::size_t k = 0; k < type.size(); ++k) {
      const AbelianGroup& target = assignment[type.mul(h, k)];
      for (const Element& mm : assignment[h].elements()) {
        for (const Element& a : b.right_ring.gamma().elements()) {
          for (const Element& s : right.component(k).elements()) {
            budget.charge();
            Element v = b.right_action(mm, a, s);
            if (!b.carrier.contains(v)) {
              throw InvalidStructureError(
                  "right action value outside the carrier");
            }
            if (!target.contains(v)) {
              return Verdict::fail(
                  "right containment",
                  "h=" + type.label(h) + ", k=" + type.label(k) + ", " +
                      ew("m", mm) + ", " + ew("alpha", a) + ", " + ew("s", s) +
                      ", value=" + format_element(v));
            }
          }
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict check_finitely_generated(const GammaModule& m,
                                 const std::vector<Element>& generators,
                                 const EnumBudget& budget) {
  for (const Element& g : generators) {
    if (!m.carrier().contains(g)) {
      throw MalformedElementError("generator outside the module: " +
                                  format_element(g));
    }
  }
  std::vector<Element> values;
  for (const Element& r : m.ring().carrier().elements()) {
    for (const Element& a : m.ring().gamma().elements()) {
      for (const Element& g : generators) {
        budget.charge();
        values.push_back(m.act(r, a, g));
      }
    }
  }
  AbelianGroup span = subgroup_generated(m.carrier(), values);
  if (span.size() != m.carrier().size()) {
    for (const Element& x : m.carrier().elements()) {
      if (!span.contains(x)) {
        return Verdict::fail("generation", format_element(x) +
                                               " is outside the span");
      }
    }
  }
  return Verdict::pass();
}

bool is_finitely_generated(const GammaModule& m, const EnumBudget& budget) {
  return check_finitely_generated(m, m.carrier().elements(), budget).passed();
}

StrongReport strongly_graded_module_check(const GradedGammaModule& m,
                                          const EnumBudget& budget) {
  StrongReport out;
  const GradedGammaRing& ring = m.graded_ring();
  for (std::size_t g = 0; g < m.degrees(); ++g) {
    for (std::size_t h = 0; h < m.degrees(); ++h) {
      std::vector<Element> values;
      for (const Element& x : ring.component(g).elements()) {
        for (const Element& a : ring.ring().gamma().elements()) {
          for (const Element& mm : m.component(h).elements()) {
            budget.charge();
            values.push_back(m.module().act(x, a, mm));
          }
        }
      }
      AbelianGroup gen = subgroup_generated(m.module().carrier(), values);
      if (gen.elements() !=
          m.component(ring.type().mul(g, h)).elements()) {
        out.failing_pair = {g, h};
        return out;
      }
    }
  }
  out.strongly_graded = true;
  return out;
}

}  // namespace gammalib
