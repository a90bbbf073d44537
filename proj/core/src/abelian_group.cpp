#include "gammalib/abelian_group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gammalib/errors.hpp"
#include "gammalib/verdict.hpp"

namespace gammalib {

std::string format_element(const Element& e) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ',';
    out << e[i];
  }
  out << ')';
  return out.str();
}

std::string format_element_set(const std::vector<Element>& es) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out << ", ";
    out << format_element(es[i]);
  }
  out << '}';
  return out.str();
}

struct AbelianGroup::Impl {
  Kind kind;
  std::size_t arity = 0;
  std::vector<Element> elements;  // ascending lexicographic

  // cyclic_product
  std::vector<Int> moduli;

  // subgroup / quotient
  std::shared_ptr<const AbelianGroup> parent;

  // quotient
  std::shared_ptr<const AbelianGroup> kernel;
  std::vector<std::uint32_t> rep_index;  // parent element index -> rep index

  // direct_sum
  std::vector<AbelianGroup> factors;
  std::vector<std::size_t> offsets;
};

AbelianGroup::AbelianGroup(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

namespace {

void check_carrier_cap(std::uint64_t n, const char* what) {
  if (n > kMaxCarrierSize) {
    throw BudgetExceededError(std::string(what) + " would have " +
                              std::to_string(n) +
                              " elements, exceeding the carrier cap of " +
                              std::to_string(kMaxCarrierSize));
  }
}

bool sorted_contains(const std::vector<Element>& sorted, const Element& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

std::size_t sorted_index(const std::vector<Element>& sorted,
                         const Element& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || *it != e) {
    throw MalformedElementError("element " + format_element(e) +
                                " does not belong to the group");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

AbelianGroup AbelianGroup::cyclic_product(std::vector<Int> moduli) {
  std::uint64_t n = 1;
  for (Int m : moduli) {
    if (m < 1) {
      throw InvalidStructureError("modulus " + std::to_string(m) +
                                  " is not >= 1");
    }
    n *= static_cast<std::uint64_t>(m);
    check_carrier_cap(n, "cyclic product group");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::cyclic_product;
  impl->arity = moduli.size();
  impl->moduli = std::move(moduli);
  impl->elements.reserve(n);
  Element cur(impl->arity, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    impl->elements.push_back(cur);
    for (std::size_t pos = impl->arity; pos-- > 0;) {
      if (++cur[pos] < impl->moduli[pos]) break;
      cur[pos] = 0;
    }
  }
  return AbelianGroup(std::move(impl));
}

AbelianGroup AbelianGroup::subgroup(AbelianGroup parent,
                                    std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  if (elements.empty()) {
    throw InvalidStructureError("a subgroup needs at least the zero element");
  }
  for (const Element& e : elements) {
    if (!parent.contains(e)) {
      throw InvalidStructureError("subgroup element " + format_element(e) +
                                  " is not in the parent group");
    }
  }
  if (!sorted_contains(elements, parent.zero())) {
    throw InvalidStructureError("subgroup does not contain zero " +
                                format_element(parent.zero()));
  }
  for (const Element& a : elements) {
    for (const Element& b : elements) {
      Element s = parent.add(a, b);
      if (!sorted_contains(elements, s)) {
        throw InvalidStructureError(
            "subgroup not closed under addition: " + format_element(a) +
            " + " + format_element(b) + " = " + format_element(s) +
            " is outside");
      }
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::subgroup;
  impl->arity = parent.arity();
  impl->parent = std::make_shared<const AbelianGroup>(std::move(parent));
  impl->elements = std::move(elements);
  return AbelianGroup(std::move(impl));
}

AbelianGroup AbelianGroup::quotient(AbelianGroup parent, AbelianGroup kernel) {
  if (!kernel.subset_of(parent)) {
    throw InvalidStructureError(
        "quotient kernel is not a subgroup of the parent group");
  }
  const auto& parent_elems = parent.elements();
  std::vector<std::uint32_t> rep_index(parent_elems.size(), UINT32_MAX);
  std::vector<Element> reps;
  for (std::size_t i = 0; i < parent_elems.size(); ++i) {
    if (rep_index[i] != UINT32_MAX) continue;
    // Ascending scan: the first unassigned element is the least of its coset.
    auto rep = static_cast<std::uint32_t>(reps.size());
    reps.push_back(parent_elems[i]);
    for (const Element& k : kernel.elements()) {
      rep_index[parent.index_of(parent.add(parent_elems[i], k))] = rep;
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::quotient;
  impl->arity = parent.arity();
  impl->parent = std::make_shared<const AbelianGroup>(std::move(parent));
  impl->kernel = std::make_shared<const AbelianGroup>(std::move(kernel));
  impl->rep_index = std::move(rep_index);
  impl->elements = std::move(reps);
  return AbelianGroup(std::move(impl));
}

AbelianGroup AbelianGroup::direct_sum(std::vector<AbelianGroup> factors) {
  std::uint64_t n = 1;
  std::size_t arity = 0;
  std::vector<std::size_t> offsets;
  for (const AbelianGroup& f : factors) {
    offsets.push_back(arity);
    arity += f.arity();
    n *= f.size();
    check_carrier_cap(n, "direct sum");
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::direct_sum;
  impl->arity = arity;
  impl->offsets = std::move(offsets);
  impl->elements.reserve(n);
  // Odometer over factor indices, leftmost factor most significant; with
  // factor element lists sorted, concatenations come out in lex order.
  std::vector<std::size_t> idx(factors.size(), 0);
  for (std::uint64_t count = 0; count < n; ++count) {
    Element e;
    e.reserve(arity);
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const Element& part = factors[f].element(idx[f]);
      e.insert(e.end(), part.begin(), part.end());
    }
    impl->elements.push_back(std::move(e));
    for (std::size_t f = factors.size(); f-- > 0;) {
      if (++idx[f] < factors[f].size()) break;
      idx[f] = 0;
    }
  }
  impl->factors = std::move(factors);
  return AbelianGroup(std::move(impl));
}

AbelianGroup::Kind AbelianGroup::kind() const { return impl_->kind; }
std::size_t AbelianGroup::size() const { return impl_->elements.size(); }
std::size_t AbelianGroup::arity() const { return impl_->arity; }

const std::vector<Element>& AbelianGroup::elements() const {
  return impl_->elements;
}

const Element& AbelianGroup::element(std::size_t i) const {
  return impl_->elements.at(i);
}

Element AbelianGroup::zero() const {
  switch (impl_->kind) {
    case Kind::cyclic_product:
      return Element(impl_->arity, 0);
    case Kind::subgroup:
      return impl_->parent->zero();
    case Kind::quotient:
      return reduce(impl_->parent->zero());
    case Kind::direct_sum: {
      Element z;
      z.reserve(impl_->arity);
      for (const AbelianGroup& f : impl_->factors) {
        Element fz = f.zero();
        z.insert(z.end(), fz.begin(), fz.end());
      }
      return z;
    }
  }
  throw InternalAssertionError("unreachable group kind");
}

bool AbelianGroup::contains(const Element& a) const {
  if (a.size() != impl_->arity) return false;
  switch (impl_->kind) {
    case Kind::cyclic_product:
      for (std::size_t i = 0; i < impl_->arity; ++i) {
        if (a[i] < 0 || a[i] >= impl_->moduli[i]) return false;
      }
      return true;
    case Kind::subgroup:
    case Kind::quotient:
      return sorted_contains(impl_->elements, a);
    case Kind::direct_sum:
      for (std::size_t f = 0; f < impl_->factors.size(); ++f) {
        if (!impl_->factors[f].contains(project(f, a))) return false;
      }
      return true;
  }
  return false;
}

std::size_t AbelianGroup::index_of(const Element& a) const {
  if (impl_->kind == Kind::cyclic_product) {
    if (!contains(a)) {
      throw MalformedElementError("element " + format_element(a) +
                                  " does not belong to the group");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < impl_->arity; ++i) {
      idx = idx * static_cast<std::size_t>(impl_->moduli[i]) +
            static_cast<std::size_t>(a[i]);
    }
    return idx;
  }
  return sorted_index(impl_->elements, a);
}

Element AbelianGroup::add(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case Kind::cyclic_product: {
      if (!contains(a) || !contains(b)) {
        throw MalformedElementError(
            "operand outside the group: " + format_element(a) + " + " +
            format_element(b));
      }
      Element r(impl_->arity);
      for (std::size_t i = 0; i < impl_->arity; ++i) {
        r[i] = (a[i] + b[i]) % impl_->moduli[i];
      }
      return r;
    }
    case Kind::subgroup:
      if (!contains(a) || !contains(b)) {
        throw MalformedElementError(
            "operand outside the subgroup: " + format_element(a) + " + " +
            format_element(b));
      }
      return impl_->parent->add(a, b);
    case Kind::quotient:
      if (!contains(a) || !contains(b)) {
        throw MalformedElementError(
            "operand is not a coset representative: " + format_element(a) +
            " + " + format_element(b));
      }
      return reduce(impl_->parent->add(a, b));
    case Kind::direct_sum: {
      Element r;
      r.reserve(impl_->arity);
      for (std::size_t f = 0; f < impl_->factors.size(); ++f) {
        Element part = impl_->factors[f].add(project(f, a), project(f, b));
        r.insert(r.end(), part.begin(), part.end());
      }
      return r;
    }
  }
  throw InternalAssertionError("unreachable group kind");
}

Element AbelianGroup::neg(const Element& a) const {
  switch (impl_->kind) {
    case Kind::cyclic_product: {
      if (!contains(a)) {
        throw MalformedElementError("operand outside the group: " +
                                    format_element(a));
      }
      Element r(impl_->arity);
      for (std::size_t i = 0; i < impl_->arity; ++i) {
        r[i] = (impl_->moduli[i] - a[i]) % impl_->moduli[i];
      }
      return r;
    }
    case Kind::subgroup:
      if (!contains(a)) {
        throw MalformedElementError("operand outside the subgroup: " +
                                    format_element(a));
      }
      return impl_->parent->neg(a);
    case Kind::quotient:
      if (!contains(a)) {
        throw MalformedElementError("operand is not a coset representative: " +
                                    format_element(a));
      }
      return reduce(impl_->parent->neg(a));
    case Kind::direct_sum: {
      Element r;
      r.reserve(impl_->arity);
      for (std::size_t f = 0; f < impl_->factors.size(); ++f) {
        Element part = impl_->factors[f].neg(project(f, a));
        r.insert(r.end(), part.begin(), part.end());
      }
      return r;
    }
  }
  throw InternalAssertionError("unreachable group kind");
}

Element AbelianGroup::sub(const Element& a, const Element& b) const {
  return add(a, neg(b));
}

Element AbelianGroup::scale(Int k, const Element& a) const {
  Element base = k < 0 ? neg(a) : a;
  std::uint64_t n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  Element acc = zero();
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

Int AbelianGroup::order_of(const Element& a) const {
  Element cur = a;
  Element z = zero();
  Int k = 1;
  while (cur != z) {
    cur = add(cur, a);
    ++k;
    if (static_cast<std::size_t>(k) > size()) {
      throw InternalAssertionError("element order exceeds group order");
    }
  }
  return k;
}

bool AbelianGroup::same_group(const AbelianGroup& other) const {
  if (impl_ == other.impl_) return true;
  if (arity() != other.arity() || size() != other.size()) return false;
  if (impl_->kind == Kind::cyclic_product &&
      other.impl_->kind == Kind::cyclic_product) {
    return impl_->moduli == other.impl_->moduli;
  }
  if (elements() != other.elements()) return false;
  for (const Element& a : elements()) {
    for (const Element& b : elements()) {
      if (add(a, b) != other.add(a, b)) return false;
    }
  }
  return true;
}

bool AbelianGroup::subset_of(const AbelianGroup& parent) const {
  if (arity() != parent.arity()) return false;
  for (const Element& a : elements()) {
    if (!parent.contains(a)) return false;
  }
  for (const Element& a : elements()) {
    for (const Element& b : elements()) {
      if (add(a, b) != parent.add(a, b)) return false;
    }
  }
  return true;
}

const std::vector<Int>& AbelianGroup::moduli() const {
  if (impl_->kind != Kind::cyclic_product) {
    throw UnsupportedStructureError(
        "moduli() requires a cyclic product group");
  }
  return impl_->moduli;
}

const AbelianGroup& AbelianGroup::parent() const {
  if (impl_->kind != Kind::subgroup && impl_->kind != Kind::quotient) {
    throw UnsupportedStructureError(
        "parent() requires a subgroup or quotient group");
  }
  return *impl_->parent;
}

const AbelianGroup& AbelianGroup::kernel() const {
  if (impl_->kind != Kind::quotient) {
    throw UnsupportedStructureError("kernel() requires a quotient group");
  }
  return *impl_->kernel;
}

Element AbelianGroup::reduce(const Element& parent_elem) const {
  if (impl_->kind != Kind::quotient) {
    throw UnsupportedStructureError("reduce() requires a quotient group");
  }
  std::size_t pi = impl_->parent->index_of(parent_elem);
  return impl_->elements[impl_->rep_index[pi]];
}

const std::vector<AbelianGroup>& AbelianGroup::factors() const {
  if (impl_->kind != Kind::direct_sum) {
    throw UnsupportedStructureError("factors() requires a direct sum");
  }
  return impl_->factors;
}

std::size_t AbelianGroup::block_offset(std::size_t factor) const {
  if (impl_->kind != Kind::direct_sum) {
    throw UnsupportedStructureError("block_offset() requires a direct sum");
  }
  return impl_->offsets.at(factor);
}

Element AbelianGroup::project(std::size_t factor, const Element& a) const {
  if (impl_->kind != Kind::direct_sum) {
    throw UnsupportedStructureError("project() requires a direct sum");
  }
  if (a.size() != impl_->arity) {
    throw MalformedElementError("element " + format_element(a) +
                                " has the wrong arity for this direct sum");
  }
  std::size_t off = impl_->offsets.at(factor);
  std::size_t w = impl_->factors[factor].arity();
  return Element(a.begin() + static_cast<std::ptrdiff_t>(off),
                 a.begin() + static_cast<std::ptrdiff_t>(off + w));
}

Element AbelianGroup::embed(std::size_t factor, const Element& part) const {
  if (impl_->kind != Kind::direct_sum) {
    throw UnsupportedStructureError("embed() requires a direct sum");
  }
  if (!impl_->factors.at(factor).contains(part)) {
    throw MalformedElementError("element " + format_element(part) +
                                " is not in factor " + std::to_string(factor));
  }
  Element e = zero();
  std::size_t off = impl_->offsets[factor];
  for (std::size_t i = 0; i < part.size(); ++i) e[off + i] = part[i];
  return e;
}

AbelianGroup subgroup_generated(const AbelianGroup& parent,
                                const std::vector<Element>& generators) {
  std::set<Element> closure;
  closure.insert(parent.zero());
  std::vector<Element> frontier(closure.begin(), closure.end());
  for (const Element& g : generators) {
    if (!parent.contains(g)) {
      throw MalformedElementError("generator " + format_element(g) +
                                  " is not in the parent group");
    }
    if (closure.insert(g).second) frontier.push_back(g);
  }
  while (!frontier.empty()) {
    Element x = std::move(frontier.back());
    frontier.pop_back();
    for (const Element& g : generators) {
      Element s = parent.add(x, g);
      if (closure.insert(s).second) frontier.push_back(s);
    }
  }
  return AbelianGroup::subgroup(
      parent, std::vector<Element>(closure.begin(), closure.end()));
}

AbelianGroup trivial_subgroup(const AbelianGroup& parent) {
  return AbelianGroup::subgroup(parent, {parent.zero()});
}

AbelianGroup subgroup_sum(const AbelianGroup& parent,
                          const std::vector<AbelianGroup>& parts) {
  std::vector<Element> gens;
  for (const AbelianGroup& p : parts) {
    gens.insert(gens.end(), p.elements().begin(), p.elements().end());
  }
  return subgroup_generated(parent, gens);
}

AbelianGroup quotient_group(const AbelianGroup& parent,
                            const AbelianGroup& kernel) {
  return AbelianGroup::quotient(parent, kernel);
}

AbelianGroup subgroup_intersection(const AbelianGroup& parent,
                                   const std::vector<AbelianGroup>& parts) {
  std::vector<Element> common = parent.elements();
  for (const AbelianGroup& p : parts) {
    std::vector<Element> next;
    for (const Element& e : common) {
      if (p.contains(e)) next.push_back(e);
    }
    common = std::move(next);
  }
  return AbelianGroup::subgroup(parent, std::move(common));
}

CyclicBasis cyclic_basis(const AbelianGroup& g) {
  CyclicBasis out;
  out.parent_elements = g.elements();

  std::set<Element> split;  // subgroup generated by the basis so far
  split.insert(g.zero());

  auto coset_order = [&](const Element& a) {
    Element cur = a;
    Int k = 1;
    while (!split.count(cur)) {
      cur = g.add(cur, a);
      ++k;
    }
    return k;
  };

  while (split.size() < g.size()) {
    Int best_ord = 0;
    Element best;
    for (const Element& a : g.elements()) {
      Int k = coset_order(a);
      if (k > best_ord) {
        best_ord = k;
        best = a;
      }
    }
    // A maximal-order coset always has a representative whose order in g
    // equals the coset order; pick the least such.
    Element lift;
    bool found = false;
    std::vector<Element> coset;
    for (const Element& h : split) coset.push_back(g.add(best, h));
    std::sort(coset.begin(), coset.end());
    for (const Element& cand : coset) {
      if (g.order_of(cand) == best_ord) {
        lift = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      throw InternalAssertionError(
          "no full-order representative in a maximal-order coset");
    }
    out.basis.push_back(lift);
    out.orders.push_back(best_ord);
    std::vector<Element> gens(split.begin(), split.end());
    gens.push_back(lift);
    AbelianGroup bigger = subgroup_generated(g, gens);
    split = std::set<Element>(bigger.elements().begin(),
                              bigger.elements().end());
  }

  // Solve x = sum c_i b_i for every x by walking all coefficient tuples.
  std::size_t k = out.basis.size();
  std::vector<std::vector<Element>> multiples(k);
  for (std::size_t i = 0; i < k; ++i) {
    multiples[i].reserve(static_cast<std::size_t>(out.orders[i]));
    Element cur = g.zero();
    for (Int c = 0; c < out.orders[i]; ++c) {
      multiples[i].push_back(cur);
      cur = g.add(cur, out.basis[i]);
    }
  }
  out.coefficients.assign(g.size(), {});
  std::vector<Int> coeff(k, 0);
  std::uint64_t total = 1;
  for (Int o : out.orders) total *= static_cast<std::uint64_t>(o);
  if (total != g.size()) {
    throw InternalAssertionError("cyclic basis does not span the group");
  }
  for (std::uint64_t step = 0; step < total; ++step) {
    Element x = g.zero();
    for (std::size_t i = 0; i < k; ++i) {
      x = g.add(x, multiples[i][static_cast<std::size_t>(coeff[i])]);
    }
    std::size_t xi = g.index_of(x);
    if (!out.coefficients[xi].empty()) {
      throw InternalAssertionError("cyclic basis is not independent");
    }
    out.coefficients[xi] = coeff;
    for (std::size_t i = k; i-- > 0;) {
      if (++coeff[i] < out.orders[i]) break;
      coeff[i] = 0;
    }
  }
  if (k == 0) {
    // Trivial group: the unique element has the empty coefficient tuple,
    // which assign() already produced.
    return out;
  }
  for (const auto& c : out.coefficients) {
    if (c.empty()) {
      throw InternalAssertionError("cyclic basis does not reach all elements");
    }
  }
  return out;
}

DirectSumScan scan_internal_direct_sum(
    const AbelianGroup& parent, const std::vector<AbelianGroup>& components,
    const EnumBudget& budget) {
  DirectSumScan out;
  std::uint64_t total = 1;
  for (const AbelianGroup& c : components) {
    total *= c.size();
    if (total > parent.size()) break;
  }
  if (total != parent.size()) {
    out.witness = "component sizes multiply to " + std::to_string(total) +
                  ", the parent has " + std::to_string(parent.size()) +
                  " elements";
    return out;
  }
  std::size_t n = components.size();
  out.parts.assign(parent.size(), {});
  std::vector<std::size_t> idx(n, 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    budget.charge();
    Element sum = parent.zero();
    std::vector<Element> parts(n);
    for (std::size_t g = 0; g < n; ++g) {
      parts[g] = components[g].element(idx[g]);
      sum = parent.add(sum, parts[g]);
    }
    std::size_t si = parent.index_of(sum);
    if (!out.parts[si].empty()) {
      out.witness = "element " + format_element(sum) +
                    " has two distinct summand decompositions";
      return out;
    }
    out.parts[si] = std::move(parts);
    for (std::size_t g = n; g-- > 0;) {
      if (++idx[g] < components[g].size()) break;
      idx[g] = 0;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace gammalib
