#include "gammalib/semigroup.hpp"

#include <algorithm>
#include <map>

#include "gammalib/errors.hpp"

namespace gammalib {

struct FiniteSemigroup::Impl {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> table;
  std::map<std::string, std::size_t> by_label;
  bool commutative = false;
  bool group = false;
  std::optional<std::size_t> identity;
  std::vector<std::size_t> inverses;
};

Verdict check_semigroup_table(
    const std::vector<std::string>& labels,
    const std::vector<std::vector<std::size_t>>& table,
    bool require_commutative) {
  std::size_t n = labels.size();
  if (n == 0) {
    return Verdict::fail("shape", "a semigroup needs at least one element");
  }
  if (table.size() != n) {
    return Verdict::fail("shape", "table has " + std::to_string(table.size()) +
                                      " rows, expected " + std::to_string(n));
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      return Verdict::fail("shape",
                           "row " + labels[a] + " has " +
                               std::to_string(table[a].size()) +
                               " entries, expected " + std::to_string(n));
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        return Verdict::fail("totality", "entry (" + labels[a] + "," +
                                             labels[b] + ") is out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          return Verdict::fail("associativity", "(" + labels[a] + "," +
                                                    labels[b] + "," +
                                                    labels[c] + ")");
        }
      }
    }
  }
  if (require_commutative) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] != table[b][a]) {
          return Verdict::fail("commutativity",
                               "(" + labels[a] + "," + labels[b] + ")");
        }
      }
    }
  }
  return Verdict::pass();
}

FiniteSemigroup::FiniteSemigroup(std::vector<std::string> labels,
                                 std::vector<std::vector<std::size_t>> table) {
  Verdict v = check_semigroup_table(labels, table);
  if (!v.passed()) {
    throw InvalidStructureError("not a semigroup: " + v.law + " fails at " +
                                v.witness);
  }
  auto impl = std::make_shared<Impl>();
  std::size_t n = labels.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!impl->by_label.emplace(labels[i], i).second) {
      throw InvalidStructureError("duplicate semigroup label " + labels[i]);
    }
  }
  impl->commutative = true;
  for (std::size_t a = 0; a < n && impl->commutative; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] != table[b][a]) {
        impl->commutative = false;
        break;
      }
    }
  }
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (table[e][a] != a || table[a][e] != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->identity = e;
      break;
    }
  }
  if (impl->identity) {
    impl->inverses.assign(n, n);
    impl->group = true;
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (table[a][b] == *impl->identity && table[b][a] == *impl->identity) {
          impl->inverses[a] = b;
          found = true;
          break;
        }
      }
      if (!found) {
        impl->group = false;
        impl->inverses.clear();
        break;
      }
    }
  }
  impl->labels = std::move(labels);
  impl->table = std::move(table);
  impl_ = std::move(impl);
}

std::size_t FiniteSemigroup::size() const { return impl_->labels.size(); }

const std::vector<std::string>& FiniteSemigroup::labels() const {
  return impl_->labels;
}

const std::string& FiniteSemigroup::label(std::size_t i) const {
  return impl_->labels.at(i);
}

std::size_t FiniteSemigroup::index_of(const std::string& label) const {
  auto it = impl_->by_label.find(label);
  if (it == impl_->by_label.end()) {
    throw UnresolvedReferenceError("unknown semigroup element " + label);
  }
  return it->second;
}

std::size_t FiniteSemigroup::mul(std::size_t a, std::size_t b) const {
  return impl_->table.at(a).at(b);
}

bool FiniteSemigroup::is_commutative() const { return impl_->commutative; }

std::optional<std::size_t> FiniteSemigroup::identity() const {
  return impl_->identity;
}

bool FiniteSemigroup::is_group() const { return impl_->group; }

std::size_t FiniteSemigroup::inverse(std::size_t a) const {
  if (!impl_->group) {
    throw UnsupportedStructureError("inverse() requires a group");
  }
  return impl_->inverses.at(a);
}

bool FiniteSemigroup::same_semigroup(const FiniteSemigroup& other) const {
  return impl_ == other.impl_ || (impl_->labels == other.impl_->labels &&
                                  impl_->table == other.impl_->table);
}

FiniteSemigroup cyclic_group_semigroup(std::size_t n) {
  if (n == 0) {
    throw InvalidStructureError("cyclic group order must be >= 1");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  }
  std::vector<std::vector<std::size_t>> table(
      n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteSemigroup(std::move(labels), std::move(table));
}

FiniteSemigroup trivial_semigroup() { return cyclic_group_semigroup(1); }

FiniteSemigroup truncated_addition_monoid(std::size_t cap) {
  std::size_t n = cap + 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> table(
      n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = std::min(a + b, cap);
  }
  return FiniteSemigroup(std::move(labels), std::move(table));
}

FiniteSemigroup subsemigroup(const FiniteSemigroup& g,
                             const std::vector<std::size_t>& members) {
  std::vector<std::size_t> ms = members;
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<std::size_t> pos(g.size(), g.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (ms[i] >= g.size()) {
      throw UnresolvedReferenceError("subsemigroup member index out of range");
    }
    pos[ms[i]] = i;
  }
  std::vector<std::vector<std::size_t>> table(
      ms.size(), std::vector<std::size_t>(ms.size(), 0));
  std::vector<std::string> labels;
  for (std::size_t a : ms) labels.push_back(g.label(a));
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = 0; j < ms.size(); ++j) {
      std::size_t p = g.mul(ms[i], ms[j]);
      if (pos[p] == g.size()) {
        throw InvalidStructureError("subset not closed under the product: " +
                                    g.label(ms[i]) + "*" + g.label(ms[j]) +
                                    " = " + g.label(p) + " is outside");
      }
      table[i][j] = pos[p];
    }
  }
  return FiniteSemigroup(std::move(labels), std::move(table));
}

QuotientSemigroup quotient_group_semigroup(
    const FiniteSemigroup& g, const std::vector<std::size_t>& subgroup) {
  if (!g.is_group() || !g.is_commutative()) {
    throw UnsupportedStructureError(
        "quotients are only formed for commutative groups");
  }
  std::vector<bool> in_sub(g.size(), false);
  for (std::size_t s : subgroup) {
    if (s >= g.size()) {
      throw UnresolvedReferenceError("subgroup member index out of range");
    }
    in_sub[s] = true;
  }
  if (!in_sub[*g.identity()]) {
    throw InvalidStructureError("subgroup does not contain the identity");
  }
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (!in_sub[a]) continue;
    if (!in_sub[g.inverse(a)]) {
      throw InvalidStructureError("subgroup not closed under inverses at " +
                                  g.label(a));
    }
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (in_sub[b] && !in_sub[g.mul(a, b)]) {
        throw InvalidStructureError(
            "subset not closed under the product: " + g.label(a) + "*" +
            g.label(b) + " is outside");
      }
    }
  }
  std::vector<std::size_t> coset_of(g.size(), g.size());
  std::vector<std::size_t> reps;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (coset_of[a] != g.size()) continue;
    std::size_t id = reps.size();
    reps.push_back(a);
    for (std::size_t s = 0; s < g.size(); ++s) {
      if (in_sub[s]) coset_of[g.mul(a, s)] = id;
    }
  }
  std::size_t n = reps.size();
  std::vector<std::string> labels;
  for (std::size_t r : reps) labels.push_back(g.label(r));
  std::vector<std::vector<std::size_t>> table(n,
                                              std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = coset_of[g.mul(reps[i], reps[j])];
    }
  }
  return QuotientSemigroup{FiniteSemigroup(std::move(labels), std::move(table)),
                           std::move(coset_of)};
}

struct SemigroupMap::Impl {
  FiniteSemigroup domain;
  FiniteSemigroup codomain;
  std::vector<std::size_t> images;
  bool surjective = false;
};

Verdict check_semigroup_map(const FiniteSemigroup& domain,
                            const FiniteSemigroup& codomain,
                            const std::vector<std::size_t>& images) {
  if (images.size() != domain.size()) {
    return Verdict::fail("shape", "expected " + std::to_string(domain.size()) +
                                      " images, got " +
                                      std::to_string(images.size()));
  }
  for (std::size_t a = 0; a < domain.size(); ++a) {
    if (images[a] >= codomain.size()) {
      return Verdict::fail("totality",
                           "image of " + domain.label(a) + " is out of range");
    }
  }
  for (std::size_t a = 0; a < domain.size(); ++a) {
    for (std::size_t b = 0; b < domain.size(); ++b) {
      if (images[domain.mul(a, b)] != codomain.mul(images[a], images[b])) {
        return Verdict::fail("multiplicativity",
                             "(" + domain.label(a) + "," + domain.label(b) +
                                 ")");
      }
    }
  }
  return Verdict::pass();
}

SemigroupMap::SemigroupMap(FiniteSemigroup domain, FiniteSemigroup codomain,
                           std::vector<std::size_t> images) {
  Verdict v = check_semigroup_map(domain, codomain, images);
  if (!v.passed()) {
    throw InvalidStructureError("not a semigroup map: " + v.law +
                                " fails at " + v.witness);
  }
  auto impl = std::make_shared<Impl>(Impl{std::move(domain),
                                          std::move(codomain),
                                          std::move(images), false});
  std::vector<bool> hit(impl->codomain.size(), false);
  for (std::size_t img : impl->images) hit[img] = true;
  impl->surjective =
      std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  impl_ = std::move(impl);
}

const FiniteSemigroup& SemigroupMap::domain() const { return impl_->domain; }
const FiniteSemigroup& SemigroupMap::codomain() const {
  return impl_->codomain;
}

std::size_t SemigroupMap::apply(std::size_t a) const {
  return impl_->images.at(a);
}

bool SemigroupMap::is_surjective() const { return impl_->surjective; }

std::vector<std::size_t> SemigroupMap::fiber(std::size_t h) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < impl_->images.size(); ++a) {
    if (impl_->images[a] == h) out.push_back(a);
  }
  return out;
}

SemigroupMap identity_map(const FiniteSemigroup& g) {
  std::vector<std::size_t> images(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) images[i] = i;
  return SemigroupMap(g, g, std::move(images));
}

SemigroupMap compose(const SemigroupMap& second, const SemigroupMap& first) {
  if (!first.codomain().same_semigroup(second.domain())) {
    throw IncompatibilityError(
        "compose: codomain of the first map differs from the domain of the "
        "second");
  }
  std::vector<std::size_t> images(first.domain().size());
  for (std::size_t a = 0; a < images.size(); ++a) {
    images[a] = second.apply(first.apply(a));
  }
  return SemigroupMap(first.domain(), second.codomain(), std::move(images));
}

}  // namespace gammalib
