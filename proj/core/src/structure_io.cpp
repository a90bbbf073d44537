#include "gammalib/structure_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace gammalib {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void parse_fail(const std::string& msg) { throw ParseError(msg); }

const json& expect_field(const json& obj, const std::string& key,
                         const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + " is missing field '" + key + "'");
  return *it;
}

Int expect_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) parse_fail(where + " must be an integer");
  return v.get<Int>();
}

std::size_t expect_size(const json& v, const std::string& where) {
  Int n = expect_int(v, where);
  if (n < 0) parse_fail(where + " must be non-negative");
  return static_cast<std::size_t>(n);
}

Element parse_element(const json& v, const std::string& where) {
  if (!v.is_array()) parse_fail(where + " must be an element tuple");
  Element e;
  e.reserve(v.size());
  for (const auto& c : v) e.push_back(expect_int(c, where));
  return e;
}

std::vector<Element> parse_element_list(const json& v,
                                        const std::string& where) {
  if (!v.is_array()) parse_fail(where + " must be a list of element tuples");
  std::vector<Element> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(parse_element(item, where));
  return out;
}

// Concatenated lookup key for sparse product/action tables.
std::vector<Int> table_key(std::size_t g, std::size_t h,
                           std::initializer_list<const Element*> parts) {
  std::vector<Int> key{static_cast<Int>(g), static_cast<Int>(h)};
  for (const Element* p : parts) key.insert(key.end(), p->begin(), p->end());
  return key;
}

}  // namespace

// One resolved declaration.  Each kind fills the fields that make sense for
// it; ring-producing kinds always fill `ring` with the flat ring.
struct StructureSet::Impl {
  struct Entry {
    std::string kind;
    std::optional<AbelianGroup> group;
    std::optional<FiniteSemigroup> semigroup;
    std::optional<SemigroupMap> map;
    std::optional<GammaRing> ring;
    std::optional<GradedGammaRing> graded;
    std::optional<InternalGrading> grading_candidate;
    std::optional<Filtration> filtration;
    std::optional<GammaModule> module;
    std::optional<GradedGammaModule> graded_module;
    std::optional<InternalModuleGrading> module_grading_candidate;
    std::optional<FilteredModule> filtered_module;
    std::optional<ModuleHom> hom;
    std::string hom_source, hom_target;  // reference names, when given
  };

  bool lazy = false;
  EnumBudget budget;
  std::map<std::string, json> decls;
  std::map<std::string, Entry> cache;
  std::vector<std::string> stack;  // names being resolved, for cycles

  Entry& resolve(const std::string& name) {
    auto hit = cache.find(name);
    if (hit != cache.end()) return hit->second;
    auto decl = decls.find(name);
    if (decl == decls.end()) {
      throw UnresolvedReferenceError("no structure named '" + name + "'");
    }
    if (std::find(stack.begin(), stack.end(), name) != stack.end()) {
      parse_fail("cyclic definition involving '" + name + "'");
    }
    stack.push_back(name);
    Entry e = build(decl->second, "'" + name + "'");
    stack.pop_back();
    return cache.emplace(name, std::move(e)).first->second;
  }

  // A field that names or inlines a structure.
  Entry resolve_or_inline(const json& v, const std::string& where) {
    if (v.is_string()) return resolve(v.get<std::string>());
    return build(v, where);
  }

  AbelianGroup need_group(const json& v, const std::string& where) {
    Entry e = resolve_or_inline(v, where);
    if (!e.group) parse_fail(where + " must be a group");
    return *e.group;
  }

  FiniteSemigroup need_semigroup(const json& v, const std::string& where) {
    Entry e = resolve_or_inline(v, where);
    if (!e.semigroup) parse_fail(where + " must be a semigroup");
    return *e.semigroup;
  }

  GammaRing need_ring(const json& v, const std::string& where) {
    Entry e = resolve_or_inline(v, where);
    if (!e.ring) parse_fail(where + " must be a ring");
    return *e.ring;
  }

  GradedGammaRing need_graded_ring(const json& v, const std::string& where) {
    if (v.is_string()) return materialize_graded(resolve(v.get<std::string>()), where);
    Entry e = build(v, where);
    return materialize_graded(e, where);
  }

  GammaModule need_module(const json& v, const std::string& where) {
    Entry e = resolve_or_inline(v, where);
    if (!e.module) parse_fail(where + " must be a module");
    return *e.module;
  }

  Filtration need_filtration(const json& v, const std::string& where) {
    Entry e = resolve_or_inline(v, where);
    if (!e.filtration) parse_fail(where + " must be a filtration");
    return *e.filtration;
  }

  // Verified graded ring from an entry; grades a lazy candidate on demand
  // and memoizes the result when the entry lives in the cache.
  GradedGammaRing materialize_graded(Entry& e, const std::string& where) {
    if (e.graded) return *e.graded;
    if (e.grading_candidate) {
      e.graded = grade(*e.grading_candidate, budget);
      return *e.graded;
    }
    parse_fail(where + " must be a graded ring");
  }

  GradedGammaModule materialize_graded_module(Entry& e,
                                              const std::string& where) {
    if (e.graded_module) return *e.graded_module;
    if (e.module_grading_candidate) {
      e.graded_module = grade_module(*e.module_grading_candidate, budget);
      return *e.graded_module;
    }
    parse_fail(where + " must be a graded module");
  }

  static std::string classify(const json& decl, const std::string& where) {
    if (!decl.is_object()) parse_fail(where + " must be an object");
    auto kind = decl.find("kind");
    if (kind != decl.end()) {
      if (!kind->is_string()) parse_fail(where + ": 'kind' must be a string");
      return kind->get<std::string>();
    }
    if (decl.contains("moduli")) return "group";
    if (decl.contains("labels") && decl.contains("table")) return "semigroup";
    parse_fail(where + " has no recognizable kind");
  }

  Entry build(const json& decl, const std::string& where) {
    const std::string kind = classify(decl, where);
    if (kind == "group") return build_group(decl, where);
    if (kind == "semigroup") return build_semigroup(decl, where);
    if (kind == "semigroup_map") return build_semigroup_map(decl, where);
    if (kind == "table") return build_table_ring(decl, where);
    if (kind == "matrix") return build_matrix(decl, where);
    if (kind == "semigroup_ring") return build_semigroup_ring(decl, where);
    if (kind == "product") return build_product(decl, where);
    if (kind == "opposite") return build_opposite(decl, where);
    if (kind == "polynomial") return build_polynomial(decl, where);
    if (kind == "quotient") return build_quotient(decl, where);
    if (kind == "graded") return build_graded(decl, where);
    if (kind == "internal_grading") return build_internal_grading(decl, where);
    if (kind == "filtration") return build_filtration(decl, where);
    if (kind == "module") return build_module(decl, where);
    if (kind == "graded_module") return build_graded_module(decl, where);
    if (kind == "filtered_module") return build_filtered_module(decl, where);
    if (kind == "hom") return build_hom(decl, where);
    parse_fail(where + " has unknown kind '" + kind + "'");
  }

  Entry build_group(const json& decl, const std::string& where) {
    const json& m = expect_field(decl, "moduli", where);
    if (!m.is_array()) parse_fail(where + ": 'moduli' must be an array");
    std::vector<Int> moduli;
    for (const auto& v : m) moduli.push_back(expect_int(v, where + ": moduli"));
    Entry e;
    e.kind = "group";
    e.group = AbelianGroup::cyclic_product(std::move(moduli));
    return e;
  }

  Entry build_semigroup(const json& decl, const std::string& where) {
    const json& lj = expect_field(decl, "labels", where);
    if (!lj.is_array()) parse_fail(where + ": 'labels' must be an array");
    std::vector<std::string> labels;
    for (const auto& v : lj) {
      if (!v.is_string()) parse_fail(where + ": labels must be strings");
      labels.push_back(v.get<std::string>());
    }
    auto label_index = [&](const json& v) -> std::size_t {
      if (v.is_string()) {
        auto it = std::find(labels.begin(), labels.end(), v.get<std::string>());
        if (it == labels.end()) {
          parse_fail(where + ": unknown label '" + v.get<std::string>() + "'");
        }
        return static_cast<std::size_t>(it - labels.begin());
      }
      return expect_size(v, where + ": table entry");
    };
    const json& tj = expect_field(decl, "table", where);
    if (!tj.is_array()) parse_fail(where + ": 'table' must be an array");
    std::vector<std::vector<std::size_t>> table;
    for (const auto& row : tj) {
      if (!row.is_array()) parse_fail(where + ": table rows must be arrays");
      std::vector<std::size_t> r;
      for (const auto& v : row) r.push_back(label_index(v));
      table.push_back(std::move(r));
    }
    Entry e;
    e.kind = "semigroup";
    e.semigroup = FiniteSemigroup(std::move(labels), std::move(table));
    return e;
  }

  Entry build_semigroup_map(const json& decl, const std::string& where) {
    FiniteSemigroup dom =
        need_semigroup(expect_field(decl, "domain", where), where + ": domain");
    FiniteSemigroup cod = need_semigroup(expect_field(decl, "codomain", where),
                                         where + ": codomain");
    const json& ij = expect_field(decl, "images", where);
    if (!ij.is_array()) parse_fail(where + ": 'images' must be an array");
    std::vector<std::size_t> images;
    for (const auto& v : ij) {
      if (v.is_string()) {
        images.push_back(cod.index_of(v.get<std::string>()));
      } else {
        images.push_back(expect_size(v, where + ": images"));
      }
    }
    Entry e;
    e.kind = "semigroup_map";
    e.map = SemigroupMap(std::move(dom), std::move(cod), std::move(images));
    return e;
  }

  Entry build_table_ring(const json& decl, const std::string& where) {
    AbelianGroup carrier =
        need_group(expect_field(decl, "carrier", where), where + ": carrier");
    AbelianGroup gamma =
        need_group(expect_field(decl, "gamma", where), where + ": gamma");
    std::vector<std::array<Element, 4>> entries;
    if (decl.contains("products")) {
      const json& pj = decl.at("products");
      if (!pj.is_array()) parse_fail(where + ": 'products' must be an array");
      for (const auto& row : pj) {
        if (!row.is_array() || row.size() != 4) {
          parse_fail(where + ": products entries must be [r, gamma, s, value]");
        }
        entries.push_back({parse_element(row[0], where + ": products"),
                           parse_element(row[1], where + ": products"),
                           parse_element(row[2], where + ": products"),
                           parse_element(row[3], where + ": products")});
      }
    }
    Entry e;
    e.kind = "table";
    e.ring = GammaRing::from_table(std::move(carrier), std::move(gamma), entries);
    return e;
  }

  Entry build_matrix(const json& decl, const std::string& where) {
    Int k = expect_int(expect_field(decl, "k", where), where + ": k");
    std::size_t m = expect_size(expect_field(decl, "m", where), where + ": m");
    std::size_t n = expect_size(expect_field(decl, "n", where), where + ": n");
    if (k < 1 || m < 1 || n < 1) {
      parse_fail(where + ": matrix parameters must be at least 1");
    }
    Entry e;
    e.kind = "matrix";
    e.ring = matrix_gamma_ring(k, m, n);
    return e;
  }

  Entry build_semigroup_ring(const json& decl, const std::string& where) {
    GammaRing base =
        need_ring(expect_field(decl, "base", where), where + ": base");
    FiniteSemigroup g =
        need_semigroup(expect_field(decl, "G", where), where + ": G");
    Entry e;
    e.kind = "semigroup_ring";
    e.graded = semigroup_gamma_ring(base, g);
    e.ring = e.graded->ring();
    return e;
  }

  Entry build_product(const json& decl, const std::string& where) {
    const json& fj = expect_field(decl, "factors", where);
    if (!fj.is_array() || fj.empty()) {
      parse_fail(where + ": 'factors' must be a non-empty array");
    }
    std::vector<Entry> factors;
    for (const auto& f : fj) {
      factors.push_back(resolve_or_inline(f, where + ": factor"));
    }
    bool all_graded = true;
    for (const auto& f : factors) {
      if (!f.ring) parse_fail(where + ": every factor must be a ring");
      if (!f.graded && !f.grading_candidate) all_graded = false;
    }
    Entry e;
    e.kind = "product";
    if (all_graded) {
      std::vector<GradedGammaRing> parts;
      for (auto& f : factors) {
        parts.push_back(materialize_graded(f, where + ": factor"));
      }
      e.graded = product_graded(parts, budget);
      e.ring = e.graded->ring();
    } else {
      std::vector<GammaRing> parts;
      for (const auto& f : factors) parts.push_back(*f.ring);
      e.ring = direct_product(parts);
    }
    return e;
  }

  Entry build_opposite(const json& decl, const std::string& where) {
    Entry of = resolve_or_inline(expect_field(decl, "of", where), where + ": of");
    if (!of.ring) parse_fail(where + ": 'of' must be a ring");
    Entry e;
    e.kind = "opposite";
    if (of.graded || of.grading_candidate) {
      e.graded = opposite_graded(materialize_graded(of, where + ": of"), budget);
      e.ring = e.graded->ring();
    } else {
      e.ring = opposite(*of.ring);
    }
    return e;
  }

  Entry build_polynomial(const json& decl, const std::string& where) {
    GammaRing base =
        need_ring(expect_field(decl, "base", where), where + ": base");
    std::size_t cap = expect_size(expect_field(decl, "D", where), where + ": D");
    Entry e;
    e.kind = "polynomial";
    e.graded = polynomial_gamma_ring(base, cap);
    e.ring = e.graded->ring();
    return e;
  }

  Entry build_quotient(const json& decl, const std::string& where) {
    GammaRing of = need_ring(expect_field(decl, "of", where), where + ": of");
    std::vector<Element> ideal_elems = parse_element_list(
        expect_field(decl, "ideal", where), where + ": ideal");
    Ideal ideal = make_ideal(of, ideal_elems, Sidedness::two_sided);
    Entry e;
    e.kind = "quotient";
    e.ring = quotient_by_ideal(of, ideal, budget);
    return e;
  }

  // Degree labels may be given as strings or as indices into the type.
  static std::size_t degree_index(const FiniteSemigroup& type, const json& v,
                                  const std::string& where) {
    if (v.is_string()) return type.index_of(v.get<std::string>());
    std::size_t i = expect_size(v, where);
    if (i >= type.size()) parse_fail(where + ": degree index out of range");
    return i;
  }

  Entry build_graded(const json& decl, const std::string& where) {
    FiniteSemigroup type =
        need_semigroup(expect_field(decl, "G", where), where + ": G");
    AbelianGroup gamma =
        need_group(expect_field(decl, "gamma", where), where + ": gamma");
    const json& cj = expect_field(decl, "components", where);
    if (!cj.is_object()) parse_fail(where + ": 'components' must be an object");
    for (const auto& item : cj.items()) {
      type.index_of(item.key());  // rejects keys that are not degrees
    }
    std::vector<AbelianGroup> components;
    for (std::size_t i = 0; i < type.size(); ++i) {
      const std::string& label = type.label(i);
      auto it = cj.find(label);
      if (it == cj.end()) {
        parse_fail(where + " is missing the component for degree '" + label +
                   "'");
      }
      components.push_back(need_group(*it, where + ": component " + label));
    }

    std::map<std::vector<Int>, Element> table;
    if (decl.contains("products")) {
      const json& pj = decl.at("products");
      if (!pj.is_array()) parse_fail(where + ": 'products' must be an array");
      for (const auto& row : pj) {
        if (!row.is_array() || row.size() != 6) {
          parse_fail(where +
                     ": products entries must be [g, h, x, gamma, y, value]");
        }
        std::size_t g = degree_index(type, row[0], where + ": products");
        std::size_t h = degree_index(type, row[1], where + ": products");
        Element x = parse_element(row[2], where + ": products");
        Element a = parse_element(row[3], where + ": products");
        Element y = parse_element(row[4], where + ": products");
        Element value = parse_element(row[5], where + ": products");
        if (!components[g].contains(x) || !gamma.contains(a) ||
            !components[h].contains(y) ||
            !components[type.mul(g, h)].contains(value)) {
          throw MalformedElementError(
              where + ": products entry (" + format_element(x) + ", " +
              format_element(a) + ", " + format_element(y) +
              ") uses elements outside the declared components");
        }
        auto key = table_key(g, h, {&x, &a, &y});
        if (!table.emplace(std::move(key), std::move(value)).second) {
          parse_fail(where + ": duplicate products entry");
        }
      }
    }
    std::vector<Element> zeros;
    for (const auto& c : components) zeros.push_back(c.zero());
    std::vector<std::vector<std::size_t>> mul(type.size());
    for (std::size_t i = 0; i < type.size(); ++i) {
      for (std::size_t j = 0; j < type.size(); ++j) {
        mul[i].push_back(type.mul(i, j));
      }
    }
    auto rule = [table = std::move(table), zeros = std::move(zeros),
                 mul = std::move(mul)](std::size_t g, std::size_t h,
                                       const Element& x, const Element& a,
                                       const Element& y) -> Element {
      auto it = table.find(table_key(g, h, {&x, &a, &y}));
      if (it != table.end()) return it->second;
      return zeros[mul[g][h]];
    };
    Entry e;
    e.kind = "graded";
    e.graded = GradedGammaRing::from_components(std::move(type),
                                                std::move(gamma),
                                                std::move(components), rule);
    e.ring = e.graded->ring();
    return e;
  }

  Entry build_internal_grading(const json& decl, const std::string& where) {
    GammaRing ring =
        need_ring(expect_field(decl, "ring", where), where + ": ring");
    FiniteSemigroup type =
        need_semigroup(expect_field(decl, "G", where), where + ": G");
    const json& aj = expect_field(decl, "assignment", where);
    if (!aj.is_object()) parse_fail(where + ": 'assignment' must be an object");
    for (const auto& item : aj.items()) type.index_of(item.key());
    std::vector<AbelianGroup> assignment;
    for (std::size_t i = 0; i < type.size(); ++i) {
      const std::string& label = type.label(i);
      auto it = aj.find(label);
      if (it == aj.end()) {
        parse_fail(where + " is missing the assignment for degree '" + label +
                   "'");
      }
      assignment.push_back(AbelianGroup::subgroup(
          ring.carrier(),
          parse_element_list(*it, where + ": assignment " + label)));
    }
    Entry e;
    e.kind = "internal_grading";
    e.ring = ring;
    e.grading_candidate =
        InternalGrading{std::move(ring), std::move(type), std::move(assignment)};
    return e;
  }

  Entry build_filtration(const json& decl, const std::string& where) {
    GammaRing ring =
        need_ring(expect_field(decl, "ring", where), where + ": ring");
    const json& cj = expect_field(decl, "chain", where);
    if (!cj.is_array() || cj.empty()) {
      parse_fail(where + ": 'chain' must be a non-empty array of levels");
    }
    std::vector<AbelianGroup> chain;
    for (const auto& level : cj) {
      chain.push_back(AbelianGroup::subgroup(
          ring.carrier(), parse_element_list(level, where + ": chain level")));
    }
    Entry e;
    e.kind = "filtration";
    e.filtration = Filtration{std::move(ring), std::move(chain)};
    return e;
  }

  Entry build_module(const json& decl, const std::string& where) {
    GammaRing ring =
        need_ring(expect_field(decl, "ring", where), where + ": ring");
    AbelianGroup carrier =
        need_group(expect_field(decl, "carrier", where), where + ": carrier");
    std::map<std::vector<Int>, Element> table;
    if (decl.contains("action")) {
      const json& aj = decl.at("action");
      if (!aj.is_array()) parse_fail(where + ": 'action' must be an array");
      for (const auto& row : aj) {
        if (!row.is_array() || row.size() != 4) {
          parse_fail(where + ": action entries must be [r, gamma, m, value]");
        }
        Element r = parse_element(row[0], where + ": action");
        Element a = parse_element(row[1], where + ": action");
        Element m = parse_element(row[2], where + ": action");
        Element value = parse_element(row[3], where + ": action");
        if (!ring.carrier().contains(r) || !ring.gamma().contains(a) ||
            !carrier.contains(m) || !carrier.contains(value)) {
          throw MalformedElementError(
              where + ": action entry (" + format_element(r) + ", " +
              format_element(a) + ", " + format_element(m) +
              ") uses elements outside the declared structures");
        }
        auto key = table_key(0, 0, {&r, &a, &m});
        if (!table.emplace(std::move(key), std::move(value)).second) {
          parse_fail(where + ": duplicate action entry");
        }
      }
    }
    Element zero = carrier.zero();
    auto action = [table = std::move(table), zero](
                      const Element& r, const Element& a,
                      const Element& m) -> Element {
      auto it = table.find(table_key(0, 0, {&r, &a, &m}));
      if (it != table.end()) return it->second;
      return zero;
    };
    Entry e;
    e.kind = "module";
    e.module = GammaModule(std::move(ring), std::move(carrier), action);
    return e;
  }

  Entry build_graded_module(const json& decl, const std::string& where) {
    GradedGammaRing ring = need_graded_ring(expect_field(decl, "ring", where),
                                            where + ": ring");
    const FiniteSemigroup& type = ring.type();
    if (decl.contains("assignment")) {
      GammaModule mod =
          need_module(expect_field(decl, "module", where), where + ": module");
      const json& aj = decl.at("assignment");
      if (!aj.is_object()) {
        parse_fail(where + ": 'assignment' must be an object");
      }
      for (const auto& item : aj.items()) type.index_of(item.key());
      std::vector<AbelianGroup> assignment;
      for (std::size_t i = 0; i < type.size(); ++i) {
        const std::string& label = type.label(i);
        auto it = aj.find(label);
        if (it == aj.end()) {
          parse_fail(where + " is missing the assignment for degree '" +
                     label + "'");
        }
        assignment.push_back(AbelianGroup::subgroup(
            mod.carrier(),
            parse_element_list(*it, where + ": assignment " + label)));
      }
      Entry e;
      e.kind = "graded_module";
      e.module = mod;
      e.module_grading_candidate = InternalModuleGrading{
          std::move(ring), std::move(mod), std::move(assignment)};
      return e;
    }

    const json& cj = expect_field(decl, "components", where);
    if (!cj.is_object()) parse_fail(where + ": 'components' must be an object");
    for (const auto& item : cj.items()) type.index_of(item.key());
    std::vector<AbelianGroup> components;
    for (std::size_t i = 0; i < type.size(); ++i) {
      const std::string& label = type.label(i);
      auto it = cj.find(label);
      if (it == cj.end()) {
        parse_fail(where + " is missing the component for degree '" + label +
                   "'");
      }
      components.push_back(need_group(*it, where + ": component " + label));
    }
    std::map<std::vector<Int>, Element> table;
    if (decl.contains("actions")) {
      const json& aj = decl.at("actions");
      if (!aj.is_array()) parse_fail(where + ": 'actions' must be an array");
      for (const auto& row : aj) {
        if (!row.is_array() || row.size() != 6) {
          parse_fail(where +
                     ": actions entries must be [g, h, r, gamma, m, value]");
        }
        std::size_t g = degree_index(type, row[0], where + ": actions");
        std::size_t h = degree_index(type, row[1], where + ": actions");
        Element r = parse_element(row[2], where + ": actions");
        Element a = parse_element(row[3], where + ": actions");
        Element m = parse_element(row[4], where + ": actions");
        Element value = parse_element(row[5], where + ": actions");
        if (!ring.ring().carrier().contains(r) ||
            !ring.ring().gamma().contains(a) || !components[h].contains(m) ||
            !components[type.mul(g, h)].contains(value)) {
          throw MalformedElementError(
              where + ": actions entry (" + format_element(r) + ", " +
              format_element(a) + ", " + format_element(m) +
              ") uses elements outside the declared structures");
        }
        auto key = table_key(g, h, {&r, &a, &m});
        if (!table.emplace(std::move(key), std::move(value)).second) {
          parse_fail(where + ": duplicate actions entry");
        }
      }
    }
    std::vector<Element> zeros;
    for (const auto& c : components) zeros.push_back(c.zero());
    std::vector<std::vector<std::size_t>> mul(type.size());
    for (std::size_t i = 0; i < type.size(); ++i) {
      for (std::size_t j = 0; j < type.size(); ++j) {
        mul[i].push_back(type.mul(i, j));
      }
    }
    auto rule = [table = std::move(table), zeros = std::move(zeros),
                 mul = std::move(mul)](std::size_t g, std::size_t h,
                                       const Element& r, const Element& a,
                                       const Element& m) -> Element {
      auto it = table.find(table_key(g, h, {&r, &a, &m}));
      if (it != table.end()) return it->second;
      return zeros[mul[g][h]];
    };
    Entry e;
    e.kind = "graded_module";
    e.graded_module = GradedGammaModule::from_components(
        std::move(ring), std::move(components), rule);
    e.module = e.graded_module->module();
    return e;
  }

  Entry build_filtered_module(const json& decl, const std::string& where) {
    Filtration filtration = need_filtration(
        expect_field(decl, "filtration", where), where + ": filtration");
    GammaModule mod =
        need_module(expect_field(decl, "module", where), where + ": module");
    const json& cj = expect_field(decl, "chain", where);
    if (!cj.is_array() || cj.empty()) {
      parse_fail(where + ": 'chain' must be a non-empty array of levels");
    }
    std::vector<AbelianGroup> chain;
    for (const auto& level : cj) {
      chain.push_back(AbelianGroup::subgroup(
          mod.carrier(), parse_element_list(level, where + ": chain level")));
    }
    Entry e;
    e.kind = "filtered_module";
    e.filtered_module =
        FilteredModule{std::move(filtration), std::move(mod), std::move(chain)};
    return e;
  }

  Entry build_hom(const json& decl, const std::string& where) {
    const json& sj = expect_field(decl, "source", where);
    const json& tj = expect_field(decl, "target", where);
    GammaModule source = need_module(sj, where + ": source");
    GammaModule target = need_module(tj, where + ": target");
    std::vector<Element> values = parse_element_list(
        expect_field(decl, "values", where), where + ": values");
    if (values.size() != source.carrier().size()) {
      parse_fail(where + ": 'values' has " + std::to_string(values.size()) +
                 " entries, the source has " +
                 std::to_string(source.carrier().size()) + " elements");
    }
    for (const Element& v : values) {
      if (!target.carrier().contains(v)) {
        throw MalformedElementError(where + ": hom value " +
                                    format_element(v) +
                                    " is outside the target module");
      }
    }
    Entry e;
    e.kind = "hom";
    e.hom = ModuleHom{std::move(source), std::move(target), std::move(values)};
    if (sj.is_string()) e.hom_source = sj.get<std::string>();
    if (tj.is_string()) e.hom_target = tj.get<std::string>();
    return e;
  }

  // Eager-mode validator: every declaration must pass its law checks.
  void validate(const std::string& name, Entry& e) {
    auto require_pass = [&](const Verdict& v) {
      if (v.status == Verdict::Status::fail) {
        throw InvalidStructureError("'" + name + "' fails " + v.law + " at " +
                                    v.witness);
      }
      if (v.status == Verdict::Status::error) {
        throw InvalidStructureError("'" + name + "': " + v.detail);
      }
    };
    if (e.ring) require_pass(check_axioms(*e.ring, budget));
    if (e.grading_candidate && !e.graded) {
      e.graded = grade(*e.grading_candidate, budget);
    }
    if (e.filtration) require_pass(check_filtration(*e.filtration, budget));
    if (e.module) require_pass(check_module_axioms(*e.module, budget));
    if (e.module_grading_candidate && !e.graded_module) {
      e.graded_module = grade_module(*e.module_grading_candidate, budget);
    }
    if (e.filtered_module) {
      require_pass(check_filtered_module(*e.filtered_module, budget));
    }
    if (e.hom) require_pass(check_hom(*e.hom, budget));
  }
};

StructureSet StructureSet::load_text(const std::string& text, bool lazy,
                                     const EnumBudget& budget) {
  StructureSet s;
  s.impl_ = std::make_shared<Impl>();
  s.impl_->lazy = lazy;
  s.impl_->budget = budget;
  // An empty or whitespace-only file is the empty structure set.
  if (std::all_of(text.begin(), text.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    return s;
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("structure file: ") + err.what());
  }
  if (!doc.is_object()) {
    throw ParseError("structure file: top level must be an object of named "
                     "declarations");
  }
  for (const auto& item : doc.items()) {
    s.impl_->decls.emplace(item.key(), item.value());
  }
  for (const auto& d : s.impl_->decls) s.impl_->resolve(d.first);
  if (!lazy) {
    for (auto& c : s.impl_->cache) s.impl_->validate(c.first, c.second);
  }
  return s;
}

StructureSet StructureSet::load_file(const std::string& path, bool lazy,
                                     const EnumBudget& budget) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), lazy, budget);
}

std::vector<std::string> StructureSet::names() const {
  std::vector<std::string> out;
  if (!impl_) return out;
  for (const auto& d : impl_->decls) out.push_back(d.first);
  return out;
}

bool StructureSet::has(const std::string& name) const {
  return impl_ && impl_->decls.count(name) > 0;
}

const std::string& StructureSet::kind_of(const std::string& name) const {
  return impl_->resolve(name).kind;
}

AbelianGroup StructureSet::group(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.group) {
    throw UnsupportedStructureError("'" + name + "' is not a group");
  }
  return *e.group;
}

FiniteSemigroup StructureSet::semigroup(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.semigroup) {
    throw UnsupportedStructureError("'" + name + "' is not a semigroup");
  }
  return *e.semigroup;
}

SemigroupMap StructureSet::semigroup_map(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.map) {
    throw UnsupportedStructureError("'" + name + "' is not a semigroup map");
  }
  return *e.map;
}

bool StructureSet::is_ring(const std::string& name) const {
  return impl_->resolve(name).ring.has_value();
}

GammaRing StructureSet::ring(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.ring) {
    throw UnsupportedStructureError("'" + name + "' is not a ring");
  }
  return *e.ring;
}

bool StructureSet::is_graded_ring(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  return e.graded.has_value() || e.grading_candidate.has_value();
}

GradedGammaRing StructureSet::graded_ring(const std::string& name) const {
  auto& e = impl_->resolve(name);
  if (!e.graded && !e.grading_candidate) {
    throw UnsupportedStructureError("'" + name + "' is not a graded ring");
  }
  return impl_->materialize_graded(e, "'" + name + "'");
}

InternalGrading StructureSet::grading_candidate(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (e.grading_candidate) return *e.grading_candidate;
  if (e.graded) return as_internal(*e.graded);
  throw UnsupportedStructureError("'" + name + "' is not a graded ring");
}

Filtration StructureSet::filtration(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.filtration) {
    throw UnsupportedStructureError("'" + name + "' is not a filtration");
  }
  return *e.filtration;
}

GammaModule StructureSet::module(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.module) {
    throw UnsupportedStructureError("'" + name + "' is not a module");
  }
  return *e.module;
}

bool StructureSet::is_graded_module(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  return e.graded_module.has_value() || e.module_grading_candidate.has_value();
}

GradedGammaModule StructureSet::graded_module(const std::string& name) const {
  auto& e = impl_->resolve(name);
  if (!e.graded_module && !e.module_grading_candidate) {
    throw UnsupportedStructureError("'" + name + "' is not a graded module");
  }
  return impl_->materialize_graded_module(e, "'" + name + "'");
}

InternalModuleGrading StructureSet::module_grading_candidate(
    const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (e.module_grading_candidate) return *e.module_grading_candidate;
  if (e.graded_module) return as_internal(*e.graded_module);
  throw UnsupportedStructureError("'" + name + "' is not a graded module");
}

FilteredModule StructureSet::filtered_module(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.filtered_module) {
    throw UnsupportedStructureError("'" + name + "' is not a filtered module");
  }
  return *e.filtered_module;
}

ModuleHom StructureSet::hom(const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.hom) {
    throw UnsupportedStructureError("'" + name + "' is not a homomorphism");
  }
  return *e.hom;
}

std::pair<std::string, std::string> StructureSet::hom_endpoints(
    const std::string& name) const {
  const auto& e = impl_->resolve(name);
  if (!e.hom) {
    throw UnsupportedStructureError("'" + name + "' is not a homomorphism");
  }
  return {e.hom_source, e.hom_target};
}

namespace {

// Canonical cyclic coordinates for serialization: moduli are the cyclic
// basis orders and each element maps to its coefficient tuple.
struct Relabel {
  std::vector<Int> moduli;
  std::vector<Element> tuples;  // indexed like g.elements()
};

Relabel relabel(const AbelianGroup& g) {
  Relabel r;
  // Plain cyclic products and full coordinate blocks of a direct sum keep
  // their native coordinates.  Loaded structures are built exactly from
  // those two backings, so emission is idempotent across a round trip.
  if (g.kind() == AbelianGroup::Kind::cyclic_product) {
    r.moduli = g.moduli();
    r.tuples = g.elements();
    return r;
  }
  if (g.kind() == AbelianGroup::Kind::subgroup &&
      g.parent().kind() == AbelianGroup::Kind::direct_sum) {
    const AbelianGroup& parent = g.parent();
    for (std::size_t b = 0; b < parent.factors().size(); ++b) {
      const AbelianGroup& factor = parent.factors()[b];
      if (factor.kind() != AbelianGroup::Kind::cyclic_product) continue;
      if (factor.size() != g.size()) continue;
      bool block = true;
      for (const Element& x : g.elements()) {
        if (parent.embed(b, parent.project(b, x)) != x) {
          block = false;
          break;
        }
      }
      if (!block) continue;
      r.moduli = factor.moduli();
      for (const Element& x : g.elements()) {
        r.tuples.push_back(parent.project(b, x));
      }
      return r;
    }
  }
  CyclicBasis cb = cyclic_basis(g);
  r.moduli = cb.orders;
  r.tuples.reserve(cb.coefficients.size());
  for (const auto& c : cb.coefficients) r.tuples.push_back(c);
  return r;
}

ordered_json group_json(const Relabel& r) {
  ordered_json g;
  g["moduli"] = r.moduli;
  return g;
}

}  // namespace

std::string emit_ring(const GammaRing& r, const std::string& name) {
  Relabel carrier = relabel(r.carrier());
  Relabel gamma = relabel(r.gamma());
  const Element zero = r.carrier().zero();

  std::vector<std::array<Element, 4>> rows;
  for (std::size_t i = 0; i < r.carrier().size(); ++i) {
    for (std::size_t j = 0; j < r.gamma().size(); ++j) {
      for (std::size_t k = 0; k < r.carrier().size(); ++k) {
        Element p = r.product(r.carrier().element(i), r.gamma().element(j),
                              r.carrier().element(k));
        if (p == zero) continue;
        rows.push_back({carrier.tuples[i], gamma.tuples[j], carrier.tuples[k],
                        carrier.tuples[r.carrier().index_of(p)]});
      }
    }
  }
  std::sort(rows.begin(), rows.end());

  ordered_json decl;
  decl["kind"] = "table";
  decl["carrier"] = group_json(carrier);
  decl["gamma"] = group_json(gamma);
  decl["products"] = ordered_json::array();
  for (const auto& row : rows) {
    decl["products"].push_back({row[0], row[1], row[2], row[3]});
  }
  ordered_json file;
  file[name] = std::move(decl);
  return file.dump(2) + "\n";
}

std::string emit_graded_ring(const GradedGammaRing& g, const std::string& name) {
  const FiniteSemigroup& type = g.type();
  const GammaRing& flat = g.ring();
  Relabel gamma = relabel(flat.gamma());
  std::vector<Relabel> comps;
  comps.reserve(type.size());
  for (std::size_t i = 0; i < type.size(); ++i) {
    comps.push_back(relabel(g.component(i)));
  }
  const Element zero = flat.carrier().zero();

  // Sortable row: (g, h, x', gamma', y', value') in relabelled coordinates.
  using Row = std::tuple<std::size_t, std::size_t, Element, Element, Element,
                         Element>;
  std::vector<Row> rows;
  for (std::size_t gi = 0; gi < type.size(); ++gi) {
    for (std::size_t hi = 0; hi < type.size(); ++hi) {
      std::size_t ti = type.mul(gi, hi);
      const AbelianGroup& cg = g.component(gi);
      const AbelianGroup& ch = g.component(hi);
      const AbelianGroup& ct = g.component(ti);
      for (std::size_t xi = 0; xi < cg.size(); ++xi) {
        for (std::size_t ai = 0; ai < flat.gamma().size(); ++ai) {
          for (std::size_t yi = 0; yi < ch.size(); ++yi) {
            Element p = flat.product(cg.element(xi), flat.gamma().element(ai),
                                     ch.element(yi));
            if (p == zero) continue;
            rows.emplace_back(gi, hi, comps[gi].tuples[xi],
                              gamma.tuples[ai], comps[hi].tuples[yi],
                              comps[ti].tuples[ct.index_of(p)]);
          }
        }
      }
    }
  }
  std::sort(rows.begin(), rows.end());

  ordered_json type_json;
  type_json["labels"] = type.labels();
  std::vector<std::vector<std::size_t>> table(type.size());
  for (std::size_t i = 0; i < type.size(); ++i) {
    for (std::size_t j = 0; j < type.size(); ++j) {
      table[i].push_back(type.mul(i, j));
    }
  }
  type_json["table"] = table;

  ordered_json decl;
  decl["kind"] = "graded";
  decl["G"] = std::move(type_json);
  decl["gamma"] = group_json(gamma);
  decl["components"] = ordered_json::object();
  for (std::size_t i = 0; i < type.size(); ++i) {
    decl["components"][type.label(i)] = group_json(comps[i]);
  }
  decl["products"] = ordered_json::array();
  for (const auto& row : rows) {
    decl["products"].push_back({type.label(std::get<0>(row)),
                                type.label(std::get<1>(row)),
                                std::get<2>(row), std::get<3>(row),
                                std::get<4>(row), std::get<5>(row)});
  }
  ordered_json file;
  file[name] = std::move(decl);
  return file.dump(2) + "\n";
}

}  // namespace gammalib
