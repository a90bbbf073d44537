#include "gammalib/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <utility>

#include <nlohmann/json.hpp>

#include "gammalib/filtration.hpp"
#include "gammalib/gamma_module.hpp"
#include "gammalib/grading.hpp"
#include "gammalib/hom.hpp"

namespace gammalib {

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::pass:
      return "pass";
    case Verdict::Status::fail:
      return "fail";
    case Verdict::Status::error:
      return "error";
    case Verdict::Status::skipped:
      return "skipped";
  }
  return "error";
}

void Report::add(CheckRecord rec) {
  auto pos = std::lower_bound(
      checks.begin(), checks.end(), rec,
      [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  checks.insert(pos, std::move(rec));
}

std::size_t Report::count(Verdict::Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) {
        return r.verdict.status == s;
      }));
}

int Report::exit_code() const {
  return count(Verdict::Status::fail) + count(Verdict::Status::error) > 0 ? 1
                                                                          : 0;
}

std::string Report::to_json(bool timing) const {
  nlohmann::ordered_json doc;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& rec : checks) {
    nlohmann::ordered_json r;
    r["id"] = rec.id;
    r["target"] = rec.target;
    r["verdict"] = to_string(rec.verdict.status);
    r["witness"] = rec.verdict.witness;
    if (rec.verdict.status == Verdict::Status::fail) {
      r["law"] = rec.verdict.law;
    }
    if (!rec.verdict.detail.empty()) r["detail"] = rec.verdict.detail;
    if (timing) r["ms"] = rec.ms;
    doc["checks"].push_back(std::move(r));
  }
  nlohmann::ordered_json summary;
  summary["pass"] = count(Verdict::Status::pass);
  summary["fail"] = count(Verdict::Status::fail);
  summary["error"] = count(Verdict::Status::error);
  summary["skipped"] = count(Verdict::Status::skipped);
  summary["total"] = checks.size();
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string Report::to_text(bool timing) const {
  std::string out;
  for (const CheckRecord& rec : checks) {
    switch (rec.verdict.status) {
      case Verdict::Status::pass:
        out += "[PASS] " + rec.id;
        break;
      case Verdict::Status::fail:
        out += "[FAIL] " + rec.id + "  " + rec.verdict.law + " at " +
               rec.verdict.witness;
        break;
      case Verdict::Status::error:
        out += "[ERROR] " + rec.id + "  " + rec.verdict.detail;
        break;
      case Verdict::Status::skipped:
        out += "[SKIP] " + rec.id + "  " + rec.verdict.detail;
        break;
    }
    if (rec.verdict.status == Verdict::Status::pass &&
        !rec.verdict.detail.empty()) {
      out += "  " + rec.verdict.detail;
    }
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), " (%.3f ms)", rec.ms);
      out += buf;
    }
    out += "\n";
  }
  out += "summary: pass=" + std::to_string(count(Verdict::Status::pass)) +
         " fail=" + std::to_string(count(Verdict::Status::fail)) +
         " error=" + std::to_string(count(Verdict::Status::error)) +
         " skipped=" + std::to_string(count(Verdict::Status::skipped)) +
         " total=" + std::to_string(checks.size()) + "\n";
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write '" + path + "'");
}

Unity pick_unity(const GammaRing& r) {
  std::vector<Unity> unities = find_unities(r);
  if (unities.empty()) throw PreconditionError("the ring has no unity");
  return unities.front();
}

std::vector<std::size_t> label_indices(const FiniteSemigroup& type,
                                       const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const std::string& l : labels) out.push_back(type.index_of(l));
  return out;
}

std::vector<Element> parse_inline_elements(const std::string& text,
                                           const std::string& flag) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(flag + ": " + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError(flag + " must be a JSON list of element tuples");
  }
  std::vector<Element> out;
  for (const auto& item : doc) {
    if (!item.is_array()) {
      throw ParseError(flag + " must be a JSON list of element tuples");
    }
    Element e;
    for (const auto& c : item) {
      if (!c.is_number_integer()) {
        throw ParseError(flag + " entries must be integers");
      }
      e.push_back(c.get<Int>());
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string degree_set(const FiniteSemigroup& type,
                       const std::vector<std::size_t>& degrees) {
  std::string out = "{";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) out += ", ";
    out += type.label(degrees[i]);
  }
  return out + "}";
}

Verdict pass_with(std::string detail) {
  return Verdict{Verdict::Status::pass, "", "", std::move(detail)};
}

}  // namespace

Report run_command(const StructureSet& set, const Command& cmd) {
  Report report;
  using Runner = std::function<Verdict(const std::string&, const EnumBudget&)>;

  auto run = [&](const std::vector<std::string>& targets, const Runner& fn) {
    for (const std::string& name : targets) {
      auto t0 = std::chrono::steady_clock::now();
      Verdict v;
      try {
        EnumBudget budget(cmd.max_enum);
        v = fn(name, budget);
      } catch (const BudgetExceededError& e) {
        v = Verdict::skipped(std::string("budget: ") + e.what());
      } catch (const Error& e) {
        v = Verdict::error(e.what());
      }
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      report.add(CheckRecord{cmd.op + ":" + name, name, std::move(v), ms});
    }
  };

  using Pred = std::function<bool(const std::string&)>;
  auto targets_or = [&](const Pred& pred) {
    if (!cmd.targets.empty()) return cmd.targets;
    std::vector<std::string> out;
    for (const std::string& n : set.names()) {
      if (pred(n)) out.push_back(n);
    }
    return out;
  };
  // Operations that can write a structure file refuse ambiguous output.
  auto single_out = [&](std::vector<std::string> targets) {
    if (!cmd.out.empty() && targets.size() != 1) {
      throw ParseError("--out requires exactly one target");
    }
    return targets;
  };
  auto is_ring_p = [&](const std::string& n) { return set.is_ring(n); };
  auto is_graded_p = [&](const std::string& n) {
    return set.is_graded_ring(n);
  };
  auto kind_p = [&](const char* kind) {
    return Pred([&set, kind](const std::string& n) {
      return set.kind_of(n) == kind;
    });
  };
  auto emit_graded = [&](const GradedGammaRing& g, const std::string& name) {
    if (!cmd.out.empty()) write_file(cmd.out, emit_graded_ring(g, name));
  };
  // Graded source and target of a hom declared by reference.
  auto graded_endpoints = [&](const std::string& name) {
    auto endpoints = set.hom_endpoints(name);
    if (endpoints.first.empty() || endpoints.second.empty()) {
      throw UnsupportedStructureError(
          "'" + name +
          "' must reference named graded modules for graded hom checks");
    }
    return std::make_pair(set.graded_module(endpoints.first),
                          set.graded_module(endpoints.second));
  };

  const std::string& op = cmd.op;
  if (op == "check-axioms") {
    run(targets_or(is_ring_p), [&](const std::string& n, const EnumBudget& b) {
      return check_axioms(set.ring(n), b);
    });
  } else if (op == "check-grading") {
    run(targets_or(is_graded_p),
        [&](const std::string& n, const EnumBudget& b) {
          return check_internal_grading(set.grading_candidate(n), b);
        });
  } else if (op == "check-strong") {
    run(targets_or(is_graded_p),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing g = set.graded_ring(n);
          StrongReport rep = strongly_graded_check(g, b);
          if (rep.strongly_graded) return Verdict::pass();
          if (!rep.failing_pair) {
            throw InternalAssertionError(
                "a strongness failure arrived without a failing pair");
          }
          return Verdict::fail("strong grading",
                               "(" + g.type().label(rep.failing_pair->first) +
                                   ", " +
                                   g.type().label(rep.failing_pair->second) +
                                   ")");
        });
  } else if (op == "check-crossed") {
    run(targets_or(is_graded_p),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing g = set.graded_ring(n);
          CrossedProductReport rep =
              crossed_product_check(g, pick_unity(g.ring()), b);
          if (rep.crossed) return Verdict::pass();
          for (std::size_t d = 0; d < g.degrees(); ++d) {
            if (std::find(rep.unit_support.begin(), rep.unit_support.end(),
                          d) == rep.unit_support.end()) {
              return Verdict::fail("crossed product",
                                   "degree=" + g.type().label(d));
            }
          }
          throw InternalAssertionError(
              "a crossed-product failure arrived with full unit support");
        });
  } else if (op == "check-filtration") {
    run(targets_or(kind_p("filtration")),
        [&](const std::string& n, const EnumBudget& b) {
          return check_filtration(set.filtration(n), b);
        });
  } else if (op == "check-module") {
    run(targets_or(kind_p("module")),
        [&](const std::string& n, const EnumBudget& b) {
          return check_module_axioms(set.module(n), b);
        });
  } else if (op == "check-graded-module") {
    run(targets_or(kind_p("graded_module")),
        [&](const std::string& n, const EnumBudget& b) {
          return check_module_grading(set.module_grading_candidate(n), b);
        });
  } else if (op == "check-filtered-module") {
    run(targets_or(kind_p("filtered_module")),
        [&](const std::string& n, const EnumBudget& b) {
          return check_filtered_module(set.filtered_module(n), b);
        });
  } else if (op == "regrade") {
    if (cmd.phi.empty()) throw ParseError("regrade requires --phi");
    run(single_out(targets_or(is_graded_p)),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing out =
              regrade_epimorphism(set.graded_ring(n), set.semigroup_map(cmd.phi), b);
          emit_graded(out, n + "_regraded");
          return Verdict::pass();
        });
  } else if (op == "restrict") {
    if (cmd.H.empty()) throw ParseError("restrict requires --H");
    run(single_out(targets_or(is_graded_p)),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing g = set.graded_ring(n);
          GradedGammaRing out =
              restrict_subsemigroup(g, label_indices(g.type(), cmd.H), b);
          emit_graded(out, n + "_restricted");
          return Verdict::pass();
        });
  } else if (op == "coarsen") {
    if (cmd.N.empty()) throw ParseError("coarsen requires --N");
    run(single_out(targets_or(is_graded_p)),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing g = set.graded_ring(n);
          GradedGammaRing out =
              coarsen_by_quotient(g, label_indices(g.type(), cmd.N), b);
          emit_graded(out, n + "_coarsened");
          return Verdict::pass();
        });
  } else if (op == "gr") {
    run(single_out(targets_or(kind_p("filtration"))),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaRing out = associated_graded(set.filtration(n), b);
          emit_graded(out, n + "_gr");
          return Verdict::pass();
        });
  } else if (op == "adic") {
    if (cmd.ideal_json.empty()) throw ParseError("adic requires --ideal");
    std::vector<Element> elems =
        parse_inline_elements(cmd.ideal_json, "--ideal");
    run(targets_or(is_ring_p), [&](const std::string& n, const EnumBudget& b) {
      GammaRing r = set.ring(n);
      AdicChain chain =
          adic_chain(r, make_ideal(r, elems, Sidedness::two_sided), b);
      return pass_with("chain stabilizes at level " +
                       std::to_string(chain.stabilization));
    });
  } else if (op == "gr-module") {
    run(targets_or(kind_p("filtered_module")),
        [&](const std::string& n, const EnumBudget& b) {
          GradedPair pair = gr_module(set.filtered_module(n), b);
          return pass_with(std::to_string(pair.module.degrees()) +
                           " graded components");
        });
  } else if (op == "quotient-module") {
    if (cmd.subgroup_json.empty()) {
      throw ParseError("quotient-module requires --K");
    }
    std::vector<Element> elems =
        parse_inline_elements(cmd.subgroup_json, "--K");
    run(targets_or(kind_p("graded_module")),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaModule m = set.graded_module(n);
          QuotientModuleReport rep = quotient_module(
              m, AbelianGroup::subgroup(m.module().carrier(), elems), b);
          return pass_with(
              "quotient has " +
              std::to_string(rep.quotient.carrier().size()) +
              " elements; component sum is " +
              (rep.direct ? "direct" : "not direct"));
        });
  } else if (op == "k-prime") {
    if (cmd.subgroup_json.empty()) throw ParseError("K-prime requires --K");
    std::vector<Element> elems =
        parse_inline_elements(cmd.subgroup_json, "--K");
    run(targets_or(kind_p("graded_module")),
        [&](const std::string& n, const EnumBudget& b) {
          GradedGammaModule m = set.graded_module(n);
          GradedSubmodulePart rep = maximal_graded_submodule(
              m, AbelianGroup::subgroup(m.module().carrier(), elems), b);
          return pass_with("maximal graded submodule has " +
                           std::to_string(rep.submodule.size()) + " elements");
        });
  } else if (op == "hom-check") {
    run(targets_or(kind_p("hom")),
        [&](const std::string& n, const EnumBudget& b) {
          return check_hom(set.hom(n), b);
        });
  } else if (op == "hom-degree") {
    if (cmd.h.empty()) throw ParseError("hom degree requires --h");
    run(targets_or(kind_p("hom")),
        [&](const std::string& n, const EnumBudget& b) {
          auto [m, k] = graded_endpoints(n);
          std::size_t h = m.type().index_of(cmd.h);
          if (hom_has_degree(m, k, set.hom(n), h, b)) return Verdict::pass();
          return Verdict::fail("degree containment", "h=" + cmd.h);
        });
  } else if (op == "hom-decompose") {
    run(targets_or(kind_p("hom")),
        [&](const std::string& n, const EnumBudget& b) {
          auto [m, k] = graded_endpoints(n);
          HomDecomposition d = decompose_hom(m, k, set.hom(n), b);
          return pass_with("support=" + degree_set(m.type(), d.support));
        });
  } else if (op == "hom-enumerate") {
    if (cmd.targets.empty() || cmd.targets.size() > 2) {
      throw ParseError("hom enumerate takes one or two module names");
    }
    const std::string src = cmd.targets.front();
    const std::string dst = cmd.targets.back();
    run({src + "->" + dst}, [&](const std::string&, const EnumBudget& b) {
      auto homs = enumerate_homs(set.module(src), set.module(dst), b);
      return pass_with(std::to_string(homs.size()) + " homomorphisms");
    });
  } else if (op == "end-ring") {
    run(single_out(targets_or(kind_p("graded_module"))),
        [&](const std::string& n, const EnumBudget& b) {
          EndomorphismReport rep =
              endomorphism_graded_ring(set.graded_module(n), b);
          emit_graded(rep.ring, n + "_end");
          return pass_with(std::to_string(rep.homs.size()) +
                           " endomorphisms");
        });
  } else if (op == "emit") {
    if (cmd.targets.size() != 1) throw ParseError("emit takes exactly one target");
    if (cmd.out.empty()) throw ParseError("emit requires --out");
    run(cmd.targets, [&](const std::string& n, const EnumBudget&) {
      std::string text = set.is_graded_ring(n)
                             ? emit_graded_ring(set.graded_ring(n), n)
                             : emit_ring(set.ring(n), n);
      write_file(cmd.out, text);
      return pass_with("wrote " + cmd.out);
    });
  } else {
    throw ParseError("unknown operation '" + op + "'");
  }
  return report;
}

}  // namespace gammalib
