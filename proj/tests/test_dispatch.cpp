#include <doctest.h>

#include <nlohmann/json.hpp>

#include "gammalib/dispatch.hpp"
#include "gammalib/structure_io.hpp"
#include "support/corpus.hpp"

using namespace gammalib;

namespace {

StructureSet golden() {
  return StructureSet::load_file(corpus::data_file("golden.json"));
}

Command cmd(std::string op, std::vector<std::string> targets = {}) {
  Command c;
  c.op = std::move(op);
  c.targets = std::move(targets);
  return c;
}

const CheckRecord& only(const Report& r) {
  REQUIRE(r.checks.size() == 1);
  return r.checks.front();
}

}  // namespace

TEST_CASE("axioms run on every ring by default") {
  Report r = run_command(golden(), cmd("check-axioms"));
  CHECK(r.checks.size() >= 13);
  CHECK(r.count(Verdict::Status::pass) == r.checks.size());
  CHECK(r.exit_code() == 0);
  for (std::size_t i = 1; i < r.checks.size(); ++i) {
    CHECK(r.checks[i - 1].id < r.checks[i].id);
  }
}

TEST_CASE("explicit targets get one record each") {
  Report r = run_command(golden(), cmd("check-axioms", {"Z4G", "M12"}));
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].id == "check-axioms:M12");
  CHECK(r.checks[1].id == "check-axioms:Z4G");
  CHECK(r.checks[0].target == "M12");
}

TEST_CASE("an unknown target becomes an error record") {
  Report r = run_command(golden(), cmd("check-axioms", {"NOPE"}));
  CHECK(only(r).verdict.status == Verdict::Status::error);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("an unknown operation is a usage error") {
  CHECK_THROWS_AS(run_command(golden(), cmd("polish")), ParseError);
}

TEST_CASE("grading checks cover candidates") {
  Report r = run_command(golden(), cmd("check-grading"));
  CHECK(r.count(Verdict::Status::pass) == r.checks.size());
  CHECK(r.exit_code() == 0);
}

TEST_CASE("strongness failures carry the degree pair") {
  Report r = run_command(golden(), cmd("check-strong", {"T"}));
  const CheckRecord& rec = only(r);
  CHECK(rec.verdict.status == Verdict::Status::fail);
  CHECK(rec.verdict.law == "strong grading");
  CHECK(rec.verdict.witness == "(g, g)");
  CHECK(r.exit_code() == 1);

  Report ok = run_command(golden(), cmd("check-strong", {"RC2", "RC4"}));
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("crossed product failures name the missing degree") {
  Report r = run_command(golden(), cmd("check-crossed", {"T"}));
  const CheckRecord& rec = only(r);
  CHECK(rec.verdict.status == Verdict::Status::fail);
  CHECK(rec.verdict.law == "crossed product");
  CHECK(rec.verdict.witness == "degree=g");

  Report ok = run_command(golden(), cmd("check-crossed", {"RC2", "RC4"}));
  CHECK(ok.exit_code() == 0);
}

TEST_CASE("module and filtration checks dispatch by kind") {
  CHECK(run_command(golden(), cmd("check-filtration")).exit_code() == 0);
  CHECK(run_command(golden(), cmd("check-module")).exit_code() == 0);
  CHECK(run_command(golden(), cmd("check-graded-module")).exit_code() == 0);
  CHECK(run_command(golden(), cmd("check-filtered-module")).exit_code() == 0);
}

TEST_CASE("regrade validates and emits") {
  Command c = cmd("regrade", {"RC4"});
  c.phi = "PHI42";
  c.out = std::string(GAMMALIB_TEST_BUILD_DIR) + "/regraded.json";
  Report r = run_command(golden(), c);
  CHECK(only(r).verdict.status == Verdict::Status::pass);

  StructureSet back = StructureSet::load_file(c.out);
  CHECK(back.graded_ring("RC4_regraded").component(0).size() == 4);
}

TEST_CASE("restrict and coarsen") {
  Command res = cmd("restrict", {"RC4"});
  res.H = {"e", "g2"};
  CHECK(run_command(golden(), res).exit_code() == 0);

  Command coa = cmd("coarsen", {"RC4"});
  coa.N = {"e", "g2"};
  CHECK(run_command(golden(), coa).exit_code() == 0);

  Command bad = cmd("restrict", {"RC4"});
  bad.H = {"e", "g"};  // not closed under the product
  Report r = run_command(golden(), bad);
  CHECK(only(r).verdict.status == Verdict::Status::error);
}

TEST_CASE("gr emits a loadable grading") {
  Command c = cmd("gr", {"Z4F"});
  c.out = std::string(GAMMALIB_TEST_BUILD_DIR) + "/gr.json";
  Report r = run_command(golden(), c);
  CHECK(only(r).verdict.status == Verdict::Status::pass);

  StructureSet back = StructureSet::load_file(c.out);
  Report check = run_command(back, cmd("check-grading"));
  REQUIRE(check.checks.size() == 1);
  CHECK(check.checks[0].id == "check-grading:Z4F_gr");
  CHECK(check.exit_code() == 0);
}

TEST_CASE("out demands a single target") {
  Command c = cmd("gr");
  c.out = std::string(GAMMALIB_TEST_BUILD_DIR) + "/ambiguous.json";
  CHECK_THROWS_AS(run_command(golden(), c), ParseError);
}

TEST_CASE("adic reports the stabilization level") {
  Command c = cmd("adic", {"Z4G"});
  c.ideal_json = "[[0],[2]]";
  Report r = run_command(golden(), c);
  CHECK(only(r).verdict.status == Verdict::Status::pass);
  CHECK(only(r).verdict.detail == "chain stabilizes at level 2");

  Command bad = cmd("adic", {"Z4G"});
  bad.ideal_json = "[[0],[1]";
  CHECK_THROWS_AS(run_command(golden(), bad), ParseError);
}

TEST_CASE("module pipeline operations") {
  Report gr = run_command(golden(), cmd("gr-module", {"Z4FM"}));
  CHECK(only(gr).verdict.detail == "3 graded components");

  Command q = cmd("quotient-module", {"RC2GM"});
  q.subgroup_json = "[[0,0],[1,1]]";
  Report qr = run_command(golden(), q);
  CHECK(only(qr).verdict.detail ==
        "quotient has 2 elements; component sum is not direct");

  Command k = cmd("k-prime", {"RC2GM"});
  k.subgroup_json = "[[0,0],[1,1]]";
  Report kr = run_command(golden(), k);
  CHECK(only(kr).verdict.detail == "maximal graded submodule has 1 elements");
}

TEST_CASE("hom operations") {
  CHECK(run_command(golden(), cmd("hom-check")).exit_code() == 0);

  Command deg = cmd("hom-degree", {"HRG"});
  deg.h = "g";
  CHECK(run_command(golden(), deg).exit_code() == 0);
  deg.h = "e";
  Report fail = run_command(golden(), deg);
  CHECK(only(fail).verdict.status == Verdict::Status::fail);
  CHECK(only(fail).verdict.witness == "h=e");

  Report dec = run_command(golden(), cmd("hom-decompose", {"HSUM"}));
  CHECK(only(dec).verdict.detail == "support={e, g}");

  Report enu = run_command(golden(), cmd("hom-enumerate", {"RC2M", "RC2M"}));
  CHECK(only(enu).target == "RC2M->RC2M");
  CHECK(only(enu).verdict.detail == "4 homomorphisms");
  CHECK_THROWS_AS(run_command(golden(), cmd("hom-enumerate")), ParseError);

  Report end = run_command(golden(), cmd("end-ring", {"RC2GM"}));
  CHECK(only(end).verdict.detail == "4 endomorphisms");
}

TEST_CASE("emit writes exactly one structure") {
  Command c = cmd("emit", {"QUO"});
  c.out = std::string(GAMMALIB_TEST_BUILD_DIR) + "/quo.json";
  Report r = run_command(golden(), c);
  CHECK(only(r).verdict.status == Verdict::Status::pass);
  CHECK(StructureSet::load_file(c.out).ring("QUO").carrier().size() == 2);

  Command noout = cmd("emit", {"QUO"});
  CHECK_THROWS_AS(run_command(golden(), noout), ParseError);
  Command two = cmd("emit", {"QUO", "Z4G"});
  two.out = c.out;
  CHECK_THROWS_AS(run_command(golden(), two), ParseError);
}

TEST_CASE("budget exhaustion registers as skipped") {
  Command c = cmd("check-axioms", {"RC4"});
  c.max_enum = 10;
  Report r = run_command(golden(), c);
  CHECK(only(r).verdict.status == Verdict::Status::skipped);
  CHECK(only(r).verdict.detail.substr(0, 7) == "budget:");
  CHECK(r.exit_code() == 0);
}

TEST_CASE("reports serialize deterministically and schema-shaped") {
  Report r1 = run_command(golden(), cmd("check-axioms"));
  Report r2 = run_command(golden(), cmd("check-axioms"));
  CHECK(r1.to_json(false) == r2.to_json(false));
  CHECK(r1.to_text(false) == r2.to_text(false));

  nlohmann::json doc = nlohmann::json::parse(r1.to_json(false));
  REQUIRE(doc.contains("checks"));
  REQUIRE(doc.contains("summary"));
  for (const auto& check : doc["checks"]) {
    CHECK(check.contains("id"));
    CHECK(check.contains("target"));
    CHECK(check.contains("verdict"));
    CHECK(check.contains("witness"));
    CHECK_FALSE(check.contains("ms"));
  }
  CHECK(doc["summary"]["total"] == doc["checks"].size());
  CHECK(doc["summary"]["fail"] == 0);

  nlohmann::json timed =
      nlohmann::json::parse(run_command(golden(), cmd("check-axioms", {"Z2G"}))
                                .to_json(true));
  CHECK(timed["checks"][0].contains("ms"));
}

TEST_CASE("text reports label outcomes") {
  Report r = run_command(golden(), cmd("check-strong", {"T", "RC2"}));
  std::string text = r.to_text(false);
  CHECK(text.find("[PASS] check-strong:RC2") != std::string::npos);
  CHECK(text.find("[FAIL] check-strong:T") != std::string::npos);
  CHECK(text.find("strong grading at (g, g)") != std::string::npos);
  CHECK(text.find("summary: pass=1 fail=1 error=0 skipped=0 total=2") !=
        std::string::npos);
}

TEST_CASE("lazy sets surface failures as verdicts") {
  StructureSet lazy =
      StructureSet::load_file(corpus::data_file("bad.json"), true);
  Report r = run_command(lazy, cmd("check-grading", {"BADG"}));
  CHECK(only(r).verdict.status == Verdict::Status::fail);
  CHECK(only(r).verdict.law == "containment");

  Report m = run_command(lazy, cmd("check-module", {"MBAD"}));
  CHECK(only(m).verdict.status == Verdict::Status::fail);

  Report h = run_command(lazy, cmd("hom-check", {"HBAD"}));
  CHECK(only(h).verdict.status == Verdict::Status::fail);
  CHECK(only(h).verdict.witness == "x=(0,0), y=(0,0)");
}
