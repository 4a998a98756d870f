#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "mbx/error.hpp"
#include "mbx/table_io.hpp"
#include "mbx/verify.hpp"

using namespace mbx;
using namespace mbx::verify;

namespace {

CheckResult check(const char* name, const char* target) {
  Subject s(target, SuiteOptions{});
  return run_check(name, s);
}

std::vector<nlohmann::ordered_json> lines(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::ordered_json::parse(line));
  return out;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry") {
  CHECK(check_names().size() == 30);
  CHECK(is_check("thm1_1"));
  CHECK_FALSE(is_check("nope"));
  CHECK(is_pair_check("gallagher"));
  CHECK_FALSE(is_pair_check("burnside"));
}

TEST_CASE("single checks") {
  auto r = check("thm1_1", "s:3");
  CHECK(r.verdict == Verdict::holds);
  CHECK_FALSE(r.reference.empty());
  CHECK(check("lemma7_2", "sl2:5").verdict == Verdict::holds);
  CHECK(check("sherman", "u:3:3").verdict == Verdict::holds);
  CHECK(check("sl2_formulas", "sl2:7").verdict == Verdict::holds);
  CHECK(check("sl2_formulas", "s:4").verdict == Verdict::inapplicable);
  CHECK(check("glnq_order", "gl:2:3").verdict == Verdict::holds);
  CHECK(check("fg_classcount", "gl:2:3").verdict == Verdict::holds);
  CHECK(check("unitriangular_b", "u:4:3").verdict == Verdict::holds);
  CHECK(check("ks_cuberoot", "a:5").verdict == Verdict::holds);
  CHECK(check("ks_cuberoot", "s:4").verdict == Verdict::inapplicable);
  CHECK(check("gallagher", "pair(s:3,s:2)").verdict == Verdict::holds);
  CHECK(check("lemma8_2", "pair(s:3,s:2)").lhs->exact == "4");
  CHECK(check("thm1_3", "pair(s:4,a:4)").verdict == Verdict::holds);
  CHECK_THROWS_AS(check("gallagher", "s:3"), Error);
}

TEST_CASE("failing statements carry a witness") {
  auto r = check("gr_center", "s:3");
  CHECK(r.verdict == Verdict::fails);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("remark on diagonal and factor embeddings") {
  for (const char* h : {"s:3", "s:4", "d:4"}) {
    CAPTURE(h);
    CHECK(check("remark1_5_diag", ("diag(" + std::string(h) + ")").c_str()).verdict == Verdict::holds);
    CHECK(check("remark1_5_factor", ("factor(" + std::string(h) + ")").c_str()).verdict == Verdict::holds);
  }
}

TEST_CASE("speculative bound is an observation") {
  auto r = check("spec9_5", "pair(s:4,s:3)");
  CHECK(r.observation);
  CHECK(r.verdict == Verdict::holds);
  auto f = check("spec9_5", "factor(s:3)");
  CHECK(f.observation);
  CHECK(f.verdict == Verdict::fails);
  CHECK_FALSE(f.witness.empty());
}

TEST_CASE("suites") {
  auto rep = run_suite({"s:3", "s:4", "s:5", "s:6"}, {"lemma7_2"}, {});
  CHECK(rep.results.size() == 4);
  CHECK(rep.count(Verdict::holds, false) == 4);
  CHECK(exit_code(rep) == 0);
  auto empty = run_suite({"s:3"}, {}, {});
  CHECK(empty.results.empty());
  CHECK(exit_code(empty) == 0);
  CHECK_THROWS_AS(run_suite({"s:3"}, {"nope"}, {}), MissingInput);
  auto bad = run_suite({"x:1", "s:3"}, {"burnside"}, {});
  CHECK(bad.errors.size() == 1);
  CHECK(bad.results.size() == 1);
  CHECK(exit_code(bad) == 2);
  auto failing = run_suite({"s:3"}, {"gr_center"}, {});
  CHECK(exit_code(failing) == 1);
}

TEST_CASE("progress callback") {
  std::vector<std::string> seen;
  SuiteOptions o;
  o.progress = [&](std::size_t, std::size_t total, const std::string& d) {
    CHECK(total == 2);
    seen.push_back(d);
  };
  run_suite({"c:2", "c:3"}, {"burnside"}, o);
  CHECK(seen == std::vector<std::string>{"c:2", "c:3"});
}

TEST_CASE("sweeps and scans") {
  CHECK(split_list("s:3,pair(s:4,s:3),diag(d:4)") ==
        std::vector<std::string>{"s:3", "pair(s:4,s:3)", "diag(d:4)"});
  auto t = sweep_targets("young:4");
  CHECK(t == std::vector<std::string>{"pair(s:2,prod(s:1,s:1))", "pair(s:3,prod(s:1,s:2))",
                                      "pair(s:4,prod(s:1,s:3))", "pair(s:4,prod(s:2,s:2))"});
  auto scan = counterexample_scan("spec9_5", "young:6");
  CHECK(scan.errors.empty());
  CHECK(scan.count(Verdict::fails, true) == 0);
  CHECK(counterexample_scan("spec9_5", "young:1").results.empty());
}

TEST_CASE("json report is deterministic apart from volatile fields") {
  auto a = lines(to_json_lines(run_suite({"s:3", "pair(s:3,s:2)"}, {"lemma7_2", "lemma8_2"}, {})));
  auto b = lines(to_json_lines(run_suite({"s:3", "pair(s:3,s:2)"}, {"lemma7_2", "lemma8_2"}, {})));
  REQUIRE(a.size() == b.size());
  CHECK(a.front()["type"] == "header");
  CHECK(a.back()["type"] == "summary");
  CHECK(a.back()["exit_code"] == 0);
  for (auto* v : {&a, &b}) {
    v->front().erase("volatile");
    v->back().erase("volatile");
  }
  CHECK(a == b);
  CHECK(a.back()["digest"].get<std::string>().size() == 16);
}

TEST_CASE("csv and text renderings") {
  auto rep = run_suite({"s:3"}, {"burnside"}, {});
  auto csv = to_csv(rep);
  CHECK(csv.rfind("check,target,category,verdict,lhs,value,rhs,witness,reason\n", 0) == 0);
  CHECK(to_text(rep).find("burnside") != std::string::npos);
  CHECK(digest("abc") == digest("abc"));
  CHECK(digest("abc") != digest("abd"));
}

TEST_CASE("Monster report from class data") {
  auto data = chartab::parse_class_data(chartab::read_file(MBX_TEST_DATA "/monster.classdata"));
  auto rep = monster_report(data);
  for (const auto& r : rep.results) {
    CAPTURE(r.check);
    if (r.check == "monster_epsilon") {
      CHECK(r.verdict == Verdict::fails);
      CHECK(r.value->approx == "11.06");
    } else {
      CHECK(r.verdict == Verdict::holds);
    }
  }
}

}
