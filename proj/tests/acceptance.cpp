// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "mbx/dixon.hpp"
#include "mbx/family.hpp"
#include "mbx/mult.hpp"
#include "mbx/symmetric.hpp"
#include "mbx/table_io.hpp"
#include "mbx/verify.hpp"
#include "oracles.hpp"

using namespace mbx;
using verify::Verdict;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int places) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", places, x);
  return buf;
}

chartab::CharacterTable table_of(const std::string& spec) {
  return chartab::character_table(group::family_group(spec));
}

std::vector<const verify::CheckResult*> results_for(const verify::SuiteReport& rep, const std::string& check) {
  std::vector<const verify::CheckResult*> out;
  for (const auto& r : rep.results) {
    if (r.check == check) out.push_back(&r);
  }
  return out;
}

// Sum of g^2 over S_n triples from the elementwise oracle.
Int oracle_sum_squares(std::uint32_t n) {
  auto g = group::family_group("s:" + std::to_string(n));
  Int sum = 0;
  for (const auto& v : oracle::elementwise_kronecker(g, oracle::sn_rows(n), oracle::sn_columns(g))) sum += v * v;
  return sum;
}

void criterion_identities(const verify::SuiteReport& core, double elapsed) {
  auto seven = results_for(core, "lemma7_2");
  std::size_t bad7 = 0;
  for (auto* r : seven) bad7 += r->verdict != Verdict::holds;
  Int s3 = mult::kron_sum_squares(table_of("s:3"));
  Int s4 = mult::kron_sum_squares(table_of("s:4"));
  Int o3 = oracle_sum_squares(3);
  Int o4 = oracle_sum_squares(4);
  bool ok = !seven.empty() && bad7 == 0 && core.errors.empty() && s3 == 11 && s4 == 43 && o3 == 11 && o4 == 43 &&
            elapsed < 300;
  report("1", ok,
         std::to_string(seven.size()) + " groups, " + std::to_string(bad7) + " mismatches; S3 " + to_string(s3) +
             " (oracle " + to_string(o3) + "), S4 " + to_string(s4) + " (oracle " + to_string(o4) +
             "); full battery " + fixed(elapsed, 1) + " s (limit 300 s)");

  auto eight = results_for(core, "lemma8_2");
  std::size_t bad8 = 0;
  for (auto* r : eight) bad8 += r->verdict != Verdict::holds;
  auto parent = std::make_shared<const group::FiniteGroup>(group::family_group("s:3"));
  auto e = group::embed(parent, {group::Permutation::from_cycles("(1 2)", 3)});
  auto f = group::class_fusion(e);
  auto tg = chartab::character_table(*parent);
  auto th = chartab::character_table(*e.sub);
  Int c = mult::induced_sum_squares(mult::induced_matrix(tg, th, f));
  Int oc = 0;
  for (const auto& row : oracle::elementwise_induced(e, tg, th)) {
    for (const auto& v : row) oc += v * v;
  }
  report("2", !eight.empty() && bad8 == 0 && c == 4 && oc == 4 && mult::LR_rhs(f) == 4,
         std::to_string(eight.size()) + " pairs, " + std::to_string(bad8) + " mismatches; S2<S3 " + to_string(c) +
             " (oracle " + to_string(oc) + ")");
}

void criterion_bounds(const verify::SuiteReport& core) {
  static const std::set<std::string> listed = {
      "thm1_1",   "thm1_2",  "thm1_3",     "thm1_4",    "prop7_1",     "prop7_4", "prop7_6",
      "lemma8_4", "cor8_3",  "cor8_5",     "kron_upper", "kron_sym",   "burnside", "dim_bounds",
      "gallagher", "sherman", "permgroup_k", "gr_center", "hls_gap", "ks_cuberoot"};
  std::map<std::string, std::size_t> holds, fails;
  std::vector<std::string> failed;
  for (const auto& r : core.results) {
    if (!listed.count(r.check)) continue;
    if (r.verdict == Verdict::holds) ++holds[r.check];
    if (r.verdict == Verdict::fails) {
      ++fails[r.check];
      failed.push_back(r.check + "@" + r.target);
    }
  }
  std::size_t total_fails = failed.size();
  std::size_t total_holds = 0;
  for (const auto& [_, n] : holds) total_holds += n;
  std::string detail = std::to_string(total_holds) + " hold, " + std::to_string(total_fails) + " fail";
  if (!failed.empty()) {
    detail += " (";
    for (std::size_t i = 0; i < failed.size(); ++i) detail += (i ? " " : "") + failed[i];
    detail += ")";
  }
  report("3", total_holds > 0 && total_fails == 0, detail);
}

void criterion_families() {
  bool ok = true;
  std::string detail;
  for (long p : {5L, 7L, 11L, 13L}) {
    auto t = table_of("sl2:" + std::to_string(p));
    bool row = t.order == p * p * p - p && t.k() == static_cast<std::size_t>(p + 4) && t.max_degree() == p + 1;
    ok = ok && row;
    detail += "p=" + std::to_string(p) + " |G|=" + to_string(t.order) + " k=" + std::to_string(t.k()) +
              " b=" + to_string(t.max_degree()) + "; ";
  }
  detail.resize(detail.size() - 2);
  report("4", ok, detail);

  bool ok5 = true;
  std::string d5;
  for (unsigned long n : {3UL, 4UL}) {
    auto t = table_of("u:" + std::to_string(n) + ":3");
    Int want = pow(Int(3), (n - 1) * (n - 1) / 4);
    ok5 = ok5 && t.max_degree() == want;
    d5 += "n=" + std::to_string(n) + " b=" + to_string(t.max_degree()) + " expected " + to_string(want) + "; ";
  }
  d5.resize(d5.size() - 2);
  report("5", ok5, d5);

  auto g = group::family_group("gl:2:3");
  auto t = chartab::character_table(g);
  Int n(static_cast<unsigned long>(g.order()));
  long k = static_cast<long>(t.k());
  report("6", 45 <= n && n <= 81 && 6 <= k && k <= 9 && n == 48 && k == 8,
         "45 <= |G|=" + to_string(n) + " <= 81, 6 <= k=" + std::to_string(k) + " <= 9");
}

void criterion_symmetric() {
  auto s13 = symmetric::sn_degree_stats(13);
  bool f_ok = s13.f == 6 && !s13.f_fibers.empty() && s13.f_fibers[0].degree == 429;
  bool hook = symmetric::hook_degree(symmetric::Partition{{9, 4}}) == 429;
  bool squares = true;
  for (std::uint32_t n = 1; n <= 40; ++n) {
    Int sum = 0;
    symmetric::for_each_partition(n, [&](const symmetric::Partition& p) {
      Int d = symmetric::hook_degree(p);
      sum += d * d;
    });
    squares = squares && sum == factorial(n);
  }
  bool degrees = true;
  for (std::uint32_t n = 1; n <= 20; ++n) {
    Int sum = 0;
    symmetric::for_each_partition(n, [&](const symmetric::Partition& p) { sum += symmetric::hook_degree(p); });
    auto g = n <= 8 ? std::optional(group::family_group("s:" + std::to_string(n))) : std::nullopt;
    degrees = degrees && sum == symmetric::involution_count(n) &&
              (!g || sum == Int(static_cast<unsigned long>(group::involution_count(*g))));
  }
  Int p100 = symmetric::partition_count(100);
  bool p_ok = p100 == 190569292 && oracle::partition_count(100) == p100;
  report("7", f_ok && hook && squares && degrees && p_ok,
         "f(13)=" + std::to_string(s13.f) + " at " +
             (s13.f_fibers.empty() ? std::string("-") : to_string(s13.f_fibers[0].degree)) +
             ", d(9,4)=" + to_string(symmetric::hook_degree(symmetric::Partition{{9, 4}})) +
             ", sum d^2 = n! to 40: " + (squares ? "yes" : "no") + ", sum d = t(n) to 20: " +
             (degrees ? "yes" : "no") + ", p(100)=" + to_string(p100));
}

void criterion_monster() {
  const std::string dir = MBX_TEST_DATA;
  auto data = chartab::parse_class_data(chartab::read_file(dir + "/monster.classdata"));
  auto start = Clock::now();
  auto rep = verify::monster_report(data);
  double elapsed = seconds_since(start);
  Int a = 0;
  for (const auto& z : data.centralizers) a += z;
  const std::string paper_a = "808017424794512875894769468067441075690144312450960558";
  const std::string paper_order = "808017424794512875886459904961710757005754368000000000";
  bool ok = to_string(a) == paper_a && to_string(data.order) == paper_order && elapsed < 1.0;
  std::string detail = "A(M) " + std::string(to_string(a) == paper_a ? "matches" : "differs") + ", |M| " +
                       (to_string(data.order) == paper_order ? "matches" : "differs");
  for (const auto& r : rep.results) {
    if (r.verdict == Verdict::holds) continue;
    ok = false;
    detail += "; " + r.check + " computed " + (r.value ? r.value->approx : "?") + " vs " +
              (r.rhs ? r.rhs->approx : "?");
  }
  detail += "; " + std::to_string(rep.count(Verdict::holds, false)) + "/" + std::to_string(rep.results.size()) +
            " displayed values agree; " + fixed(elapsed * 1000, 1) + " ms (limit 1 s)";
  report("8", ok, detail);

  // Optional half: only when a full table file is present.
  const std::string full = dir + "/monster.table";
  if (!std::filesystem::exists(full)) {
    std::cout << "SKIP criterion 8 (full table): no table file" << std::endl;
    return;
  }
  auto table = chartab::parse_class_data(chartab::read_file(full));
  auto rep2 = verify::monster_report(table);
  bool ok2 = true;
  std::string d2;
  for (const auto& r : rep2.results) {
    if (r.check != "monster_K" && r.check != "monster_average" && r.check != "monster_lemma7_2" &&
        r.check != "monster_thm1_1")
      continue;
    ok2 = ok2 && r.verdict == Verdict::holds;
    d2 += (d2.empty() ? "" : ", ") + r.check + " " + std::string(verify::to_string(r.verdict)) +
          (r.value ? " " + r.value->approx : "");
  }
  report("8 (full table, optional)", ok2 && !d2.empty(), d2);
}

void criterion_remark() {
  bool ok = true;
  std::string detail;
  for (const char* h : {"s:3", "s:4", "d:4"}) {
    auto th = table_of(h);
    Int kh = mult::kron_max(th).value;
    Int bh = th.max_degree();
    Int c[2];
    int i = 0;
    for (const char* kind : {"diag", "factor"}) {
      auto e = group::family_embedding(std::string(kind) + "(" + h + ")");
      auto f = group::class_fusion(e);
      auto m = mult::induced_matrix(chartab::character_table(*e.parent), chartab::character_table(*e.sub), f);
      c[i++] = mult::induced_max(m).value;
    }
    ok = ok && c[0] == kh && c[1] == bh;
    detail += std::string(h) + ": C(diag)=" + to_string(c[0]) + " K=" + to_string(kh) + " C(factor)=" +
              to_string(c[1]) + " b=" + to_string(bh) + "; ";
  }
  detail.resize(detail.size() - 2);
  report("9", ok, detail);
}

void criterion_oracles() {
  auto g = group::family_group("s:5");
  auto t = chartab::character_table(g);
  auto match = oracle::match_sn_rows(g, t);
  std::size_t mismatches = 0;
  std::size_t k = t.k();
  if (match) {
    auto expected = oracle::elementwise_kronecker(g, oracle::sn_rows(5), oracle::sn_columns(g));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
          Int want = expected[((*match)[a] * k + (*match)[b]) * k + (*match)[c]];
          mismatches += mult::kronecker(t, a, b, c) != want;
        }
      }
    }
  }
  std::uint32_t agree = 0;
  for (std::uint32_t n = 1; n <= 7; ++n) {
    auto sn = group::family_group("s:" + std::to_string(n));
    agree += oracle::match_sn_rows(sn, chartab::character_table(sn)).has_value();
  }
  report("10", match && mismatches == 0 && agree == 7,
         "S5 " + std::to_string(k * k * k) + " triples, " + std::to_string(mismatches) +
             " mismatches; Dixon = MN up to row order for " + std::to_string(agree) + "/7 of n <= 7");
}

void criterion_scan() {
  auto rep = verify::counterexample_scan("spec9_5", "battery");
  std::size_t violations = rep.count(Verdict::fails, true);
  bool witnessed = true;
  bool observed = !rep.results.empty();
  std::string where;
  for (const auto& r : rep.results) {
    observed = observed && r.observation;
    if (r.verdict == Verdict::fails) {
      witnessed = witnessed && !r.witness.empty();
      where += " " + r.target + " [" + r.witness + "]";
    }
  }
  report("11", rep.errors.empty() && observed && witnessed,
         std::to_string(rep.results.size()) + " pairs observed, " + std::to_string(violations) + " violations" +
             (where.empty() ? "" : ":" + where));
}

}  // namespace

int main() {
  try {
    auto start = Clock::now();
    auto core = verify::run_suite(verify::battery("core"), verify::check_names(), {});
    double elapsed = seconds_since(start);
    criterion_identities(core, elapsed);
    criterion_bounds(core);
    criterion_families();
    criterion_symmetric();
    criterion_monster();
    criterion_remark();
    criterion_oracles();
    criterion_scan();
  } catch (const std::exception& e) {
    std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
    return 100;
  }
  std::cout << failures << " criteria failing" << std::endl;
  return failures;
}
