#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/verify.hpp"

namespace mbx::verify {

namespace {

std::string utc_timestamp() {
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

namespace {

std::uint32_t sweep_bound(const std::string& item, std::size_t prefix) {
  std::string tail = item.substr(prefix);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("sweep item needs a numeric bound: " + item);
  }
  return static_cast<std::uint32_t>(std::stoul(tail));
}

std::string n_(std::uint32_t n) { return std::to_string(n); }

}  // namespace

std::size_t SuiteReport::count(Verdict v, bool observations) const {
  std::size_t n = 0;
  for (const auto& r : results) {
    if (r.verdict == v && r.observation == observations) ++n;
  }
  return n;
}

std::string digest(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::vector<std::string> battery(std::string_view name) {
  if (name != "core") throw MissingInput("unknown battery: " + std::string(name));
  std::vector<std::string> t;
  for (std::uint32_t n = 3; n <= 6; ++n) t.push_back("s:" + n_(n));
  for (std::uint32_t n = 4; n <= 6; ++n) t.push_back("a:" + n_(n));
  for (std::uint32_t n = 1; n <= 12; ++n) t.push_back("c:" + n_(n));
  for (std::uint32_t n = 3; n <= 12; ++n) t.push_back("d:" + n_(n));
  t.push_back("q8");
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) t.push_back("sl2:" + n_(p));
  for (const char* s : {"gl:2:3", "u:3:3", "u:4:3", "prod(s:3,s:3)", "prod(s:4,s:4)"}) t.push_back(s);
  for (std::uint32_t n = 3; n <= 6; ++n) t.push_back("pair(s:" + n_(n) + ",s:" + n_(n - 1) + ")");
  for (std::uint32_t n = 3; n <= 6; ++n) t.push_back("pair(s:" + n_(n) + ",a:" + n_(n) + ")");
  t.push_back("pair(s:4,d:4)");
  for (const char* h : {"s:3", "s:4", "d:4"}) {
    t.push_back(std::string("diag(") + h + ")");
    t.push_back(std::string("factor(") + h + ")");
  }
  return t;
}

SuiteReport run_suite(const std::vector<std::string>& targets, const std::vector<std::string>& checks,
                      const SuiteOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.title = "suite";
  report.timestamp = utc_timestamp();
  std::string inputs;
  for (const auto& t : targets) inputs += "target " + group::normalize_descriptor(t) + "\n";
  for (const auto& c : checks) inputs += "check " + c + "\n";
  report.input_digest = digest(inputs);
  for (const auto& c : checks) {
    if (!is_check(c)) throw MissingInput("unknown check: " + c);
  }
  if (checks.empty()) return report;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const std::string& target = targets[i];
    if (options.progress) options.progress(i, targets.size(), target);
    std::unique_ptr<Subject> subject;
    try {
      subject = std::make_unique<Subject>(target, options);
    } catch (const Error& e) {
      report.errors.push_back({group::normalize_descriptor(target), e.what()});
      continue;
    }
    for (const auto& name : check_names()) {
      if (std::find(checks.begin(), checks.end(), name) == checks.end()) continue;
      if (is_pair_check(name) != subject->is_pair()) continue;
      try {
        report.results.push_back(run_check(name, *subject));
      } catch (const Error& e) {
        report.errors.push_back({subject->descriptor(), name + ": " + e.what()});
      }
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

std::vector<std::string> sweep_targets(std::string_view sweep) {
  std::vector<std::string> out;
  for (const auto& raw : split_list(group::normalize_descriptor(sweep))) {
    const std::string& item = raw;
    if (item.rfind("young:", 0) == 0) {
      std::uint32_t top = sweep_bound(item, 6);
      for (std::uint32_t n = 2; n <= top; ++n) {
        for (std::uint32_t k = 1; 2 * k <= n; ++k) {
          out.push_back("pair(s:" + n_(n) + ",prod(s:" + n_(k) + ",s:" + n_(n - k) + "))");
        }
      }
    } else if (item.rfind("alt:", 0) == 0) {
      for (std::uint32_t n = 3; n <= sweep_bound(item, 4); ++n) out.push_back("pair(s:" + n_(n) + ",a:" + n_(n) + ")");
    } else if (item.rfind("cyclic:", 0) == 0) {
      for (std::uint32_t n = 2; n <= sweep_bound(item, 7); ++n) out.push_back("pair(s:" + n_(n) + ",c:" + n_(n) + ")");
    } else if (item.rfind("dihedral:", 0) == 0) {
      for (std::uint32_t n = 3; n <= sweep_bound(item, 9); ++n) out.push_back("pair(s:" + n_(n) + ",d:" + n_(n) + ")");
    } else if (item.rfind("diag:", 0) == 0) {
      out.push_back("diag(" + item.substr(5) + ")");
    } else if (item.rfind("factor:", 0) == 0) {
      out.push_back("factor(" + item.substr(7) + ")");
    } else if (item == "battery") {
      for (auto& t : battery("core")) {
        if (t.rfind("pair(", 0) == 0 || group::is_embedding_descriptor(t)) out.push_back(t);
      }
    } else {
      out.push_back(item);
    }
  }
  return out;
}

SuiteReport counterexample_scan(std::string_view check, std::string_view sweep, const SuiteOptions& options) {
  if (!is_check(check)) throw MissingInput("unknown check: " + std::string(check));
  SuiteReport report = run_suite(sweep_targets(sweep), {std::string(check)}, options);
  report.title = "scan " + std::string(check);
  return report;
}

int exit_code(const SuiteReport& report) {
  if (!report.errors.empty()) return 2;
  return report.count(Verdict::fails, false) > 0 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Monster

namespace {

const char* const kMonsterOrder = "808017424794512875886459904961710757005754368000000000";
const char* const kMonsterA = "808017424794512875894769468067441075690144312450960558";

CheckResult displayed(std::string name, const std::string& target, const Real& value, std::string expected,
                      std::string relation) {
  CheckResult r;
  r.check = std::move(name);
  r.target = target;
  r.relation = std::move(relation);
  std::string shown = sci(value, 3);
  r.value = Quantity{shown, shown};
  r.rhs = Quantity{expected, expected};
  r.verdict = shown == expected ? Verdict::holds : Verdict::fails;
  r.reference = "published value to 3 significant digits";
  if (r.verdict == Verdict::fails) r.witness = "computed " + shown + ", published " + expected;
  return r;
}

CheckResult exact(std::string name, const std::string& target, const Int& value, const std::string& expected,
                  std::string relation) {
  CheckResult r;
  r.check = std::move(name);
  r.target = target;
  r.relation = std::move(relation);
  auto shown = [](const std::string& digits) {
    return digits.size() <= 6 ? digits : sci(Rational(parse_int(digits)), 3);
  };
  r.value = Quantity{mbx::to_string(value), shown(mbx::to_string(value))};
  r.rhs = Quantity{expected, shown(expected)};
  r.verdict = mbx::to_string(value) == expected ? Verdict::holds : Verdict::fails;
  r.reference = "published exact value";
  if (r.verdict == Verdict::fails) r.witness = "computed " + mbx::to_string(value);
  return r;
}

}  // namespace

SuiteReport monster_report(const chartab::ClassData& data) {
  auto start = std::chrono::steady_clock::now();
  if (!data.degrees) throw MissingInput("class data has no degrees");
  SuiteReport report;
  report.title = "monster";
  report.timestamp = utc_timestamp();
  {
    std::string text;
    for (const auto& z : data.centralizers) text += mbx::to_string(z) + " ";
    text += "\n";
    for (const auto& d : *data.degrees) text += mbx::to_string(d) + " ";
    report.input_digest = digest(text);
  }
  const std::string target = data.name.empty() ? "M" : data.name;
  const Int& n = data.order;
  Int k = Int(static_cast<unsigned long>(data.k()));
  Int b = 0;
  for (const auto& d : *data.degrees) b = std::max(b, d);
  auto& out = report.results;

  out.push_back(exact("monster_order", target, n, kMonsterOrder, "|M| digit string"));
  out.push_back(displayed("monster_order_approx", target, to_real(Rational(n)), "8.08e53", "|M| ~ 8.08e53"));
  out.push_back(exact("monster_k", target, k, "194", "k(M) = 194"));
  out.push_back(displayed("monster_b", target, to_real(Rational(b)), "2.59e26", "b(M) ~ 2.59e26"));
  {
    Rational eps = mult::epsilon(*data.degrees, n);
    // Round to two decimals exactly: floor(100 eps + 1/2).
    Rational scaled = eps * 100 + ratio(1, 2);
    Int hundredths = scaled.get_num() / scaled.get_den();
    std::string shown = mbx::to_string(Int(hundredths / 100)) + "." + (hundredths % 100 < 10 ? "0" : "") + mbx::to_string(Int(hundredths % 100));
    CheckResult r;
    r.check = "monster_epsilon";
    r.target = target;
    r.relation = "epsilon(M) ~ 11.02";
    r.value = Quantity{mbx::to_string(eps), shown};
    r.rhs = Quantity{"11.02", "11.02"};
    r.verdict = shown == "11.02" ? Verdict::holds : Verdict::fails;
    r.reference = "published value to the printed precision";
    if (r.verdict == Verdict::fails) r.witness = "computed " + shown;
    out.push_back(r);
  }
  out.push_back(displayed("monster_dim_lower", target, sqrt_real(ratio(n, k)), "6.45e25", "sqrt(|M|/k) ~ 6.45e25"));
  out.push_back(displayed("monster_dim_upper", target, sqrt_real(Rational(n)), "8.99e26", "sqrt|M| ~ 8.99e26"));
  {
    CheckResult r;
    r.check = "monster_dim_bounds";
    r.target = target;
    r.relation = "sqrt(|M|/k) <= b <= sqrt|M|";
    r.reference = "sqrt(|G|/k(G)) <= b(G) <= sqrt(|G|)";
    bool ok = n <= b * b * k && b * b <= n;
    r.verdict = ok ? Verdict::holds : Verdict::fails;
    r.value = Quantity{mbx::to_string(b), sci(Rational(b), 3)};
    if (!ok) r.witness = "b = " + mbx::to_string(b);
    out.push_back(r);
  }
  Rational lower_sq = ratio(b * b * b * b, k * n);
  out.push_back(displayed("monster_thm1_1_lower", target, sqrt_real(lower_sq), "5.35e24", "b^2/sqrt(k|M|) ~ 5.35e24"));

  Int a = mult::A_from_centralizers(data.centralizers);
  out.push_back(exact("monster_A", target, a, kMonsterA, "A(M) = sum of centralizer orders"));

  std::vector<Int> rest(data.centralizers.begin() + 1, data.centralizers.end());
  std::sort(rest.begin(), rest.end(), [](const Int& x, const Int& y) { return x > y; });
  if (rest.size() >= 3) {
    const char* shown[3] = {"8.31e33", "1.40e26", "3.77e24"};
    const char* names[3] = {"monster_z2", "monster_z3", "monster_z4"};
    for (int i = 0; i < 3; ++i) {
      out.push_back(displayed(names[i], target, to_real(Rational(rest[i])), shown[i],
                              std::string("largest non-identity centralizer #") + std::to_string(i + 1)));
    }
    Int remainder = a - data.centralizers[0] - rest[0] - rest[1] - rest[2];
    CheckResult r = displayed("monster_remainder", target, to_real(Rational(remainder)), "1.00e19",
                              "A(M) - z1 - z2 - z3 - z4 ~ 1.00e19");
    r.value->exact = mbx::to_string(remainder);
    out.push_back(r);
  }

  if (data.values) {
    chartab::CharacterTable t = chartab::to_table(data);
    mult::KronStats stats = mult::kron_stats(t);
    out.push_back(displayed("monster_K", target, to_real(Rational(stats.max.value)), "2.15e25", "K(M) ~ 2.15e25"));
    CheckResult sandwich;
    sandwich.check = "monster_thm1_1";
    sandwich.target = target;
    sandwich.relation = "b^2/sqrt(k|M|) <= K <= b";
    sandwich.reference = "b(G)^2/(k(G)|G|)^(1/2) <= K(G) <= b(G)";
    const Int& kk = stats.max.value;
    bool ok = b * b * b * b <= kk * kk * k * n && kk <= b;
    sandwich.verdict = ok ? Verdict::holds : Verdict::fails;
    sandwich.value = Quantity{mbx::to_string(kk), sci(Rational(kk), 3)};
    sandwich.witness = "rho=" + std::to_string(stats.max.argmax[0]) + " phi=" + std::to_string(stats.max.argmax[1]) +
                       " psi=" + std::to_string(stats.max.argmax[2]);
    out.push_back(sandwich);
    Rational avg = ratio(stats.sum, k * k * k);
    CheckResult r = displayed("monster_average", target, to_real(avg), "3.38e22", "average g ~ 3.38e22");
    r.value->exact = mbx::to_string(avg);
    out.push_back(r);
    CheckResult id;
    id.check = "monster_lemma7_2";
    id.target = target;
    id.relation = "sum g^2 = sum z_alpha";
    id.reference = "A(G) = sum over classes of z_alpha";
    id.verdict = stats.sum_squares == a ? Verdict::holds : Verdict::fails;
    id.value = Quantity{mbx::to_string(stats.sum_squares), sci(Rational(stats.sum_squares), 3)};
    if (id.verdict == Verdict::fails) id.witness = "sum g^2 = " + mbx::to_string(stats.sum_squares);
    out.push_back(id);
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace mbx::verify
