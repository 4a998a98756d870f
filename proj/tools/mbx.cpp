#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbx/dixon.hpp"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/mult.hpp"
#include "mbx/parallel.hpp"
#include "mbx/symmetric.hpp"
#include "mbx/table_io.hpp"
#include "mbx/verify.hpp"

namespace {

using namespace mbx;
using chartab::CharacterTable;

struct Config {
  std::size_t element_cap = group::kDefaultElementCap;
  std::uint32_t sn_cap = symmetric::kDefaultSnCap;
  std::size_t table_cap = mult::kDefaultCubeCap;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string format = "text";
};

std::string str(const Int& v) { return mbx::to_string(v); }
std::string str(const Rational& v) { return mbx::to_string(v); }

CharacterTable load_table(const std::string& spec, const Config& cfg) {
  if (std::filesystem::is_regular_file(spec)) return chartab::parse_table(chartab::read_file(spec));
  return chartab::character_table(group::family_group(spec, cfg.element_cap), cfg.seed);
}

void require_table_cap(const CharacterTable& t, const Config& cfg) {
  if (t.k() > cfg.table_cap) {
    throw CapExceeded(std::to_string(t.k()) + " classes exceed the table cap " + std::to_string(cfg.table_cap));
  }
}

verify::SuiteOptions suite_options(const Config& cfg) {
  verify::SuiteOptions o;
  o.element_cap = cfg.element_cap;
  o.cube_cap = cfg.table_cap;
  o.seed = cfg.seed;
  o.progress = [](std::size_t i, std::size_t n, const std::string& target) {
    std::cerr << "[" << i + 1 << "/" << n << "] " << target << "\n";
  };
  return o;
}

int emit(const verify::SuiteReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << verify::to_json_lines(report);
  } else if (format == "csv") {
    std::cout << verify::to_csv(report);
  } else {
    std::cout << verify::to_text(report);
  }
  return verify::exit_code(report);
}

// ---------------------------------------------------------------------------

int cmd_group(const std::string& spec, const std::string& mode, const Config& cfg) {
  group::FiniteGroup g = group::family_group(spec, cfg.element_cap);
  if (mode == "classes") {
    std::cout << "class size order centralizer representative\n";
    for (std::size_t i = 0; i < g.class_count(); ++i) {
      const auto& c = g.classes()[i];
      std::cout << i << " " << c.size << " " << c.element_order << " " << c.centralizer_order << " "
                << c.representative.cycles() << "\n";
    }
    return 0;
  }
  if (mode == "stats") {
    CharacterTable t = chartab::character_table(g, cfg.seed);
    auto s = mult::group_stats(g, t);
    std::cout << "group " << g.name() << "\n"
              << "order " << str(s.order) << "\n"
              << "k " << s.k << "\n"
              << "b " << str(s.b) << "\n"
              << "e " << str(s.e) << "\n"
              << "epsilon " << str(s.epsilon) << "\n"
              << "degree_sum " << str(s.degree_sum) << "\n"
              << "involutions " << s.involutions << "\n"
              << "simple " << (s.simple ? "yes" : "no") << "\n"
              << "nilpotency_class " << (s.nilpotency_class ? std::to_string(*s.nilpotency_class) : "none") << "\n"
              << "center_order " << s.center_order << "\n";
    return 0;
  }
  std::cout << "group " << g.name() << "\n"
            << "degree " << g.degree() << "\n"
            << "order " << g.order() << "\n"
            << "classes " << g.class_count() << "\n"
            << "exponent " << g.exponent() << "\n";
  return 0;
}

int cmd_table(const std::string& spec, const std::string& out, const Config& cfg) {
  CharacterTable t = load_table(spec, cfg);
  if (out.empty()) {
    chartab::write_table(std::cout, t);
  } else {
    std::ofstream file(out);
    if (!file) throw MissingInput("cannot write " + out);
    chartab::write_table(file, t);
  }
  return 0;
}

struct KronArgs {
  std::string spec;
  bool max = false;
  std::vector<std::size_t> triple;
  bool sum_squares = false;
  bool avg = false;
};

int cmd_kron(const KronArgs& a, const Config& cfg) {
  CharacterTable t = load_table(a.spec, cfg);
  if (!a.triple.empty()) {
    for (auto i : a.triple) {
      if (i >= t.k()) throw MissingInput("character index " + std::to_string(i) + " out of range");
    }
    std::cout << str(mult::kronecker(t, a.triple[0], a.triple[1], a.triple[2])) << "\n";
    return 0;
  }
  require_table_cap(t, cfg);
  if (a.sum_squares) {
    Int lhs = mult::kron_sum_squares(t);
    Int rhs = mult::A_from_centralizers(t.centralizers);
    std::cout << str(lhs) << "\n";
    if (lhs != rhs) {
      std::cout << "identity fails: sum of centralizer orders is " << str(rhs) << "\n";
      return 1;
    }
    std::cout << "identity holds: equals the sum of centralizer orders\n";
    return 0;
  }
  if (a.avg) {
    Rational avg = mult::kron_average(t);
    std::cout << str(avg) << " (" << sci(avg, 3) << ")\n";
    return 0;
  }
  auto m = mult::kron_max(t);
  std::cout << "K " << str(m.value) << " at rho=" << m.argmax[0] << " phi=" << m.argmax[1] << " psi=" << m.argmax[2]
            << "\n";
  return 0;
}

struct InduceArgs {
  std::string parent;
  std::vector<std::string> sub;
  bool max = false;
  bool matrix = false;
  bool sum_squares = false;
};

int cmd_induce(const InduceArgs& a, const Config& cfg) {
  auto parent = std::make_shared<const group::FiniteGroup>(group::family_group(a.parent, cfg.element_cap));
  std::vector<group::Permutation> gens;
  std::string name;
  if (a.sub.size() == 2 && a.sub[0] == "gens") {
    gens = group::parse_generators(chartab::read_file(a.sub[1]), parent->degree());
    name = a.sub[1];
  } else if (a.sub.size() == 1) {
    group::FiniteGroup h = group::family_group(a.sub[0], cfg.element_cap);
    if (h.degree() > parent->degree()) throw NotASubgroup(h.name() + " acts on more points than " + parent->name());
    gens = h.generators();
    name = h.name();
  } else {
    throw MissingInput("--sub takes a family spec or 'gens FILE'");
  }
  auto embedding = group::embed(parent, gens, name);
  auto fusion = group::class_fusion(embedding);
  CharacterTable tg = chartab::character_table(*parent, cfg.seed);
  CharacterTable th = chartab::character_table(*embedding.sub, cfg.seed);
  auto m = mult::induced_matrix(tg, th, fusion);
  if (a.matrix) {
    for (const auto& row : m.entries) {
      for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << str(row[j]);
      std::cout << "\n";
    }
    return 0;
  }
  if (a.sum_squares) {
    Int lhs = mult::induced_sum_squares(m);
    Rational rhs = mult::LR_rhs(fusion);
    std::cout << str(lhs) << "\n";
    if (Rational(lhs) != rhs) {
      std::cout << "identity fails: centralizer ratio sum is " << str(rhs) << "\n";
      return 1;
    }
    std::cout << "identity holds: equals the sum of z_G/z_H over classes of H\n";
    return 0;
  }
  auto mx = mult::induced_max(m);
  std::cout << "C " << str(mx.value) << " at rho=" << mx.rho << " pi=" << mx.pi << " index " << str(m.index) << "\n";
  return 0;
}

std::string parts_text(const std::vector<symmetric::Partition>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) out += (i ? " " : "") + ps[i].to_string();
  return out;
}

int cmd_sn(std::uint32_t n, const std::string& range, const std::string& emit_format, const Config& cfg) {
  std::uint32_t lo = n, hi = n;
  if (!range.empty()) {
    auto dots = range.find("..");
    if (dots == std::string::npos) throw MissingInput("--range expects A..B");
    lo = static_cast<std::uint32_t>(std::stoul(range.substr(0, dots)));
    hi = static_cast<std::uint32_t>(std::stoul(range.substr(dots + 2)));
    if (lo < 1 || hi < lo) throw MissingInput("--range needs 1 <= A <= B");
  }
  if (lo == 0) throw MissingInput("--n must be positive");
  bool csv = emit_format == "csv";
  if (csv) std::cout << "n,p,b,M,f,epsilon\n";
  for (std::uint32_t k = lo; k <= hi; ++k) {
    auto s = symmetric::sn_degree_stats(k, cfg.sn_cap);
    if (csv) {
      std::cout << k << "," << str(s.partition_count) << "," << str(s.b) << "," << s.m << "," << s.f << ","
                << str(s.epsilon) << "\n";
      continue;
    }
    std::cout << "n " << k << "\n"
              << "p(n) " << str(s.partition_count) << "\n"
              << "b " << str(s.b) << "\n"
              << "M " << s.m << " " << parts_text(s.argmax) << "\n";
    for (const auto& fiber : s.f_fibers) {
      std::cout << "f=" << s.f << " at degree " << str(fiber.degree) << ": " << parts_text(fiber.partitions) << "\n";
    }
    Int inv = symmetric::involution_count(k);
    std::cout << "epsilon " << str(s.epsilon) << " (" << to_double(s.epsilon) << ")\n"
              << "degree_sum " << str(s.degree_sum) << (s.degree_sum == inv ? " = " : " != ") << "involutions "
              << str(inv) << "\n"
              << "hardy_ramanujan " << symmetric::hardy_ramanujan(k) << "\n";
    auto w = symmetric::vk_window(k);
    std::cout << "vk_window " << w.lower << " " << w.upper << "\n";
    if (k < hi) std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker and induced multiplicities of finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Seed for randomized steps; results do not depend on it");
  app.add_option("--threads", cfg.threads, "Worker threads (MBX_THREADS overrides)")->check(CLI::PositiveNumber);
  app.add_option("--element-cap", cfg.element_cap, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--sn-cap", cfg.sn_cap, "Largest n for symmetric-group degree scans")->check(CLI::PositiveNumber);
  app.add_option("--table-cap", cfg.table_cap, "Largest class count for full multiplicity scans")
      ->check(CLI::PositiveNumber);

  std::string spec, mode, out;
  auto* group_cmd = app.add_subcommand("group", "Build a group and list classes or statistics");
  group_cmd->add_option("spec", spec, "Family descriptor")->required();
  group_cmd->add_option("mode", mode, "classes or stats")->check(CLI::IsMember({"classes", "stats"}));

  auto* table_cmd = app.add_subcommand("table", "Compute a character table");
  table_cmd->add_option("spec", spec, "Family descriptor or table file")->required();
  table_cmd->add_option("--out", out, "Write to FILE instead of stdout");

  KronArgs kron;
  auto* kron_cmd = app.add_subcommand("kron", "Kronecker multiplicities");
  kron_cmd->add_option("spec", kron.spec, "Family descriptor or table file")->required();
  auto* kmax = kron_cmd->add_flag("--max", kron.max, "K(G) and its least attaining triple (default)");
  auto* ktriple = kron_cmd->add_option("--triple", kron.triple, "g(rho, phi, psi) for 0-based rows")->expected(3);
  auto* ksq = kron_cmd->add_flag("--sum-squares", kron.sum_squares, "Sum of g^2 over all triples");
  auto* kavg = kron_cmd->add_flag("--avg", kron.avg, "Average multiplicity");
  kmax->excludes(ktriple, ksq, kavg);
  ktriple->excludes(ksq, kavg);
  ksq->excludes(kavg);

  InduceArgs induce;
  auto* induce_cmd = app.add_subcommand("induce", "Induced multiplicities c(rho, pi) for H < G");
  induce_cmd->add_option("--parent", induce.parent, "Parent family descriptor")->required();
  induce_cmd->add_option("--sub", induce.sub, "Subgroup descriptor on the parent's points, or 'gens FILE'")
      ->required()
      ->expected(1, 2);
  auto* imax = induce_cmd->add_flag("--max", induce.max, "C(G,H) and where it is attained (default)");
  auto* imat = induce_cmd->add_flag("--matrix", induce.matrix, "The full matrix, one row per rho");
  auto* isq = induce_cmd->add_flag("--sum-squares", induce.sum_squares, "Sum of c^2");
  imax->excludes(imat, isq);
  imat->excludes(isq);

  std::uint32_t sn_n = 0;
  std::string sn_range, sn_emit = "text";
  auto* sn_cmd = app.add_subcommand("sn", "Symmetric-group degree statistics");
  auto* sn_stats = sn_cmd->add_subcommand("stats", "b, M, f, epsilon from hook lengths");
  sn_cmd->require_subcommand(1);
  auto* sn_n_opt = sn_stats->add_option("--n", sn_n, "n")->check(CLI::PositiveNumber);
  auto* sn_range_opt = sn_stats->add_option("--range", sn_range, "A..B");
  sn_n_opt->excludes(sn_range_opt);
  sn_stats->add_option("--emit", sn_emit, "text or csv")->check(CLI::IsMember({"text", "csv"}));

  std::string battery;
  std::vector<std::string> targets, checks;
  auto* verify_cmd = app.add_subcommand("verify", "Run named checks over groups and subgroup pairs");
  auto* bat = verify_cmd->add_option("--battery", battery, "Named battery")->check(CLI::IsMember({"core"}));
  auto* tgt = verify_cmd->add_option("--targets", targets, "Descriptors: specs, pair(P,S), diag(X), factor(X)");
  bat->excludes(tgt);
  verify_cmd->add_option("--checks", checks, "Check names (default: all)")->delimiter(',');
  verify_cmd->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string classdata_file;
  bool classdata_report = false;
  auto* classdata_cmd = app.add_subcommand("classdata", "Ingest class data");
  classdata_cmd->add_option("file", classdata_file, "Class-data file")->required();
  classdata_cmd->add_flag("--report", classdata_report, "Compare against the published Monster values");
  classdata_cmd->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string scan_check, sweep;
  auto* scan_cmd = app.add_subcommand("scan", "Search declared embeddings for counterexamples");
  scan_cmd->add_option("--check", scan_check, "Check name")->required();
  scan_cmd->add_option("--sweep", sweep, "e.g. young:6,alt:6,cyclic:6,dihedral:6,diag:s:3,factor:s:3,battery")
      ->required();
  scan_cmd->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cfg.threads > 0) set_thread_count(cfg.threads);
  try {
    if (*group_cmd) return cmd_group(spec, mode, cfg);
    if (*table_cmd) return cmd_table(spec, out, cfg);
    if (*kron_cmd) return cmd_kron(kron, cfg);
    if (*induce_cmd) return cmd_induce(induce, cfg);
    if (*sn_cmd) {
      if (sn_n == 0 && sn_range.empty()) throw MissingInput("sn stats needs --n or --range");
      return cmd_sn(sn_n, sn_range, sn_emit, cfg);
    }
    if (*verify_cmd) {
      if (battery.empty() && targets.empty()) battery = "core";
      std::vector<std::string> list;
      for (const auto& t : battery.empty() ? targets : verify::battery(battery)) {
        for (auto& item : verify::split_list(t)) list.push_back(std::move(item));
      }
      if (checks.empty()) checks = verify::check_names();
      return emit(verify::run_suite(list, checks, suite_options(cfg)), cfg.format);
    }
    if (*classdata_cmd) {
      auto data = chartab::parse_class_data(chartab::read_file(classdata_file));
      if (!classdata_report) {
        std::cout << "group " << data.name << "\norder " << str(data.order) << "\nclasses " << data.k() << "\n"
                  << "A " << str(mult::A_from_centralizers(data.centralizers)) << "\n";
        return 0;
      }
      return emit(verify::monster_report(data), cfg.format);
    }
    if (*scan_cmd) return emit(verify::counterexample_scan(scan_check, sweep, suite_options(cfg)), cfg.format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
