#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbx/character_table.hpp"
#include "mbx/group.hpp"
#include "mbx/mult.hpp"
#include "mbx/table_io.hpp"

namespace mbx::verify {

enum class Verdict { holds, fails, inapplicable };

std::string_view to_string(Verdict v);

/// An exact expression with a short decimal rendering for display only.
struct Quantity {
  std::string exact;
  std::string approx;
};

struct CheckResult {
  std::string check;
  std::string target;
  /// Observations record what happened but never count as failures.
  bool observation = false;
  Verdict verdict = Verdict::inapplicable;
  /// The inequality or identity in words, e.g. "b^2/sqrt(k|G|) <= K <= b".
  std::string relation;
  std::optional<Quantity> lhs;
  std::optional<Quantity> value;
  std::optional<Quantity> rhs;
  /// Formula of the source statement.
  std::string reference;
  /// Violating or attaining tuple; always set when verdict is fails.
  std::string witness;
  /// Why a check is inapplicable, or extra detail.
  std::string reason;
};

struct TargetError {
  std::string target;
  std::string message;
};

struct SuiteReport {
  std::string title;
  std::vector<CheckResult> results;
  std::vector<TargetError> errors;
  /// Digest of the targets and checks, or of the ingested class data.
  std::string input_digest;
  double elapsed_seconds = 0;
  std::string timestamp;

  std::size_t count(Verdict v, bool observations) const;
};

struct SuiteOptions {
  std::size_t element_cap = group::kDefaultElementCap;
  std::size_t cube_cap = mult::kDefaultCubeCap;
  std::uint64_t seed = 0;
  /// Called before each target as (position, total, descriptor).
  std::function<void(std::size_t, std::size_t, const std::string&)> progress;
};

/// Everything a check may need about one target, computed on first use.
/// Targets are family descriptors for groups, and `pair(<parent>,<sub>)`,
/// `diag(<spec>)` or `factor(<spec>)` for subgroup pairs. In a pair the
/// subgroup's generators are read on the parent's points.
class Subject {
 public:
  Subject(std::string descriptor, const SuiteOptions& options);
  ~Subject();
  Subject(const Subject&) = delete;
  Subject& operator=(const Subject&) = delete;

  const std::string& descriptor() const { return descriptor_; }
  const SuiteOptions& options() const { return options_; }
  bool is_pair() const;
  bool is_diagonal() const;
  bool is_factor() const;

  const group::FiniteGroup& group();
  const chartab::CharacterTable& table();
  const mult::KronCube& cube();
  const mult::KronStats& stats();

  const group::SubgroupEmbedding& embedding();
  const group::ClassFusion& fusion();
  const chartab::CharacterTable& sub_table();
  const mult::InducedMatrix& induced();

 private:
  struct Cache;
  std::string descriptor_;
  SuiteOptions options_;
  std::unique_ptr<Cache> cache_;
};

/// Every registered check name, group checks first.
const std::vector<std::string>& check_names();
bool is_check(std::string_view name);
bool is_pair_check(std::string_view name);

/// Runs one named check. Throws MissingInput when the subject lacks what the
/// check needs (a pair for pair checks, a group for group checks).
CheckResult run_check(std::string_view name, Subject& subject);

/// Target list of a named battery; only "core" exists.
std::vector<std::string> battery(std::string_view name);

/// Checks x targets in target order, restricted to checks matching each
/// target's kind; an empty check list gives an empty report. Per-target
/// errors are collected and the remaining targets still run.
SuiteReport run_suite(const std::vector<std::string>& targets, const std::vector<std::string>& checks,
                      const SuiteOptions& options = {});

/// Class-data quantities of the Monster compared digit by digit with the
/// published values. With full character values, also K(M) and the average.
SuiteReport monster_report(const chartab::ClassData& data);

/// Splits at commas outside parentheses, so pair(P,S) stays whole.
std::vector<std::string> split_list(std::string_view text);

/// Expands a sweep such as "young:6,alt:6,cyclic:6,dihedral:6,diag:s:3,factor:s:3,battery"
/// into targets.
std::vector<std::string> sweep_targets(std::string_view sweep);

SuiteReport counterexample_scan(std::string_view check, std::string_view sweep, const SuiteOptions& options = {});

constexpr std::string_view kVersion = "mbx 1.0.0";
constexpr std::string_view kSchema = "mbx.report/1";

/// 64-bit FNV-1a as 16 hex digits.
std::string digest(std::string_view text);

/// 0: no failures; 1: some check fails; 2: a target could not be evaluated.
int exit_code(const SuiteReport& report);

/// One JSON object per line: a header, the results, and a summary with a
/// digest over every line except the volatile fields.
std::string to_json_lines(const SuiteReport& report);
std::string to_csv(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace mbx::verify
