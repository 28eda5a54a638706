#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace topohopf {

struct Counterexample {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

/// Result of one named family of checks.
struct GroupReport {
  std::string name;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::optional<Counterexample> first_counterexample;
};

struct SuiteReport {
  std::string suite;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t attempted = 0;
  std::size_t passed = 0;
  std::optional<Counterexample> counterexample;
  std::vector<GroupReport> groups;
  double wall_time_ms = 0;

  bool ok() const noexcept { return passed == attempted; }
};

enum class Suite { Hopf, Ribbon, Pairing, Gamma, Stanley, Order, Counts };

const char* to_string(Suite s) noexcept;
std::optional<Suite> suite_from_string(std::string_view name);
const std::vector<Suite>& all_suites();

struct SuiteOptions {
  std::size_t max_degree = 4;
  bool slow = false;
  bool parallel = true;
  std::uint64_t seed = 0x5eed2012;
  /// Random instances for the sampled axiom checks; raised tenfold by `slow`.
  std::size_t samples = 1000;
};

inline constexpr std::size_t kFastDegreeCap = 4;
inline constexpr std::size_t kSlowDegreeCap = 6;

/// Throws Error(CapExceeded) when max_degree is above the cap for the mode.
SuiteReport verify_suite(Suite suite, const SuiteOptions& options = {});

/// Check i returns a counterexample or nothing.
using Check = std::function<std::optional<Counterexample>(std::size_t)>;

/// Runs checks 0..count-1 across threads. The reported counterexample is
/// the one with the lowest index, so the report does not depend on
/// scheduling.
GroupReport run_checks(std::string name, std::size_t count, const Check& check);

/// Single-threaded reference for run_checks.
GroupReport run_checks_serial(std::string name, std::size_t count, const Check& check);

/// Aggregates groups into a report; the first failing group supplies the
/// counterexample.
SuiteReport make_report(std::string suite, std::size_t min_degree, std::size_t max_degree,
                        std::vector<GroupReport> groups, double wall_time_ms);

}  // namespace topohopf
