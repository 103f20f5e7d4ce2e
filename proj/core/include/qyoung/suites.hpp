#ifndef QYOUNG_SUITES_HPP
#define QYOUNG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qyoung {
namespace suites {

struct CheckResult {
  std::string id;         // stable check identifier
  std::string statement;  // the identity being verified, in plain algebra text
  bool pass = false;
  std::string residual;   // nonempty only on FAIL
};

struct SuiteReport {
  std::string suite;
  std::string mode;  // "exact" | "sampled"
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0.0;  // excluded from JSON so reports stay byte-identical

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct Options {
  std::string mode = "exact";  // "exact" | "sampled"
  std::uint64_t seed = 0;
};

/// The individual suite names, in canonical order (excludes "all").
const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name or mode.
SuiteReport run_suite(const std::string& name, const Options& opt);

/// Runs every suite in canonical order.
std::vector<SuiteReport> run_all(const Options& opt);

/// Stable JSON rendering (fixed key order, no timing fields).
std::string to_json(const SuiteReport& r);
std::string to_json(const std::vector<SuiteReport>& rs);
/// Human-readable rendering, one PASS/FAIL line per check.
std::string to_text(const SuiteReport& r);

/// Effective worker count: QYOUNG_THREADS if set (min 1), else hardware.
int thread_limit();

}  // namespace suites
}  // namespace qyoung

#endif
