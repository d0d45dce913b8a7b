#pragma once

// Verification suites: exact identities between independently computed classes.

#include <string>
#include <vector>

#include "eqorbit/orbit_classes.hpp"
#include "eqorbit/render.hpp"

namespace eqorbit {

struct Check {
  std::string suite;
  std::string name;
  bool ok = false;
  bool skipped = false;
  std::string lhs, rhs;                   // text forms (computed, expected)
  nlohmann::json lhs_json, rhs_json;      // canonical forms
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;

  bool ok() const;
  const Check* first_failure() const;
};

struct VerifyOptions {
  std::vector<KazarianLocalClass> user_classes;
  bool inject_fault = false;  // corrupt the first expected constant of each suite
};

/// points quartics cubics predegrees crosschecks properties
const std::vector<std::string>& suite_names();

/// `selector` is a suite name or "all"; unknown names raise UsageError.
std::vector<SuiteReport> run_verify(const std::string& selector, const VerifyOptions& opt = {});
SuiteReport run_suite(const std::string& suite, OrbitEngine& engine, const VerifyOptions& opt);

bool all_ok(const std::vector<SuiteReport>& reports);
/// Deterministic summary; on failure lists the first failing identity with both sides.
std::string render_verify(const std::vector<SuiteReport>& reports, Format format);

}  // namespace eqorbit
