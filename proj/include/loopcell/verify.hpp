#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace loopcell {

struct ClaimResult {
  std::string claim_id;
  int n = 0;
  uint64_t seed = 0;
  int samples = 0;
  bool pass = false;
  std::string witness;  // reproduction data on failure, empty on pass
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;  // sorted by claim_id

  bool all_pass() const;
  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string summary_table() const;
};

struct VerifyOptions {
  std::vector<std::string> selectors{"all"};
  int n_min = 2;
  int n_max = 5;
  uint64_t seed = 1;
  int samples = 20;
};

extern const std::vector<std::string> kSelectors;
bool valid_selector(const std::string& s);

/// Runs the claim suites for the given selectors; deterministic in
/// (selectors, n-range, seed, samples).
VerificationReport run_claims(const VerifyOptions& opt);

}  // namespace loopcell
