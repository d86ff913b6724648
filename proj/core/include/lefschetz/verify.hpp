#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lefschetz {

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::vector<int> dims{4, 6, 8};
  int samples_per_dim = 20;
  int forms_per_degree = 2;
};

struct PropertyCount {
  std::size_t passed = 0;
  std::size_t total = 0;
  bool ok() const { return passed == total; }
};

struct VerifySummary {
  std::map<std::string, PropertyCount> properties;
  std::vector<std::string> failures; // "<structure>: <check>"
  std::size_t structures = 0;

  bool all_passed() const { return failures.empty(); }
  std::string str() const;
};

/// Runs every identity, theorem and equivalence check on the corpus and on
/// seeded random samples, plus the negative checks (a Jacobi violation and a
/// flipped Poisson sign must both be rejected). Deterministic in the options.
VerifySummary run_verify(const VerifyOptions &options);

} // namespace lefschetz
