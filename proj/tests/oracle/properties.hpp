#pragma once
#include <cstdint>
#include <string>

namespace sqc::oracle {

struct PropertyResult {
  std::string name;
  size_t checks = 0;
  size_t failures = 0;
  std::string first_failure;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0 && checks > 0; }
};

// s_k under 20 random sphere colorings, k <= 3, against the ball and DP values
PropertyResult coloring_independence(uint32_t seed = 1);
// parity DP against listed paths, graphs up to 8 vertices, k <= 5
PropertyResult paths_vs_dp(uint32_t seed = 2);
// alpha on every subset of {0..7}, both parities of d; tree oracle on {0..5} for d = 6
PropertyResult alpha_exhaustive();
// GF(2) solver against exhaustive sign vectors, up to 6 points
PropertyResult sign_systems(uint32_t seed = 3);
// canonical form against orbit closure on every (3,3)-datum
PropertyResult canonical_vs_orbits();

}  // namespace sqc::oracle
