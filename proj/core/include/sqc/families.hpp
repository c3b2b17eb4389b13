#pragma once
#include <string>
#include <utility>
#include <vector>

#include "sqc/datum.hpp"

namespace sqc {

Datum gamma44();
Datum gamma33();
Datum figure2_datum();
// the worked (6,6) example
Datum worked_example_datum();
Datum gamma66(int k);      // 1..160
Datum gamma45(int k);      // 1..60
Datum gamma2n2n1(int n);   // n >= 2
Datum gamma64n(int n);     // n >= 2

struct FamilyInfo {
  std::string name;
  int k = 0;
  std::string h1, h2;       // tabulated projections
  int index = 0;            // tabulated |Q|
  int automorphisms = 0;    // tabulated count (Gamma66 only)
  std::vector<std::vector<std::string>> witness_sets;  // each set is one quotient; max is taken
};
FamilyInfo gamma66_info(int k);
FamilyInfo gamma45_info(int k);

// "Gamma44", "Gamma66(2)", "Gamma64n(3)", "fig2", "worked"
Datum named_family(const std::string& text);
std::vector<std::string> family_names();

// datum from local actions in cycle notation over letter tokens, e.g.
// {"a1", "(b1 b2)(b1^-1 b2^-1)"}; inverse letters get the inverse permutation
using LocalActionList = std::vector<std::pair<std::string, std::string>>;
Datum datum_from_local_actions(int d1, int d2, int tau1, int tau2, const LocalActionList& act_of_A,
                               const LocalActionList& act_of_B);

}  // namespace sqc
