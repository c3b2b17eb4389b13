#pragma once
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sqc/classify.hpp"
#include "sqc/datum.hpp"

namespace sqc {

struct Constraint {
  enum Kind { None, TorsionFree, FixedTau } kind = None;
  int tau1 = 0, tau2 = 0;
  std::string str() const;  // "none", "tf", "tau=1,3"
};

struct EnumOptions {
  int threads = 0;                 // 0: hardware concurrency
  std::string checkpoint;          // JSONL file; empty: none
  size_t max_results = 0;          // 0: unlimited
};

struct EnumResult {
  std::vector<Datum> data;         // canonical representatives, sorted by encoding
  bool partial = false;            // a limit stopped the search
  size_t shards = 0;
  size_t shards_resumed = 0;
  uint64_t nodes = 0;
};

// (tau1, tau2) pairs searched for a constraint
std::vector<std::pair<int, int>> tau_pairs(int d1, int d2, const Constraint& c);

EnumResult enumerate_data(int d1, int d2, const Constraint& c, const EnumOptions& opt = {});

enum class Verdict { Reducible, Irreducible, Undetermined };
std::string verdict_string(Verdict v);  // "red", "irred", "?"

struct ClassVerdict {
  Verdict verdict = Verdict::Undetermined;
  PossiblyIrreducible possibly;
  int certified_side = 0;  // side whose Burger-Mozes test certified nondiscreteness
};
ClassVerdict census_verdict(const Datum& d);

struct CensusRow {
  int d1 = 0, d2 = 0;
  std::string constraint;
  size_t total = 0, reducible = 0, irreducible = 0, undetermined = 0;
  bool partial = false;
  std::string csv() const;
  static std::string csv_header();
};

// quotes a field holding a comma or quote
std::string csv_field(const std::string& s);

struct CensusEntry {
  Datum datum;
  ClassVerdict verdict;
  std::string key1, key2;  // projection identifiers, filled for non-reducible classes
};

struct CensusResult {
  CensusRow row;
  std::vector<CensusEntry> entries;
  std::map<std::pair<std::string, std::string>, size_t> cells;  // projection table
};

struct CensusOptions {
  EnumOptions enumeration;
  bool projections = true;
  int k_max = -1;
};

CensusResult census(int d1, int d2, const Constraint& c, const CensusOptions& opt = {});

// projection identifier of one side: descriptor when classification succeeds, else Sym(6) class label
std::string projection_key(const Datum& d, int side, int k_max = -1);

// parallel loop with deterministic result placement
void parallel_for(size_t n, int threads, const std::function<void(size_t)>& body);

}  // namespace sqc
