#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqc/datum.hpp"
#include "sqc/words.hpp"

namespace sqc {

// Columns are letters: A-letter i is column i, B-letter j is column d1+j.
// Inverse pairs share no relator; x x^-1 = 1 is built into the coset table.
struct Presentation {
  int ncols = 0;
  std::vector<int> inv;                  // column -> inverse column
  std::vector<std::string> names;        // column names
  std::vector<std::vector<int>> relators;
  size_t square_relators = 0;            // the first ones come from squares
  int generator_count() const;           // inverse pairs count once
};

Presentation presentation_of(const Datum& d, const std::vector<std::string>& extra_relators = {});
std::vector<int> word_columns(const Datum& d, const Word& w);
std::vector<int> word_columns(const Datum& d, const std::string& text);

struct CosetResult {
  bool closed = false;         // false: limit exceeded
  size_t index = 0;
  size_t max_live = 0;         // peak number of live cosets
  size_t defined = 0;          // total cosets ever defined
  std::vector<std::vector<int>> table;  // closed table, row per coset
};

// HLT with lookahead; never returns a wrong finite index
CosetResult coset_enumerate(const Presentation& p, const std::vector<std::vector<int>>& subgroup,
                            size_t max_cosets = 1000000);

struct QuotientReport {
  bool closed = false;
  size_t order = 0;
  std::vector<long long> abelian_invariants;  // of the abelianization, 0 = infinite cyclic
  long long exponent = 0;                    // 0 when not computed
  std::vector<std::string> relators;         // extra relators used
};

// Q = group / << relators >> via the trivial subgroup
QuotientReport quotient(const Datum& d, const std::vector<std::string>& relators, size_t max_cosets = 1000000);

struct SimpleIndexReport {
  bool closed = false;
  size_t index = 0;  // max over the witness sets
  std::vector<QuotientReport> per_set;
};
SimpleIndexReport simple_index(const Datum& d, const std::vector<std::vector<std::string>>& witness_sets,
                               size_t max_cosets = 1000000);

// index of the subgroup generated by same-type length-2 products
std::optional<size_t> type_preserving_index(const Datum& d, size_t max_cosets = 1000000);

// integer Smith normal form diagonal of an exponent-sum matrix (rows = relators)
std::vector<long long> abelian_invariants(const std::vector<std::vector<long long>>& m, int ncols);

}  // namespace sqc
