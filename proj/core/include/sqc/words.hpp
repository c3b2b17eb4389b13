#pragma once
#include <string>
#include <string_view>
#include <vector>

#include "sqc/letters.hpp"

namespace sqc {

struct WLetter {
  Side side;
  int index;
  bool operator==(const WLetter&) const = default;
};
using Word = std::vector<WLetter>;

// tokens a1, b2^-1, A3; powers x^n and (w)^n; commutators [w1,w2] = w1 w2 w1^-1 w2^-1
Word parse_word(std::string_view text, const Alphabet& A, const Alphabet& B);
Word inverse(const Word& w, const Alphabet& A, const Alphabet& B);
std::string word_string(const Word& w, const Alphabet& A, const Alphabet& B);
// indices only; throws unless every letter is on side s
std::vector<int> letters_on(const Word& w, Side s);

}  // namespace sqc
