#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sqc {

enum class Side : uint8_t { A = 0, B = 1 };

// Letters are 0-based indices into one alphabet of size d.
// With p = (d - tau)/2: [0,p) paired with [p+tau,d) via i <-> d-1-i,
// and [p,p+tau) self-inverse.
struct Alphabet {
  int d = 0;
  int tau = 0;

  Alphabet() = default;
  Alphabet(int d_, int tau_);

  int pairs() const { return (d - tau) / 2; }
  int inv(int i) const {
    int p = pairs();
    return (i >= p && i < p + tau) ? i : d - 1 - i;
  }
  bool self_inverse(int i) const { return i >= pairs() && i < pairs() + tau; }
  std::vector<int> inverse_table() const;
};

struct ParseError : std::runtime_error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_ = 0, int col_ = 0);
};

// 'a3', 'a2^-1', 'A2' style tokens.
std::string letter_token(Side s, const Alphabet& al, int i);
// Returns the letter index; side must match 'expect' unless expect_any.
struct ParsedLetter {
  Side side;
  int index;
};
ParsedLetter parse_letter(std::string_view tok, const Alphabet& A, const Alphabet& B);

}  // namespace sqc
