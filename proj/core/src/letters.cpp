#include "sqc/letters.hpp"

#include <cctype>

namespace sqc {

Alphabet::Alphabet(int d_, int tau_) : d(d_), tau(tau_) {
  if (d < 1 || tau < 0 || tau > d || (d - tau) % 2 != 0)
    throw std::invalid_argument("bad alphabet: d=" + std::to_string(d) + " tau=" + std::to_string(tau));
}

std::vector<int> Alphabet::inverse_table() const {
  std::vector<int> t(d);
  for (int i = 0; i < d; ++i) t[i] = inv(i);
  return t;
}

ParseError::ParseError(const std::string& msg, int line_, int col_)
    : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg
                                   : msg),
      line(line_),
      col(col_) {}

std::string letter_token(Side s, const Alphabet& al, int i) {
  char c = s == Side::A ? 'a' : 'b';
  if (al.self_inverse(i)) return std::string(1, char(std::toupper(c))) + std::to_string(i + 1);
  if (i < al.pairs()) return std::string(1, c) + std::to_string(i + 1);
  return std::string(1, c) + std::to_string(al.d - i) + "^-1";
}

ParsedLetter parse_letter(std::string_view tok, const Alphabet& A, const Alphabet& B) {
  if (tok.size() < 2) throw ParseError("bad letter '" + std::string(tok) + "'");
  char c = tok[0];
  bool upper = std::isupper(static_cast<unsigned char>(c));
  char lc = char(std::tolower(static_cast<unsigned char>(c)));
  if (lc != 'a' && lc != 'b') throw ParseError("bad letter '" + std::string(tok) + "'");
  Side s = lc == 'a' ? Side::A : Side::B;
  const Alphabet& al = s == Side::A ? A : B;
  size_t pos = 1;
  int n = 0;
  if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos])))
    throw ParseError("bad letter '" + std::string(tok) + "'");
  while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) n = n * 10 + (tok[pos++] - '0');
  bool inverse = false;
  if (pos < tok.size()) {
    if (tok.substr(pos) == "^-1")
      inverse = true;
    else
      throw ParseError("bad letter suffix in '" + std::string(tok) + "'");
  }
  if (n < 1 || n > al.d)
    throw ParseError("letter index out of range in '" + std::string(tok) + "' (d=" + std::to_string(al.d) + ")");
  int i = n - 1;
  if (upper && !al.self_inverse(i))
    throw ParseError("'" + std::string(tok) + "' is not self-inverse with tau=" + std::to_string(al.tau));
  if (inverse) i = al.inv(i);
  return {s, i};
}

}  // namespace sqc
