#include "sqc/words.hpp"

#include <algorithm>
#include <cctype>

namespace sqc {

namespace {

struct WordParser {
  std::string_view s;
  size_t i = 0;
  const Alphabet& A;
  const Alphabet& B;

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, 1, int(i) + 1); }
  void skip() {
    while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*' || s[i] == '.')) ++i;
  }
  bool at_end() {
    skip();
    return i >= s.size();
  }

  Word seq(bool inner) {
    Word w;
    while (true) {
      skip();
      if (i >= s.size()) {
        if (inner) error("unterminated group");
        return w;
      }
      char c = s[i];
      if (c == ')' || c == ']' || c == ',') {
        if (!inner) error(std::string("unexpected '") + c + "'");
        return w;
      }
      Word it = item();
      w.insert(w.end(), it.begin(), it.end());
    }
  }

  Word atom() {
    skip();
    char c = s[i];
    if (c == '(') {
      ++i;
      Word w = seq(true);
      if (i >= s.size() || s[i] != ')') error("expected ')'");
      ++i;
      return w;
    }
    if (c == '[') {
      ++i;
      Word x = seq(true);
      if (i >= s.size() || s[i] != ',') error("expected ',' in commutator");
      ++i;
      Word y = seq(true);
      if (i >= s.size() || s[i] != ']') error("expected ']'");
      ++i;
      Word w = x;
      w.insert(w.end(), y.begin(), y.end());
      Word xi = inverse(x, A, B), yi = inverse(y, A, B);
      w.insert(w.end(), xi.begin(), xi.end());
      w.insert(w.end(), yi.begin(), yi.end());
      return w;
    }
    char lc = char(std::tolower(static_cast<unsigned char>(c)));
    if (lc != 'a' && lc != 'b') error(std::string("unexpected character '") + c + "'");
    size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) error("letter without index");
    ParsedLetter l{};
    try {
      l = parse_letter(s.substr(i, j - i), A, B);
    } catch (const ParseError& e) {
      error(e.what());
    }
    i = j;
    return Word{{l.side, l.index}};
  }

  Word item() {
    Word w = atom();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      bool neg = false;
      if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
      size_t j = i;
      long n = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) n = n * 10 + (s[j++] - '0');
      if (j == i) error("expected exponent");
      if (n > 1000000) error("exponent too large");
      i = j;
      Word base = neg ? inverse(w, A, B) : w;
      Word out;
      for (long k = 0; k < n; ++k) out.insert(out.end(), base.begin(), base.end());
      return out;
    }
    return w;
  }
};

}  // namespace

Word parse_word(std::string_view text, const Alphabet& A, const Alphabet& B) {
  WordParser p{text, 0, A, B};
  Word w = p.seq(false);
  return w;
}

Word inverse(const Word& w, const Alphabet& A, const Alphabet& B) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.index = (l.side == Side::A ? A : B).inv(l.index);
  return r;
}

std::string word_string(const Word& w, const Alphabet& A, const Alphabet& B) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += letter_token(l.side, l.side == Side::A ? A : B, l.index);
  }
  return out;
}

std::vector<int> letters_on(const Word& w, Side s) {
  std::vector<int> out;
  for (const auto& l : w) {
    if (l.side != s) throw ParseError(std::string("word must use only ") + (s == Side::A ? "A" : "B") + "-letters");
    out.push_back(l.index);
  }
  return out;
}

}  // namespace sqc
