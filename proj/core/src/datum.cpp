#include "sqc/datum.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace sqc {

Datum::Datum(int d1, int d2, int tau1, int tau2, std::vector<Quad> quads, bool close)
    : A_(d1, tau1), B_(d2, tau2) {
  if (d1 * d2 > 255) throw std::invalid_argument("degrees too large (d1*d2 must be <= 255)");
  for (const Quad& q : quads)
    if (q[0] >= d1 || q[2] >= d1 || q[1] >= d2 || q[3] >= d2) throw std::invalid_argument("quad letter out of range");
  if (close) {
    std::vector<Quad> all;
    for (const Quad& q : quads)
      for (const Quad& o : orbit(q)) all.push_back(o);
    quads = std::move(all);
  }
  std::sort(quads.begin(), quads.end());
  quads.erase(std::unique(quads.begin(), quads.end()), quads.end());
  R_ = std::move(quads);
  corner_.assign(d1 * d2, -1);
  for (size_t i = 0; i < R_.size(); ++i) {
    int c = R_[i][0] * d2 + R_[i][1];
    if (corner_[c] < 0) corner_[c] = int(i);
  }
}

Quad Datum::sigma(const Quad& q) const {
  return {uint8_t(A_.inv(q[2])), uint8_t(B_.inv(q[1])), uint8_t(A_.inv(q[0])), uint8_t(B_.inv(q[3]))};
}

Quad Datum::rho(const Quad& q) const { return {q[2], q[3], q[0], q[1]}; }

std::vector<Quad> Datum::orbit(const Quad& q) const { return expand_square(q, A_, B_); }

std::vector<Quad> Datum::square_representatives() const {
  std::vector<Quad> reps;
  for (const Quad& q : R_) {
    auto o = orbit(q);
    if (o.front() == q) reps.push_back(q);
  }
  return reps;
}

std::vector<Quad> expand_square(const Quad& q, const Alphabet& A, const Alphabet& B) {
  auto sig = [&](const Quad& x) {
    return Quad{uint8_t(A.inv(x[2])), uint8_t(B.inv(x[1])), uint8_t(A.inv(x[0])), uint8_t(B.inv(x[3]))};
  };
  auto rh = [](const Quad& x) { return Quad{x[2], x[3], x[0], x[1]}; };
  std::vector<Quad> o{q, sig(q), rh(q), sig(rh(q))};
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

std::string quad_string(const Quad& q, const Alphabet& A, const Alphabet& B) {
  return letter_token(Side::A, A, q[0]) + " " + letter_token(Side::B, B, q[1]) + " " + letter_token(Side::A, A, q[2]) +
         " " + letter_token(Side::B, B, q[3]);
}

namespace {

std::vector<std::pair<std::string, int>> split_tokens(std::string_view line) {
  std::vector<std::pair<std::string, int>> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.emplace_back(std::string(line.substr(i, j - i)), int(i) + 1);
    i = j;
  }
  return out;
}

Quad quad_from_tokens(const std::vector<std::pair<std::string, int>>& toks, size_t first, const Alphabet& A,
                      const Alphabet& B, int line) {
  if (toks.size() - first != 4)
    throw ParseError("a square needs exactly 4 letters", line, toks.empty() ? 1 : toks[0].second);
  Quad q{};
  for (int k = 0; k < 4; ++k) {
    const auto& [tok, col] = toks[first + k];
    ParsedLetter l{};
    try {
      l = parse_letter(tok, A, B);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line, col);
    }
    Side want = (k % 2 == 0) ? Side::A : Side::B;
    if (l.side != want) throw ParseError(std::string("expected ") + (want == Side::A ? "an A" : "a B") + "-letter", line, col);
    q[k] = uint8_t(l.index);
  }
  return q;
}

}  // namespace

Quad parse_quad(std::string_view text, const Alphabet& A, const Alphabet& B) {
  auto toks = split_tokens(text);
  return quad_from_tokens(toks, 0, A, B, 0);
}

std::vector<Quad> parse_square_list(std::string_view text, const Alphabet& A, const Alphabet& B) {
  std::vector<Quad> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    if (!split_tokens(piece).empty()) out.push_back(parse_quad(piece, A, B));
    start = end + 1;
  }
  return out;
}

Datum parse_datum(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int d1 = -1, d2 = -1, t1 = -1, t2 = -1;
  bool have_header = false;
  Alphabet A, B;
  std::vector<Quad> quads;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (toks[0].first == "datum") {
      if (have_header) throw ParseError("duplicate datum header", line_no, toks[0].second);
      for (size_t i = 1; i < toks.size(); ++i) {
        const auto& [tok, col] = toks[i];
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("expected key=value", line_no, col);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        int v = 0;
        try {
          size_t used = 0;
          v = std::stoi(val, &used);
          if (used != val.size()) throw std::invalid_argument("");
        } catch (...) {
          throw ParseError("bad integer '" + val + "'", line_no, col + int(eq) + 1);
        }
        if (key == "d1") d1 = v;
        else if (key == "d2") d2 = v;
        else if (key == "tau1") t1 = v;
        else if (key == "tau2") t2 = v;
        else throw ParseError("unknown key '" + key + "'", line_no, col);
      }
      if (d1 < 0 || d2 < 0 || t1 < 0 || t2 < 0) throw ParseError("header needs d1, d2, tau1, tau2", line_no, 1);
      if (d1 < 1 || d2 < 1) throw ParseError("degrees must be positive", line_no, 1);
      if (t1 > d1 || t2 > d2 || (d1 - t1) % 2 || (d2 - t2) % 2)
        throw ParseError("tau must have the parity of d and lie in 0..d", line_no, 1);
      A = Alphabet(d1, t1);
      B = Alphabet(d2, t2);
      have_header = true;
    } else if (toks[0].first == "square") {
      if (!have_header) throw ParseError("square before datum header", line_no, toks[0].second);
      quads.push_back(quad_from_tokens(toks, 1, A, B, line_no));
    } else {
      throw ParseError("unknown directive '" + toks[0].first + "'", line_no, toks[0].second);
    }
  }
  if (!have_header) throw ParseError("missing datum header", line_no > 0 ? line_no : 1, 1);
  return Datum(d1, d2, t1, t2, std::move(quads));
}

Datum load_datum(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_datum(ss.str());
}

std::string format_datum(const Datum& d, const std::string& comment) {
  std::ostringstream o;
  if (!comment.empty()) o << "# " << comment << "\n";
  o << "datum d1=" << d.d1() << " d2=" << d.d2() << " tau1=" << d.tau1() << " tau2=" << d.tau2() << "\n";
  for (const Quad& q : d.square_representatives()) o << "square " << quad_string(q, d.A(), d.B()) << "\n";
  return o.str();
}

ValidationReport validate(const Datum& d) {
  ValidationReport rep;
  const int d1 = d.d1(), d2 = d.d2();
  auto fail = [&](bool& flag, std::string code, std::string msg) {
    flag = false;
    rep.valid = false;
    rep.issues.push_back({std::move(code), std::move(msg)});
  };
  const auto& R = d.quads();
  if (int(R.size()) != d1 * d2) {
    bool dummy = true;
    fail(dummy, "cardinality", "|R| = " + std::to_string(R.size()) + " but d1*d2 = " + std::to_string(d1 * d2));
    rep.cardinality_ok = false;
  }
  std::set<Quad> Rs(R.begin(), R.end());
  for (const Quad& q : R) {
    for (const Quad& o : d.orbit(q))
      if (!Rs.count(o)) {
        fail(rep.closure_ok, "closure",
             "R is not closed: " + quad_string(o, d.A(), d.B()) + " missing (image of " + quad_string(q, d.A(), d.B()) +
                 ")");
      }
  }
  // a corner repeated inside one orbit cannot occur in any datum
  for (const Quad& q : R) {
    auto o = d.orbit(q);
    if (o.front() != q) continue;
    std::set<std::pair<int, int>> seen;
    for (const Quad& x : o)
      if (!seen.insert({x[0], x[1]}).second) {
        fail(rep.no_forbidden_squares, "forbidden_square",
             "square [" + quad_string(q, d.A(), d.B()) + "] repeats the corner (" +
                 letter_token(Side::A, d.A(), x[0]) + ", " + letter_token(Side::B, d.B(), x[1]) + ")");
        break;
      }
  }
  // the four corner positions: (q0,q1), (q1,q2), (q2,q3), (q3,q0)
  static const char* pos_name[4] = {"(a,b)", "(b,a')", "(a',b')", "(b',a)"};
  for (int p = 0; p < 4; ++p) {
    std::vector<int> cnt(d1 * d2, 0);
    for (const Quad& q : R) {
      int x = q[p], y = q[(p + 1) % 4];
      int a = (p % 2 == 0) ? x : y, b = (p % 2 == 0) ? y : x;
      cnt[a * d2 + b]++;
    }
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d2; ++b) {
        int c = cnt[a * d2 + b];
        if (c == 1) continue;
        std::string corner = "(" + letter_token(Side::A, d.A(), a) + ", " + letter_token(Side::B, d.B(), b) + ")";
        fail(rep.coverage_ok, "coverage",
             std::string(c == 0 ? "missing corner " : "repeated corner ") + corner + " in position " + pos_name[p] +
                 (c > 1 ? " (" + std::to_string(c) + " times)" : ""));
      }
  }
  return rep;
}

bool is_torsion_free(const Datum& d) {
  if (d.tau1() != 0 || d.tau2() != 0) return false;
  for (const Quad& q : d.quads())
    if (d.orbit(q).size() != 4) return false;
  return true;
}

Datum mirror(const Datum& d) {
  std::vector<Quad> q;
  q.reserve(d.quads().size());
  for (const Quad& x : d.quads()) q.push_back({x[1], x[2], x[3], x[0]});
  return Datum(d.d2(), d.d1(), d.tau2(), d.tau1(), std::move(q), false);
}

Datum apply_equivalence(const Datum& d, const std::vector<int>& alpha, const std::vector<int>& beta, bool swap) {
  std::vector<Quad> q;
  if (!swap) {
    for (const Quad& x : d.quads())
      q.push_back({uint8_t(alpha[x[0]]), uint8_t(beta[x[1]]), uint8_t(alpha[x[2]]), uint8_t(beta[x[3]])});
    return Datum(d.d1(), d.d2(), d.tau1(), d.tau2(), std::move(q), false);
  }
  for (const Quad& x : d.quads())
    q.push_back({uint8_t(beta[x[1]]), uint8_t(alpha[x[2]]), uint8_t(beta[x[3]]), uint8_t(alpha[x[0]])});
  return Datum(d.d2(), d.d1(), d.tau2(), d.tau1(), std::move(q), false);
}

std::vector<std::vector<int>> involution_centralizer(const Alphabet& al) {
  std::vector<std::vector<int>> out;
  std::vector<int> img(al.d, -1);
  std::vector<char> used(al.d, 0);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < al.d && img[i] >= 0) ++i;
    if (i == al.d) {
      out.push_back(img);
      return;
    }
    bool si = al.self_inverse(i);
    for (int j = 0; j < al.d; ++j) {
      if (used[j] || al.self_inverse(j) != si) continue;
      int ii = al.inv(i), ij = al.inv(j);
      if (!si && used[ij]) continue;
      img[i] = j;
      used[j] = 1;
      if (!si) {
        img[ii] = ij;
        used[ij] = 1;
      }
      self(self, i + 1);
      img[i] = -1;
      used[j] = 0;
      if (!si) {
        img[ii] = -1;
        used[ij] = 0;
      }
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<uint8_t> corner_table(const Datum& d) {
  std::vector<uint8_t> T(d.d1() * d.d2(), EquivalenceGroup::kEmpty);
  for (int a = 0; a < d.d1(); ++a)
    for (int b = 0; b < d.d2(); ++b)
      if (d.has_corner(a, b)) {
        const Quad& q = d.at(a, b);
        T[a * d.d2() + b] = uint8_t(q[2] * d.d2() + q[3]);
      }
  return T;
}

Datum datum_from_table(const Alphabet& A, const Alphabet& B, const uint8_t* T) {
  std::vector<Quad> q;
  for (int a = 0; a < A.d; ++a)
    for (int b = 0; b < B.d; ++b) {
      uint8_t v = T[a * B.d + b];
      if (v == EquivalenceGroup::kEmpty) continue;
      q.push_back({uint8_t(a), uint8_t(b), uint8_t(v / B.d), uint8_t(v % B.d)});
    }
  return Datum(A.d, B.d, A.tau, B.tau, std::move(q), false);
}

std::vector<uint8_t> encode(const Datum& d) {
  std::vector<uint8_t> e{uint8_t(d.d1()), uint8_t(d.d2()), uint8_t(d.tau1()), uint8_t(d.tau2())};
  auto T = corner_table(d);
  for (int a = 0; a < d.d1(); ++a)
    for (int b = 0; b < d.d2(); ++b) {
      uint8_t v = T[a * d.d2() + b];
      if (v == EquivalenceGroup::kEmpty) {
        e.push_back(0xFF);
        e.push_back(0xFF);
      } else {
        e.push_back(uint8_t(v / d.d2()));
        e.push_back(uint8_t(v % d.d2()));
      }
    }
  return e;
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (uint8_t b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

namespace {

// minimal table over same-side relabelings; returns table
std::vector<uint8_t> min_table_same_side(const Datum& d) {
  const int d1 = d.d1(), d2 = d.d2(), n = d1 * d2;
  auto T = corner_table(d);
  auto CA = involution_centralizer(d.A());
  auto CB = involution_centralizer(d.B());
  std::vector<uint8_t> best = T, cur(n);
  std::vector<int> ai(d1), bi(d2);
  for (const auto& al : CA) {
    for (int i = 0; i < d1; ++i) ai[al[i]] = i;
    for (const auto& be : CB) {
      for (int i = 0; i < d2; ++i) bi[be[i]] = i;
      // lazy lexicographic comparison against best
      int cmp = 0;
      for (int c = 0; c < n; ++c) {
        int a = c / d2, b = c % d2;
        uint8_t v = T[ai[a] * d2 + bi[b]];
        uint8_t w = (v == EquivalenceGroup::kEmpty) ? v : uint8_t(al[v / d2] * d2 + be[v % d2]);
        cur[c] = w;
        if (cmp == 0) {
          if (w < best[c]) cmp = -1;
          else if (w > best[c]) { cmp = 1; break; }
        }
      }
      if (cmp < 0) best = cur;
    }
  }
  return best;
}

std::vector<uint8_t> with_header(const Alphabet& A, const Alphabet& B, const std::vector<uint8_t>& T) {
  std::vector<uint8_t> e{uint8_t(A.d), uint8_t(B.d), uint8_t(A.tau), uint8_t(B.tau)};
  for (uint8_t v : T) {
    if (v == EquivalenceGroup::kEmpty) {
      e.push_back(0xFF);
      e.push_back(0xFF);
    } else {
      e.push_back(uint8_t(v / B.d));
      e.push_back(uint8_t(v % B.d));
    }
  }
  return e;
}

}  // namespace

CanonicalForm canonical_form(const Datum& d) {
  CanonicalForm cf;
  auto direct = with_header(d.A(), d.B(), min_table_same_side(d));
  if (d.d1() != d.d2()) {
    cf.bytes = std::move(direct);
    return cf;
  }
  Datum m = mirror(d);
  auto swapped = with_header(m.A(), m.B(), min_table_same_side(m));
  if (swapped < direct) {
    cf.bytes = std::move(swapped);
    cf.swapped = true;
  } else {
    cf.bytes = std::move(direct);
  }
  return cf;
}

Datum canonical_datum(const Datum& d) {
  auto cf = canonical_form(d);
  Alphabet A(cf.bytes[0], cf.bytes[2]), B(cf.bytes[1], cf.bytes[3]);
  std::vector<uint8_t> T;
  for (size_t i = 4; i + 1 < cf.bytes.size(); i += 2)
    T.push_back(cf.bytes[i] == 0xFF ? EquivalenceGroup::kEmpty : uint8_t(cf.bytes[i] * B.d + cf.bytes[i + 1]));
  return datum_from_table(A, B, T.data());
}

EquivalenceGroup::EquivalenceGroup(const Alphabet& A, const Alphabet& B, bool with_swap) {
  const int d1 = A.d, d2 = B.d;
  ncorner_ = d1 * d2;
  if (ncorner_ > 255) throw std::invalid_argument("degrees too large");
  if (with_swap && (d1 != d2 || A.tau != B.tau)) throw std::invalid_argument("swap needs identical alphabets");
  auto CA = involution_centralizer(A);
  auto CB = involution_centralizer(B);
  size_t total = CA.size() * CB.size() * (with_swap ? 2 : 1);
  if (total * ncorner_ * 2 > (size_t(1) << 31)) throw std::invalid_argument("equivalence group too large to tabulate");
  src_.reserve(total * ncorner_);
  val_.reserve(total * ncorner_);
  std::vector<int> ai(d1), bi(d2);
  for (const auto& al : CA) {
    for (int i = 0; i < d1; ++i) ai[al[i]] = i;
    for (const auto& be : CB) {
      for (int i = 0; i < d2; ++i) bi[be[i]] = i;
      for (int c = 0; c < ncorner_; ++c) src_.push_back(uint8_t(ai[c / d2] * d2 + bi[c % d2]));
      for (int v = 0; v < ncorner_; ++v) val_.push_back(uint8_t(al[v / d2] * d2 + be[v % d2]));
      ++count_;
    }
  }
  if (with_swap) {
    const int d = d1;
    // alpha' acts on the new A-alphabet (old B), beta' on the new B-alphabet (old A)
    std::vector<int> api(d), bpi(d);
    for (const auto& ap : CB) {
      for (int i = 0; i < d; ++i) api[ap[i]] = i;
      for (const auto& bp : CA) {
        for (int i = 0; i < d; ++i) bpi[bp[i]] = i;
        for (int c = 0; c < ncorner_; ++c) {
          int a = c / d, b = c % d;
          src_.push_back(uint8_t(A.inv(bpi[b]) * d + B.inv(api[a])));
        }
        for (int v = 0; v < ncorner_; ++v) {
          int x = v / d, y = v % d;
          val_.push_back(uint8_t(ap[B.inv(y)] * d + bp[A.inv(x)]));
        }
        ++count_;
      }
    }
  }
}

int EquivalenceGroup::compare(size_t g, const uint8_t* T) const {
  const uint8_t* src = &src_[g * ncorner_];
  const uint8_t* val = &val_[g * ncorner_];
  for (int c = 0; c < ncorner_; ++c) {
    uint8_t s = T[src[c]], t = T[c];
    if (s == kEmpty || t == kEmpty) return 0;
    uint8_t v = val[s];
    if (v != t) return v < t ? -1 : 1;
  }
  return 0;
}

bool EquivalenceGroup::is_minimal(const uint8_t* T) const {
  for (size_t g = 1; g < count_; ++g)
    if (compare(g, T) < 0) return false;
  return true;
}

size_t EquivalenceGroup::stabilizer_order(const uint8_t* T) const {
  size_t n = 0;
  for (size_t g = 0; g < count_; ++g) {
    const uint8_t* src = &src_[g * ncorner_];
    const uint8_t* val = &val_[g * ncorner_];
    bool eq = true;
    for (int c = 0; c < ncorner_ && eq; ++c) eq = val[T[src[c]]] == T[c];
    n += eq;
  }
  return n;
}

void EquivalenceGroup::image(size_t g, const uint8_t* T, uint8_t* out) const {
  const uint8_t* src = &src_[g * ncorner_];
  const uint8_t* val = &val_[g * ncorner_];
  for (int c = 0; c < ncorner_; ++c) {
    uint8_t s = T[src[c]];
    out[c] = s == kEmpty ? kEmpty : val[s];
  }
}

AutomorphismList vertex_fixing_automorphisms(const Datum& d) {
  const int d1 = d.d1(), d2 = d.d2();
  AutomorphismList res;
  std::vector<int> p1(d1), p3(d2);
  std::iota(p1.begin(), p1.end(), 0);
  std::vector<int> p2(d1), p4(d2);
  do {
    std::iota(p3.begin(), p3.end(), 0);
    do {
      std::fill(p2.begin(), p2.end(), -1);
      std::fill(p4.begin(), p4.end(), -1);
      bool ok = true;
      for (int a = 0; a < d1 && ok; ++a)
        for (int b = 0; b < d2 && ok; ++b) {
          const Quad& q = d.at(a, b);
          const Quad& t = d.at(p1[a], p3[b]);
          if (p2[q[2]] < 0) p2[q[2]] = t[2];
          else if (p2[q[2]] != t[2]) ok = false;
          if (p4[q[3]] < 0) p4[q[3]] = t[3];
          else if (p4[q[3]] != t[3]) ok = false;
        }
      if (!ok) continue;
      // forced maps must be bijective
      std::vector<char> s2(d1, 0), s4(d2, 0);
      for (int x : p2) ok = ok && x >= 0 && !s2[x]++;
      for (int x : p4) ok = ok && x >= 0 && !s4[x]++;
      if (!ok) continue;
      res.elements.push_back({p1, p2, p3, p4});
      ++res.count;
    } while (std::next_permutation(p3.begin(), p3.end()));
  } while (std::next_permutation(p1.begin(), p1.end()));
  return res;
}

}  // namespace sqc
