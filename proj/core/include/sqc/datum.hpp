#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sqc/letters.hpp"

namespace sqc {

// (a, b, a', b'), encoding the relation a b a' b' = 1.
using Quad = std::array<uint8_t, 4>;

struct Issue {
  std::string code;  // cardinality | coverage | closure | forbidden_square | tau
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  bool cardinality_ok = true;
  bool coverage_ok = true;
  bool closure_ok = true;
  bool no_forbidden_squares = true;
  std::vector<Issue> issues;
};

class Datum {
 public:
  Datum() = default;
  // quads are closed under sigma/rho when close == true, then sorted and deduplicated
  Datum(int d1, int d2, int tau1, int tau2, std::vector<Quad> quads, bool close = true);

  int d1() const { return A_.d; }
  int d2() const { return B_.d; }
  int tau1() const { return A_.tau; }
  int tau2() const { return B_.tau; }
  const Alphabet& A() const { return A_; }
  const Alphabet& B() const { return B_; }
  const std::vector<Quad>& quads() const { return R_; }

  Quad sigma(const Quad& q) const;
  Quad rho(const Quad& q) const;
  std::vector<Quad> orbit(const Quad& q) const;

  // quad with (q0,q1) = (a,b); only meaningful when has_corner(a,b)
  bool has_corner(int a, int b) const { return corner_[a * B_.d + b] >= 0; }
  const Quad& at(int a, int b) const { return R_[corner_[a * B_.d + b]]; }

  // orbit representatives (minimal quad of each orbit), sorted
  std::vector<Quad> square_representatives() const;

  bool operator==(const Datum& o) const {
    return A_.d == o.A_.d && B_.d == o.B_.d && A_.tau == o.A_.tau && B_.tau == o.B_.tau && R_ == o.R_;
  }

 private:
  Alphabet A_, B_;
  std::vector<Quad> R_;
  std::vector<int> corner_;
};

std::vector<Quad> expand_square(const Quad& q, const Alphabet& A, const Alphabet& B);

std::string quad_string(const Quad& q, const Alphabet& A, const Alphabet& B);
Quad parse_quad(std::string_view text, const Alphabet& A, const Alphabet& B);
// "sq; sq; ..." lists of geometric squares
std::vector<Quad> parse_square_list(std::string_view text, const Alphabet& A, const Alphabet& B);

Datum parse_datum(std::string_view text);
Datum load_datum(const std::string& path);
std::string format_datum(const Datum& d, const std::string& comment = "");

ValidationReport validate(const Datum& d);
bool is_torsion_free(const Datum& d);

// side swap: (a,b,a',b') -> (b,a',b',a)
Datum mirror(const Datum& d);

// (alpha,beta) must centralize the involutions; swap requires d1 == d2 and
// then alpha acts on B-letters of the result, beta on A-letters.
Datum apply_equivalence(const Datum& d, const std::vector<int>& alpha, const std::vector<int>& beta, bool swap);

// all permutations of 0..d-1 commuting with the involution
std::vector<std::vector<int>> involution_centralizer(const Alphabet& al);

// header [d1,d2,tau1,tau2] then (a',b') per corner, a major, b minor
std::vector<uint8_t> encode(const Datum& d);

struct CanonicalForm {
  std::vector<uint8_t> bytes;
  bool swapped = false;
  std::string hex() const;
  bool operator==(const CanonicalForm& o) const { return bytes == o.bytes; }
};

CanonicalForm canonical_form(const Datum& d);
Datum canonical_datum(const Datum& d);

// Corner tables for orderly search and canonical testing.
// A table holds, per corner c = a*d2+b, the packed value a'*d2+b' or kEmpty.
class EquivalenceGroup {
 public:
  static constexpr uint8_t kEmpty = 0xFF;
  // with_swap: include side-swapping elements (needs d1 == d2, tau1 == tau2)
  EquivalenceGroup(const Alphabet& A, const Alphabet& B, bool with_swap);

  size_t size() const { return count_; }
  int corners() const { return ncorner_; }

  // -1: g.T < T on the determined prefix, 0: equal or undetermined, 1: g.T > T
  int compare(size_t g, const uint8_t* T) const;
  // true iff no element maps T (complete) to something smaller;
  // for partial T, false only when some element provably gives smaller
  bool is_minimal(const uint8_t* T) const;
  // number of elements with g.T == T (T complete)
  size_t stabilizer_order(const uint8_t* T) const;
  void image(size_t g, const uint8_t* T, uint8_t* out) const;

 private:
  int ncorner_ = 0;
  size_t count_ = 0;
  // per element: src[c] and valmap[v]
  std::vector<uint8_t> src_;
  std::vector<uint8_t> val_;
};

std::vector<uint8_t> corner_table(const Datum& d);
Datum datum_from_table(const Alphabet& A, const Alphabet& B, const uint8_t* T);

struct AutomorphismList {
  size_t count = 0;
  // each entry: pi1 (e_a), pi2 (e'_a), pi3 (f_b), pi4 (f'_b)
  std::vector<std::array<std::vector<int>, 4>> elements;
  std::string structure() const { return count == 1 ? "C2xC2" : count == 2 ? "C2xC2xC2" : "other"; }
};

AutomorphismList vertex_fixing_automorphisms(const Datum& d);

}  // namespace sqc
