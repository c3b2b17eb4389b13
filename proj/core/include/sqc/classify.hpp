#pragma once
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqc/action.hpp"
#include "sqc/datum.hpp"
#include "sqc/permgrp.hpp"

namespace sqc {

using IntSet = std::set<int>;
std::string set_string(const IntSet& s);  // "{0,1}"

struct LabelledGraph {
  int side = 2;
  bool simplified = false;
  int n = 0;
  std::vector<std::string> names;
  std::vector<std::vector<uint8_t>> adj;  // symmetric 0/1, loops on the diagonal
  std::vector<int> label;                 // +1 / -1
  // letter -> vertex (identity unless simplified)
  std::vector<int> vertex_of_letter;
  std::vector<std::pair<int, int>> edges() const;
  bool symmetric() const;
  int degree(int v) const;  // loops count once
};

// side 2: vertices = A-letters, edge x~y iff #{b : (x,b,y^-1,*) in R} odd
LabelledGraph build_graph(const Datum& d, int side);
// vertices = inverse pairs; needs the generator alphabet to have tau = 0
LabelledGraph build_simplified_graph(const Datum& d, int side);

// rows = graph vertices, columns k = 0..k_max, entries +1/-1
struct SignMatrix {
  std::vector<std::string> rows;
  std::vector<std::vector<int>> s;
  int k_max() const { return s.empty() ? -1 : int(s[0].size()) - 1; }
};
// non-repeating path parity DP
SignMatrix s_values(const LabelledGraph& g, int k_max);
// expand to one row per generator letter
SignMatrix s_values_by_letter(const LabelledGraph& g, const SignMatrix& m, const Datum& d);

// literal product over S(v,k) of local-action signs, read off ball actions
int s_value_from_ball(const BallActions& acts, int g, int k);

struct KX {
  bool found = false;
  int K = -1;
  IntSet X;
  int k_max = 0;
};
KX detect_K_and_X(const SignMatrix& m);

IntSet alpha(const IntSet& X, bool even_degree);
std::optional<IntSet> alpha_inverse(const IntSet& X, bool even_degree);

// Solves A y = r over GF(2); rows are coefficient vectors with the rhs last.
std::optional<std::vector<uint8_t>> solve_gf2(const std::vector<std::vector<uint8_t>>& rows, int nvars);

struct Descriptor {
  enum Kind { FullAut, Plain, Star, PrimeStar, DoubleStar, Discrete, Undetermined };
  Kind kind = Undetermined;
  IntSet set;
  std::string reason;
  std::string str() const;
  bool operator<(const Descriptor& o) const { return str() < o.str(); }
  bool operator==(const Descriptor& o) const { return str() == o.str(); }
  static Descriptor plain(IntSet s) { return {Plain, std::move(s), ""}; }
  static Descriptor star(IntSet s) { return {Star, std::move(s), ""}; }
  static Descriptor prime_star(IntSet s) { return {PrimeStar, std::move(s), ""}; }
  static Descriptor double_star(IntSet s) { return {DoubleStar, std::move(s), ""}; }
  static Descriptor undetermined(std::string r) { return {Undetermined, {}, std::move(r)}; }
};

// a_j b_k = b_nu a_mu, with j over generators and k over points
struct SquareMaps {
  int ngen = 0, npts = 0;
  std::vector<int> nu, mu;  // index j*npts + k
};
SquareMaps square_maps(const Datum& d, int side);

struct SystemResult {
  bool solvable = false;
  std::vector<int> witness;  // +1/-1 per point letter (then row constants for (**))
};
// (*): x_k x_nu Sigma_mu = Sigma_j; (**): x_k x_nu Sigma_mu = c_j
SystemResult solve_star_system(const SquareMaps& m, const std::vector<int>& Sigma);
SystemResult solve_double_star_system(const SquareMaps& m, const std::vector<int>& Sigma);
// exhaustive check used by tests and small cases
bool star_system_holds(const SquareMaps& m, const std::vector<int>& Sigma, const std::vector<int>& x);
bool double_star_system_holds(const SquareMaps& m, const std::vector<int>& Sigma, const std::vector<int>& x);

// one line per generator j: "x1x6 = -x2x3 = ... = 1", points numbered 1..npts
std::vector<std::string> star_system_text(const SquareMaps& m, const std::vector<int>& Sigma);

struct StarPrimeResult {
  Descriptor result;
  bool consistent = true;
  int start = -1;            // point letter b_k
  std::vector<int> bottom;   // generator letters, left to right
  std::vector<int> top;
  int parity = 1;
};
StarPrimeResult star_vs_prime(const Datum& d, int side, const IntSet& Y, const std::vector<int>& Sigma);

struct SideReport {
  int side = 2;
  int degree = 0;
  std::string local_order;
  std::string local_class;  // Sym(6) class label when degree <= 6
  std::vector<std::string> local_generators;
  bool alt_ok = false;
  bool bm_checked = false;
  bool nondiscrete = false;
  std::string bm_bound;
  std::string bm_order;  // lower bound reached, or exact order
  bool bm_order_exact = false;
  bool have_graph = false;
  LabelledGraph graph;  // full graph
  bool simplified = false;
  LabelledGraph simplified_graph;
  SignMatrix s;  // rows per generator letter
  KX kx;
  std::optional<IntSet> Y;
  std::vector<int> Sigma;
  bool corollary = false;
  bool star_checked = false;
  SystemResult star_system;
  bool double_star_checked = false;
  SystemResult double_star_system;
  bool star_prime_checked = false;
  StarPrimeResult star_prime;
  Descriptor result;
  std::vector<std::string> evidence;
};

struct ClassifyOptions {
  int k_max = -1;  // default 2*d + 2
  bool use_bm = true;
};

SideReport classify_projection(const Datum& d, int side, const ClassifyOptions& opt = {});

struct LocalAction {
  std::vector<Perm> gens;
  BigInt order;
  bool alt = false;
  std::string class_label;
};
LocalAction local_action(const Datum& d, int side);

BigInt burger_mozes_bound(int d);
struct BMResult {
  bool nondiscrete = false;
  BigInt bound;
  BigInt order;  // lower bound if not exact
  bool exact = false;
};
// throws std::invalid_argument when d < 6 or the local action misses Alt(d)
BMResult burger_mozes_nondiscrete(const Datum& d, int side);

struct PossiblyIrreducible {
  bool side1 = false;  // B(v1,2)-fixator nontrivial
  bool side2 = false;
  bool overall() const { return side1 && side2; }
};
bool fixator_nontrivial(const Datum& d, int side);
PossiblyIrreducible possibly_irreducible(const Datum& d);

// candidate projections from all admissible labelled graphs on ngen vertices
// (inverse pairs when torsion_free) for an acted tree of even degree
std::set<Descriptor> predict_possible_projections(int ngen, bool torsion_free, int tau = 0);

}  // namespace sqc
