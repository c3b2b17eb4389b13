#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <string>
#include <vector>

namespace sqc {

using BigInt = boost::multiprecision::cpp_int;
using Perm = std::vector<int>;  // image array, p[x]

Perm identity_perm(int n);
bool is_identity(const Perm& p);
// apply p first, then q
Perm compose(const Perm& p, const Perm& q);
Perm invert(const Perm& p);
int perm_sign(const Perm& p);
int perm_order(const Perm& p);
// cycle notation on 1-based points, "()" for identity
std::string cycle_string(const Perm& p);
// "(1,2)(3,4)" on n points
Perm parse_cycles(const std::string& s, int n);

class StabChain {
 public:
  // hook called after each new strong generator; return true to stop early
  using Hook = std::function<bool(const StabChain&, const Perm& h, int level)>;

  StabChain(int n, const std::vector<Perm>& gens, const std::vector<int>& base_prefix = {}, Hook hook = nullptr);

  int degree() const { return n_; }
  bool complete() const { return complete_; }  // false when the hook stopped construction
  std::vector<int> base() const;
  std::vector<size_t> orbit_lengths() const;
  // exact once complete; a lower bound otherwise
  BigInt order() const;
  bool contains(const Perm& p) const;
  const std::vector<Perm>& strong_generators() const { return S_; }
  // strong generators fixing the first k base points
  std::vector<Perm> stabilizer_generators(size_t k) const;

 private:
  struct Level {
    int point;
    std::vector<int> orbit;
    std::vector<int> where;
    std::vector<Perm> u, uinv;
    std::vector<int> gens;
    std::vector<std::vector<char>> done;
  };
  int n_;
  std::vector<Perm> S_;
  std::vector<Level> L_;
  bool complete_ = true;

  void add_level(int point);
  void extend_orbit(Level& lv);
  std::pair<Perm, size_t> sift(Perm h, size_t from) const;
};

BigInt group_order(int n, const std::vector<Perm>& gens);
bool contains_alternating(const std::vector<Perm>& gens, int d);
BigInt factorial(int n);

// inner: points of a downward-closed sub-ball; true iff the fixator of inner is trivial
bool pointwise_stabilizer_trivial_on(int n, const std::vector<Perm>& gens, const std::vector<int>& inner);

// all elements (for small groups; throws past limit)
std::vector<Perm> enumerate_elements(int n, const std::vector<Perm>& gens, size_t limit = 100000);

// conjugacy class label among the 56 classes of subgroups of Sym(6), e.g. "24.4"
std::string identify_sym6_class(const std::vector<Perm>& gens, int d);
// representative generators of a label, as perms on 6 points
std::vector<Perm> sym6_class_generators(const std::string& label);
std::vector<std::string> sym6_class_labels();

}  // namespace sqc
