#include "sqc/permgrp.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace sqc {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
  return r;
}

int perm_sign(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = size_t(p[j])) seen[j] = 1, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

int perm_order(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  long o = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (size_t j = i; !seen[j]; j = size_t(p[j])) seen[j] = 1, ++len;
    o = std::lcm(o, len);
  }
  return int(o);
}

std::string cycle_string(const Perm& p) {
  std::string s;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == int(i)) continue;
    s += "(";
    for (size_t j = i; !seen[j]; j = size_t(p[j])) {
      if (j != i) s += ",";
      s += std::to_string(j + 1);
      seen[j] = 1;
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

Perm parse_cycles(const std::string& s, int n) {
  Perm p = identity_perm(n);
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') {
      ++i;
      continue;
    }
    size_t j = s.find(')', i);
    if (j == std::string::npos) throw std::invalid_argument("bad cycle string");
    std::vector<int> cyc;
    std::stringstream ss(s.substr(i + 1, j - i - 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      int x = std::stoi(tok) - 1;
      if (x < 0 || x >= n) throw std::invalid_argument("cycle point out of range");
      cyc.push_back(x);
    }
    for (size_t k = 0; k < cyc.size(); ++k) p[cyc[k]] = cyc[(k + 1) % cyc.size()];
    i = j + 1;
  }
  return p;
}

// ---- Schreier-Sims ----

StabChain::StabChain(int n, const std::vector<Perm>& gens, const std::vector<int>& base_prefix, Hook hook) : n_(n) {
  for (const auto& g : gens) {
    if (int(g.size()) != n) throw std::invalid_argument("generator on wrong number of points");
    if (!is_identity(g)) S_.push_back(g);
  }
  for (int b : base_prefix) add_level(b);
  // every generator must move some base point
  for (const auto& g : S_) {
    bool moves = false;
    for (const auto& lv : L_) moves = moves || g[lv.point] != lv.point;
    if (!moves) {
      for (int x = 0; x < n; ++x)
        if (g[x] != x) {
          add_level(x);
          break;
        }
    }
  }
  for (size_t gi = 0; gi < S_.size(); ++gi) {
    for (size_t l = 0; l < L_.size(); ++l) {
      L_[l].gens.push_back(int(gi));
      if (S_[gi][L_[l].point] != L_[l].point) break;
    }
  }
  for (auto& lv : L_) extend_orbit(lv);

  long i = long(L_.size()) - 1;
  while (i >= 0) {
    bool added = false;
    Level& lv = L_[i];
    for (size_t k = 0; !added && k < lv.orbit.size(); ++k) {
      for (size_t gj = 0; !added && gj < lv.gens.size(); ++gj) {
        if (lv.done[k].size() <= gj) lv.done[k].resize(lv.gens.size(), 0);
        if (lv.done[k][gj]) continue;
        lv.done[k][gj] = 1;
        const Perm& s = S_[lv.gens[gj]];
        int img = s[lv.orbit[k]];
        int ki = lv.where[img];
        // u_k s u_img^-1 fixes the base point
        Perm sch(n);
        const Perm& uk = lv.u[k];
        const Perm& ui = lv.uinv[ki];
        for (int x = 0; x < n; ++x) sch[x] = ui[s[uk[x]]];
        auto [h, drop] = sift(std::move(sch), size_t(i) + 1);
        if (is_identity(h)) continue;
        if (drop == L_.size()) {
          for (int x = 0; x < n; ++x)
            if (h[x] != x) {
              add_level(x);
              break;
            }
        }
        int hi = int(S_.size());
        S_.push_back(h);
        for (size_t l = size_t(i) + 1; l <= drop && l < L_.size(); ++l) {
          L_[l].gens.push_back(hi);
          extend_orbit(L_[l]);
        }
        added = true;
        if (hook && hook(*this, S_.back(), int(drop))) {
          complete_ = false;
          return;
        }
        i = long(std::min(drop, L_.size() - 1));
      }
    }
    if (!added) --i;
  }
}

void StabChain::add_level(int point) {
  for (const auto& lv : L_)
    if (lv.point == point) return;
  Level lv;
  lv.point = point;
  lv.where.assign(n_, -1);
  lv.orbit.push_back(point);
  lv.where[point] = 0;
  lv.u.push_back(identity_perm(n_));
  lv.uinv.push_back(identity_perm(n_));
  lv.done.emplace_back();
  L_.push_back(std::move(lv));
}

void StabChain::extend_orbit(Level& lv) {
  // new generators act on old points too: rescan everything, appending only
  for (size_t k = 0; k < lv.orbit.size(); ++k) {
    for (int gi : lv.gens) {
      const Perm& s = S_[gi];
      int img = s[lv.orbit[k]];
      if (lv.where[img] >= 0) continue;
      lv.where[img] = int(lv.orbit.size());
      lv.orbit.push_back(img);
      Perm u = compose(lv.u[k], s);
      lv.uinv.push_back(invert(u));
      lv.u.push_back(std::move(u));
      lv.done.emplace_back();
    }
  }
}

std::pair<Perm, size_t> StabChain::sift(Perm h, size_t from) const {
  for (size_t l = from; l < L_.size(); ++l) {
    const Level& lv = L_[l];
    int beta = h[lv.point];
    int k = lv.where[beta];
    if (k < 0) return {std::move(h), l};
    if (k == 0) continue;
    const Perm& ui = lv.uinv[k];
    for (int x = 0; x < n_; ++x) h[x] = ui[h[x]];
  }
  return {std::move(h), L_.size()};
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const auto& lv : L_) b.push_back(lv.point);
  return b;
}

std::vector<size_t> StabChain::orbit_lengths() const {
  std::vector<size_t> o;
  for (const auto& lv : L_) o.push_back(lv.orbit.size());
  return o;
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const auto& lv : L_) o *= lv.orbit.size();
  return o;
}

bool StabChain::contains(const Perm& p) const {
  if (int(p.size()) != n_) return false;
  auto [h, drop] = sift(p, 0);
  return is_identity(h);
}

std::vector<Perm> StabChain::stabilizer_generators(size_t k) const {
  std::vector<Perm> out;
  for (const auto& g : S_) {
    bool fixes = true;
    for (size_t l = 0; l < k && l < L_.size() && fixes; ++l) fixes = g[L_[l].point] == L_[l].point;
    if (fixes) out.push_back(g);
  }
  return out;
}

BigInt group_order(int n, const std::vector<Perm>& gens) { return StabChain(n, gens).order(); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool contains_alternating(const std::vector<Perm>& gens, int d) {
  if (d <= 2) return true;
  return group_order(d, gens) * 2 >= factorial(d);
}

bool pointwise_stabilizer_trivial_on(int n, const std::vector<Perm>& gens, const std::vector<int>& inner) {
  std::vector<char> in(n, 0);
  for (int x : inner) in[x] = 1;
  bool nontrivial = false;
  auto hook = [&](const StabChain&, const Perm& h, int) {
    for (int x = 0; x < n; ++x)
      if (in[x] && h[x] != x) return false;
    nontrivial = true;
    return true;
  };
  // generators themselves may already fix inner
  for (const auto& g : gens) {
    if (is_identity(g)) continue;
    bool fixes = true;
    for (int x : inner) fixes = fixes && g[x] == x;
    if (fixes) return false;
  }
  StabChain sc(n, gens, inner, hook);
  if (nontrivial) return false;
  for (const auto& g : sc.stabilizer_generators(inner.size())) {
    bool fixes = true;
    for (int x : inner) fixes = fixes && g[x] == x;
    if (fixes && !is_identity(g)) return false;
  }
  return true;
}

std::vector<Perm> enumerate_elements(int n, const std::vector<Perm>& gens, size_t limit) {
  std::vector<Perm> elts{identity_perm(n)};
  std::set<Perm> seen{elts[0]};
  for (size_t i = 0; i < elts.size(); ++i) {
    for (const auto& g : gens) {
      Perm x = compose(elts[i], g);
      if (seen.insert(x).second) {
        elts.push_back(std::move(x));
        if (elts.size() > limit) throw std::runtime_error("group too large to enumerate");
      }
    }
  }
  return elts;
}

// ---- Sym(6) subgroup classes ----

namespace {

struct Sym6Row {
  const char* label;
  const char* gens;
  int in3, in4, in5;
};
#include "sym6_classes.inc"

using P6 = std::array<uint8_t, 6>;

int rank6(const P6& p) {
  int r = 0;
  std::array<bool, 6> used{};
  for (int i = 0; i < 6; ++i) {
    int c = 0;
    for (int j = 0; j < p[i]; ++j) c += !used[j];
    used[p[i]] = true;
    r = r * (6 - i) + c;
  }
  return r;
}

P6 mul6(const P6& p, const P6& q) {
  P6 r;
  for (int i = 0; i < 6; ++i) r[i] = q[p[i]];
  return r;
}

P6 inv6(const P6& p) {
  P6 r;
  for (int i = 0; i < 6; ++i) r[p[i]] = uint8_t(i);
  return r;
}

// cycle type code: counts of cycle lengths packed
int cycle_type(const P6& p) {
  std::array<int, 7> cnt{};
  std::array<bool, 6> seen{};
  for (int i = 0; i < 6; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    cnt[len]++;
  }
  int code = 0;
  for (int l = 1; l <= 6; ++l) code = code * 7 + cnt[l];
  return code;
}

struct ClassData {
  std::string label;
  std::vector<P6> gens;
  std::bitset<720> members;
  size_t order = 0;
  std::map<int, int> types;
};

struct GroupData {
  std::vector<P6> gens;
  std::bitset<720> members;
  size_t order = 0;
  std::map<int, int> types;
};

GroupData close6(const std::vector<P6>& gens) {
  GroupData g;
  g.gens = gens;
  P6 id{0, 1, 2, 3, 4, 5};
  std::vector<P6> elts{id};
  g.members.set(rank6(id));
  for (size_t i = 0; i < elts.size(); ++i)
    for (const auto& s : gens) {
      P6 x = mul6(elts[i], s);
      int r = rank6(x);
      if (!g.members.test(r)) {
        g.members.set(r);
        elts.push_back(x);
      }
    }
  g.order = elts.size();
  for (const auto& e : elts) g.types[cycle_type(e)]++;
  return g;
}

P6 to_p6(const Perm& p) {
  P6 r{0, 1, 2, 3, 4, 5};
  for (size_t i = 0; i < p.size(); ++i) r[i] = uint8_t(p[i]);
  return r;
}

const std::vector<ClassData>& classes() {
  static const std::vector<ClassData> data = [] {
    std::vector<ClassData> out;
    for (const auto& row : kSym6Classes) {
      ClassData c;
      c.label = row.label;
      std::stringstream ss(row.gens);
      std::string tok;
      while (ss >> tok) c.gens.push_back(to_p6(parse_cycles(tok, 6)));
      auto g = close6(c.gens);
      c.members = g.members;
      c.order = g.order;
      c.types = g.types;
      out.push_back(std::move(c));
    }
    return out;
  }();
  return data;
}

const std::vector<P6>& all_sym6() {
  static const std::vector<P6> all = [] {
    std::vector<P6> v;
    P6 p{0, 1, 2, 3, 4, 5};
    do v.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return v;
  }();
  return all;
}

}  // namespace

std::string identify_sym6_class(const std::vector<Perm>& gens, int d) {
  if (d > 6) throw std::invalid_argument("identify_sym6_class needs d <= 6");
  std::vector<P6> g6;
  for (const auto& g : gens) {
    if (int(g.size()) != d) throw std::invalid_argument("generator degree mismatch");
    g6.push_back(to_p6(g));
  }
  GroupData G = close6(g6);
  for (const auto& c : classes()) {
    if (c.order != G.order || c.types != G.types) continue;
    for (const auto& x : all_sym6()) {
      P6 xi = inv6(x);
      bool ok = true;
      for (const auto& s : g6) {
        if (!c.members.test(rank6(mul6(mul6(xi, s), x)))) {
          ok = false;
          break;
        }
      }
      if (ok) return c.label;
    }
  }
  throw std::logic_error("subgroup of Sym(6) not identified");
}

std::vector<Perm> sym6_class_generators(const std::string& label) {
  for (const auto& c : classes())
    if (c.label == label) {
      std::vector<Perm> out;
      for (const auto& g : c.gens) out.emplace_back(g.begin(), g.end());
      return out;
    }
  throw std::invalid_argument("unknown class label " + label);
}

std::vector<std::string> sym6_class_labels() {
  std::vector<std::string> out;
  for (const auto& c : classes()) out.push_back(c.label);
  return out;
}

}  // namespace sqc
