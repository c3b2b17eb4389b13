#include "sqc/present.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "sqc/permgrp.hpp"

namespace sqc {

int Presentation::generator_count() const {
  int n = 0;
  for (int c = 0; c < ncols; ++c)
    if (inv[c] >= c) ++n;
  return n;
}

std::vector<int> word_columns(const Datum& d, const Word& w) {
  std::vector<int> cols;
  for (const auto& l : w) cols.push_back(l.side == Side::A ? l.index : d.d1() + l.index);
  return cols;
}

std::vector<int> word_columns(const Datum& d, const std::string& text) {
  return word_columns(d, parse_word(text, d.A(), d.B()));
}

Presentation presentation_of(const Datum& d, const std::vector<std::string>& extra_relators) {
  Presentation p;
  p.ncols = d.d1() + d.d2();
  for (int i = 0; i < d.d1(); ++i) {
    p.inv.push_back(d.A().inv(i));
    p.names.push_back(letter_token(Side::A, d.A(), i));
  }
  for (int j = 0; j < d.d2(); ++j) {
    p.inv.push_back(d.d1() + d.B().inv(j));
    p.names.push_back(letter_token(Side::B, d.B(), j));
  }
  for (const Quad& q : d.square_representatives())
    p.relators.push_back({q[0], d.d1() + q[1], q[2], d.d1() + q[3]});
  p.square_relators = p.relators.size();
  for (const auto& r : extra_relators) p.relators.push_back(word_columns(d, r));
  return p;
}

namespace {

class CosetTable {
 public:
  CosetTable(const Presentation& p, size_t capacity) : p_(p), nc_(p.ncols), cap_(capacity) {
    T_.assign(capacity * nc_, -1);
    fwd_.resize(capacity);
    fwd_[0] = 0;
    next_ = 1;
    live_ = 1;
    defined_ = 1;
  }

  size_t next() const { return next_; }
  size_t live() const { return live_; }
  size_t defined() const { return defined_; }
  size_t capacity() const { return cap_; }
  bool alive(size_t c) const { return fwd_[c] == int(c); }
  int at(size_t c, int x) const { return T_[c * nc_ + x]; }

  void define(int c, int x) {
    int d = int(next_++);
    fwd_[d] = d;
    std::fill(T_.begin() + size_t(d) * nc_, T_.begin() + size_t(d + 1) * nc_, -1);
    set(c, x, d);
    ++live_;
    ++defined_;
  }

  // returns false only in lookahead mode when a gap remains
  void scan(int c, const std::vector<int>& w, bool fill) {
    if (w.empty()) return;
    int f = c, b = c;
    int i = 0, j = int(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, p_.inv[w[j]]) >= 0) b = at(b, p_.inv[w[j--]]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  // renumber live cosets in order; returns the new number of old coset c (or of the next live one)
  size_t compact(size_t c) {
    std::vector<int> nid(next_, -1);
    int k = 0;
    size_t newc = 0;
    bool seen = false;
    for (size_t i = 0; i < next_; ++i) {
      if (!seen && i >= c) {
        newc = size_t(k);
        seen = true;
      }
      if (alive(i)) nid[i] = k++;
    }
    if (!seen) newc = size_t(k);
    for (size_t i = 0; i < next_; ++i) {
      if (nid[i] < 0) continue;
      for (int x = 0; x < nc_; ++x) {
        int v = T_[i * nc_ + x];
        T_[size_t(nid[i]) * nc_ + x] = v < 0 ? -1 : nid[v];
      }
    }
    for (int i = 0; i < k; ++i) fwd_[i] = i;
    next_ = size_t(k);
    live_ = size_t(k);
    return newc;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> r;
    for (size_t i = 0; i < next_; ++i) r.emplace_back(T_.begin() + i * nc_, T_.begin() + (i + 1) * nc_);
    return r;
  }

 private:
  const Presentation& p_;
  int nc_;
  size_t cap_;
  std::vector<int> T_;
  std::vector<int> fwd_;
  size_t next_, live_, defined_;
  std::deque<int> queue_;

  void set(int c, int x, int d) {
    T_[size_t(c) * nc_ + x] = d;
    T_[size_t(d) * nc_ + p_.inv[x]] = c;
  }

  int rep(int k) {
    int r = k;
    while (fwd_[r] != r) r = fwd_[r];
    while (fwd_[k] != r) {
      int n = fwd_[k];
      fwd_[k] = r;
      k = n;
    }
    return r;
  }

  void merge(int k, int l) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    int lo = std::min(a, b), hi = std::max(a, b);
    fwd_[hi] = lo;
    --live_;
    queue_.push_back(hi);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int g = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < nc_; ++x) {
        int d = T_[size_t(g) * nc_ + x];
        if (d < 0) continue;
        int xi = p_.inv[x];
        if (T_[size_t(d) * nc_ + xi] == g) T_[size_t(d) * nc_ + xi] = -1;
        int mu = rep(g), nu = rep(d);
        int mx = T_[size_t(mu) * nc_ + x];
        if (mx >= 0) {
          merge(nu, mx);
        } else {
          int nx = T_[size_t(nu) * nc_ + xi];
          if (nx >= 0)
            merge(mu, nx);
          else
            set(mu, x, nu);
        }
      }
    }
  }
};

}  // namespace

CosetResult coset_enumerate(const Presentation& p, const std::vector<std::vector<int>>& subgroup, size_t max_cosets) {
  if (max_cosets < 1) max_cosets = 1;
  size_t reserve = size_t(p.ncols);
  for (const auto& r : p.relators) reserve += r.size();
  for (const auto& h : subgroup) reserve = std::max(reserve, h.size());
  CosetTable t(p, max_cosets + reserve);
  CosetResult res;
  auto room = [&](size_t& c) {
    if (t.next() + reserve <= t.capacity()) return true;
    // lookahead: scan without defining, then compact
    for (size_t k = 0; k < t.next(); ++k)
      for (const auto& r : p.relators) {
        if (!t.alive(k)) break;
        t.scan(int(k), r, false);
      }
    c = t.compact(c);
    return t.next() + reserve <= t.capacity();
  };
  size_t c = 0;
  for (const auto& h : subgroup) {
    if (!room(c)) return res;
    t.scan(0, h, true);
  }
  for (c = 0; c < t.next(); ++c) {
    if (!t.alive(c)) continue;
    if (!room(c)) return res;
    if (c >= t.next()) break;
    if (!t.alive(c)) continue;
    for (const auto& r : p.relators) {
      t.scan(int(c), r, true);
      if (!t.alive(c)) break;
    }
    res.max_live = std::max(res.max_live, t.live());
    if (!t.alive(c)) continue;
    for (int x = 0; x < p.ncols; ++x)
      if (t.at(c, x) < 0) t.define(int(c), x);
    res.max_live = std::max(res.max_live, t.live());
  }
  t.compact(0);
  res.closed = true;
  res.index = t.live();
  res.defined = t.defined();
  res.table = t.rows();
  return res;
}

// ---- abelianization ----

std::vector<long long> abelian_invariants(const std::vector<std::vector<long long>>& m_in, int ncols) {
  std::vector<std::vector<long long>> m = m_in;
  const int rows = int(m.size());
  std::vector<long long> diag;
  int r0 = 0;
  for (int c0 = 0; c0 < ncols && r0 < rows; ++c0) {
    for (;;) {
      // smallest nonzero entry in the remaining block
      int br = -1, bc = -1;
      long long best = 0;
      for (int i = r0; i < rows; ++i)
        for (int j = c0; j < ncols; ++j)
          if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) best = std::llabs(m[i][j]), br = i, bc = j;
      if (br < 0) goto done;
      std::swap(m[r0], m[br]);
      for (auto& row : m) std::swap(row[c0], row[bc]);
      bool clean = true;
      for (int i = r0 + 1; i < rows; ++i) {
        long long q = m[i][c0] / m[r0][c0];
        for (int j = c0; j < ncols; ++j) m[i][j] -= q * m[r0][j];
        if (m[i][c0] != 0) clean = false;
      }
      for (int j = c0 + 1; j < ncols; ++j) {
        long long q = m[r0][j] / m[r0][c0];
        for (int i = r0; i < rows; ++i) m[i][j] -= q * m[i][c0];
        if (m[r0][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility condition
      bool divides = true;
      for (int i = r0 + 1; i < rows && divides; ++i)
        for (int j = c0 + 1; j < ncols; ++j)
          if (m[i][j] % m[r0][c0] != 0) {
            for (int k = c0; k < ncols; ++k) m[r0][k] += m[i][k];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(std::llabs(m[r0][c0]));
    ++r0;
  }
done:
  std::vector<long long> out;
  for (long long v : diag)
    if (v != 1) out.push_back(v);
  for (int k = int(diag.size()); k < ncols; ++k) out.push_back(0);
  std::sort(out.begin(), out.end(), [](long long a, long long b) {
    if (a == 0) return false;
    if (b == 0) return true;
    return a < b;
  });
  return out;
}

namespace {

std::vector<long long> presentation_abelian(const Presentation& p) {
  std::vector<int> gen_of(p.ncols, -1), sgn(p.ncols, 1);
  int ng = 0;
  for (int c = 0; c < p.ncols; ++c)
    if (p.inv[c] >= c) gen_of[c] = ng++;
  for (int c = 0; c < p.ncols; ++c)
    if (gen_of[c] < 0) gen_of[c] = gen_of[p.inv[c]], sgn[c] = -1;
  std::vector<std::vector<long long>> m;
  for (int c = 0; c < p.ncols; ++c)
    if (p.inv[c] == c) {
      std::vector<long long> r(ng, 0);
      r[gen_of[c]] = 2;
      m.push_back(r);
    }
  for (const auto& rel : p.relators) {
    std::vector<long long> r(ng, 0);
    for (int c : rel) r[gen_of[c]] += sgn[c];
    m.push_back(r);
  }
  return abelian_invariants(m, ng);
}

}  // namespace

QuotientReport quotient(const Datum& d, const std::vector<std::string>& relators, size_t max_cosets) {
  QuotientReport q;
  q.relators = relators;
  auto p = presentation_of(d, relators);
  auto r = coset_enumerate(p, {}, max_cosets);
  q.closed = r.closed;
  q.abelian_invariants = presentation_abelian(p);
  if (!r.closed) return q;
  q.order = r.index;
  if (q.order <= 5000) {
    std::vector<Perm> gens;
    for (int x = 0; x < p.ncols; ++x) {
      Perm g(q.order);
      for (size_t i = 0; i < q.order; ++i) g[i] = r.table[i][x];
      gens.push_back(g);
    }
    long long e = 1;
    for (const auto& el : enumerate_elements(int(q.order), gens, q.order + 1)) e = std::lcm(e, (long long)perm_order(el));
    q.exponent = e;
  }
  return q;
}

SimpleIndexReport simple_index(const Datum& d, const std::vector<std::vector<std::string>>& witness_sets,
                               size_t max_cosets) {
  SimpleIndexReport s;
  s.closed = true;
  for (const auto& set : witness_sets) {
    auto q = quotient(d, set, max_cosets);
    s.closed = s.closed && q.closed;
    if (q.closed) s.index = std::max(s.index, q.order);
    s.per_set.push_back(std::move(q));
  }
  if (!s.closed) s.index = 0;
  return s;
}

std::optional<size_t> type_preserving_index(const Datum& d, size_t max_cosets) {
  auto p = presentation_of(d);
  std::vector<std::vector<int>> sub;
  for (int x = 0; x < d.d1(); ++x)
    for (int y = 0; y < d.d1(); ++y) sub.push_back({x, y});
  for (int x = 0; x < d.d2(); ++x)
    for (int y = 0; y < d.d2(); ++y) sub.push_back({d.d1() + x, d.d1() + y});
  auto r = coset_enumerate(p, sub, max_cosets);
  if (!r.closed) return std::nullopt;
  return r.index;
}

}  // namespace sqc
