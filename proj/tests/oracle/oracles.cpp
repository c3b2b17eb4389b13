#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

namespace sqc::oracle {

namespace {

std::vector<int> involution(int d, int tau) {
  std::vector<int> v(d);
  std::iota(v.begin(), v.end(), 0);
  int p = (d - tau) / 2;
  for (int i = 0; i < p; ++i) {
    v[i] = d - 1 - i;
    v[d - 1 - i] = i;
  }
  return v;
}

std::vector<std::vector<int>> commuting_perms(const std::vector<int>& inv) {
  const int d = int(inv.size());
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int x = 0; x < d && ok; ++x) ok = p[inv[x]] == inv[p[x]];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int sign_of(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = size_t(p[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

}  // namespace

int path_sign(const LabelledGraph& g, int x, int k) {
  int sign = 1;
  std::vector<int> path{x};
  std::function<void()> walk = [&] {
    if (int(path.size()) == k + 1) {
      sign *= g.label[path.back()];
      return;
    }
    int cur = path.back();
    for (int y = 0; y < g.n; ++y) {
      if (!g.adj[cur][y]) continue;
      if (path.size() >= 2 && path[path.size() - 2] == y) continue;
      path.push_back(y);
      walk();
      path.pop_back();
    }
  };
  walk();
  return sign;
}

LabelledGraph random_graph(int n, std::mt19937& rng) {
  LabelledGraph g;
  g.n = n;
  g.adj.assign(n, std::vector<uint8_t>(n, 0));
  g.label.resize(n);
  std::bernoulli_distribution coin(0.45);
  for (int i = 0; i < n; ++i) {
    g.names.push_back("v" + std::to_string(i));
    g.label[i] = coin(rng) ? -1 : 1;
    g.vertex_of_letter.push_back(i);
    for (int j = i; j < n; ++j) g.adj[i][j] = g.adj[j][i] = coin(rng);
  }
  return g;
}

int s_value(const Datum& d, int side, int g, int k, std::mt19937& rng) {
  const int dp = side == 2 ? d.d2() : d.d1();
  auto pinv = involution(dp, side == 2 ? d.tau2() : d.tau1());
  auto ainv = involution(d.d1(), d.tau1()), binv = involution(d.d2(), d.tau2());
  // g y = y' g' read off the relation a b a' b' = 1
  auto step = [&](int s, int y, int& out, int& next) {
    if (side == 2) {
      const Quad& q = d.at(s, y);
      out = pinv[q[3]];
      next = ainv[q[2]];
    } else {
      const Quad& q = d.at(pinv[y], binv[s]);
      out = q[2];
      next = q[3];
    }
  };
  auto image = [&](const std::vector<int>& w) {
    std::vector<int> r;
    int s = g;
    for (int y : w) {
      int o, n;
      step(s, y, o, n);
      r.push_back(o);
      s = n;
    }
    return r;
  };
  // all reduced words of length k
  std::vector<std::vector<int>> sphere{{}};
  for (int r = 0; r < k; ++r) {
    std::vector<std::vector<int>> nx;
    for (const auto& w : sphere)
      for (int l = 0; l < dp; ++l)
        if (w.empty() || l != pinv[w.back()]) {
          auto u = w;
          u.push_back(l);
          nx.push_back(u);
        }
    sphere = std::move(nx);
  }
  std::map<std::vector<int>, std::vector<int>> colour;
  auto colouring = [&](const std::vector<int>& w) -> const std::vector<int>& {
    auto it = colour.find(w);
    if (it != colour.end()) return it->second;
    std::vector<int> c(dp);
    std::iota(c.begin(), c.end(), 0);
    std::shuffle(c.begin(), c.end(), rng);
    return colour.emplace(w, c).first->second;
  };
  int sign = 1;
  for (const auto& w : sphere) {
    auto gw = image(w);
    std::vector<int> pi(dp);
    for (int l = 0; l < dp; ++l) {
      if (!w.empty() && l == pinv[w.back()]) {
        pi[l] = pinv[gw.back()];
      } else {
        auto u = w;
        u.push_back(l);
        pi[l] = image(u).back();
      }
    }
    const auto& cw = colouring(w);
    const auto& cg = colouring(gw);
    std::vector<int> coloured(dp);
    for (int l = 0; l < dp; ++l) coloured[cw[l]] = cg[pi[l]];
    sign *= sign_of(coloured);
  }
  return sign;
}

namespace {

struct Tree {
  std::vector<int> depth;
  std::vector<std::vector<int>> dist;  // from each neighbour of the root
};

const Tree& literal_tree(int d, int R) {
  static std::map<std::pair<int, int>, Tree> cache;
  auto it = cache.find({d, R});
  if (it != cache.end()) return it->second;
  Tree t;
  std::vector<int> parent{-1};
  t.depth = {0};
  std::vector<int> frontier{0};
  for (int r = 1; r <= R; ++r) {
    std::vector<int> nx;
    for (int v : frontier) {
      int kids = v == 0 ? d : d - 1;
      for (int c = 0; c < kids; ++c) {
        parent.push_back(v);
        t.depth.push_back(r);
        nx.push_back(int(parent.size()) - 1);
      }
    }
    frontier = std::move(nx);
  }
  const int N = int(parent.size());
  std::vector<std::vector<int>> adj(N);
  for (int v = 1; v < N; ++v) {
    adj[v].push_back(parent[v]);
    adj[parent[v]].push_back(v);
  }
  for (int w : adj[0]) {
    std::vector<int> dist(N, -1);
    std::queue<int> q;
    q.push(w);
    dist[w] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    t.dist.push_back(std::move(dist));
  }
  return cache.emplace(std::make_pair(d, R), std::move(t)).first->second;
}

}  // namespace

IntSet alpha_tree(const IntSet& X, int d) {
  int maxx = X.empty() ? 0 : *X.rbegin();
  const Tree& t = literal_tree(d, maxx + 2);
  const int N = int(t.depth.size());
  std::vector<char> inX(2 * maxx + 8, 0);  // distances stay below 2R + 2
  for (int x : X) inX[x] = 1;
  std::vector<int> mult(N, 0);
  for (const auto& dist : t.dist)
    for (int v = 0; v < N; ++v)
      if (inX[dist[v]]) mult[v] ^= 1;
  // spheres around the root are either wholly in or wholly out
  IntSet out;
  std::vector<int> first(maxx + 2, -1);
  for (int v = 0; v < N; ++v) {
    int r = t.depth[v];
    if (r > maxx + 1) continue;
    if (first[r] < 0) first[r] = mult[v];
    else if (mult[v] != first[r]) throw std::logic_error("alpha_tree: sphere split");
  }
  for (int r = 0; r <= maxx + 1; ++r)
    if (first[r] == 1) out.insert(r);
  return out;
}

namespace {

bool exhaustive(const SquareMaps& m, const std::vector<int>& Sigma, bool fixed_rhs) {
  const int n = m.npts;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    auto x = [&](int k) { return (mask >> k) & 1 ? -1 : 1; };
    bool ok = true;
    for (int j = 0; j < m.ngen && ok; ++j) {
      int c = 0;
      for (int k = 0; k < n && ok; ++k) {
        int v = x(k) * x(m.nu[j * n + k]) * Sigma[m.mu[j * n + k]];
        if (fixed_rhs) ok = v == Sigma[j];
        else if (c == 0) c = v;
        else ok = v == c;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool star_solvable(const SquareMaps& m, const std::vector<int>& Sigma) { return exhaustive(m, Sigma, true); }
bool double_star_solvable(const SquareMaps& m, const std::vector<int>& Sigma) { return exhaustive(m, Sigma, false); }

std::vector<Datum> all_data(int d1, int d2, int tau1, int tau2) {
  auto ia = involution(d1, tau1), ib = involution(d2, tau2);
  const int n = d1 * d2;
  std::vector<int> T(n, -1);
  std::vector<Datum> out;
  auto orbit = [&](Quad q) {
    std::vector<Quad> o{q};
    for (size_t i = 0; i < o.size(); ++i) {
      Quad x = o[i];
      Quad s{uint8_t(ia[x[2]]), uint8_t(ib[x[1]]), uint8_t(ia[x[0]]), uint8_t(ib[x[3]])};
      Quad r{x[2], x[3], x[0], x[1]};
      for (const Quad& y : {s, r})
        if (std::find(o.begin(), o.end(), y) == o.end()) o.push_back(y);
    }
    return o;
  };
  std::function<void(int)> rec = [&](int c) {
    while (c < n && T[c] >= 0) ++c;
    if (c == n) {
      std::vector<Quad> R;
      for (int i = 0; i < n; ++i)
        R.push_back({uint8_t(i / d2), uint8_t(i % d2), uint8_t(T[i] / d2), uint8_t(T[i] % d2)});
      out.emplace_back(d1, d2, tau1, tau2, R, false);
      return;
    }
    const int a = c / d2, b = c % d2;
    for (int v = 0; v < n; ++v) {
      auto o = orbit({uint8_t(a), uint8_t(b), uint8_t(v / d2), uint8_t(v % d2)});
      std::set<int> corners;
      for (const Quad& q : o) corners.insert(q[0] * d2 + q[1]);
      if (corners.size() != o.size()) continue;
      bool ok = true;
      for (const Quad& q : o) {
        int cc = q[0] * d2 + q[1], vv = q[2] * d2 + q[3];
        if (T[cc] >= 0 && T[cc] != vv) ok = false;
      }
      if (!ok) continue;
      std::vector<int> set_here;
      for (const Quad& q : o) {
        int cc = q[0] * d2 + q[1];
        if (T[cc] < 0) {
          T[cc] = q[2] * d2 + q[3];
          set_here.push_back(cc);
        }
      }
      rec(c + 1);
      for (int cc : set_here) T[cc] = -1;
    }
  };
  rec(0);
  return out;
}

std::set<std::vector<uint8_t>> equivalence_orbit(const Datum& d) {
  std::set<std::vector<uint8_t>> out;
  auto key = [](int t1, int t2, std::vector<Quad> R) {
    std::sort(R.begin(), R.end());
    std::vector<uint8_t> k{uint8_t(t1), uint8_t(t2)};
    for (const Quad& q : R) k.insert(k.end(), q.begin(), q.end());
    return k;
  };
  auto CA = commuting_perms(involution(d.d1(), d.tau1()));
  auto CB = commuting_perms(involution(d.d2(), d.tau2()));
  for (const auto& al : CA)
    for (const auto& be : CB) {
      std::vector<Quad> R;
      for (const Quad& q : d.quads())
        R.push_back({uint8_t(al[q[0]]), uint8_t(be[q[1]]), uint8_t(al[q[2]]), uint8_t(be[q[3]])});
      out.insert(key(d.tau1(), d.tau2(), R));
      if (d.d1() == d.d2()) {
        // (a,b,a',b') -> (beta b, alpha a', beta b', alpha a)
        std::vector<Quad> S;
        for (const Quad& q : d.quads())
          S.push_back({uint8_t(be[q[1]]), uint8_t(al[q[2]]), uint8_t(be[q[3]]), uint8_t(al[q[0]])});
        out.insert(key(d.tau2(), d.tau1(), S));
      }
    }
  return out;
}

size_t group_order(int n, const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> todo{id};
  seen.insert(id);
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const Perm& g : gens) {
      Perm q(n);
      for (int i = 0; i < n; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace sqc::oracle
