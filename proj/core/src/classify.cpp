#include "sqc/classify.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sqc {

std::string set_string(const IntSet& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string Descriptor::str() const {
  switch (kind) {
    case FullAut: return "Aut(T)";
    case Plain: return set_string(set);
    case Star: return set_string(set) + "^*";
    case PrimeStar: return set_string(set) + "'^*";
    case DoubleStar: return set_string(set) + "^{**}";
    case Discrete: return "discrete";
    case Undetermined: return "?";
  }
  return "?";
}

// ---- graphs ----

std::vector<std::pair<int, int>> LabelledGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y)
      if (adj[x][y]) e.emplace_back(x, y);
  return e;
}

bool LabelledGraph::symmetric() const {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (adj[x][y] != adj[y][x]) return false;
  return true;
}

int LabelledGraph::degree(int v) const {
  int deg = 0;
  for (int y = 0; y < n; ++y) deg += adj[v][y];
  return deg;
}

namespace {

int local_sign(const SideView& v, int g) {
  Perm p(v.pts().d);
  for (int y = 0; y < v.pts().d; ++y) p[y] = v.out(g, y);
  return perm_sign(p);
}

Side gen_side(int side) { return side == 2 ? Side::A : Side::B; }

}  // namespace

LabelledGraph build_graph(const Datum& d, int side) {
  SideView v(d, side);
  LabelledGraph g;
  g.side = side;
  g.n = v.gens().d;
  g.adj.assign(g.n, std::vector<uint8_t>(g.n, 0));
  for (int x = 0; x < g.n; ++x) {
    g.names.push_back(letter_token(gen_side(side), v.gens(), x));
    g.label.push_back(local_sign(v, x));
    g.vertex_of_letter.push_back(x);
    for (int y = 0; y < v.pts().d; ++y) g.adj[x][v.next(x, y)] ^= 1;
  }
  return g;
}

LabelledGraph build_simplified_graph(const Datum& d, int side) {
  SideView v(d, side);
  const Alphabet& G = v.gens();
  if (G.tau != 0) throw std::invalid_argument("simplified graph needs tau = 0 on the generator alphabet");
  LabelledGraph g;
  g.side = side;
  g.simplified = true;
  g.n = G.d / 2;
  g.adj.assign(g.n, std::vector<uint8_t>(g.n, 0));
  for (int x = 0; x < G.d; ++x) g.vertex_of_letter.push_back(x < g.n ? x : G.d - 1 - x);
  for (int u = 0; u < g.n; ++u) {
    g.names.push_back("{" + letter_token(gen_side(side), G, u) + "," + letter_token(gen_side(side), G, G.inv(u)) + "}");
    g.label.push_back(local_sign(v, u));
    for (int y = 0; y < v.pts().d; ++y) g.adj[u][g.vertex_of_letter[v.next(u, y)]] ^= 1;
  }
  return g;
}

SignMatrix s_values(const LabelledGraph& g, int k_max) {
  SignMatrix m;
  const int n = g.n;
  std::vector<std::vector<int>> nb(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.adj[x][y]) nb[x].push_back(y);
  for (int x = 0; x < n; ++x) {
    m.rows.push_back(g.names[x]);
    std::vector<int> row{g.label[x]};
    // parity of path counts by (previous, current)
    std::vector<uint8_t> cur(n * n, 0), nxt(n * n, 0);
    for (int y : nb[x]) cur[x * n + y] ^= 1;
    for (int k = 1; k <= k_max; ++k) {
      int par = 0;
      for (int p = 0; p < n; ++p)
        for (int c = 0; c < n; ++c)
          if (cur[p * n + c] && g.label[c] < 0) par ^= 1;
      row.push_back(par ? -1 : 1);
      std::fill(nxt.begin(), nxt.end(), 0);
      for (int p = 0; p < n; ++p)
        for (int c = 0; c < n; ++c) {
          if (!cur[p * n + c]) continue;
          for (int z : nb[c])
            if (z != p) nxt[c * n + z] ^= 1;
        }
      std::swap(cur, nxt);
    }
    m.s.push_back(std::move(row));
  }
  return m;
}

SignMatrix s_values_by_letter(const LabelledGraph& g, const SignMatrix& m, const Datum& d) {
  SignMatrix out;
  const Alphabet& G = g.side == 2 ? d.A() : d.B();
  for (int x = 0; x < G.d; ++x) {
    out.rows.push_back(letter_token(gen_side(g.side), G, x));
    out.s.push_back(m.s[g.vertex_of_letter[x]]);
  }
  return out;
}

int s_value_from_ball(const BallActions& acts, int g, int k) {
  const Ball& B = acts.ball();
  if (k + 1 > B.radius()) throw std::invalid_argument("ball too small for s_k");
  const Alphabet& al = B.alphabet();
  const auto& perm = acts.generator(g);
  int sign = 1;
  for (size_t w = B.sphere_begin(k); w < B.sphere_end(k); ++w) {
    size_t gw = size_t(perm[w]);
    Perm pi(al.d);
    for (int l = 0; l < al.d; ++l) {
      size_t u;
      if (k >= 1 && l == al.inv(B.word(w).back())) {
        u = B.parent(w);
      } else {
        auto word = B.word(w);
        word.push_back(uint8_t(l));
        u = size_t(B.index(word));
      }
      size_t gu = size_t(perm[u]);
      int l2;
      if (k >= 1 && gu == B.parent(gw))
        l2 = al.inv(B.word(gw).back());
      else
        l2 = B.word(gu).back();
      pi[l] = l2;
    }
    sign *= perm_sign(pi);
  }
  return sign;
}

// ---- K and X ----

KX detect_K_and_X(const SignMatrix& m) {
  KX r;
  const int rows = int(m.s.size());
  r.k_max = m.k_max();
  if (rows > 64 || r.k_max > 63) throw std::invalid_argument("sign matrix too large");
  struct BV {
    uint64_t v, combo;
  };
  std::vector<BV> basis;
  for (int k = 0; k <= r.k_max; ++k) {
    uint64_t v = 0;
    for (int i = 0; i < rows; ++i)
      if (m.s[i][k] < 0) v |= uint64_t(1) << i;
    uint64_t combo = uint64_t(1) << k;
    for (const auto& b : basis) {
      uint64_t piv = b.v & (~b.v + 1);
      if (v & piv) {
        v ^= b.v;
        combo ^= b.combo;
      }
    }
    if (v == 0) {
      r.found = true;
      r.K = k;
      for (int c = 0; c <= k; ++c)
        if (combo >> c & 1) r.X.insert(c);
      return r;
    }
    // keep basis reduced with distinct pivots
    uint64_t piv = v & (~v + 1);
    for (auto& b : basis)
      if (b.v & piv) {
        b.v ^= v;
        b.combo ^= combo;
      }
    basis.push_back({v, combo});
  }
  return r;
}

// ---- alpha ----

IntSet alpha(const IntSet& X, bool even_degree) {
  IntSet out;
  if (even_degree) {
    for (int x : X) {
      auto toggle = [&](int y) {
        if (!out.erase(y)) out.insert(y);
      };
      toggle(x + 1);
      if (x >= 2) toggle(x - 1);
    }
  } else {
    for (int x : X) out.insert(x + 1);
    if (X.count(1)) out.insert(0);
  }
  return out;
}

std::optional<IntSet> alpha_inverse(const IntSet& X, bool even_degree) {
  if (even_degree) {
    IntSet rest = X, Y;
    while (!rest.empty()) {
      int top = *rest.rbegin();
      if (top == 0) return std::nullopt;
      Y.insert(top - 1);
      for (int z : alpha({top - 1}, true))
        if (!rest.erase(z)) rest.insert(z);
    }
    return Y;
  }
  IntSet Y;
  for (int z : X)
    if (z >= 1) Y.insert(z - 1);
  if (alpha(Y, false) != X) return std::nullopt;
  return Y;
}

// ---- GF(2) ----

std::optional<std::vector<uint8_t>> solve_gf2(const std::vector<std::vector<uint8_t>>& rows_in, int nvars) {
  const int W = (nvars + 1 + 63) / 64;
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& r : rows_in) {
    std::vector<uint64_t> b(W, 0);
    for (int i = 0; i <= nvars; ++i)
      if (r[i] & 1) b[i / 64] |= uint64_t(1) << (i % 64);
    rows.push_back(std::move(b));
  }
  auto bit = [](const std::vector<uint64_t>& b, int i) { return (b[i / 64] >> (i % 64)) & 1; };
  std::vector<int> pivcol;
  size_t r = 0;
  for (int c = 0; c < nvars && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && !bit(rows[p], c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r && bit(rows[i], c))
        for (int w = 0; w < W; ++w) rows[i][w] ^= rows[r][w];
    pivcol.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows.size(); ++i)
    if (bit(rows[i], nvars)) return std::nullopt;
  std::vector<uint8_t> sol(nvars, 0);
  for (size_t i = 0; i < r; ++i) sol[pivcol[i]] = uint8_t(bit(rows[i], nvars));
  return sol;
}

// ---- systems ----

SquareMaps square_maps(const Datum& d, int side) {
  SideView v(d, side);
  SquareMaps m;
  m.ngen = v.gens().d;
  m.npts = v.pts().d;
  for (int j = 0; j < m.ngen; ++j)
    for (int k = 0; k < m.npts; ++k) {
      m.nu.push_back(v.out(j, k));
      m.mu.push_back(v.next(j, k));
    }
  return m;
}

namespace {
uint8_t neg(int s) { return s < 0 ? 1 : 0; }
}  // namespace

SystemResult solve_star_system(const SquareMaps& m, const std::vector<int>& Sigma) {
  std::vector<std::vector<uint8_t>> rows;
  for (int j = 0; j < m.ngen; ++j)
    for (int k = 0; k < m.npts; ++k) {
      std::vector<uint8_t> r(m.npts + 1, 0);
      int nu = m.nu[j * m.npts + k], mu = m.mu[j * m.npts + k];
      r[k] ^= 1;
      r[nu] ^= 1;
      r[m.npts] = neg(Sigma[j]) ^ neg(Sigma[mu]);
      rows.push_back(std::move(r));
    }
  SystemResult res;
  auto sol = solve_gf2(rows, m.npts);
  if (sol) {
    res.solvable = true;
    for (auto b : *sol) res.witness.push_back(b ? -1 : 1);
  }
  return res;
}

SystemResult solve_double_star_system(const SquareMaps& m, const std::vector<int>& Sigma) {
  std::vector<std::vector<uint8_t>> rows;
  const int nv = m.npts + m.ngen;
  for (int j = 0; j < m.ngen; ++j)
    for (int k = 0; k < m.npts; ++k) {
      std::vector<uint8_t> r(nv + 1, 0);
      int nu = m.nu[j * m.npts + k], mu = m.mu[j * m.npts + k];
      r[k] ^= 1;
      r[nu] ^= 1;
      r[m.npts + j] ^= 1;
      r[nv] = neg(Sigma[mu]);
      rows.push_back(std::move(r));
    }
  SystemResult res;
  auto sol = solve_gf2(rows, nv);
  if (sol) {
    res.solvable = true;
    for (auto b : *sol) res.witness.push_back(b ? -1 : 1);
  }
  return res;
}

bool star_system_holds(const SquareMaps& m, const std::vector<int>& Sigma, const std::vector<int>& x) {
  for (int j = 0; j < m.ngen; ++j)
    for (int k = 0; k < m.npts; ++k) {
      int nu = m.nu[j * m.npts + k], mu = m.mu[j * m.npts + k];
      if (x[k] * x[nu] * Sigma[mu] != Sigma[j]) return false;
    }
  return true;
}

bool double_star_system_holds(const SquareMaps& m, const std::vector<int>& Sigma, const std::vector<int>& x) {
  for (int j = 0; j < m.ngen; ++j) {
    int c = 0;
    for (int k = 0; k < m.npts; ++k) {
      int nu = m.nu[j * m.npts + k], mu = m.mu[j * m.npts + k];
      int v = x[k] * x[nu] * Sigma[mu];
      if (k == 0) c = v;
      else if (v != c) return false;
    }
  }
  return true;
}

std::vector<std::string> star_system_text(const SquareMaps& m, const std::vector<int>& Sigma) {
  std::vector<std::string> out;
  for (int j = 0; j < m.ngen; ++j) {
    std::string line;
    for (int k = 0; k < m.npts; ++k) {
      int nu = m.nu[j * m.npts + k], mu = m.mu[j * m.npts + k];
      if (k) line += " = ";
      if (Sigma[mu] < 0) line += "-";
      line += "x" + std::to_string(k + 1) + "x" + std::to_string(nu + 1);
    }
    line += Sigma[j] < 0 ? " = -1" : " = 1";
    out.push_back(line);
  }
  return out;
}

StarPrimeResult star_vs_prime(const Datum& d, int side, const IntSet& Y, const std::vector<int>& Sigma) {
  SideView v(d, side);
  const int np = v.pts().d, ng = v.gens().d;
  StarPrimeResult res;
  bool seen_parity[2] = {false, false};
  for (int k0 = 0; k0 < np; ++k0) {
    int target = v.pts().inv(k0);
    // BFS over (point, parity)
    std::vector<int> prev(2 * np, -2), via(2 * np, -1);
    std::deque<int> q;
    int s0 = k0 * 2;
    prev[s0] = -1;
    q.push_back(s0);
    int hit[2] = {-1, -1};
    while (!q.empty()) {
      int st = q.front();
      q.pop_front();
      int beta = st / 2, par = st % 2;
      if (beta == target && hit[par] < 0) hit[par] = st;
      for (int j = 0; j < ng; ++j) {
        int nb = v.out(j, beta), mu = v.next(j, beta);
        int np2 = par ^ neg(Sigma[j]) ^ neg(Sigma[mu]);
        int ns = nb * 2 + np2;
        if (prev[ns] != -2) continue;
        prev[ns] = st;
        via[ns] = j;
        q.push_back(ns);
      }
    }
    for (int p = 0; p < 2; ++p)
      if (hit[p] >= 0) seen_parity[p] = true;
    if (res.start < 0 && (hit[0] >= 0 || hit[1] >= 0)) {
      // shortest witness among the two parities
      int best = -1;
      size_t best_len = SIZE_MAX;
      for (int p = 0; p < 2; ++p) {
        if (hit[p] < 0) continue;
        size_t len = 0;
        for (int s = hit[p]; prev[s] != -1; s = prev[s]) ++len;
        if (len < best_len) best_len = len, best = hit[p];
      }
      res.start = k0;
      res.parity = (best % 2) ? -1 : 1;
      // letters along the path act first on the right
      std::vector<int> seq, tops;
      for (int s = best; prev[s] != -1; s = prev[s]) {
        int j = via[s];
        int beta = prev[s] / 2;
        seq.push_back(j);
        tops.push_back(v.next(j, beta));
      }
      // seq holds the bottom letters from left to right already
      res.bottom = seq;
      res.top = tops;
    }
  }
  res.consistent = !(seen_parity[0] && seen_parity[1]);
  if (res.start < 0) {
    res.result = Descriptor::undetermined("no rectangle witness found");
  } else if (!res.consistent) {
    res.result = Descriptor::undetermined("witnesses disagree on star versus prime");
  } else {
    res.result = res.parity > 0 ? Descriptor::star(Y) : Descriptor::prime_star(Y);
  }
  return res;
}

// ---- local action, discreteness, irreducibility ----

LocalAction local_action(const Datum& d, int side) {
  SideView v(d, side);
  LocalAction la;
  const int np = v.pts().d;
  for (int g = 0; g < v.gens().d; ++g) {
    Perm p(np);
    for (int y = 0; y < np; ++y) p[y] = v.out(g, y);
    la.gens.push_back(p);
  }
  la.order = group_order(np, la.gens);
  la.alt = la.order * 2 >= factorial(np);
  if (np <= 6) la.class_label = identify_sym6_class(la.gens, np);
  return la;
}

BigInt burger_mozes_bound(int d) {
  BigInt half = factorial(d - 1) / 2;
  BigInt b = factorial(d) / 2;
  for (int i = 0; i < d; ++i) b *= half;
  return b;
}

BMResult burger_mozes_nondiscrete(const Datum& d, int side) {
  const int deg = side == 2 ? d.d2() : d.d1();
  if (deg < 6) throw std::invalid_argument("Burger-Mozes test needs degree >= 6");
  if (!local_action(d, side).alt) throw std::invalid_argument("local action does not contain Alt(d)");
  BallActions acts(d, side, 2);
  const int n = int(acts.ball().size());
  std::vector<Perm> gens;
  for (int g = 0; g < acts.view().gens().d; ++g) gens.push_back(acts.generator(g));
  BMResult r;
  r.bound = burger_mozes_bound(deg);
  auto hook = [&](const StabChain& sc, const Perm&, int) { return sc.order() >= r.bound; };
  StabChain sc(n, gens, {}, hook);
  r.order = sc.order();
  r.exact = sc.complete();
  r.nondiscrete = r.order >= r.bound;
  return r;
}

bool fixator_nontrivial(const Datum& d, int side) {
  BallActions acts(d, side, 3);
  const int n = int(acts.ball().size());
  std::vector<Perm> gens;
  // one generator per inverse pair suffices
  const Alphabet& G = acts.view().gens();
  for (int g = 0; g < G.d; ++g)
    if (G.inv(g) >= g) gens.push_back(acts.generator(g));
  std::vector<int> inner;
  for (size_t i = 0; i < acts.ball().sphere_end(2); ++i) inner.push_back(int(i));
  return !pointwise_stabilizer_trivial_on(n, gens, inner);
}

PossiblyIrreducible possibly_irreducible(const Datum& d) {
  PossiblyIrreducible p;
  p.side1 = fixator_nontrivial(d, 1);
  p.side2 = p.side1 ? fixator_nontrivial(d, 2) : false;
  if (!p.side1) p.side2 = fixator_nontrivial(d, 2);
  return p;
}

// ---- pipeline ----

namespace {

std::vector<int> sigma_values(const SignMatrix& s, const IntSet& Y) {
  std::vector<int> Sigma;
  for (const auto& row : s.s) {
    int v = 1;
    for (int r : Y) v *= row[r];
    Sigma.push_back(v);
  }
  return Sigma;
}

}  // namespace

SideReport classify_projection(const Datum& d, int side, const ClassifyOptions& opt) {
  SideReport rep;
  rep.side = side;
  const Alphabet& P = side == 2 ? d.B() : d.A();
  const Alphabet& G = side == 2 ? d.A() : d.B();
  rep.degree = P.d;
  auto la = local_action(d, side);
  rep.local_order = la.order.str();
  rep.local_class = la.class_label;
  for (const auto& g : la.gens) rep.local_generators.push_back(cycle_string(g));
  rep.alt_ok = la.alt;
  const int deg = P.d;
  if (deg < 6) {
    rep.result = Descriptor::undetermined("degree<6");
    return rep;
  }
  if (deg % 2) {
    rep.result = Descriptor::undetermined("odd degree");
    return rep;
  }
  if (!la.alt) {
    rep.result = Descriptor::undetermined("local action does not contain Alt(d)");
    return rep;
  }
  if (opt.use_bm) {
    auto bm = burger_mozes_nondiscrete(d, side);
    rep.bm_checked = true;
    rep.nondiscrete = bm.nondiscrete;
    rep.bm_bound = bm.bound.str();
    rep.bm_order = bm.order.str();
    rep.bm_order_exact = bm.exact;
    if (!bm.nondiscrete) {
      rep.result = {Descriptor::Discrete, {}, "order on B(v,2) below the Burger-Mozes bound"};
      return rep;
    }
    rep.evidence.push_back("nondiscrete: order on B(v,2) >= " + rep.bm_bound);
  }
  const int k_max = opt.k_max >= 0 ? opt.k_max : 2 * deg + 2;
  rep.have_graph = true;
  rep.graph = build_graph(d, side);
  SignMatrix sm;
  if (G.tau == 0) {
    rep.simplified = true;
    rep.simplified_graph = build_simplified_graph(d, side);
    sm = s_values_by_letter(rep.simplified_graph, s_values(rep.simplified_graph, k_max), d);
  } else {
    sm = s_values_by_letter(rep.graph, s_values(rep.graph, k_max), d);
  }
  rep.s = sm;
  rep.evidence.push_back("assumption: the image of s is spanned by the generator rows");
  rep.kx = detect_K_and_X(sm);
  if (!rep.kx.found) {
    rep.result = Descriptor::undetermined("no relation up to k_max=" + std::to_string(k_max));
    return rep;
  }
  const IntSet& X = rep.kx.X;
  if (X.count(0)) {
    rep.result = Descriptor::plain(X);
    rep.evidence.push_back("0 in X: only G(X,X) is possible");
    return rep;
  }
  auto Y = alpha_inverse(X, true);
  if (!Y) {
    rep.result = Descriptor::undetermined("X outside the image of alpha");
    return rep;
  }
  rep.Y = *Y;
  rep.Sigma = sigma_values(sm, *Y);
  bool all_neg = std::all_of(rep.Sigma.begin(), rep.Sigma.end(), [](int s) { return s < 0; });
  if (all_neg) {
    rep.corollary = true;
    rep.result = Descriptor::star(*Y);
    rep.evidence.push_back("all Sigma_j = -1: corollary gives G(Y,Y)*");
    return rep;
  }
  auto maps = square_maps(d, side);
  rep.star_checked = true;
  rep.star_system = solve_star_system(maps, rep.Sigma);
  if (rep.star_system.solvable) {
    rep.star_prime_checked = true;
    rep.star_prime = star_vs_prime(d, side, *Y, rep.Sigma);
    rep.result = rep.star_prime.result;
    rep.evidence.push_back("(*) solvable; rectangle witness decides star versus prime");
    return rep;
  }
  rep.double_star_checked = true;
  rep.double_star_system = solve_double_star_system(maps, rep.Sigma);
  if (rep.double_star_system.solvable) {
    rep.result = Descriptor::double_star(*Y);
    rep.evidence.push_back("(*) unsolvable, (**) solvable");
  } else {
    rep.result = Descriptor::plain(X);
    rep.evidence.push_back("(*) and (**) unsolvable");
  }
  return rep;
}

// ---- prediction ----

namespace {

void predict_from_graph(const LabelledGraph& g, std::set<Descriptor>& out) {
  int k_max = 2 * g.n + 2;
  auto sm = s_values(g, k_max);
  auto kx = detect_K_and_X(sm);
  if (!kx.found) {
    out.insert(Descriptor::undetermined("no relation"));
    return;
  }
  if (kx.X.count(0)) {
    out.insert(Descriptor::plain(kx.X));
    return;
  }
  auto Y = alpha_inverse(kx.X, true);
  if (!Y) return;
  auto Sigma = sigma_values(sm, *Y);
  bool all_neg = std::all_of(Sigma.begin(), Sigma.end(), [](int s) { return s < 0; });
  out.insert(Descriptor::star(*Y));
  if (all_neg) return;
  out.insert(Descriptor::plain(kx.X));
  out.insert(Descriptor::prime_star(*Y));
  out.insert(Descriptor::double_star(*Y));
}

}  // namespace

std::set<Descriptor> predict_possible_projections(int ngen, bool torsion_free, int tau) {
  std::set<Descriptor> out;
  if (torsion_free) {
    const int n = ngen / 2;
    std::vector<std::pair<int, int>> slots;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) slots.emplace_back(x, y);
    for (uint64_t em = 0; em < (uint64_t(1) << slots.size()); ++em) {
      LabelledGraph g;
      g.n = n;
      g.adj.assign(n, std::vector<uint8_t>(n, 0));
      for (size_t i = 0; i < slots.size(); ++i)
        if (em >> i & 1) g.adj[slots[i].first][slots[i].second] = g.adj[slots[i].second][slots[i].first] = 1;
      bool even = true;
      for (int v = 0; v < n; ++v) even = even && g.degree(v) % 2 == 0;
      if (!even) continue;
      for (int v = 0; v < n; ++v) g.names.push_back(std::to_string(v));
      for (uint64_t lm = 0; lm < (uint64_t(1) << n); ++lm) {
        g.label.assign(n, 1);
        for (int v = 0; v < n; ++v)
          if (lm >> v & 1) g.label[v] = -1;
        predict_from_graph(g, out);
      }
    }
    return out;
  }
  // full graphs on ngen letters with the inversion automorphism
  Alphabet al(ngen, tau);
  std::vector<std::pair<int, int>> orbit_rep;
  std::map<std::pair<int, int>, int> slot_of;
  for (int x = 0; x < ngen; ++x)
    for (int y = x; y < ngen; ++y) {
      int a = al.inv(x), b = al.inv(y);
      std::pair<int, int> img = {std::min(a, b), std::max(a, b)};
      if (slot_of.count(img)) {
        slot_of[{x, y}] = slot_of[img];
      } else {
        slot_of[{x, y}] = int(orbit_rep.size());
        orbit_rep.emplace_back(x, y);
      }
    }
  std::vector<int> label_orbit;
  for (int x = 0; x < ngen; ++x)
    if (al.inv(x) >= x) label_orbit.push_back(x);
  if (orbit_rep.size() > 24) throw std::invalid_argument("too many graphs to enumerate");
  for (uint64_t em = 0; em < (uint64_t(1) << orbit_rep.size()); ++em) {
    LabelledGraph g;
    g.n = ngen;
    g.adj.assign(ngen, std::vector<uint8_t>(ngen, 0));
    for (const auto& [xy, s] : slot_of)
      if (em >> s & 1) g.adj[xy.first][xy.second] = g.adj[xy.second][xy.first] = 1;
    bool even = true;
    for (int v = 0; v < ngen; ++v) even = even && g.degree(v) % 2 == 0;
    if (!even) continue;
    for (int v = 0; v < ngen; ++v) g.names.push_back(std::to_string(v));
    for (uint64_t lm = 0; lm < (uint64_t(1) << label_orbit.size()); ++lm) {
      g.label.assign(ngen, 1);
      for (size_t i = 0; i < label_orbit.size(); ++i)
        if (lm >> i & 1) g.label[label_orbit[i]] = g.label[al.inv(label_orbit[i])] = -1;
      predict_from_graph(g, out);
    }
  }
  return out;
}

}  // namespace sqc
