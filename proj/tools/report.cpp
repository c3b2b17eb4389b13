#include "report.hpp"

#include <sstream>

namespace sqc::report {

using json = nlohmann::json;

namespace {

json set_json(const IntSet& s) { return json(std::vector<int>(s.begin(), s.end())); }

json graph_json(const LabelledGraph& g) {
  json e = json::array();
  for (auto [x, y] : g.edges()) e.push_back({g.names[x], g.names[y]});
  json labels = json::object();
  for (int v = 0; v < g.n; ++v) labels[g.names[v]] = g.label[v];
  return {{"vertices", g.names}, {"edges", e}, {"labels", labels}};
}

std::string sign(int s) { return s < 0 ? "-" : "+"; }

}  // namespace

namespace {

// size of the relabeling group searched by canonical_form
double relabelings(const Alphabet& x) {
  const int p = (x.d - x.tau) / 2;
  double r = 1;
  for (int i = 1; i <= p; ++i) r *= 2.0 * i;
  for (int i = 1; i <= x.tau; ++i) r *= i;
  return r;
}

}  // namespace

json datum_json(const Datum& d) {
  json sq = json::array();
  for (const Quad& q : d.square_representatives()) sq.push_back(quad_string(q, d.A(), d.B()));
  json j{{"d1", d.d1()}, {"d2", d.d2()}, {"tau1", d.tau1()}, {"tau2", d.tau2()}, {"squares", sq}};
  if (relabelings(d.A()) * relabelings(d.B()) <= kCanonicalBudget)
    j["canonical"] = canonical_form(d).hex();
  else
    j["canonical"] = nullptr;
  return j;
}

json validation_json(const ValidationReport& r) {
  json issues = json::array();
  for (const auto& i : r.issues) issues.push_back({{"code", i.code}, {"message", i.message}});
  return {{"valid", r.valid},
          {"cardinality_ok", r.cardinality_ok},
          {"coverage_ok", r.coverage_ok},
          {"closure_ok", r.closure_ok},
          {"no_forbidden_squares", r.no_forbidden_squares},
          {"issues", issues}};
}

json side_json(const Datum& d, const SideReport& r) {
  json j{{"side", r.side},
         {"degree", r.degree},
         {"local_action", {{"order", r.local_order}, {"class", r.local_class}, {"generators", r.local_generators}}},
         {"alt", r.alt_ok},
         {"descriptor", r.result.str()},
         {"evidence", r.evidence}};
  if (r.result.kind == Descriptor::Undetermined) j["reason"] = r.result.reason;
  if (r.bm_checked)
    j["nondiscrete"] = {{"verdict", r.nondiscrete}, {"bound", r.bm_bound}, {"order", r.bm_order},
                        {"order_exact", r.bm_order_exact}};
  if (r.have_graph) {
    j["graph"] = graph_json(r.graph);
    if (r.simplified) j["simplified_graph"] = graph_json(r.simplified_graph);
    json s = json::object();
    for (size_t i = 0; i < r.s.rows.size(); ++i) s[r.s.rows[i]] = r.s.s[i];
    j["s"] = s;
    j["K"] = r.kx.found ? json(r.kx.K) : json(nullptr);
    j["X"] = r.kx.found ? set_json(r.kx.X) : json(nullptr);
    j["k_max"] = r.kx.k_max;
  }
  if (r.Y) {
    j["Y"] = set_json(*r.Y);
    j["Sigma"] = r.Sigma;
    j["corollary"] = r.corollary;
  }
  if (r.star_checked) {
    j["star_system"] = {{"solvable", r.star_system.solvable}, {"witness", r.star_system.witness},
                        {"rows", star_system_text(square_maps(d, r.side), r.Sigma)}};
  }
  if (r.double_star_checked)
    j["double_star_system"] = {{"solvable", r.double_star_system.solvable}, {"witness", r.double_star_system.witness}};
  if (r.star_prime_checked) {
    SideView v(d, r.side);
    Side gs = r.side == 2 ? Side::A : Side::B, ps = r.side == 2 ? Side::B : Side::A;
    std::vector<std::string> bottom, top;
    for (int x : r.star_prime.bottom) bottom.push_back(letter_token(gs, v.gens(), x));
    for (int x : r.star_prime.top) top.push_back(letter_token(gs, v.gens(), x));
    j["star_vs_prime"] = {{"consistent", r.star_prime.consistent},
                          {"start", r.star_prime.start >= 0 ? letter_token(ps, v.pts(), r.star_prime.start) : ""},
                          {"bottom", bottom},
                          {"top", top},
                          {"parity", r.star_prime.parity}};
  }
  return j;
}

json quotient_json(const QuotientReport& q) {
  json j{{"closed", q.closed}, {"relators", q.relators}, {"abelian_invariants", q.abelian_invariants}};
  if (q.closed) {
    j["order"] = q.order;
    if (q.exponent) j["exponent"] = q.exponent;
  }
  return j;
}

json entry_json(const CensusEntry& e) {
  json j{{"canonical", canonical_form(e.datum).hex()},
         {"tau1", e.datum.tau1()},
         {"tau2", e.datum.tau2()},
         {"verdict", verdict_string(e.verdict.verdict)},
         {"possibly_irreducible", {e.verdict.possibly.side1, e.verdict.possibly.side2}}};
  if (!e.key1.empty()) j["projections"] = {e.key1, e.key2};
  return j;
}

json census_json(const CensusResult& c) {
  json cells = json::array();
  for (const auto& [k, n] : c.cells) cells.push_back({{"H1", k.first}, {"H2", k.second}, {"count", n}});
  return {{"d1", c.row.d1},
          {"d2", c.row.d2},
          {"constraint", c.row.constraint},
          {"total", c.row.total},
          {"reducible", c.row.reducible},
          {"irreducible", c.row.irreducible},
          {"undetermined", c.row.undetermined},
          {"partial", c.row.partial},
          {"projection_cells", cells}};
}

std::string side_text(const Datum& d, const SideReport& r) {
  std::ostringstream o;
  o << "side " << r.side << " (degree " << r.degree << ")\n";
  o << "  local action order " << r.local_order;
  if (!r.local_class.empty()) o << ", class " << r.local_class;
  o << "\n";
  if (r.bm_checked) o << "  order on B(v,2) " << (r.nondiscrete ? ">= " : "< ") << r.bm_bound << "\n";
  if (r.have_graph) {
    const auto& g = r.simplified ? r.simplified_graph : r.graph;
    o << "  " << (r.simplified ? "simplified graph" : "graph") << ": " << g.edges().size() << " edges\n";
    int cols = std::min(4, r.s.k_max() + 1);
    o << "  s_k for k = 0.." << cols - 1 << "\n";
    for (size_t i = 0; i < r.s.rows.size(); ++i) {
      o << "    " << r.s.rows[i] << ":";
      for (int k = 0; k < cols; ++k) o << " " << sign(r.s.s[i][k]);
      o << "\n";
    }
    if (r.kx.found) o << "  K = " << r.kx.K << ", X = " << set_string(r.kx.X) << "\n";
  }
  if (r.Y) o << "  Y = " << set_string(*r.Y) << (r.corollary ? " (all Sigma = -1)" : "") << "\n";
  if (r.star_checked) {
    o << "  (*) " << (r.star_system.solvable ? "solvable" : "unsolvable") << "\n";
    for (const auto& line : star_system_text(square_maps(d, r.side), r.Sigma)) o << "    " << line << "\n";
  }
  if (r.double_star_checked) {
    o << "  (**) " << (r.double_star_system.solvable ? "solvable" : "unsolvable");
    if (r.double_star_system.solvable) {
      o << " by (";
      for (int k = 0; k < r.degree; ++k) o << (k ? "," : "") << r.double_star_system.witness[k];
      o << ")";
    }
    o << "\n";
  }
  o << "  result: " << r.result.str();
  if (r.result.kind == Descriptor::Undetermined) o << " (" << r.result.reason << ")";
  o << "\n";
  return o.str();
}

}  // namespace sqc::report
