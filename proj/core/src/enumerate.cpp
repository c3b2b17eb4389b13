#include "sqc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <memory>
#include <mutex>
#include "json.hpp"
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sqc {

using json = nlohmann::json;

std::string Constraint::str() const {
  switch (kind) {
    case None: return "none";
    case TorsionFree: return "tf";
    case FixedTau: return "tau=" + std::to_string(tau1) + "," + std::to_string(tau2);
  }
  return "none";
}

std::vector<std::pair<int, int>> tau_pairs(int d1, int d2, const Constraint& c) {
  std::vector<std::pair<int, int>> out;
  if (c.kind == Constraint::TorsionFree) {
    if (d1 % 2 == 0 && d2 % 2 == 0) out.push_back({0, 0});
    return out;
  }
  if (c.kind == Constraint::FixedTau) {
    if (c.tau1 % 2 != d1 % 2 || c.tau2 % 2 != d2 % 2 || c.tau1 > d1 || c.tau2 > d2 || c.tau1 < 0 || c.tau2 < 0)
      throw std::invalid_argument("tau must have the parity of the degree and lie in 0..d");
    if (d1 == d2 && c.tau1 > c.tau2) out.push_back({c.tau2, c.tau1});
    else out.push_back({c.tau1, c.tau2});
    return out;
  }
  for (int t1 = d1 % 2; t1 <= d1; t1 += 2)
    for (int t2 = d2 % 2; t2 <= d2; t2 += 2)
      if (d1 != d2 || t1 <= t2) out.push_back({t1, t2});
  return out;
}

void parallel_for(size_t n, int threads, const std::function<void(size_t)>& body) {
  int nt = threads > 0 ? threads : int(std::max(1u, std::thread::hardware_concurrency()));
  nt = int(std::min<size_t>(size_t(nt), std::max<size_t>(n, 1)));
  if (nt <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex em;
  std::vector<std::thread> pool;
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (;;) {
        size_t i = next++;
        if (i >= n) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lk(em);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

namespace {

constexpr uint8_t kEmpty = EquivalenceGroup::kEmpty;

struct OrbitEntry {
  uint8_t size = 0;
  std::array<std::pair<uint8_t, uint8_t>, 4> cv;  // (corner, value)
};

class Search {
 public:
  Search(int d1, int d2, int t1, int t2, bool tf)
      : A_(d1, t1), B_(d2, t2), n_(d1 * d2), tf_(tf), G_(A_, B_, d1 == d2 && t1 == t2) {
    orbits_.resize(size_t(n_) * n_);
    for (int c = 0; c < n_; ++c)
      for (int v = 0; v < n_; ++v) {
        Quad q{uint8_t(c / d2), uint8_t(c % d2), uint8_t(v / d2), uint8_t(v % d2)};
        auto orb = expand_square(q, A_, B_);
        auto& e = orbits_[size_t(c) * n_ + v];
        e.size = uint8_t(orb.size());
        for (size_t i = 0; i < orb.size(); ++i)
          e.cv[i] = {uint8_t(orb[i][0] * d2 + orb[i][1]), uint8_t(orb[i][2] * d2 + orb[i][3])};
      }
  }

  int corners() const { return n_; }
  const Alphabet& A() const { return A_; }
  const Alphabet& B() const { return B_; }

  // children of a partial table at its first empty corner, in increasing order
  void children(const std::vector<uint8_t>& T, std::vector<std::vector<uint8_t>>& out, uint64_t& nodes) const {
    int c = first_empty(T, 0);
    if (c < 0) return;
    std::vector<uint8_t> W = T;
    for (int v = 0; v < n_; ++v) {
      const auto& e = orbits_[size_t(c) * n_ + v];
      if (tf_ && e.size != 4) continue;
      uint8_t changed[4];
      int nch = 0;
      if (!place(W, e, changed, nch)) continue;
      ++nodes;
      if (!pruned(W.data())) out.push_back(W);
      for (int i = 0; i < nch; ++i) W[changed[i]] = kEmpty;
    }
  }

  // full depth-first search below T; emit complete minimal tables
  void run(std::vector<uint8_t>& T, int from, std::vector<std::vector<uint8_t>>& out, uint64_t& nodes,
           const std::atomic<bool>& stop) const {
    if (stop.load(std::memory_order_relaxed)) return;
    int c = first_empty(T, from);
    if (c < 0) {
      if (G_.is_minimal(T.data())) out.push_back(T);
      return;
    }
    for (int v = 0; v < n_; ++v) {
      const auto& e = orbits_[size_t(c) * n_ + v];
      if (tf_ && e.size != 4) continue;
      uint8_t changed[4];
      int nch = 0;
      if (!place(T, e, changed, nch)) continue;
      ++nodes;
      if (!pruned(T.data())) run(T, c + 1, out, nodes, stop);
      for (int i = 0; i < nch; ++i) T[changed[i]] = kEmpty;
    }
  }

  bool complete(const std::vector<uint8_t>& T) const { return first_empty(T, 0) < 0; }
  bool minimal(const std::vector<uint8_t>& T) const { return G_.is_minimal(T.data()); }

 private:
  Alphabet A_, B_;
  int n_;
  bool tf_;
  EquivalenceGroup G_;
  std::vector<OrbitEntry> orbits_;

  int first_empty(const std::vector<uint8_t>& T, int from) const {
    for (int c = from; c < n_; ++c)
      if (T[c] == kEmpty) return c;
    return -1;
  }

  static bool place(std::vector<uint8_t>& T, const OrbitEntry& e, uint8_t* changed, int& nch) {
    nch = 0;
    for (int i = 0; i < e.size; ++i) {
      auto [c, v] = e.cv[i];
      if (T[c] == kEmpty) {
        T[c] = v;
        changed[nch++] = c;
      } else if (T[c] != v) {
        for (int k = 0; k < nch; ++k) T[changed[k]] = kEmpty;
        nch = 0;
        return false;
      }
    }
    return true;
  }

  bool pruned(const uint8_t* T) const {
    for (size_t g = 0; g < G_.size(); ++g)
      if (G_.compare(g, T) < 0) return true;
    return false;
  }
};

std::string table_hex(const std::vector<uint8_t>& T) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (uint8_t b : T) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

std::vector<uint8_t> hex_table(const std::string& s) {
  std::vector<uint8_t> T;
  for (size_t i = 0; i + 1 < s.size(); i += 2) T.push_back(uint8_t(std::stoi(s.substr(i, 2), nullptr, 16)));
  return T;
}

constexpr int kCheckpointVersion = 1;

}  // namespace

EnumResult enumerate_data(int d1, int d2, const Constraint& c, const EnumOptions& opt) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("degrees must be at least 2");
  EnumResult res;
  struct Shard {
    int t1, t2;
    std::vector<uint8_t> prefix;
  };
  std::vector<std::unique_ptr<Search>> searches;
  std::vector<Shard> shards;
  auto pairs = tau_pairs(d1, d2, c);
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    auto [t1, t2] = pairs[pi];
    searches.push_back(std::make_unique<Search>(d1, d2, t1, t2, c.kind == Constraint::TorsionFree));
    const Search& S = *searches.back();
    // split two levels deep
    std::vector<std::vector<uint8_t>> level{std::vector<uint8_t>(S.corners(), kEmpty)};
    for (int depth = 0; depth < 2; ++depth) {
      std::vector<std::vector<uint8_t>> next;
      for (const auto& T : level) {
        if (S.complete(T)) {
          next.push_back(T);
          continue;
        }
        S.children(T, next, res.nodes);
      }
      level = std::move(next);
    }
    for (auto& T : level) shards.push_back({int(pi), 0, std::move(T)});
  }
  res.shards = shards.size();

  std::vector<std::vector<std::vector<uint8_t>>> found(shards.size());
  std::vector<char> done(shards.size(), 0);
  std::string header;
  {
    json h{{"checkpoint", kCheckpointVersion}, {"d1", d1}, {"d2", d2}, {"constraint", c.str()},
           {"shards", shards.size()}};
    header = h.dump();
  }
  std::ofstream ck;
  std::mutex ckm;
  if (!opt.checkpoint.empty()) {
    std::ifstream in(opt.checkpoint);
    bool resume = false;
    if (in) {
      std::string line;
      if (std::getline(in, line) && line == header) {
        resume = true;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          json j;
          try {
            j = json::parse(line);
          } catch (...) {
            break;  // torn final line
          }
          size_t s = j.at("shard");
          if (s >= shards.size()) continue;
          found[s].clear();
          for (const auto& h : j.at("tables")) found[s].push_back(hex_table(h.get<std::string>()));
          done[s] = 1;
          ++res.shards_resumed;
        }
      }
    }
    in.close();
    if (resume) {
      ck.open(opt.checkpoint, std::ios::app);
    } else {
      ck.open(opt.checkpoint, std::ios::trunc);
      ck << header << "\n";
      ck.flush();
    }
  }

  std::atomic<bool> stop{false};
  std::atomic<size_t> emitted{0};
  std::atomic<uint64_t> nodes{0};
  for (size_t s = 0; s < shards.size(); ++s)
    if (done[s]) emitted += found[s].size();
  parallel_for(shards.size(), opt.threads, [&](size_t s) {
    if (done[s] || stop) return;
    const Search& S = *searches[shards[s].t1];
    std::vector<uint8_t> T = shards[s].prefix;
    uint64_t local_nodes = 0;
    std::vector<std::vector<uint8_t>> out;
    if (S.complete(T)) {
      if (S.minimal(T)) out.push_back(T);
    } else {
      S.run(T, 0, out, local_nodes, stop);
    }
    nodes += local_nodes;
    if (stop) return;
    size_t total = (emitted += out.size());
    if (opt.max_results && total > opt.max_results) stop = true;
    found[s] = std::move(out);
    done[s] = 1;
    if (ck.is_open()) {
      json j{{"shard", s}, {"tables", json::array()}};
      for (const auto& t : found[s]) j["tables"].push_back(table_hex(t));
      std::lock_guard<std::mutex> lk(ckm);
      ck << j.dump() << "\n";
      ck.flush();
    }
  });
  res.nodes += nodes;
  res.partial = stop.load();
  for (size_t s = 0; s < shards.size(); ++s) {
    if (!done[s]) continue;
    const Search& S = *searches[shards[s].t1];
    for (const auto& T : found[s]) res.data.push_back(datum_from_table(S.A(), S.B(), T.data()));
  }
  std::sort(res.data.begin(), res.data.end(), [](const Datum& x, const Datum& y) { return encode(x) < encode(y); });
  if (opt.max_results && res.data.size() > opt.max_results) {
    res.data.resize(opt.max_results);
    res.partial = true;
  }
  return res;
}

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::Reducible: return "red";
    case Verdict::Irreducible: return "irred";
    case Verdict::Undetermined: return "?";
  }
  return "?";
}

ClassVerdict census_verdict(const Datum& d) {
  ClassVerdict cv;
  cv.possibly = possibly_irreducible(d);
  if (!cv.possibly.overall()) {
    cv.verdict = Verdict::Reducible;
    return cv;
  }
  for (int side : {1, 2}) {
    int deg = side == 1 ? d.d1() : d.d2();
    if (deg < 6) continue;
    if (!local_action(d, side).alt) continue;
    if (burger_mozes_nondiscrete(d, side).nondiscrete) {
      cv.verdict = Verdict::Irreducible;
      cv.certified_side = side;
      return cv;
    }
  }
  cv.verdict = Verdict::Undetermined;
  return cv;
}

std::string CensusRow::csv_header() { return "d1,d2,constraint,total,reducible,irreducible,undetermined"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string CensusRow::csv() const {
  std::ostringstream o;
  o << d1 << "," << d2 << "," << csv_field(constraint) << "," << total << "," << reducible << "," << irreducible << ","
    << undetermined;
  return o.str();
}

std::string projection_key(const Datum& d, int side, int k_max) {
  ClassifyOptions opt;
  opt.k_max = k_max;
  auto rep = classify_projection(d, side, opt);
  if (rep.result.kind != Descriptor::Undetermined && rep.result.kind != Descriptor::Discrete) return rep.result.str();
  if (!rep.local_class.empty()) return rep.local_class;
  return rep.result.str();
}

CensusResult census(int d1, int d2, const Constraint& c, const CensusOptions& opt) {
  CensusResult res;
  auto en = enumerate_data(d1, d2, c, opt.enumeration);
  res.row.d1 = d1;
  res.row.d2 = d2;
  res.row.constraint = c.str();
  res.row.partial = en.partial;
  res.entries.resize(en.data.size());
  parallel_for(en.data.size(), opt.enumeration.threads, [&](size_t i) {
    auto& e = res.entries[i];
    e.datum = en.data[i];
    e.verdict = census_verdict(e.datum);
    if (opt.projections && e.verdict.verdict != Verdict::Reducible) {
      e.key1 = projection_key(e.datum, 1, opt.k_max);
      e.key2 = projection_key(e.datum, 2, opt.k_max);
    }
  });
  for (const auto& e : res.entries) {
    ++res.row.total;
    switch (e.verdict.verdict) {
      case Verdict::Reducible: ++res.row.reducible; break;
      case Verdict::Irreducible: ++res.row.irreducible; break;
      case Verdict::Undetermined: ++res.row.undetermined; break;
    }
    if (opt.projections && e.verdict.verdict != Verdict::Reducible) {
      ++res.cells[{e.key1, e.key2}];
      if (d1 == d2 && e.key1 != e.key2) ++res.cells[{e.key2, e.key1}];
    }
  }
  return res;
}

}  // namespace sqc
