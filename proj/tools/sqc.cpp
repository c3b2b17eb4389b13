#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "report.hpp"
#include "sqc/families.hpp"

using json = nlohmann::json;
using namespace sqc;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string file;
  std::string family;
  void add(CLI::App* c) {
    c->add_option("file", file, "datum file");
    c->add_option("--family", family, "named family, e.g. Gamma66(2)");
  }
  Datum load() const {
    if (file.empty() == family.empty()) throw UsageError("give exactly one of a datum file or --family");
    if (!family.empty()) {
      try {
        return named_family(family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    return load_datum(file);
  }
  std::string name() const { return family.empty() ? file : family; }
};

json envelope(const std::string& command) { return {{"schema", report::kSchemaVersion}, {"command", command}}; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square complex workbench"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  // validate
  Input vin;
  auto* cv = app.add_subcommand("validate", "check a datum");
  vin.add(cv);

  // classify
  Input cin;
  std::string side = "both";
  int k_max = -1;
  bool no_bm = false;
  auto* cc = app.add_subcommand("classify", "classify the closures of the projections");
  cin.add(cc);
  cc->add_option("--side", side, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
  cc->add_option("--k-max", k_max, "largest sphere radius for s_k (default 2d+2)");
  cc->add_flag("--no-bm", no_bm, "skip the nondiscreteness test");

  // census
  int d1 = 0, d2 = 0, tau1 = -1, tau2 = -1, threads = 0;
  bool tf = false, projections = false;
  std::string checkpoint, jsonl;
  auto* cs = app.add_subcommand("census", "enumerate data up to equivalence and count");
  cs->add_option("--d1", d1)->required();
  cs->add_option("--d2", d2)->required();
  auto* otf = cs->add_flag("--torsion-free", tf);
  auto* ot1 = cs->add_option("--tau1", tau1);
  auto* ot2 = cs->add_option("--tau2", tau2);
  otf->excludes(ot1)->excludes(ot2);
  ot1->needs(ot2);
  ot2->needs(ot1);
  cs->add_option("--threads", threads, "worker threads (default: all cores)");
  cs->add_option("--checkpoint", checkpoint, "resumable checkpoint file");
  cs->add_option("--jsonl", jsonl, "write one line per class");
  cs->add_flag("--projections", projections, "tabulate projection pairs");

  // quotient
  Input qin;
  std::vector<std::string> relators;
  size_t max_cosets = 1000000;
  bool witnesses = false;
  auto* cq = app.add_subcommand("quotient", "order of the quotient by extra relators");
  qin.add(cq);
  cq->add_option("--relator", relators, "extra relator word (repeatable)")->allow_extra_args(false);
  cq->add_flag("--witnesses", witnesses, "use the tabulated witness sets of the family (max over sets)");
  cq->add_option("--max-cosets", max_cosets);

  // autcount
  Input ain;
  auto* ca = app.add_subcommand("autcount", "automorphisms fixing the four vertices");
  ain.add(ca);

  // family
  std::string fname, out;
  auto* cf = app.add_subcommand("family", "write a named family as a datum file");
  cf->add_option("name", fname)->required();
  cf->add_option("-o,--output", out);

  // predict
  int ngen = 6, ptau = 0;
  bool ptf = false;
  auto* cp = app.add_subcommand("predict", "candidate projections from admissible labelled graphs");
  cp->add_option("--ngen", ngen, "generator letters (even)");
  cp->add_flag("--torsion-free", ptf);
  cp->add_option("--tau", ptau);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const bool js = format == "json";

  try {
    if (*cv) {
      Datum d = vin.load();
      auto r = validate(d);
      if (js) {
        auto j = envelope("validate");
        j["input"] = vin.name();
        j["report"] = report::validation_json(r);
        emit(j);
      } else {
        std::cout << (r.valid ? "valid" : "invalid") << "\n";
        for (const auto& i : r.issues) std::cout << "  " << i.code << ": " << i.message << "\n";
      }
      return r.valid ? 0 : 1;
    }
    if (*cc) {
      Datum d = cin.load();
      auto r = validate(d);
      if (!r.valid) {
        std::cerr << "invalid datum: " << (r.issues.empty() ? "" : r.issues.front().message) << "\n";
        return 1;
      }
      ClassifyOptions opt;
      opt.k_max = k_max;
      opt.use_bm = !no_bm;
      std::vector<int> sides = side == "both" ? std::vector<int>{1, 2} : std::vector<int>{std::stoi(side)};
      auto j = envelope("classify");
      j["input"] = cin.name();
      if (js) j["datum"] = report::datum_json(d);
      j["sides"] = json::array();
      for (int s : sides) {
        auto rep = classify_projection(d, s, opt);
        if (js)
          j["sides"].push_back(report::side_json(d, rep));
        else
          std::cout << report::side_text(d, rep);
      }
      if (js) emit(j);
      return 0;
    }
    if (*cs) {
      Constraint c;
      if (tf) c.kind = Constraint::TorsionFree;
      if (tau1 >= 0) c = {Constraint::FixedTau, tau1, tau2};
      CensusOptions opt;
      opt.enumeration.threads = threads;
      opt.enumeration.checkpoint = checkpoint;
      opt.projections = projections;
      auto res = census(d1, d2, c, opt);
      if (!jsonl.empty()) {
        std::ofstream f(jsonl);
        for (const auto& e : res.entries) f << report::entry_json(e).dump() << "\n";
      }
      if (js) {
        auto j = envelope("census");
        j["census"] = report::census_json(res);
        emit(j);
      } else {
        std::cout << CensusRow::csv_header() << "\n" << res.row.csv() << "\n";
        if (projections)
          for (const auto& [k, n] : res.cells) std::cout << "cell," << csv_field(k.first) << "," << csv_field(k.second) << "," << n << "\n";
      }
      return res.row.partial ? 1 : 0;
    }
    if (*cq) {
      Datum d = qin.load();
      std::vector<std::vector<std::string>> sets;
      if (witnesses) {
        if (qin.family.empty()) throw UsageError("--witnesses needs --family Gamma66(k) or Gamma45(k)");
        int k = 0;
        if (std::sscanf(qin.family.c_str(), "Gamma66(%d)", &k) == 1)
          sets = gamma66_info(k).witness_sets;
        else if (std::sscanf(qin.family.c_str(), "Gamma45(%d)", &k) == 1)
          sets = gamma45_info(k).witness_sets;
        else
          throw UsageError("no tabulated witnesses for " + qin.family);
      }
      if (!relators.empty()) sets.push_back(relators);
      if (sets.empty()) sets.push_back({});
      auto s = simple_index(d, sets, max_cosets);
      if (js) {
        auto j = envelope("quotient");
        j["input"] = qin.name();
        json q{{"closed", s.closed}, {"order", s.closed ? json(s.index) : json(nullptr)}, {"sets", json::array()},
               {"assumption", "witness relators are taken to lie in the finite residual"}};
        for (const auto& p : s.per_set) q["sets"].push_back(report::quotient_json(p));
        j["quotient"] = q;
        emit(j);
      } else {
        for (const auto& p : s.per_set) {
          std::cout << "relators:";
          for (const auto& r : p.relators) std::cout << " " << r;
          if (p.closed) std::cout << "  |Q| = " << p.order;
          else std::cout << "  limit exceeded";
          std::cout << "\n";
        }
        if (s.closed) std::cout << "index " << s.index << "\n";
      }
      return s.closed ? 0 : 1;
    }
    if (*ca) {
      Datum d = ain.load();
      auto a = vertex_fixing_automorphisms(d);
      if (js) {
        auto j = envelope("autcount");
        j["input"] = ain.name();
        j["count"] = a.count;
        j["structure"] = a.structure();
        emit(j);
      } else {
        std::cout << a.count << " (" << a.structure() << ")\n";
      }
      return 0;
    }
    if (*cf) {
      Datum d;
      try {
        d = named_family(fname);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::string text = format_datum(d, fname);
      if (out.empty()) std::cout << text;
      else std::ofstream(out) << text;
      return 0;
    }
    if (*cp) {
      if (ngen % 2 || ngen < 2) throw UsageError("--ngen must be even");
      auto set = predict_possible_projections(ngen, ptf, ptau);
      if (js) {
        auto j = envelope("predict");
        j["descriptors"] = json::array();
        for (const auto& d : set) j["descriptors"].push_back(d.str());
        emit(j);
      } else {
        for (const auto& d : set) std::cout << d.str() << "\n";
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
