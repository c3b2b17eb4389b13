#include "sqc/families.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include "sqc/datum.hpp"
#include "sqc/permgrp.hpp"

namespace sqc {

namespace {

struct FamilyRow {
  int k, tau1, tau2;
  const char* squares;
  const char* h1;
  const char* h2;
  int index;
  int aut;
};

#include "family_rows.inc"

constexpr const char* kGamma44 = "a1 b1 a2^-1 b1; a1 b2 a2 b2^-1; a1 b2^-1 a2^-1 b1^-1; a1 b1^-1 a2^-1 b2";
constexpr const char* kGamma33 = "A1 B1 A1 B1; A1 B2 A1 B2; A1 B3 A2 B3; A2 B1 A2 B1; A2 B2 A3 B2; A3 B1 A3 B3";
constexpr const char* kGamma33Mirror = "A1 B1 A1 B1; A1 B2 A1 B2; A1 B3 A3 B3; A2 B1 A2 B1; A2 B2 A2 B3; A3 B1 A3 B2";
constexpr const char* kFigure2 = "a1 b1 a1 b2^-1; a1 b2 a1 b2; a1 b1^-1 A2 b1^-1; A2 b2 A2 b2^-1";

Datum from_squares(int d1, int d2, int t1, int t2, const std::string& text) {
  Alphabet A(d1, t1), B(d2, t2);
  return Datum(d1, d2, t1, t2, parse_square_list(text, A, B));
}

// cycles over letter tokens of one side, e.g. "(b1 b2^-1)(b3)"
Perm parse_token_cycles(const std::string& text, const Alphabet& A, const Alphabet& B, Side side) {
  const Alphabet& al = side == Side::A ? A : B;
  Perm p = identity_perm(al.d);
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '(') {
      ++i;
      continue;
    }
    size_t j = text.find(')', i);
    if (j == std::string::npos) throw std::invalid_argument("unbalanced cycle: " + text);
    std::istringstream in(text.substr(i + 1, j - i - 1));
    std::vector<int> cyc;
    std::string tok;
    while (in >> tok) {
      auto l = parse_letter(tok, A, B);
      if (l.side != side) throw std::invalid_argument("letter on the wrong side: " + tok);
      cyc.push_back(l.index);
    }
    for (size_t c = 0; c < cyc.size(); ++c) p[cyc[c]] = cyc[(c + 1) % cyc.size()];
    i = j + 1;
  }
  return p;
}

std::vector<Perm> full_actions(const LocalActionList& acts, const Alphabet& gens, const Alphabet& A, const Alphabet& B,
                               Side gen_side, Side pt_side) {
  const Alphabet& pts = pt_side == Side::A ? A : B;
  std::vector<Perm> act(gens.d);
  std::vector<bool> have(gens.d, false);
  for (const auto& [tok, cyc] : acts) {
    auto l = parse_letter(tok, A, B);
    if (l.side != gen_side) throw std::invalid_argument("generator on the wrong side: " + tok);
    Perm p = parse_token_cycles(cyc, A, B, pt_side);
    act[l.index] = p;
    have[l.index] = true;
    int inv = gens.inv(l.index);
    if (!have[inv]) {
      act[inv] = invert(p);
      have[inv] = true;
    }
  }
  for (int g = 0; g < gens.d; ++g)
    if (!have[g]) act[g] = identity_perm(pts.d);
  return act;
}

void check_valid(const Datum& d, const std::string& what) {
  auto rep = validate(d);
  if (!rep.valid) {
    std::string msg = what + " is not a valid datum";
    if (!rep.issues.empty()) msg += ": " + rep.issues.front().message;
    throw std::logic_error(msg);
  }
}

const FamilyRow& row66(int k) {
  if (k < 1 || k > int(std::size(kRows66))) throw std::invalid_argument("Gamma66 index out of range 1..160");
  return kRows66[k - 1];
}

const FamilyRow& row45(int k) {
  if (k < 1 || k > int(std::size(kRows45))) throw std::invalid_argument("Gamma45 index out of range 1..60");
  return kRows45[k - 1];
}

}  // namespace

Datum datum_from_local_actions(int d1, int d2, int tau1, int tau2, const LocalActionList& act_of_A,
                               const LocalActionList& act_of_B) {
  Alphabet A(d1, tau1), B(d2, tau2);
  auto lamA = full_actions(act_of_A, A, A, B, Side::A, Side::B);
  auto lamB = full_actions(act_of_B, B, A, B, Side::B, Side::A);
  std::vector<Perm> muinv;
  for (const auto& p : lamB) muinv.push_back(invert(p));
  std::vector<Quad> quads;
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b) {
      int bp = B.inv(lamA[a][b]);
      int ap = muinv[b][A.inv(a)];
      quads.push_back({uint8_t(a), uint8_t(b), uint8_t(ap), uint8_t(bp)});
    }
  return Datum(d1, d2, tau1, tau2, quads);
}

Datum gamma44() { return from_squares(4, 4, 0, 0, kGamma44); }
Datum gamma33() { return from_squares(3, 3, 3, 3, kGamma33); }
Datum figure2_datum() { return from_squares(3, 4, 1, 0, kFigure2); }

Datum worked_example_datum() {
  Datum d = datum_from_local_actions(6, 6, 0, 0,
                                     {{"a1", "(b1)(b1^-1)(b2)(b2^-1)(b3 b3^-1)"},
                                      {"a2", "(b1)(b1^-1 b2 b3 b3^-1 b2^-1)"},
                                      {"a3", "(b1 b2^-1 b3^-1 b3 b2)(b1^-1)"}},
                                     {{"b1", "(a1 a1^-1)(a2 a3 a2^-1 a3^-1)"},
                                      {"b2", "(a1 a1^-1)(a2 a3)(a2^-1 a3^-1)"},
                                      {"b3", "(a1 a2^-1 a3^-1)(a1^-1 a3 a2)"}});
  check_valid(d, "worked example");
  return d;
}

Datum gamma66(int k) {
  const auto& r = row66(k);
  Datum d = from_squares(6, 6, r.tau1, r.tau2, std::string(kGamma44) + "; " + r.squares);
  check_valid(d, "Gamma66(" + std::to_string(k) + ")");
  return d;
}

Datum gamma45(int k) {
  const auto& r = row45(k);
  std::string base = k <= 28 ? kGamma33 : kGamma33Mirror;
  Datum d = from_squares(4, 5, r.tau1, r.tau2, base + "; " + r.squares);
  check_valid(d, "Gamma45(" + std::to_string(k) + ")");
  return d;
}

Datum gamma2n2n1(int n) {
  if (n < 2) throw std::invalid_argument("Gamma2n2n1 needs n >= 2");
  if (n == 2) return gamma45(9);
  const int d1 = 2 * n, d2 = 2 * n + 1;
  Alphabet A(d1, d1), B(d2, d2);
  std::string text = std::string(kGamma33) + "; " + row45(9).squares;
  auto L = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  for (int k = 3; k <= n; ++k) {
    text += "; " + L('A', 2 * k) + " " + L('B', 2 * k + 1) + " A1 " + L('B', 2 * k);
    text += "; " + L('A', 2 * k - 1) + " " + L('B', 2 * k) + " " + L('A', 2 * k - 1) + " B1";
    text += "; " + L('A', 2 * k - 1) + " " + L('B', 2 * k + 1) + " A2 " + L('B', 2 * k + 1);
  }
  auto quads = parse_square_list(text, A, B);
  Datum partial(d1, d2, d1, d2, quads);
  for (int a = 0; a < d1; ++a)
    for (int b = 0; b < d2; ++b)
      if (!partial.has_corner(a, b)) quads.push_back({uint8_t(a), uint8_t(b), uint8_t(a), uint8_t(b)});
  Datum d(d1, d2, d1, d2, quads);
  check_valid(d, "Gamma2n2n1(" + std::to_string(n) + ")");
  return d;
}

Datum gamma64n(int n) {
  if (n < 2) throw std::invalid_argument("Gamma64n needs n >= 2");
  auto b = [](int i) { return "b" + std::to_string(i); };
  const std::string bn = b(2 * n);
  std::string text = std::string(kGamma44) + "; a3 b2 a3^-1 b1^-1; a3 b3 a3^-1 b2^-1; a3 b1 a3^-1 " + bn +
                     "^-1; a2 b3 a2^-1 b3; a2 " + bn + " a2^-1 " + bn;
  for (int j = 2; j <= n; ++j) {
    std::string e = b(2 * j), o = b(2 * j - 1) + "^-1";
    text += "; a1 " + e + " a1 " + o + "; a1^-1 " + e + " a3^-1 " + o + "; a3 " + e + " a1^-1 " + o;
  }
  for (int j = 2; j <= n - 1; ++j) {
    std::string o = b(2 * j + 1), e = b(2 * j) + "^-1";
    text += "; a2 " + o + " a2 " + e + "; a2^-1 " + o + " a3^-1 " + e + "; a3 " + o + " a2^-1 " + e;
  }
  Datum d = from_squares(6, 4 * n, 0, 0, text);
  check_valid(d, "Gamma64n(" + std::to_string(n) + ")");
  return d;
}

FamilyInfo gamma66_info(int k) {
  const auto& r = row66(k);
  FamilyInfo f{"Gamma66", k, r.h1, r.h2, r.index, r.aut, {{"[a1^3, a2^4]"}}};
  return f;
}

FamilyInfo gamma45_info(int k) {
  const auto& r = row45(k);
  FamilyInfo f{"Gamma45", k, r.h1, r.h2, r.index, r.aut, {}};
  if (k <= 28)
    f.witness_sets = {{"[B2 (B1 B3)^2 B2, B1 B3]"}, {"[B2 (B1 B3)^2 B2, B1 B3 A2]"}};
  else
    f.witness_sets = {{"[A2 (A1 A3)^2 A2, A1 A3]"}, {"[A2 (A1 A3)^2 A2, A1 A3 B2]"}};
  return f;
}

Datum named_family(const std::string& text) {
  static const std::regex re(R"(\s*([A-Za-z0-9]+?)\s*(?:\(\s*(\d+)\s*\))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw std::invalid_argument("unknown family: " + text);
  std::string name = m[1];
  bool has = m[2].matched;
  int k = has ? std::stoi(m[2]) : 0;
  auto need = [&](bool want) {
    if (want != has) throw std::invalid_argument("bad parameter for family " + name);
  };
  if (name == "Gamma44") return need(false), gamma44();
  if (name == "Gamma33") return need(false), gamma33();
  if (name == "fig2") return need(false), figure2_datum();
  if (name == "worked") return need(false), worked_example_datum();
  if (name == "Gamma66") return need(true), gamma66(k);
  if (name == "Gamma45") return need(true), gamma45(k);
  if (name == "Gamma2n2n1") return need(true), gamma2n2n1(k);
  if (name == "Gamma64n") return need(true), gamma64n(k);
  throw std::invalid_argument("unknown family: " + name);
}

std::vector<std::string> family_names() {
  return {"Gamma44", "Gamma33", "fig2", "worked", "Gamma66(k)", "Gamma45(k)", "Gamma2n2n1(n)", "Gamma64n(n)"};
}

}  // namespace sqc
