#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sqc/permgrp.hpp"

using namespace sqc;

namespace {

Perm random_perm(int n, std::mt19937& rng) {
  Perm p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(perm_order(p) == 6);
  CHECK(perm_sign(p) == -1);
  CHECK(cycle_string(p) == "(1,2,3)(4,5)");
  CHECK(is_identity(compose(p, invert(p))));
  Perm q = parse_cycles("(1,2)", 6);
  // p first, then q: 1 -> 2 -> 1
  CHECK(compose(p, q)[0] == 0);
  CHECK(cycle_string(identity_perm(4)) == "()");
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("stabilizer chain order against element closure") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 60; ++rep) {
    int n = 3 + int(rng() % 5);
    std::vector<Perm> gens;
    int ng = 1 + int(rng() % 3);
    for (int i = 0; i < ng; ++i) {
      Perm p = random_perm(n, rng);
      if (rng() % 2) {  // sparse generators give proper subgroups
        p = identity_perm(n);
        std::swap(p[rng() % n], p[rng() % n]);
      }
      gens.push_back(p);
    }
    CAPTURE(n);
    CHECK(group_order(n, gens) == oracle::group_order(n, gens));
    StabChain sc(n, gens);
    auto elems = enumerate_elements(n, gens);
    CHECK(elems.size() == oracle::group_order(n, gens));
    for (const Perm& e : elems) CHECK(sc.contains(e));
  }
}

TEST_CASE("membership rejects outsiders") {
  std::vector<Perm> a5{parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)};
  StabChain sc(5, a5);
  CHECK(sc.order() == 60);
  CHECK(sc.contains(parse_cycles("(1,2)(3,4)", 5)));
  CHECK_FALSE(sc.contains(parse_cycles("(1,2)", 5)));
  CHECK(contains_alternating(a5, 5));
  CHECK_FALSE(contains_alternating({parse_cycles("(1,2,3,4,5)", 5)}, 5));
}

TEST_CASE("large orders") {
  std::vector<Perm> s12{parse_cycles("(1,2)", 12), parse_cycles("(1,2,3,4,5,6,7,8,9,10,11,12)", 12)};
  CHECK(group_order(12, s12) == factorial(12));
}

TEST_CASE("Sym(6) subgroup classes") {
  auto labels = sym6_class_labels();
  CHECK(labels.size() == 56);
  std::mt19937 rng(3);
  for (const auto& l : labels) {
    auto gens = sym6_class_generators(l);
    CAPTURE(l);
    CHECK(identify_sym6_class(gens, 6) == l);
    // order is the prefix of the label
    CHECK(group_order(6, gens) == std::stoi(l.substr(0, l.find('.'))));
    for (int rep = 0; rep < 3; ++rep) {
      Perm c = random_perm(6, rng);
      std::vector<Perm> conj;
      for (const Perm& g : gens) conj.push_back(compose(compose(invert(c), g), c));
      CHECK(identify_sym6_class(conj, 6) == l);
    }
  }
}

TEST_CASE("pointwise stabilizer") {
  std::vector<Perm> s4{parse_cycles("(1,2)", 4), parse_cycles("(1,2,3,4)", 4)};
  CHECK_FALSE(pointwise_stabilizer_trivial_on(4, s4, {0, 1}));
  CHECK(pointwise_stabilizer_trivial_on(4, s4, {0, 1, 2}));
}
