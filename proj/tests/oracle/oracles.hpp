#pragma once
// Independent reference implementations. They share no code paths with the
// algorithms they check beyond the Datum container itself.
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "sqc/classify.hpp"
#include "sqc/datum.hpp"
#include "sqc/permgrp.hpp"

namespace sqc::oracle {

// product of destination labels over explicitly listed non-repeating paths
int path_sign(const LabelledGraph& g, int x, int k);

// random symmetric graph with loops and labels
LabelledGraph random_graph(int n, std::mt19937& rng);

// s_k of generator g straight from the definition, with an independent
// transducer and a random legal coloring of the ball
int s_value(const Datum& d, int side, int g, int k, std::mt19937& rng);

// alpha read off a literal d-regular tree
IntSet alpha_tree(const IntSet& X, int d);

// exhaustive search over all sign vectors
bool star_solvable(const SquareMaps& m, const std::vector<int>& Sigma);
bool double_star_solvable(const SquareMaps& m, const std::vector<int>& Sigma);

// every valid datum with these parameters, no symmetry reduction
std::vector<Datum> all_data(int d1, int d2, int tau1, int tau2);

// every datum reachable by an equivalence, keyed as tau1, tau2, sorted quads
std::set<std::vector<uint8_t>> equivalence_orbit(const Datum& d);

// group order by closing the element set
size_t group_order(int n, const std::vector<Perm>& gens);

}  // namespace sqc::oracle
