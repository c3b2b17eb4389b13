#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "sqc/enumerate.hpp"
#include "sqc/families.hpp"

using namespace sqc;

TEST_CASE("tau pairs") {
  // (1,3) and (3,1) are swapped into each other
  CHECK(tau_pairs(3, 3, Constraint{}).size() == 3);
  CHECK(tau_pairs(4, 4, Constraint{Constraint::TorsionFree}) == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(tau_pairs(3, 4, Constraint{Constraint::FixedTau, 1, 2}) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("small counts") {
  CHECK(enumerate_data(3, 3, Constraint{}).data.size() == 60);
  CHECK(enumerate_data(4, 4, Constraint{Constraint::TorsionFree}).data.size() == 52);
  // torus and Klein bottle
  CHECK(enumerate_data(2, 2, Constraint{Constraint::TorsionFree}).data.size() == 2);
}

TEST_CASE("results do not depend on the thread count") {
  EnumOptions one, three;
  one.threads = 1;
  three.threads = 3;
  auto a = enumerate_data(3, 4, Constraint{Constraint::FixedTau, 1, 2}, one);
  auto b = enumerate_data(3, 4, Constraint{Constraint::FixedTau, 1, 2}, three);
  REQUIRE(a.data.size() == b.data.size());
  for (size_t i = 0; i < a.data.size(); ++i) CHECK(a.data[i] == b.data[i]);
  for (const auto& d : a.data) {
    CHECK(validate(d).valid);
    CHECK(canonical_datum(d) == d);
  }
}

TEST_CASE("checkpoint resume") {
  auto path = std::filesystem::temp_directory_path() / "sqc_unit_checkpoint.jsonl";
  std::filesystem::remove(path);
  EnumOptions o;
  o.threads = 1;
  o.checkpoint = path.string();
  auto first = enumerate_data(3, 3, Constraint{}, o);
  auto second = enumerate_data(3, 3, Constraint{}, o);
  CHECK(first.shards_resumed == 0);
  CHECK(second.shards_resumed == second.shards);
  CHECK(second.data.size() == first.data.size());
  std::filesystem::remove(path);
}

TEST_CASE("census of (3,3)") {
  auto c = census(3, 3, Constraint{});
  CHECK(c.row.total == 60);
  CHECK(c.row.reducible == 56);
  CHECK(c.row.irreducible == 0);
  CHECK(c.row.undetermined == 4);
  CHECK(c.cells[{"6.2", "6.2"}] == 3);
  CHECK(c.cells[{"6.2", "2.1"}] == 1);
  CHECK(c.cells[{"2.1", "6.2"}] == 1);
  CHECK(c.cells.size() == 3);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), 4, [&](size_t i) { hit[i]++; });
  for (int h : hit) CHECK(h == 1);
}
