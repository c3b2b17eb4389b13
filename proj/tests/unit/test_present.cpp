#include "doctest.h"
#include "sqc/families.hpp"
#include "sqc/present.hpp"

using namespace sqc;

TEST_CASE("presentation shape") {
  auto p = presentation_of(gamma44());
  CHECK(p.ncols == 8);
  CHECK(p.generator_count() == 4);
  CHECK(p.square_relators == 4);
  for (int c = 0; c < p.ncols; ++c) CHECK(p.inv[p.inv[c]] == c);
  auto q = presentation_of(gamma33());
  CHECK(q.generator_count() == 6);
}

TEST_CASE("small quotients") {
  // killing a1, a2 leaves b1 = b2 of order two
  auto q = quotient(gamma44(), {"a1", "a2"});
  REQUIRE(q.closed);
  CHECK(q.order == 2);
  CHECK(q.abelian_invariants == std::vector<long long>{2});
  auto t = quotient(gamma44(), {"a1", "a2", "b1"});
  CHECK(t.order == 1);
}

TEST_CASE("coset limit is reported, never a wrong index") {
  auto p = presentation_of(gamma44());
  auto r = coset_enumerate(p, {}, 200);
  CHECK_FALSE(r.closed);
}

TEST_CASE("finite index subgroups") {
  auto p = presentation_of(gamma44());
  // subgroup generated by all A letters and b1 b2: index from the B-length parity
  std::vector<std::vector<int>> H{{0}, {1}, word_columns(gamma44(), "b1 b2")};
  auto r = coset_enumerate(p, H);
  REQUIRE(r.closed);
  CHECK(r.index == 2);
  CHECK(type_preserving_index(gamma44()) == std::optional<size_t>(4));
}

TEST_CASE("witness quotients") {
  auto q = quotient(gamma66(2), {"[a1^3, a2^4]"});
  REQUIRE(q.closed);
  CHECK(q.order == 4);
  auto s = simple_index(gamma66(104), gamma66_info(104).witness_sets);
  CHECK(s.closed);
  CHECK(s.index == 12);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants({{2, 0}, {0, 3}}, 2) == std::vector<long long>{6});
  CHECK(abelian_invariants({{2, 4}}, 2) == std::vector<long long>{2, 0});
  CHECK(abelian_invariants({{4, 6}, {6, 4}}, 2) == std::vector<long long>{2, 10});
}
