#include "qskein/partition.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

namespace {

using qskein::Partition;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition validation") {
  CHECK_NOTHROW(P({3, 1}));
  CHECK_NOTHROW(P({}));
  CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
}

TEST_CASE("partition accessors") {
  const Partition p = P({4, 2, 2});
  CHECK(p.size() == 8);
  CHECK(p.length() == 3);
  CHECK(p.part(1) == 4);
  CHECK(p.part(3) == 2);
  CHECK(p.part(4) == 0);
  CHECK(Partition().empty());
  CHECK(Partition().size() == 0);
}

TEST_CASE("partition text form") {
  CHECK(P({4, 2, 2}).to_string() == "[4,2,2]");
  CHECK(Partition().to_string() == "[]");
  CHECK(Partition::parse("[4,2,2]") == P({4, 2, 2}));
  CHECK(Partition::parse("[]") == Partition());
  CHECK(Partition::parse(" [ 3 , 1 ] ") == P({3, 1}));
  CHECK_THROWS_AS(Partition::parse("[2,3]"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("[a]"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("4,2"), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(P({4, 2, 2}).conjugate() == P({3, 3, 1, 1}));
  CHECK(P({1, 1, 1}).conjugate() == P({3}));
  CHECK(Partition().conjugate() == Partition());
  for (const auto& p : Partition::all_of(5)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("cells: contents and hooks") {
  const Partition p = P({2, 1});
  CHECK(p.cell_contents() == std::vector<int>{0, 1, -1});
  CHECK(p.cell_hooks() == std::vector<int>{3, 1, 1});

  const Partition q = P({2, 2});
  CHECK(q.cell_contents() == std::vector<int>{0, 1, -1, 0});
  CHECK(q.cell_hooks() == std::vector<int>{3, 2, 2, 1});

  CHECK(Partition().cell_contents().empty());
  CHECK(P({4, 2, 2}).weighted_row_sum() == 6);
  CHECK(P({3}).weighted_row_sum() == 0);
}

TEST_CASE("all_of enumerates in display order") {
  const auto of4 = Partition::all_of(4);
  CHECK(of4 == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                      P({1, 1, 1, 1})});
  CHECK(Partition::all_of(4, 2) ==
        std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  CHECK(Partition::all_of(0) == std::vector<Partition>{Partition()});
  CHECK(Partition::all_of(6).size() == 11);
}

TEST_CASE("complement_union") {
  using qskein::complement_union;
  CHECK(complement_union(P({1}), P({1}), 2) == P({1, 1}));
  CHECK(complement_union(P({4, 2, 2}), P({3, 2}), 7) == P({5, 4, 4, 2, 2}));
  // N - mu_j = 0 entries drop out.
  CHECK(complement_union(Partition(), P({2}), 2) == Partition());
  CHECK(complement_union(Partition(), Partition(), 0) == Partition());
  CHECK(complement_union(Partition(), P({2, 1}), 4) == P({3, 2}));
  CHECK_THROWS_AS(complement_union(P({2}), P({2}), 3), std::invalid_argument);
}
