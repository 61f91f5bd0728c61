#include <set>

#include "doctest.h"
#include "jackcbe/partition.hpp"

using namespace jackcbe;

TEST_CASE("partition construction strips zeros and rejects increasing parts") {
  Partition p{3, 1, 0, 0};
  CHECK(p.length() == 2);
  CHECK(p.weight() == 4);
  CHECK(p[5] == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  CHECK(Partition().empty());
}

TEST_CASE("partition parse and str round trip") {
  for (const auto& p : enumerate_partitions(6)) CHECK(Partition::parse(p.str()) == p);
  CHECK(Partition::parse("()").empty());
  CHECK(Partition::parse("(3,1)") == Partition{3, 1});
}

TEST_CASE("conjugate and join") {
  CHECK(Partition({3, 1}).conjugate() == Partition{2, 1, 1});
  CHECK(Partition({2, 2}).conjugate() == Partition{2, 2});
  for (int n = 0; n <= 7; ++n)
    for (const auto& p : enumerate_partitions(n)) CHECK(p.conjugate().conjugate() == p);
  CHECK(Partition({3, 1}).join(Partition{2, 2}) == Partition{3, 2, 2, 1});
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(enumerate_partitions(4) == four);
  CHECK(enumerate_partitions(10).size() == 42);
  for (int n = 0; n <= 15; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(mpz_class(all.size()) == partition_count(n));
    CHECK(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
  }
  CHECK_THROWS(enumerate_partitions(-1));
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq({2, 2}, {3, 1}) == Dominance::LessOrEqual);
  CHECK(dominance_leq({3, 1}, {2, 2}) == Dominance::Greater);
  CHECK(dominance_leq({3, 1, 1, 1}, {2, 2, 2}) == Dominance::Incomparable);
  for (const auto& p : enumerate_partitions(6)) CHECK(dominance_leq(p, p) == Dominance::LessOrEqual);
  CHECK_THROWS_AS(dominance_leq({2}, {1}), std::invalid_argument);
  CHECK(strictly_dominated({1, 1}, {2}));
  CHECK_FALSE(strictly_dominated({2}, {2}));
}

TEST_CASE("antisymmetry of dominance on equal weights") {
  for (const auto& a : enumerate_partitions(7))
    for (const auto& b : enumerate_partitions(7))
      if (dominance_leq(a, b) == Dominance::LessOrEqual && dominance_leq(b, a) == Dominance::LessOrEqual)
        CHECK(a == b);
}

TEST_CASE("z_lambda") {
  CHECK(z_lambda({1}) == 1);
  CHECK(z_lambda({2, 1}) == 2);
  CHECK(z_lambda({1, 1}) == 2);
  CHECK(z_lambda({}) == 1);
  // class sizes add up to n!
  for (int n = 1; n <= 8; ++n) {
    mpq_class sum = 0;
    for (const auto& p : enumerate_partitions(n)) sum += mpq_class(1, 1) / mpq_class(z_lambda(p));
    CHECK(sum == 1);
  }
}

TEST_CASE("linear extension respects dominance for both tie breaks") {
  for (auto tie : {TieBreak::ReverseLex, TieBreak::Lex}) {
    const auto ext = dominance_linear_extension(enumerate_partitions(8), tie);
    CHECK(ext.size() == 22);
    for (std::size_t i = 0; i < ext.size(); ++i)
      for (std::size_t j = i + 1; j < ext.size(); ++j) CHECK_FALSE(strictly_dominated(ext[j], ext[i]));
  }
  const auto a = dominance_linear_extension(enumerate_partitions(6), TieBreak::ReverseLex);
  const auto b = dominance_linear_extension(enumerate_partitions(6), TieBreak::Lex);
  CHECK(a != b);
}
