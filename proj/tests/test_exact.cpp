#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "sqprod/errors.hpp"
#include "sqprod/exact.hpp"

using namespace sqprod;
using namespace sqprod::exact;

namespace {

std::vector<std::vector<std::uint32_t>> edges_of(const BadTupleHypergraph& h) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

}  // namespace

TEST_CASE("small hypergraphs") {
  using E = std::vector<std::vector<std::uint32_t>>;
  CHECK(edges_of(enumerate_bad_tuples(8, 2, 2)) == E{{1, 4}, {2, 8}});
  CHECK(edges_of(enumerate_bad_tuples(6, 3, 2)) == E{{2, 3, 6}});
  CHECK(enumerate_bad_tuples(4, 3, 2).edge_count() == 0);
  CHECK(edges_of(enumerate_bad_tuples(10, 1, 3)) == E{{1}, {8}});
}

TEST_CASE("enumeration matches the brute-force tuple list") {
  for (std::uint32_t n = 1; n <= 18; ++n) {
    for (std::uint32_t k = 1; k <= 4; ++k) {
      for (unsigned m : {2u, 3u}) {
        INFO("N=" << n << " k=" << k << " m=" << m);
        REQUIRE(edges_of(enumerate_bad_tuples(n, k, m)) == oracle::bad_tuples(n, k, m));
      }
    }
  }
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_bad_tuples(200, 3, 2), CapacityError);
  CHECK_THROWS_AS(enumerate_bad_tuples(200, 3, 2, {400, kDefaultEdgeBudget}), ArgumentError);
  CHECK_THROWS_AS(enumerate_bad_tuples(10, 0, 2), ArgumentError);
  CHECK_THROWS_AS(enumerate_bad_tuples(10, 2, 1), ArgumentError);
  CHECK_THROWS_AS(enumerate_bad_tuples(30, 3, 2, {100, 5}), CapacityError);
}

TEST_CASE("example values") {
  CHECK(compute_fk(6, 3) == 5);
  CHECK(compute_fk(10, 2) == 7);
  CHECK(compute_fk(10, 4) == 7);
  CHECK(compute_fk(16, 1) == 12);
  CHECK(compute_lk(10, 2) == mpq_class(171, 70));
  CHECK(compute_lk(6, 3) == mpq_class(137, 60));
  CHECK(count_square_ksubsets(4, 4) == 0);
}

TEST_CASE("solutions are feasible and certified") {
  for (std::uint32_t k : {2u, 3u, 4u}) {
    const auto h = enumerate_bad_tuples(20, k, 2);
    const auto s = max_independent_subset(h, Objective::kCardinality);
    CHECK(s.optimal);
    CHECK(s.cardinality == s.members.size());
    CHECK(std::is_sorted(s.members.begin(), s.members.end()));
    CHECK_FALSE(find_violated_edge(h, s.members).has_value());
    CHECK_FALSE(s.certificate.has_value());
    CHECK(s.cardinality == oracle::max_free_subset(20, k, 2));
  }
}

TEST_CASE("violated edge detection") {
  const auto h = enumerate_bad_tuples(10, 2, 2);
  const std::vector<std::uint32_t> bad{1, 3, 4};
  auto e = find_violated_edge(h, bad);
  REQUIRE(e.has_value());
  CHECK(*e == std::vector<std::uint32_t>{1, 4});
}

TEST_CASE("node budget") {
  const auto h = enumerate_bad_tuples(40, 4, 2);
  CHECK_THROWS_AS(max_independent_subset(h, Objective::kCardinality, {3}), CapacityError);
}

TEST_CASE("F_k grows by at most one per step") {
  for (std::uint32_t k : {2u, 3u}) {
    std::uint64_t prev = 0;
    for (std::uint32_t n = 1; n <= 30; ++n) {
      const auto v = compute_fk(n, k);
      CHECK(v >= prev);
      CHECK(v <= prev + 1);
      prev = v;
    }
  }
}

TEST_CASE("F_2 is the squarefree count and L_2 the squarefree reciprocal sum") {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    REQUIRE(compute_fk(n, 2) == oracle::squarefree_count(n));
    REQUIRE(count_squarefree(n) == oracle::squarefree_count(n));
  }
  for (std::uint32_t n = 1; n <= 30; ++n) {
    mpq_class sum = 0;
    for (std::uint32_t x = 1; x <= n; ++x) {
      if (oracle::squarefree(x)) sum += mpq_class(1, x);
    }
    sum.canonicalize();
    REQUIRE(squarefree_reciprocal_sum(n) == sum);
    REQUIRE(compute_lk(n, 2) == sum);
  }
  CHECK(count_squarefree(1'000'000) == 607926);
}

TEST_CASE("exhaustive k-subset counter") {
  CHECK(count_square_ksubsets(6, 3) == 1);
  CHECK(count_square_ksubsets(8, 2) == 2);
  for (std::uint32_t n = 1; n <= 14; ++n) {
    for (std::uint32_t k = 2; k <= 4; ++k) {
      REQUIRE(count_square_ksubsets(n, k) == oracle::bad_tuples(n, k, 2).size());
    }
  }
  CHECK_THROWS_AS(count_square_ksubsets(61, 2), CapacityError);
}

TEST_CASE("monotonicity inequality helper") {
  FkTable t;
  t[{2, 10}] = 7;
  t[{3, 10}] = 8;
  t[{5, 10}] = 9;
  CHECK(check_mono_inequality(t, 2, 3, 10));
  t[{5, 10}] = 20;
  CHECK_FALSE(check_mono_inequality(t, 2, 3, 10));
  CHECK_THROWS_AS(check_mono_inequality(t, 2, 4, 10), ArgumentError);
}

TEST_CASE("json round trip") {
  const auto h = enumerate_bad_tuples(12, 3, 2);
  const auto j = to_json(h);
  CHECK(j["N"] == 12);
  CHECK(j["k"] == 3);
  CHECK(hypergraph_from_json(j) == h);

  auto bad = j;
  bad["edges"][0] = {1, 2, 5};
  CHECK_THROWS_AS(hypergraph_from_json(bad), ArgumentError);
  CHECK_THROWS_AS(hypergraph_from_json(nlohmann::json{{"N", 3}}), ArgumentError);

  const auto s = max_independent_subset(enumerate_bad_tuples(10, 2, 2), Objective::kReciprocalSum);
  const auto sj = to_json(s);
  CHECK(sj["weight"] == "171/70");
  CHECK(sj["cardinality"] == 7);
  CHECK(rational_string(mpq_class(3)) == "3/1");
}
