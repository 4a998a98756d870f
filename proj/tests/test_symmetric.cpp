#include <cmath>

#include "doctest.h"
#include "mbx/dixon.hpp"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/numeric.hpp"
#include "mbx/symmetric.hpp"
#include "oracles.hpp"

using namespace mbx;
using namespace mbx::symmetric;

namespace {

Partition part(std::initializer_list<std::uint32_t> xs) { return Partition{std::vector<std::uint32_t>(xs)}; }

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(1) == 1);
  CHECK(partition_count(5) == 7);
  CHECK(partition_count(100) == 190569292);
  for (std::uint32_t n = 0; n <= 120; ++n) CHECK(partition_count(n) == oracle::partition_count(n));
}

TEST_CASE("enumeration order and length") {
  auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == part({4}));
  CHECK(p4[1] == part({3, 1}));
  CHECK(p4[2] == part({2, 2}));
  CHECK(p4.back() == part({1, 1, 1, 1}));
  for (std::uint32_t n = 0; n <= 30; ++n) {
    std::size_t count = 0;
    for_each_partition(n, [&](const Partition& p) {
      CHECK(p.n() == n);
      ++count;
    });
    CHECK(Int(static_cast<unsigned long>(count)) == oracle::partition_count(n));
  }
}

TEST_CASE("hook lengths") {
  CHECK(hook_degree(part({2, 1})) == 2);
  CHECK(hook_degree(part({5, 4})) == 42);
  CHECK(hook_degree(part({6, 3, 1, 1, 1, 1})) == 9360);
  CHECK(conjugate(part({3, 1})) == part({2, 1, 1}));
  for (std::uint32_t n = 1; n <= 20; ++n) {
    for (const auto& p : partitions(n)) CHECK(hook_degree(p) == hook_degree(conjugate(p)));
  }
}

TEST_CASE("degree identities") {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    Int sum = 0;
    for_each_partition(n, [&](const Partition& p) {
      Int d = hook_degree(p);
      sum += d * d;
    });
    CHECK(sum == factorial(n));
  }
  for (std::uint32_t n = 1; n <= 20; ++n) {
    Int sum = 0;
    for_each_partition(n, [&](const Partition& p) { sum += hook_degree(p); });
    CHECK(sum == involution_count(n));
  }
  CHECK(involution_count(10) == 9496);
}

TEST_CASE("degree statistics") {
  auto s5 = sn_degree_stats(5);
  CHECK(s5.b == 6);
  CHECK(s5.m == 1);
  CHECK(s5.f == 2);
  CHECK(s5.epsilon == ratio(Int(7), Int(3)));
  CHECK(s5.degree_sum == 26);
  auto s13 = sn_degree_stats(13);
  CHECK(s13.f == 6);
  REQUIRE(s13.f_fibers.size() == 2);
  CHECK(s13.f_fibers[0].degree == 429);
  CHECK(s13.f_fibers[1].degree == 3432);
  CHECK(s13.f_fibers[0].partitions.size() == 6);
  CHECK_THROWS_AS(sn_degree_stats(61), CapExceeded);
}

TEST_CASE("asymptotics") {
  double hr = hardy_ramanujan(100);
  double p = 190569292.0;
  CHECK(hr / p >= 1.0);
  CHECK(hr / p <= 1.1);
  CHECK(kVkC1 == doctest::Approx(M_PI / std::sqrt(6.0)).epsilon(1e-15));
  CHECK(kVkC2 == doctest::Approx((M_PI - 2) / (M_PI * M_PI)).epsilon(1e-15));
  auto w = vk_window(20);
  CHECK(w.lower < w.upper);
}

TEST_CASE("centralizers and cycle types") {
  CHECK(centralizer_order(part({2, 1, 1})) == 4);
  CHECK(centralizer_order(part({1, 1, 1, 1})) == 24);
  CHECK(cycle_type(group::Permutation::from_cycles("(1 2)(3 4 5)", 6)) == part({3, 2, 1}));
}

TEST_CASE("Murnaghan-Nakayama agrees with Dixon-Schneider") {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    CAPTURE(n);
    auto g = group::family_group("s:" + std::to_string(n));
    auto t = chartab::character_table(g);
    CHECK(oracle::match_sn_rows(g, t).has_value());
    auto mn = sn_character_table(n);
    auto types = sn_column_types(n);
    for (std::size_t c = 0; c < types.size(); ++c) CHECK(mn.centralizers[c] == centralizer_order(types[c]));
  }
  CHECK_THROWS_AS(sn_character_table(13), CapExceeded);
}

}
