#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/group.hpp"
#include "mbx/symmetric.hpp"
#include "oracles.hpp"

using namespace mbx;
using namespace mbx::group;

namespace {

std::vector<std::uint64_t> sizes(const FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  for (const auto& c : g.classes()) out.push_back(c.size);
  return out;
}

std::vector<std::uint64_t> centralizers(const FiniteGroup& g) {
  std::vector<std::uint64_t> out;
  for (const auto& c : g.classes()) out.push_back(c.centralizer_order);
  return out;
}

// Classes as element sets, compared with the oracle's orbits.
std::vector<std::vector<std::uint32_t>> class_sets(const FiniteGroup& g) {
  std::vector<std::vector<std::uint32_t>> out(g.class_count());
  for (std::uint32_t x = 0; x < g.order(); ++x) out[g.class_of(x)].push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("product applies the left factor first") {
  auto x = Permutation::from_cycles("(1 2)", 3);
  auto y = Permutation::from_cycles("(2 3)", 3);
  auto xy = x * y;
  CHECK(xy[0] == y[x[0]]);
  CHECK(xy.cycles() == "(1 3 2)");
  CHECK((x * x).is_identity());
  CHECK((xy * xy.inverse()).is_identity());
}

TEST_CASE("bad permutations are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation::from_cycles("(1 4)", 3), InvalidPermutation);
}

TEST_CASE("S3 classes") {
  auto g = family_group("s:3");
  CHECK(g.order() == 6);
  CHECK(sizes(g) == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(centralizers(g) == std::vector<std::uint64_t>{6, 3, 2});
  CHECK(g.classes()[0].representative.is_identity());
  CHECK(g.classes()[1].element_order == 3);
  CHECK(g.classes()[2].element_order == 2);
  CHECK(g.classes()[1].representative.cycles() == "(1 2 3)");
  CHECK(g.classes()[2].representative.cycles() == "(2 3)");
}

TEST_CASE("S4 classes are ordered by size, order, least member") {
  auto g = family_group("s:4");
  CHECK(sizes(g) == std::vector<std::uint64_t>{1, 3, 6, 6, 8});
  CHECK(g.classes()[1].element_order == 2);
  CHECK(g.classes()[2].element_order == 2);
  CHECK(g.classes()[3].element_order == 4);
  CHECK(g.classes()[4].element_order == 3);
  for (std::uint32_t c = 0; c < g.class_count(); ++c) {
    auto rep = g.classes()[c].representative;
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (g.class_of(x) == c) CHECK(rep <= g.permutation(x));
    }
  }
}

TEST_CASE("classes agree with brute-force conjugation orbits") {
  for (const char* spec : {"s:4", "a:5", "d:6", "q8", "sl2:3", "u:3:3", "gl:2:3", "prod(s:3,c:2)"}) {
    CAPTURE(spec);
    auto g = family_group(spec);
    CHECK(class_sets(g) == oracle::conjugation_orbits(g));
    std::uint64_t total = 0;
    for (const auto& c : g.classes()) {
      total += c.size;
      CHECK(c.size * c.centralizer_order == g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("S_n has p(n) classes") {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    auto g = family_group("s:" + std::to_string(n));
    CHECK(Int(static_cast<unsigned long>(g.class_count())) == oracle::partition_count(n));
    CHECK(Int(static_cast<unsigned long>(involution_count(g))) == symmetric::involution_count(n));
  }
}

TEST_CASE("family orders") {
  CHECK(family_group("a:5").order() == 60);
  CHECK(family_group("c:12").order() == 12);
  CHECK(family_group("d:5").order() == 10);
  CHECK(family_group("q8").order() == 8);
  auto sl = family_group("sl2:5");
  CHECK(sl.order() == 120);
  CHECK(sl.degree() == 24);
  CHECK(family_group("u:3:3").order() == 27);
  CHECK(family_group("gl:2:3").order() == 48);
  CHECK(family_group("gl:2:4").order() == 180);
  CHECK(family_group("prod(s:3,c:4)").order() == 24);
  CHECK(family_group(" S:4 ").order() == 24);
  CHECK_THROWS_AS(family_group("sl2:4"), Error);
  CHECK_THROWS_AS(family_group("x:3"), Error);
  CHECK_THROWS_AS(family_group("s:9", 1000), CapExceeded);
}

TEST_CASE("structural predicates") {
  CHECK(nilpotency_class(family_group("c:6")) == 1u);
  CHECK(nilpotency_class(family_group("u:3:3")) == 2u);
  CHECK(nilpotency_class(family_group("q8")) == 2u);
  CHECK(nilpotency_class(family_group("u:4:2")) == 3u);
  CHECK_FALSE(nilpotency_class(family_group("s:3")).has_value());
  CHECK(is_simple(family_group("a:5")));
  CHECK(is_simple(family_group("c:7")));
  CHECK_FALSE(is_simple(family_group("s:4")));
  CHECK_FALSE(is_simple(family_group("c:1")));
  CHECK(center_order(family_group("sl2:5")) == 2);
  CHECK(center_order(family_group("d:4")) == 2);
  CHECK(is_abelian(family_group("c:5")));
  CHECK_FALSE(is_abelian(family_group("q8")));
}

TEST_CASE("embedding and fusion") {
  auto parent = std::make_shared<const FiniteGroup>(family_group("s:3"));
  auto e = embed(parent, {Permutation::from_cycles("(1 2)", 3)}, "S2");
  CHECK(e.index() == 3);
  CHECK(e.sub->order() == 2);
  for (std::uint32_t h = 0; h < e.sub->order(); ++h) {
    CHECK(parent->permutation(e.inclusion[h]) == e.sub->permutation(h));
  }
  auto f = class_fusion(e);
  CHECK(f.fusion == std::vector<std::uint32_t>{0, 2});
  CHECK(f.z_sub == std::vector<std::uint64_t>{2, 2});
  CHECK(f.z_parent == std::vector<std::uint64_t>{6, 2});
  CHECK_THROWS_AS(embed(parent, {Permutation::from_cycles("(1 2)", 4)}), Error);
}

TEST_CASE("diagonal and factor embeddings") {
  auto d = family_embedding("diag(s:3)");
  CHECK(d.parent->order() == 36);
  CHECK(d.sub->order() == 6);
  CHECK(d.index() == 6);
  auto f = family_embedding("factor(s:3)");
  CHECK(f.sub->order() == 6);
  auto ff = class_fusion(f);
  CHECK(ff.fusion.size() == 3);
  // Every fused class of H x 1 has parent centralizer |H| times the sub one.
  for (std::size_t c = 0; c < ff.fusion.size(); ++c) CHECK(ff.z_parent[c] == 6 * ff.z_sub[c]);
}

}
