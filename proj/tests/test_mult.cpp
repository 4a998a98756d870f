#include "doctest.h"
#include "mbx/dixon.hpp"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/mult.hpp"
#include "mbx/table_io.hpp"
#include "oracles.hpp"

using namespace mbx;
using namespace mbx::mult;

namespace {

chartab::CharacterTable table_of(const char* spec) {
  return chartab::character_table(group::family_group(spec));
}

}  // namespace

TEST_SUITE("mult") {

TEST_CASE("S3 multiplicities") {
  auto t = table_of("s:3");
  CHECK(kronecker(t, 2, 2, 2) == 1);
  CHECK(kronecker(t, 0, 2, 2) == 1);
  CHECK(kronecker(t, 1, 2, 2) == 1);
  CHECK(kronecker(t, 0, 1, 1) == 1);
  CHECK(kronecker(t, 0, 0, 1) == 0);
  CHECK(kron_sum_squares(t) == 11);
  CHECK(kron_max(t).value == 1);
  CHECK(kron_average(t) == ratio(Int(11), Int(27)));
  auto s = kron_stats(t);
  CHECK(s.sum == 11);
  CHECK(s.sum_squares == 11);
  CHECK(s.max.argmax == Triple{0, 0, 0});
}

TEST_CASE("sum of squares equals the centralizer sum") {
  for (const char* spec : {"s:4", "a:5", "sl2:5", "q8", "d:6", "u:3:3", "c:5"}) {
    CAPTURE(spec);
    auto t = table_of(spec);
    CHECK(kron_sum_squares(t) == A_from_centralizers(t.centralizers));
  }
  CHECK(kron_sum_squares(table_of("s:4")) == 43);
}

TEST_CASE("S5 cube agrees with an elementwise tensor oracle") {
  auto g = group::family_group("s:5");
  auto t = chartab::character_table(g);
  auto match = oracle::match_sn_rows(g, t);
  REQUIRE(match.has_value());
  auto rows = oracle::sn_rows(5);
  auto expected = oracle::elementwise_kronecker(g, rows, oracle::sn_columns(g));
  KronCube cube(t);
  std::size_t k = t.k();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) {
        Int want = expected[((*match)[a] * k + (*match)[b]) * k + (*match)[c]];
        CHECK(Int(static_cast<unsigned long>(cube(a, b, c))) == want);
        CHECK(kronecker(t, a, b, c) == want);
      }
    }
  }
}

TEST_CASE("SL(2,5) maximum") {
  auto t = table_of("sl2:5");
  auto m = kron_max(t);
  // Bounded by b^2 / b = 6 and attained inside 6 x 6.
  CHECK(m.value >= 1);
  CHECK(m.value <= 6);
  CHECK(kronecker(t, m.argmax[0], m.argmax[1], m.argmax[2]) == m.value);
  auto s = kron_stats(t, true);
  CHECK(s.max.value == m.value);
  for (std::size_t r = 0; r < t.k(); ++r) {
    for (std::size_t p = 0; p < t.k(); ++p) {
      CHECK(s.refined[r][p].value == kron_refined_max(t, r, p).value);
    }
  }
}

TEST_CASE("symmetry of multiplicities") {
  for (const char* spec : {"s:3", "c:3", "sl2:5", "u:3:3"}) {
    CAPTURE(spec);
    auto t = table_of(spec);
    KronCube cube(t);
    for (std::size_t a = 0; a < t.k(); ++a) {
      for (std::size_t b = 0; b < t.k(); ++b) {
        for (std::size_t c = 0; c < t.k(); ++c) {
          CHECK(kron_symmetry_check(t, a, b, c));
          CHECK(cube.symmetric_at(t, a, b, c));
        }
      }
    }
  }
}

TEST_CASE("cube cap") {
  auto t = table_of("s:5");
  CHECK_THROWS_AS(KronCube(t, 5), CapExceeded);
}

TEST_CASE("induced matrix for S2 in S3") {
  auto parent = std::make_shared<const group::FiniteGroup>(group::family_group("s:3"));
  auto e = group::embed(parent, {group::Permutation::from_cycles("(1 2)", 3)});
  auto f = group::class_fusion(e);
  auto tg = chartab::character_table(*parent);
  auto th = chartab::character_table(*e.sub);
  auto m = induced_matrix(tg, th, f);
  CHECK(m.index == 3);
  std::vector<std::vector<Int>> want{{1, 0}, {0, 1}, {1, 1}};
  CHECK(m.entries == want);
  CHECK(induced_sum_squares(m) == 4);
  CHECK(LR_rhs(f) == 4);
  CHECK(induced_max(m).value == 1);
}

TEST_CASE("induced matrices agree with elementwise restriction") {
  for (const char* spec : {"diag(s:3)", "factor(s:4)", "diag(d:4)"}) {
    CAPTURE(spec);
    auto e = group::family_embedding(spec);
    auto f = group::class_fusion(e);
    auto tg = chartab::character_table(*e.parent);
    auto th = chartab::character_table(*e.sub);
    auto m = induced_matrix(tg, th, f);
    CHECK(m.entries == oracle::elementwise_induced(e, tg, th));
    CHECK(Rational(induced_sum_squares(m)) == LR_rhs(f));
  }
  auto d = group::family_embedding("diag(s:3)");
  auto fd = group::class_fusion(d);
  auto md = induced_matrix(chartab::character_table(*d.parent), chartab::character_table(*d.sub), fd);
  CHECK(induced_sum_squares(md) == 11);
  auto x = group::family_embedding("factor(s:3)");
  auto fx = group::class_fusion(x);
  auto mx = induced_matrix(chartab::character_table(*x.parent), chartab::character_table(*x.sub), fx);
  CHECK(induced_max(mx).value == 2);
}

TEST_CASE("epsilon") {
  CHECK(epsilon(table_of("s:3").degrees, 6) == ratio(Int(1), Int(2)));
  // No degree below the maximum in an abelian group.
  for (long n : {2, 5, 9}) {
    auto t = chartab::character_table(group::family_group("c:" + std::to_string(n)));
    CHECK(epsilon(t.degrees, t.order) == 0);
  }
  CHECK(epsilon(table_of("s:4").degrees, 24) == ratio(Int(2), Int(3)));
  std::vector<Int> bad{1, 1, 1};
  CHECK_THROWS_AS(epsilon(bad, 6), BurnsideViolation);
}

TEST_CASE("group stats") {
  auto g = group::family_group("a:5");
  auto s = group_stats(g, chartab::character_table(g));
  CHECK(s.order == 60);
  CHECK(s.k == 5);
  CHECK(s.b == 5);
  CHECK(s.e == 7);
  CHECK(s.degree_sum == 16);
  CHECK(s.involutions == 16);
  CHECK(s.simple);
  CHECK(s.center_order == 1);
  CHECK(s.epsilon == ratio(Int(35), Int(25)));
}

TEST_CASE("Monster centralizer sum") {
  auto data = chartab::parse_class_data(chartab::read_file(MBX_TEST_DATA "/monster.classdata"));
  auto a = A_from_centralizers(data.centralizers);
  CHECK(a > data.order);
  CHECK(a < 2 * data.order);
}

}
