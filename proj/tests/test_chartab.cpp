#include <fstream>

#include "doctest.h"
#include "mbx/character_table.hpp"
#include "mbx/cyclotomic.hpp"
#include "mbx/dixon.hpp"
#include "mbx/error.hpp"
#include "mbx/family.hpp"
#include "mbx/table_io.hpp"

using namespace mbx;
using namespace mbx::chartab;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

CharacterTable table_of(const char* spec, std::uint64_t seed = 0) {
  return character_table(group::family_group(spec), seed);
}

}  // namespace

TEST_SUITE("chartab") {

TEST_CASE("cyclotomic arithmetic") {
  auto w = Cyclotomic::root_of_unity(3, 1);
  CHECK(w.conductor() == 3);
  CHECK(w * w * w == Cyclotomic(1));
  CHECK(w + w.conj() == Cyclotomic(-1));
  CHECK(w.conj() == w * w);
  auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  // -zeta_6 reduces to conductor 3.
  auto z6 = Cyclotomic::root_of_unity(6, 1);
  CHECK(z6.conductor() == 3);
  CHECK(-z6 == Cyclotomic::root_of_unity(3, 2));
  // Sum of the primitive 5th roots is -1.
  Cyclotomic s;
  for (int j = 1; j < 5; ++j) s += Cyclotomic::root_of_unity(5, j);
  CHECK(s == Cyclotomic(-1));
  CHECK(s.is_rational());
  CHECK(s.rational() == -1);
  CHECK_THROWS_AS(w.rational(), Error);
  auto b7 = Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, 2) + Cyclotomic::root_of_unity(7, 4);
  CHECK(b7 * b7.conj() == Cyclotomic(2));
  CHECK(b7.normalized_trace() == ratio(Int(-1), Int(2)));
  CHECK(std::abs(b7.approx() - std::complex<double>(-0.5, std::sqrt(7.0) / 2)) < 1e-12);
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
}

TEST_CASE("cyclotomic parse round trip") {
  auto w = Cyclotomic::root_of_unity(7, 1) + Cyclotomic::root_of_unity(7, 2) + Cyclotomic::root_of_unity(7, 4);
  CHECK(Cyclotomic::parse(w.to_string()) == w);
  CHECK(Cyclotomic::parse("-3") == Cyclotomic(-3));
  CHECK(Cyclotomic::parse("z(3,1)+z(3,2)") == Cyclotomic(-1));
  CHECK(Cyclotomic::parse("2*z(4,1)-z(12,3)") == Cyclotomic::root_of_unity(4, 1));
  CHECK_THROWS_AS(Cyclotomic::parse("z(3,"), Error);
}

TEST_CASE("C3 table") {
  auto t = table_of("c:3");
  CHECK(t.k() == 3);
  CHECK(t.degrees == ints({1, 1, 1}));
  CHECK(t.conductor() == 3);
  CHECK(t.conj_perm == std::vector<std::uint32_t>{0, 2, 1});
  validate(t);
}

TEST_CASE("S3 table") {
  auto t = table_of("s:3");
  CHECK(t.order == 6);
  CHECK(t.degrees == ints({1, 1, 2}));
  CHECK(t.centralizers == ints({6, 3, 2}));
  CHECK(t.values[1] == std::vector<Cyclotomic>{1, 1, -1});
  CHECK(t.values[2] == std::vector<Cyclotomic>{2, -1, 0});
  CHECK(t.max_degree() == 2);
}

TEST_CASE("SL(2,5) table") {
  auto t = table_of("sl2:5");
  CHECK(t.k() == 9);
  CHECK(t.degrees == ints({1, 2, 2, 3, 3, 4, 4, 5, 6}));
  // Every character of SL(2,5) is real.
  CHECK(t.conj_perm == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(t.conductor() == 5);
  validate(t);
}

TEST_CASE("orthogonality on assorted groups") {
  for (const char* spec : {"a:5", "q8", "d:5", "gl:2:3", "u:3:3", "c:7", "sl2:7", "prod(c:3,s:3)"}) {
    CAPTURE(spec);
    auto t = table_of(spec);
    Int sum = 0;
    for (const auto& d : t.degrees) sum += d * d;
    CHECK(sum == t.order);
    for (std::size_t i = 0; i < t.k(); ++i) {
      for (std::size_t j = 0; j < t.k(); ++j) CHECK(inner_product(t, i, j) == (i == j ? 1 : 0));
      CHECK(conjugate_irrep(t, conjugate_irrep(t, i)) == i);
    }
  }
}

TEST_CASE("same table for every seed") {
  for (const char* spec : {"a:5", "sl2:7", "u:3:3"}) {
    CAPTURE(spec);
    CHECK(table_of(spec, 0) == table_of(spec, 12345));
  }
}

TEST_CASE("restriction") {
  auto parent = std::make_shared<const group::FiniteGroup>(group::family_group("s:3"));
  auto e = group::embed(parent, {group::Permutation::from_cycles("(1 2)", 3)});
  auto f = group::class_fusion(e);
  auto tg = character_table(*parent);
  auto res = restrict(tg, f, 2);
  CHECK(res == std::vector<Cyclotomic>{2, 0});
}

TEST_CASE("table file round trip") {
  auto t = table_of("sl2:7");
  auto text = write_table(t);
  auto back = parse_table(text);
  CHECK(back.values == t.values);
  CHECK(back.centralizers == t.centralizers);
  CHECK(back.degrees == t.degrees);
  CHECK(back.order == t.order);
}

TEST_CASE("table file errors") {
  auto err = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_class_data(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(err("group x\norder 6\nclasses 3\ncentralizers 6 2 q\n") == std::pair<std::size_t, std::size_t>{4, 18});
  CHECK(err("group x\nbogus 1\n").first == 2);
  CHECK_THROWS_AS(parse_class_data("group x\norder 6\nclasses 3\ncentralizers 6 2 2\n"), ConsistencyError);
  CHECK_THROWS_AS(parse_class_data("group x\norder 6\nclasses 3\ncentralizers 6 2 3\ndegrees 1 1 1\n"),
                  ConsistencyError);
  auto ok = parse_class_data("# S3\ngroup S3\norder 6\nclasses 3\ncentralizers 6\n  2 3\n");
  CHECK(ok.k() == 3);
  CHECK_FALSE(ok.degrees.has_value());
}

TEST_CASE("Monster class data") {
  auto data = parse_class_data(read_file(MBX_TEST_DATA "/monster.classdata"));
  CHECK(data.k() == 194);
  CHECK(to_string(data.order) == "808017424794512875886459904961710757005754368000000000");
  REQUIRE(data.degrees.has_value());
  CHECK(to_string(data.degrees->at(1)) == "196883");
}

}
