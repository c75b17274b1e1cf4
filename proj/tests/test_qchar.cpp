#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "zelchar/qchar.hpp"

using namespace zelchar;
using test::ms;
using test::ypoly;

namespace {

DrinfeldPoly<Count> in_y(const SegLaurentPoly& f, int rank) { return to_drinfeld(f, rank); }

Count binomial(int n, int k) {
  Count out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("fundamental characters") {
  CHECK(in_y(fundamental_qchar(FundamentalSpec(1, 2, 1)), 1) == ypoly("1 * Y(1,2)  +  1 * Y(1,4)^-1"));
  CHECK(in_y(fundamental_qchar(FundamentalSpec(1, 0, 2)), 2) ==
        ypoly("1 * Y(1,0)  +  1 * Y(1,2)^-1*Y(2,1)  +  1 * Y(2,3)^-1"));
  CHECK(in_y(fundamental_qchar(FundamentalSpec(2, 1, 2)), 2) ==
        ypoly("1 * Y(2,1)  +  1 * Y(1,2)*Y(2,3)^-1  +  1 * Y(1,4)^-1"));
}

TEST_CASE("fundamental term count and unique dominant monomial") {
  for (int rank = 1; rank <= 4; ++rank) {
    for (int level = 1; level <= rank; ++level) {
      for (int power = -6; power <= 6; ++power) {
        if ((level + power) % 2 == 0) continue;
        const FundamentalSpec spec(level, power, rank);
        const auto f = fundamental_qchar(spec);
        CHECK(static_cast<Count>(f.size()) == binomial(rank + 1, level));
        for (const auto& [mono, c] : f.terms()) CHECK(c == 1);
        const auto dom = f.dominant_part();
        REQUIRE(dom.size() == 1);
        CHECK(dom.coefficient(SegMonomial(spec.segment())) == 1);
      }
    }
  }
}

TEST_CASE("fundamental spec validation") {
  auto kind_of = [](auto&& make) {
    try {
      make();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([] { FundamentalSpec(1, 2, 0); }) == ErrorKind::RankExceeded);
  CHECK(kind_of([] { FundamentalSpec(0, 1, 2); }) == ErrorKind::InvalidSegment);
  CHECK(kind_of([] { FundamentalSpec(3, 0, 2); }) == ErrorKind::RankExceeded);
  CHECK(kind_of([] { FundamentalSpec(1, 1, 2); }) == ErrorKind::InvalidSegment);
  const auto spec = FundamentalSpec::from_segment(Segment(2, 3), 3);
  CHECK(spec.level() == 2);
  CHECK(spec.power() == 5);
  CHECK(spec.segment() == Segment(2, 3));
  CHECK_THROWS_AS(FundamentalSpec::from_segment(Segment(0, 2), 2), Error);
}

TEST_CASE("golden standard modules at rank one") {
  const auto a = ypoly("1 * Y(1,4)  +  1 * Y(1,6)^-1");
  const auto b = ypoly("1 * Y(1,2)  +  1 * Y(1,4)^-1");
  const auto c = ypoly("1 * Y(1,6)  +  1 * Y(1,8)^-1");
  CHECK(in_y(standard_qchar(ms("[1,1]+2*[2,2]+[3,3]"), 1), 1) == a * a * b * c);
  CHECK(in_y(standard_qchar(ms("[1,2]+[2,2]+[3,3]"), 1), 1) == a * c);
  CHECK(in_y(standard_qchar(ms("[1,1]+[2,2]+[2,3]"), 1), 1) == a * b);

  CHECK(in_y(dominant_qchar(ms("[1,1]+2*[2,2]+[3,3]"), 1), 1) ==
        ypoly("1 * Y(1,6)*Y(1,4)^2*Y(1,2)  +  1 * Y(1,6)*Y(1,4)  +  2 * Y(1,4)*Y(1,2)  +  2"));
  CHECK(in_y(dominant_qchar(ms("[1,2]+[2,2]+[3,3]"), 1), 1) == ypoly("1 * Y(1,6)*Y(1,4)  +  1"));
  CHECK(in_y(dominant_qchar(ms("[1,1]+[2,2]+[2,3]"), 1), 1) == ypoly("1 * Y(1,4)*Y(1,2)  +  1"));
}

TEST_CASE("standard characters collapse and vanish by length") {
  CHECK(standard_qchar(ms("[0,1]"), 1) == SegLaurentPoly::constant(1));
  CHECK(standard_qchar(ms("[0,2]+[5,5]"), 1).is_zero());
  CHECK(standard_qchar(Multisegment(), 2) == SegLaurentPoly::constant(1));
  CHECK(standard_qchar(ms("[0,1]+[3,3]"), 1) == fundamental_qchar(FundamentalSpec::from_segment(Segment(3, 3), 1)));
}

TEST_CASE("multiplicativity") {
  const auto family = enumerate_multisegments(3, -1, 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, family.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& m1 = family[pick(rng)];
    const auto& m2 = family[pick(rng)];
    for (int rank = 1; rank <= 3; ++rank) {
      CHECK(standard_qchar(m1 + m2, rank) == standard_qchar(m1, rank) * standard_qchar(m2, rank));
    }
  }
}

TEST_CASE("bitableau route examples") {
  const auto expected = ypoly("1 * Y(1,0)  +  1 * Y(1,2)^-1") * ypoly("1 * Y(1,2)  +  1 * Y(1,4)^-1");
  CHECK(in_y(chi_N_via_tableaux(ms("[0,0]+[1,1]"), 1), 1) == expected);
  CHECK(truncated_row_character(Segment(0, 0), 1) == test::segpoly("1 * e[0,0]  +  1 * e[0,1]*e[1,1]^-1"));
  CHECK(truncated_row_character(Segment(0, 2), 1).is_zero());
  CHECK(chi_N_via_tableaux(ms("[0,1]"), 1) == SegLaurentPoly::constant(1));
}

TEST_CASE("bitableau route equals the product of fundamental characters") {
  for (int rank = 1; rank <= 3; ++rank) {
    for (const auto& m : enumerate_multisegments(5, -2, 2)) {
      CAPTURE(to_string(m));
      CAPTURE(rank);
      CHECK(chi_N_via_tableaux(m, rank) == standard_qchar(m, rank));
    }
  }
}

TEST_CASE("dominant part commutes with projection on the limit character") {
  for (int rank = 1; rank <= 2; ++rank) {
    for (const auto& m : enumerate_multisegments(4, -1, 2)) {
      const auto limit = truncated_limit_character(m, rank);
      const auto dom = dominant_qchar(m, rank);
      CHECK(project_pN(limit, rank).dominant_part() == dom);
      CHECK(project_pN(limit.dominant_part(), rank) == dom);
    }
  }
}

TEST_CASE("big and machine coefficients agree") {
  const Multisegment m = ms("[0,0]+2*[1,1]+[2,2]");
  const auto small = standard_qchar(m, 2);
  const auto big = standard_qchar<BigInt>(m, 2);
  CHECK(small.size() == big.size());
  for (const auto& [mono, c] : small.terms()) CHECK(big.coefficient(mono) == BigInt(c));
}
