#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "zelchar/charring.hpp"
#include "zelchar/json_io.hpp"

using namespace zelchar;
using test::ms;
using test::segpoly;
using test::ypoly;

namespace {

// Random segment polynomial; long segments only appear with positive
// exponents so the projection stays a ring map.
SegLaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> terms(0, 4), lo(-1, 2), len(1, 3), exp(-2, 2), coef(-3, 3), nf(0, 3);
  SegLaurentPoly f;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<SegMonomial::Factor> fs;
    for (int k = nf(rng); k > 0; --k) {
      const int a = lo(rng);
      const Segment s(a, a + len(rng) - 1);
      Count e = exp(rng);
      if (s.length() >= 2 && e < 0) e = -e;
      fs.emplace_back(s, e);
    }
    f.add_term(SegMonomial::from_factors(std::move(fs)), coef(rng));
  }
  return f;
}

BigInt big_binomial(int n, int k) {
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  const auto x = SegMonomial(Segment(0, 0));
  const auto y = SegMonomial(Segment(1, 1), -2);
  const auto xy = x * y;
  CHECK(xy.exponent(Segment(0, 0)) == 1);
  CHECK(xy.exponent(Segment(1, 1)) == -2);
  CHECK(xy.exponent(Segment(0, 1)) == 0);
  CHECK((xy * xy.inverse()).is_one());
  CHECK_FALSE(xy.is_dominant());
  CHECK(x.is_dominant());
  CHECK(SegMonomial::from_factors({{Segment(0, 0), 2}, {Segment(0, 0), -2}}).is_one());
  CHECK(to_string(xy) == "e[0,0]*e[1,1]^-2");
  CHECK(to_string(SegMonomial()) == "1");
}

TEST_CASE("polynomial products") {
  CHECK(segpoly("1  +  1 * e[0,0]") * segpoly("1  +  -1 * e[0,0]") == segpoly("1  +  -1 * e[0,0]^2"));
  CHECK((segpoly("1 * e[0,0]") - segpoly("1 * e[0,0]")).is_zero());
  CHECK(segpoly("0").is_zero());
  CHECK(ypoly("2 * 1") == DrinfeldPoly<Count>::constant(2));
  CHECK(to_string(SegLaurentPoly()) == "0");

  const auto f = ypoly("1 * Y(1,0)  +  1 * Y(1,2)^-1");
  const auto g = ypoly("1 * Y(1,2)  +  1 * Y(1,4)^-1");
  const auto fg = f * g;
  CHECK(fg.size() == 4);
  CHECK(fg.coefficient(DrinfeldMonomial()) == 1);
  const auto dom = fg.dominant_part();
  CHECK(dom == ypoly("1 * Y(1,0)*Y(1,2)  +  1"));
  CHECK(to_string(dom) == "1 * Y(1,2)*Y(1,0)  +  1");
  CHECK(dom.dominant_part() == dom);
}

TEST_CASE("dominant part") {
  const auto f = segpoly("2 * e[0,0]*e[1,1]^-1  +  3 * e[0,1]  +  1");
  CHECK(f.dominant_part() == segpoly("3 * e[0,1]  +  1"));
  CHECK(SegLaurentPoly().dominant_part().is_zero());
}

TEST_CASE("projection to rank N") {
  const auto f = segpoly("1 * e[0,0]*e[0,1]  +  1 * e[0,2]  +  1 * e[1,1]");
  CHECK(project_pN(f, 1) == segpoly("1 * e[0,0]  +  1 * e[1,1]"));
  CHECK(project_pN(f, 2) == segpoly("1 * e[0,0]*e[0,1]  +  1  +  1 * e[1,1]"));
  CHECK(project_pN(f, 3) == f);
  CHECK(project_monomial(exp_of(ms("[0,0]+[0,1]")), 1) == exp_of(ms("[0,0]")));
  CHECK_FALSE(project_monomial(exp_of(ms("[0,2]")), 1).has_value());
  CHECK(project_pN(segpoly("1 * e[0,1]  +  -1"), 1).is_zero());
}

TEST_CASE("Drinfeld dictionary") {
  CHECK(to_drinfeld(Segment(1, 1)) == DrinfeldVar{1, 2});
  CHECK(to_drinfeld(Segment(2, 3)) == DrinfeldVar{2, 5});
  CHECK(to_drinfeld(Segment(-1, -1)) == DrinfeldVar{1, -2});
  CHECK(from_drinfeld(DrinfeldVar{1, 4}) == Segment(2, 2));
  CHECK(from_drinfeld(DrinfeldVar{3, -2}) == Segment(-2, 0));
  CHECK_THROWS_AS(from_drinfeld(DrinfeldVar{1, 3}), Error);
  CHECK_THROWS_AS(from_drinfeld(DrinfeldVar{0, 1}), Error);
  for (int a = -3; a <= 3; ++a) {
    for (int b = a; b <= a + 4; ++b) CHECK(from_drinfeld(to_drinfeld(Segment(a, b))) == Segment(a, b));
  }
  const auto f = segpoly("1 * e[0,0]*e[1,1]^-1  +  2");
  CHECK(to_drinfeld(f, 1) == ypoly("1 * Y(1,0)*Y(1,2)^-1  +  2"));
  CHECK(from_drinfeld(to_drinfeld(f, 1)) == f);
  try {
    to_drinfeld(segpoly("1 * e[0,1]"), 1);
    FAIL("expected RankExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RankExceeded);
  }
}

TEST_CASE("exp and multisegment round trip") {
  for (const auto& m : enumerate_multisegments(4, -1, 1)) CHECK(multisegment_of(exp_of(m)) == m);
  CHECK(exp_of(Multisegment()).is_one());
  CHECK_THROWS_AS(multisegment_of(SegMonomial(Segment(0, 0), -1)), Error);
}

TEST_CASE("ring maps on random polynomials") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_poly(rng);
    const auto g = random_poly(rng);
    const auto h = random_poly(rng);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * g == g * f);
    CHECK(from_drinfeld(to_drinfeld(f, 3)) == f);
    CHECK(to_drinfeld(f * g, 3) == to_drinfeld(f, 3) * to_drinfeld(g, 3));
    for (int rank = 1; rank <= 3; ++rank) {
      CHECK(project_pN(f * g, rank) == project_pN(f, rank) * project_pN(g, rank));
      CHECK(project_pN(f + g, rank) == project_pN(f, rank) + project_pN(g, rank));
    }
    CHECK((f + g).dominant_part() == f.dominant_part() + g.dominant_part());
  }
}

TEST_CASE("text and JSON round trips") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_poly(rng);
    CHECK(segpoly(to_string(f)) == f);
    CHECK(poly_from_json<SegLaurentPoly>(to_json(f)) == f);
    const auto y = to_drinfeld(f, 3);
    CHECK(test::ypoly(to_string(y)) == y);
    CHECK(poly_from_json<DrinfeldPoly<Count>>(Json::parse(to_json(y).dump())) == y);
  }
  for (const auto& m : enumerate_multisegments(4, -2, 1)) CHECK(multisegment_from_json(to_json(m)) == m);
  CHECK(to_json(ms("[0,1]+2*[1,1]")).dump() ==
        R"({"segments":[{"a":0,"b":1,"mult":1},{"a":1,"b":1,"mult":2}]})");
  CHECK_THROWS_AS(multisegment_from_json(Json::parse(R"({"segments":[{"a":2,"b":1}]})")), Error);
  CHECK_THROWS_AS(multisegment_from_json(Json::parse(R"({"segs":[]})")), Error);
  for (const char* bad : {"", "1 * x[0,0]", "1 * e[1,0]", "a * e[0,0]", "1 * Y(1,2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(segpoly(bad), Error);
  }
}

TEST_CASE("big coefficients") {
  using BigPoly = SegPoly<BigInt>;
  const BigPoly base = BigPoly::constant(1) + BigPoly::monomial(SegMonomial(Segment(0, 0)));
  BigPoly power = BigPoly::constant(1);
  for (int i = 0; i < 70; ++i) power *= base;
  CHECK(power.size() == 71);
  CHECK(power.coefficient(SegMonomial(Segment(0, 0), 35)) == big_binomial(70, 35));
  CHECK(power.coefficient(SegMonomial(Segment(0, 0), 35)) > BigInt(std::numeric_limits<Count>::max()));
  CHECK(parse_poly<BigPoly>(to_string(power)) == power);
  CHECK(poly_from_json<BigPoly>(to_json(power)) == power);

  const SegLaurentPoly small = SegLaurentPoly::constant(1) + SegLaurentPoly::monomial(SegMonomial(Segment(0, 0)));
  SegLaurentPoly overflow = SegLaurentPoly::constant(1);
  try {
    for (int i = 0; i < 70; ++i) overflow *= small;
    FAIL("expected Overflow");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK_THROWS_AS(segpoly("99999999999999999999 * e[0,0]"), Error);
}
