#include "doctest.h"
#include "helpers.hpp"
#include "zelchar/domtab.hpp"
#include "zelchar/verify.hpp"

using namespace zelchar;
using test::ms;

namespace {

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("shuffle characters") {
  CHECK(shuffle_character(ms("[0,0]+[1,1]")) == WordCharacter{{{0, 1}, 1}, {{1, 0}, 1}});
  CHECK(shuffle_character(ms("[0,1]")) == WordCharacter{{{1, 0}, 1}});
  CHECK(shuffle_character(ms("2*[0,0]")) == WordCharacter{{{0, 0}, 2}});
  CHECK(shuffle_character(Multisegment()) == WordCharacter{{{}, 1}});
  // Two words of lengths 2 and 3 interleave in C(5,2) ways.
  Count total = 0;
  for (const auto& [w, c] : shuffle_character(ms("[0,1]+[3,5]"))) total += c;
  CHECK(total == 10);
  CHECK(kind_of([] { shuffle_character(ms("[0,8]")); }) == ErrorKind::CapExceeded);
  CHECK(shuffle_character(ms("[0,8]"), 9).size() == 1);
}

TEST_CASE("reciprocal multiplicities from the shuffle character") {
  const Multisegment m = ms("[0,0]+[1,1]");
  CHECK(a_via_shuffle(m, m) == 1);
  CHECK(a_via_shuffle(m, ms("[0,1]")) == 1);
  CHECK(a_via_shuffle(m, ms("[0,0]")) == 0);
  CHECK(a_via_shuffle(ms("[0,1]"), m) == 0);
  CHECK(a_via_shuffle(ms("2*[0,0]"), ms("2*[0,0]")) == 1);
  const Multisegment golden = ms("[1,1]+2*[2,2]+[3,3]");
  CHECK(a_via_shuffle(golden, ms("[1,3]+[2,2]")) == 2);
  CHECK(a_via_shuffle(golden, ms("[1,2]+[2,3]")) == 2);
  CHECK(a_row_via_shuffle(golden) == a_matrix_row(golden).entries);
}

TEST_CASE("non-divisible coefficients are reported") {
  const WordCharacter fake{{{0, 0}, 3}};
  CHECK(kind_of([&] { a_via_shuffle(fake, ms("2*[0,0]")); }) == ErrorKind::NonDivisible);
  CHECK(a_via_shuffle(WordCharacter{{{0, 0}, 4}}, ms("2*[0,0]")) == 2);
}

TEST_CASE("shuffle oracle agrees with the tableau count") {
  for (const auto& m : enumerate_multisegments(4, 0, 3)) {
    CAPTURE(to_string(m));
    CHECK(a_row_via_shuffle(m) == a_matrix_row(m).entries);
  }
}

TEST_CASE("projected reciprocal character") {
  const auto golden = projected_reciprocal(ms("[1,1]+2*[2,2]+[3,3]"), 1);
  CHECK(to_drinfeld(golden, 1) ==
        test::ypoly("1 * Y(1,6)*Y(1,4)^2*Y(1,2)  +  1 * Y(1,6)*Y(1,4)  +  2 * Y(1,4)*Y(1,2)  +  2"));
  CHECK(projected_reciprocal(ms("[0,2]"), 1).is_zero());
  CHECK(projected_reciprocal(ms("[0,2]"), 3) == SegLaurentPoly::monomial(exp_of(ms("[0,2]"))));
}

TEST_CASE("theorem checks on examples") {
  for (const char* text : {"[0,0]+[1,1]", "[1,1]+2*[2,2]+[3,3]", "[0,2]+[1,1]", "2*[0,1]+[1,2]", "0"}) {
    CAPTURE(text);
    for (int rank = 1; rank <= 3; ++rank) CHECK_FALSE(check_theorem_A(ms(text), rank).has_value());
    CHECK_FALSE(check_bijection(ms(text)).has_value());
  }
}

TEST_CASE("routes") {
  for (Route r : {Route::ATableau, Route::Mackey, Route::JDominant, Route::Product, Route::Shuffle}) {
    CHECK(parse_route(to_string(r)) == r);
  }
  CHECK(to_string(Route::JDominant) == "j-dominant");
  CHECK(kind_of([] { parse_route("tableau"); }) == ErrorKind::ParseError);
}

TEST_CASE("sweep") {
  SweepConfig config;
  config.max_height = 3;
  config.lo = 0;
  config.hi = 1;
  config.ranks = {1, 2};
  config.threads = 1;
  const auto family = enumerate_multisegments(3, 0, 1);
  const auto report = sweep(config);
  CHECK(report.multisegments == family.size());
  CHECK(report.comparisons == family.size() * 5);
  CHECK(report.records.size() == report.comparisons);
  CHECK(report.discrepancies.empty());
  CHECK(report.records.front().m == family.front());
  CHECK(report.records.back().m == family.back());

  config.threads = 4;
  const auto parallel = sweep(config);
  REQUIRE(parallel.records.size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(parallel.records[i].index == report.records[i].index);
    CHECK(parallel.records[i].route_b == report.records[i].route_b);
    CHECK(parallel.records[i].rank == report.records[i].rank);
  }

  config.start_index = family.size() - 2;
  config.routes = {Route::ATableau, Route::Mackey};
  const auto tail = sweep(config);
  CHECK(tail.multisegments == 2);
  CHECK(tail.comparisons == 2);
  CHECK(tail.records.front().index == family.size() - 2);

  config.start_index = family.size() + 10;
  CHECK(sweep(config).multisegments == 0);

  SweepConfig empty;
  empty.lo = 2;
  empty.hi = 1;
  const auto none = sweep(empty);
  CHECK(none.multisegments == 0);
  CHECK(none.comparisons == 0);

  SweepConfig capped;
  capped.max_height = 3;
  capped.routes = {Route::Shuffle};
  capped.shuffle_cap = 2;
  CHECK(kind_of([&] { sweep(capped); }) == ErrorKind::CapExceeded);

  SweepConfig bad_rank;
  bad_rank.ranks = {0};
  CHECK(kind_of([&] { sweep(bad_rank); }) == ErrorKind::RankExceeded);
}
