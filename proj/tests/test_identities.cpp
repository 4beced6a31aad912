#include <doctest.h>

#include "remixed/identities.hpp"
#include "remixed/recurrence.hpp"
#include "util.hpp"

using namespace remixed;
using testutil::poly;

TEST_CASE("truncated series arithmetic") {
  TruncSeries p = t_pochhammer(2, 8);
  CHECK(p.at(0) == QPoly(1));
  CHECK(p.at(1) == -(QPoly(1) + QPoly::monomial(1) + QPoly::monomial(2)));
  TruncSeries one(8);
  one.at(0) = QPoly(1);
  CHECK(p * p.inverse() == one);
  TruncSeries no_unit(3);
  no_unit.at(0) = QPoly::monomial(1);
  CHECK_THROWS_AS(no_unit.inverse(), std::domain_error);
}

TEST_CASE("Carlitz identity") {
  // spot values at r = 3
  Composition c2 = {0, 3, 0};
  CHECK(remixed::remixed(c2) == QPoly::monomial(1, 2) + QPoly::monomial(2, 2));
  CHECK(remixed::remixed({0, 0, 3}) == QPoly::monomial(3));
  CHECK(remixed::remixed({3, 0, 0}) == QPoly(1));
  for (int r = 1; r <= 6; ++r) CHECK(check_carlitz(r));
}

TEST_CASE("two-block identity") {
  CHECK(check_two_block(4, 2, 1));
  CHECK(remixed::remixed({2, 2, 0, 0}) == qint(2) * qint(2));
  for (int r = 1; r <= 5; ++r) CHECK(check_two_block_all(r));
  CHECK_THROWS_AS(check_two_block(4, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_two_block(4, 2, 4), std::invalid_argument);
}

TEST_CASE("Catalan sum and cyclic rule") {
  QPoly s2 = remixed::remixed({2, 0}) + remixed::remixed({1, 1}) + remixed::remixed({0, 2});
  CHECK(s2 == qfact(2) * Rat(2));
  for (int r = 1; r <= 6; ++r) {
    CHECK(check_catalan_sum(r));
    CHECK(check_cyclic(r));
  }
}

TEST_CASE("interval-support generating function") {
  CHECK(gf_interval_check({2}, 2, 6));
  for (int r = 1; r <= 5; ++r) CHECK(gf_interval_check({r}, r));
  CHECK(gf_interval_check({1, 2, 3}, 6));
  CHECK(gf_interval_check({2, 1}, 3));
  CHECK_THROWS_AS(gf_interval_check({1, 2}, 4), std::invalid_argument);
  CHECK_THROWS_AS(gf_interval_check({0, 3}, 3), std::invalid_argument);
}

TEST_CASE("q-hit data from a partition") {
  QHitResult res = qhit_from_partition({5, 5, 3, 3, 3, 0});
  CHECK(res.a == -1);
  CHECK(res.beta == Composition{1, 2, 3});
  CHECK(res.hits[0].is_zero());
  CHECK(res.hits[1].is_zero());
  CHECK(!res.hits[2].is_zero());
  CHECK(!res.hits[5].is_zero());
  CHECK(res.hits[6].is_zero());

  QHitResult empty = qhit_from_partition({0, 0, 0});
  CHECK(empty.a == 1);
  CHECK(empty.beta == Composition{1, 1, 1});
  CHECK(empty.hits[0] == qfact(3));

  QHitResult full = qhit_from_partition({4, 4, 4, 4});
  CHECK(full.a == 1 - 4);

  CHECK_THROWS_AS(qhit_from_partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(qhit_from_partition({4, 0, 0}), std::invalid_argument);
}

TEST_CASE("q-hit generating function") {
  CHECK(check_qhit_gf({5, 5, 3, 3, 3, 0}, 14));
  CHECK(check_qhit_gf({0, 0, 0}));
  // q = 1: hit numbers partition S_r
  for (const std::vector<int>& lambda :
       {std::vector<int>{3, 1, 0}, std::vector<int>{4, 4, 2, 1},
        std::vector<int>{2, 2, 2}}) {
    QHitResult res = qhit_from_partition(lambda);
    Rat total;
    for (const auto& h : res.hits) {
      total += h.eval_at(1);
      CHECK(h.has_nonnegative_coeffs());
    }
    CHECK(total == Rat(factorial(static_cast<int>(lambda.size()))));
  }
}

TEST_CASE("parking-function identity") {
  for (int r = 1; r <= 5; ++r) CHECK(check_parking(r));
  // r = 2 closed form: 2 + q
  QPoly pf2;
  for (const auto& f : parking_functions(2)) pf2 += QPoly::monomial(inv_count(f));
  CHECK(pf2 == poly({2, 1}));
}

TEST_CASE("suite driver") {
  auto results = run_suite(4, {"all"});
  CHECK(results.size() == 11);
  for (const auto& res : results) {
    CHECK(res.pass);
    CHECK(res.witness.empty());
  }
  auto partial = run_suite(3, {"carlitz", "cyclic"});
  REQUIRE(partial.size() == 2);
  CHECK(partial[0].name == "carlitz");
  CHECK(partial[1].name == "cyclic");
  CHECK_THROWS_AS(run_suite(3, {"nonsense"}), std::invalid_argument);
}
