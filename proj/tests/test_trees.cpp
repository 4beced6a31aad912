#include <doctest.h>

#include <set>

#include "remixed/recurrence.hpp"
#include "remixed/trees.hpp"
#include "util.hpp"

using namespace remixed;
using testutil::liu_recurrence_check;

TEST_CASE("decreasing tree bijection") {
  auto t = perm_to_dec_tree({2, 1});
  CHECK(t->label == 2);
  CHECK(t->left == nullptr);
  REQUIRE(t->right != nullptr);
  CHECK(t->right->label == 1);

  Perm u = {4, 7, 1, 2, 8, 6, 3, 5};
  auto big = perm_to_dec_tree(u);
  CHECK(big->label == 8);
  CHECK(dec_tree_to_perm(big.get()) == u);

  for (const auto& s : all_permutations(5))
    CHECK(dec_tree_to_perm(perm_to_dec_tree(s).get()) == s);
}

TEST_CASE("shapes and Catalan counts") {
  for (int r = 0; r <= 7; ++r) {
    auto shapes = all_shapes(r);
    CHECK(Rat(static_cast<long>(shapes.size())) == Rat(binomial(2 * r, r)) / (r + 1));
    CHECK(std::set<Shape>(shapes.begin(), shapes.end()).size() == shapes.size());
  }
  std::set<Shape> from_perms;
  for (const auto& s : all_permutations(4)) from_perms.insert(shape_of_perm(s));
  auto shapes4 = all_shapes(4);
  CHECK(from_perms == std::set<Shape>(shapes4.begin(), shapes4.end()));
}

TEST_CASE("q-hooklength identity") {
  CHECK(hooklength_check("(.(..))", 2));  // right chain: q
  CHECK(hooklength_check("((..).)", 2));  // left chain: 1
  for (const auto& s : all_shapes(4)) CHECK(hooklength_check(s, 4));
  CHECK_THROWS_AS(hooklength_check("(..)", 2), std::invalid_argument);
}

TEST_CASE("Postnikov enumeration for 2244") {
  auto trees = enumerate_postnikov({2, 2, 4, 4});
  REQUIRE(trees.size() == 2);
  std::set<QRat> weights;
  for (const auto& t : trees) weights.insert(t.weight);
  QRat w1 = QRat(QPoly(1), qint(2)) * QRat(QPoly::monomial(3), qint(4));
  QRat w2 = QRat(QPoly::monomial(1), qint(2)) * QRat(QPoly::monomial(1), qint(2));
  CHECK(weights == std::set<QRat>{w1, w2});
}

TEST_CASE("Postnikov enumeration for the 8-letter word") {
  auto trees = enumerate_postnikov({3, 4, 7, 1, 7, 8, 4, 3});
  QRat target(QPoly::monomial(4), qint(2) * qint(3) * qint(5));
  bool found = false;
  for (const auto& t : trees)
    if (t.weight == target) found = true;
  CHECK(found);
}

TEST_CASE("single letter word") {
  auto trees = enumerate_postnikov({1});
  REQUIRE(trees.size() == 1);
  CHECK(trees[0].weight == QRat(1));
  CHECK(trees[0].root->bs == 1);
  CHECK(trees[0].root->dec == 1);
}

TEST_CASE("Postnikov engine") {
  CHECK(remixed_via_postnikov({2, 2, 4, 4}) == remixed::remixed({0, 2, 0, 2}));
  CHECK(remixed_via_postnikov({1, 1}) == QPoly(1));
  for (int r = 1; r <= 5; ++r)
    for (const auto& c : all_compositions(r))
      CHECK(remixed_via_postnikov(canonical_word(c)) == remixed::remixed(c));
}

TEST_CASE("per-summand positivity") {
  for (int r = 1; r <= 4; ++r) {
    QPoly rfact = qfact(r);
    for (const auto& c : all_compositions(r)) {
      for (const auto& t : enumerate_postnikov(canonical_word(c))) {
        QPoly summand = (QRat(rfact) * t.weight).to_poly();
        CHECK(summand.is_integral());
        CHECK(summand.has_nonnegative_coeffs());
      }
    }
  }
}

TEST_CASE("weight sum depends only on content") {
  std::mt19937_64 rng(31337);
  for (const auto& c : all_compositions(4)) {
    Word w = canonical_word(c);
    QPoly base = remixed_via_postnikov(w);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(w.begin(), w.end(), rng);
      CHECK(remixed_via_postnikov(w) == base);
    }
  }
}

TEST_CASE("bilabeled enumeration") {
  auto trees = enumerate_bilabeled({2, 0, 1});
  CHECK(trees.size() == 3);
  CHECK(remixed_via_bilabeled({2, 0, 1}) == remixed::remixed({2, 0, 1}));
  CHECK(remixed_via_bilabeled({1, 1}) == qfact(2));
  for (const auto& t : trees) CHECK(bilabeled_content(t) == Composition{2, 0, 1});
  for (int r = 1; r <= 5; ++r) {
    Composition spike(r, 0);
    spike[0] = r;
    CHECK(enumerate_bilabeled(spike).size() == 1);
    for (const auto& c : all_compositions(r)) {
      CHECK(remixed_via_bilabeled(c) == remixed::remixed(c));
      CHECK(Rat(static_cast<long>(enumerate_bilabeled(c).size())) ==
            remixed::remixed(c).eval_at(1));
    }
  }
  CHECK_THROWS_AS(enumerate_bilabeled({0, 2}, 1), std::invalid_argument);
}

TEST_CASE("shrink map") {
  for (const auto& t : enumerate_bilabeled({1, 1})) {
    ShrinkResult s = liu_shrink(t);
    CHECK(s.tree.u == Perm{1});
    CHECK(s.tree.leaf_lr.size() == 2);
    CHECK(bilabeled_content(s.tree) == Composition{1});
  }
  // leftmost leaf pair forces the absorbed label to be 2
  for (int r = 2; r <= 4; ++r) {
    for (const auto& c : all_compositions(r)) {
      for (const auto& t : enumerate_bilabeled(c)) {
        ShrinkResult s = liu_shrink(t);
        if (s.leaf_index == 1) CHECK(s.absorbed_label == 2);
      }
    }
  }
  CHECK_THROWS_AS(liu_shrink(enumerate_bilabeled({1}).front()),
                  std::invalid_argument);
}

TEST_CASE("shrink recurrence at q = 1") {
  for (int r = 2; r <= 4; ++r)
    for (const auto& c : all_compositions(r)) CHECK(liu_recurrence_check(c));
}
