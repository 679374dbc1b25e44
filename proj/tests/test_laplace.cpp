#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "csmlap/fuzz.hpp"
#include "csmlap/laplace.hpp"
#include "helpers.hpp"

using namespace csmlap;
using namespace csmlap::testutil;

namespace {

RingValue term_sum(const LabeledMatrix& a, const std::vector<ExpansionTerm>& terms, int outer) {
  RingValue acc = a.ring().zero();
  for (const auto& t : terms) acc += t.product;
  return outer < 0 ? -acc : acc;
}

}  // namespace

TEST_CASE("two by two expansion") {
  LabeledMatrix a = int_matrix({{1, 2}, {3, 4}});
  IndexSubset k1 = subset(a.rows(), {1});
  CHECK(laplace_det(a, k1, SignVariant::rank) == a.ring().from_int(-2));
  CHECK(laplace_det(a, k1, SignVariant::position) == a.ring().from_int(-2));
  CHECK(laplace_det(a, subset(a.rows(), {2}), SignVariant::rank) == a.ring().from_int(-2));
}

TEST_CASE("empty and full row subsets degenerate to one term") {
  Rng rng(42);
  LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
  RingValue d = det_leibniz(a);

  for (const IndexSubset& k : {IndexSubset(), IndexSubset::full(a.rows())}) {
    CHECK(laplace_det(a, k, SignVariant::rank) == d);
    auto terms = laplace_terms(a, k, SignVariant::rank);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].sign == 1);
    CHECK(laplace_outer_sign(a, k, SignVariant::rank) == 1);
    CHECK(terms[0].product == d);
  }
  auto empty_k = laplace_terms(a, IndexSubset(), SignVariant::rank);
  CHECK(empty_k[0].minor_first == a.ring().one());
  CHECK(empty_k[0].minor_second == d);
}

TEST_CASE("term counts follow the binomial coefficient") {
  Rng rng(7);
  LabeledMatrix a3 = random_matrix(Ring::integers(), 3, rng);
  CHECK(laplace_terms(a3, subset(a3.rows(), {2}), SignVariant::rank).size() == 3);
  LabeledMatrix a4 = random_matrix(Ring::integers(), 4, rng);
  CHECK(laplace_terms(a4, subset(a4.rows(), {1, 3}), SignVariant::rank).size() == 6);

  LabeledMatrix id = LabeledMatrix::identity(Ring::integers(), OrderedIndexSet::naturals(3));
  auto terms = laplace_terms(id, subset(id.rows(), {1}), SignVariant::rank);
  REQUIRE(terms.size() == 3);
  std::size_t nonzero = 0;
  for (const auto& t : terms)
    if (!t.product.is_zero()) {
      ++nonzero;
      CHECK(t.variable_labels == std::vector<Label>{Label::of(1)});
    }
  CHECK(nonzero == 1);
}

TEST_CASE("exhaustive zero-one sweep at n = 3") {
  Ring z = Ring::integers();
  OrderedIndexSet n3 = OrderedIndexSet::naturals(3);
  auto all_k = k_subsets(n3, 0);
  for (std::size_t k = 1; k <= 3; ++k)
    for (const auto& s : k_subsets(n3, k)) all_k.push_back(s);

  for (unsigned bits = 0; bits < 512; ++bits) {
    std::vector<RingValue> entries;
    for (unsigned b = 0; b < 9; ++b) entries.push_back(z.from_int((bits >> b) & 1));
    LabeledMatrix a(z, n3, n3, std::move(entries));
    RingValue d = det_leibniz(a);
    for (const auto& k : all_k) {
      REQUIRE(laplace_det(a, k, SignVariant::position) == d);
      REQUIRE(laplace_det(a, k, SignVariant::rank) == d);
    }
  }
}

TEST_CASE("random five by five matrices match the oracle for every row subset") {
  Rng rng(1234);
  OrderedIndexSet n5 = OrderedIndexSet::naturals(5);
  std::vector<IndexSubset> all_k;
  for (std::size_t k = 0; k <= 5; ++k)
    for (const auto& s : k_subsets(n5, k)) all_k.push_back(s);

  for (int t = 0; t < 200; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
    RingValue d = det_leibniz(a);
    for (const auto& k : all_k) {
      REQUIRE(laplace_det(a, k, SignVariant::position) == d);
      REQUIRE(laplace_det(a, k, SignVariant::rank) == d);
    }
  }
}

TEST_CASE("complement minors change nothing") {
  Rng rng(555);
  for (int t = 0; t < 30; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
    IndexSubset k = IndexSubset::of_positions(rng.pick(5, 1 + rng.below(4)));
    CHECK(laplace_det(a, k, SignVariant::rank, MinorForm::drop) == det_leibniz(a));
    auto keep = laplace_terms(a, k, SignVariant::rank, MinorForm::keep);
    auto drop = laplace_terms(a, k, SignVariant::rank, MinorForm::drop);
    REQUIRE(keep.size() == drop.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
      CHECK(keep[i].variable_subset == drop[i].variable_subset);
      CHECK(keep[i].sign == drop[i].sign);
      CHECK(keep[i].minor_second == drop[i].minor_second);
      CHECK(keep[i].product == drop[i].product);
    }
  }
}

TEST_CASE("terms sum to the expansion value") {
  Rng rng(90);
  for (int t = 0; t < 20; ++t) {
    LabeledMatrix a = random_matrix(Ring::rationals(), 4, rng);
    IndexSubset k = IndexSubset::of_positions(rng.pick(4, rng.below(5)));
    for (SignVariant v : {SignVariant::position, SignVariant::rank}) {
      auto terms = laplace_terms(a, k, v);
      int outer = laplace_outer_sign(a, k, v);
      CHECK(term_sum(a, terms, outer) == laplace_det(a, k, v));
    }
  }
}

TEST_CASE("relabeling by an order isomorphism is invisible") {
  Rng rng(31);
  LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
  std::vector<RingValue> entries;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) entries.push_back(a.at(r, c));

  OrderedIndexSet tens({Label::of(10), Label::of(20), Label::of(30), Label::of(40)});
  OrderedIndexSet words({Label::of("ae"), Label::of("be"), Label::of("ce"), Label::of("de")});
  LabeledMatrix relabeled(a.ring(), tens, words, std::move(entries));

  for (std::size_t k = 0; k <= 4; ++k)
    for (const auto& s : k_subsets(a.rows(), k)) {
      IndexSubset s2 = IndexSubset::of_positions(s.positions());
      for (SignVariant v : {SignVariant::position, SignVariant::rank})
        CHECK(laplace_det(relabeled, s2, v) == laplace_det(a, s, v));
    }
}

TEST_CASE("expansion path determinant is independent of the oracle") {
  Rng rng(626);
  for (std::size_t n = 0; n <= 7; ++n) {
    LabeledMatrix a = random_matrix(Ring::integers(), n, rng);
    CHECK(det_minor(a) == det_leibniz(a));
  }
}

TEST_CASE("serial and parallel expansion agree") {
  Rng rng(808017);
  LabeledMatrix a = random_matrix(Ring::integers(), 6, rng);
  IndexSubset k = subset(a.rows(), {2, 3, 5});
  CHECK(laplace_det(a, k, SignVariant::rank, MinorForm::keep, ExecMode::parallel) ==
        laplace_det(a, k, SignVariant::rank, MinorForm::keep, ExecMode::serial));
}

TEST_CASE("bad inputs are rejected") {
  LabeledMatrix rect = int_matrix({{1, 2, 3}, {4, 5, 6}});
  CHECK_THROWS_AS(laplace_det(rect, IndexSubset(), SignVariant::rank), NonSquareMatrix);
  LabeledMatrix a = int_matrix({{1, 2}, {3, 4}});
  CHECK_THROWS(laplace_det(a, IndexSubset::of_positions({5}), SignVariant::rank));
}
