#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>
#include <vector>

#include "csmlap/csm.hpp"
#include "csmlap/fuzz.hpp"
#include "helpers.hpp"

using namespace csmlap;
using namespace csmlap::testutil;

namespace {

// Expected entry table for an enlarged matrix over a symbolic input: "0" is
// the zero polynomial, "ij" is the indeterminate a_ij.
void check_entries(const LabeledMatrix& got, const std::vector<std::vector<const char*>>& want) {
  REQUIRE(got.row_count() == want.size());
  for (std::size_t r = 0; r < want.size(); ++r) {
    REQUIRE(got.col_count() == want[r].size());
    for (std::size_t c = 0; c < want[r].size(); ++c) {
      const char* cell = want[r][c];
      RingValue expected = cell[0] == '0' ? got.ring().zero()
                                          : got.ring().indeterminate(std::string("a") + cell);
      CAPTURE(r);
      CAPTURE(c);
      REQUIRE(got.at(r, c) == expected);
    }
  }
}

std::vector<Label> extended_labels(const std::vector<std::int64_t>& bases,
                                   const std::vector<std::int64_t>& doubled) {
  std::vector<Label> out;
  for (auto b : bases) {
    out.push_back(Label::of(b));
    for (auto d : doubled)
      if (d == b) out.push_back(Label::of(b).plus());
  }
  return out;
}

}  // namespace

TEST_CASE("identity matrix expansion") {
  LabeledMatrix id = LabeledMatrix::identity(Ring::integers(), OrderedIndexSet::naturals(3));
  CsmPartition p = partition(id, {2}, {2}, {1});
  CHECK(csm_rhs(id, p, SignVariant::rank) == id.ring().one());
  CHECK(csm_rhs_complement(id, p, SignVariant::rank) == id.ring().one());
  CHECK(csm_lhs(id, p.common_rows, p.common_cols) == id.ring().one());

  auto terms = csm_terms(id, p, SignVariant::rank);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].variable_labels == std::vector<Label>{Label::of(1)});
  CHECK(terms[0].product == id.ring().one());
  CHECK(terms[1].variable_labels == std::vector<Label>{Label::of(3)});
  CHECK(terms[1].product.is_zero());
}

TEST_CASE("symbolic three by three case") {
  LabeledMatrix a = symbolic_matrix(3);
  const Ring& ring = a.ring();
  CsmPartition p = partition(a, {2}, {2}, {1});

  RingValue a22_det = ring.indeterminate("a22") * det_leibniz(a);
  CHECK(csm_lhs(a, p.common_rows, p.common_cols) == a22_det);

  for (SignVariant v : {SignVariant::position, SignVariant::rank}) {
    CHECK(csm_rhs(a, p, v) == a22_det);
    CHECK(csm_rhs_complement(a, p, v) == a22_det);
  }

  // The expansion written out term by term, before cancellation.
  RingValue eight_products = ring.parse_value(
      "a11*a22*a22*a33 - a11*a22*a32*a23 - a21*a12*a22*a33 + a21*a12*a32*a23"
      "- a12*a23*a21*a32 + a12*a23*a31*a22 + a22*a13*a21*a32 - a22*a13*a31*a22");
  CHECK(csm_rhs(a, p, SignVariant::rank) == eight_products);

  CsmReport r = verify_csm(a, p, SignVariant::rank);
  CHECK(r.all_ok());
  CHECK(r.equal);
  CHECK(r.terms.size() == 2);
  REQUIRE(r.initialized_sum_ok.has_value());
  CHECK(*r.initialized_sum_ok);
  REQUIRE(r.initialized_product_ok.has_value());
  CHECK(*r.initialized_product_ok);
}

TEST_CASE("left hand side degenerations") {
  Rng rng(2);
  LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
  CHECK(csm_lhs(a, IndexSubset(), IndexSubset()) == det_leibniz(a));
  LabeledMatrix id = LabeledMatrix::identity(Ring::integers(), OrderedIndexSet::naturals(4));
  for (const auto& f : k_subsets(id.rows(), 2)) CHECK(csm_lhs(id, f, f) == id.ring().one());
  CHECK_THROWS(csm_lhs(a, subset(a.rows(), {1}), IndexSubset()));
}

TEST_CASE("drop-notation minors give the same expansion") {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
    CsmPartition p = random_partition(a, rng);
    for (SignVariant v : {SignVariant::position, SignVariant::rank}) {
      RingValue keep = csm_rhs(a, p, v);
      CHECK(csm_rhs_complement(a, p, v) == keep);
    }
    auto keep_terms = csm_terms(a, p, SignVariant::rank, MinorForm::keep);
    auto drop_terms = csm_terms(a, p, SignVariant::rank, MinorForm::drop);
    REQUIRE(keep_terms.size() == drop_terms.size());
    for (std::size_t i = 0; i < keep_terms.size(); ++i)
      CHECK(keep_terms[i].product == drop_terms[i].product);
  }
}

TEST_CASE("random six by six expansion hits the closed form") {
  Rng rng(66);
  for (int t = 0; t < 5; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 6, rng);
    CsmPartition p = partition(a, {2, 4}, {3, 5}, {1, 6});
    RingValue lhs = csm_lhs(a, p.common_rows, p.common_cols);
    CHECK(csm_rhs(a, p, SignVariant::rank) == lhs);
    CHECK(csm_rhs(a, p, SignVariant::position) == lhs);
  }
}

TEST_CASE("doubled matrix duplicates the common rows and columns") {
  LabeledMatrix one = symbolic_matrix(1);
  LabeledMatrix doubled =
      build_doubled(one, IndexSubset::full(one.rows()), IndexSubset::full(one.cols()));
  CHECK(doubled.rows().labels() == extended_labels({1}, {1}));
  check_entries(doubled, {{"11", "11"}, {"11", "11"}});

  LabeledMatrix a = symbolic_matrix(6);
  LabeledMatrix same = build_doubled(a, IndexSubset(), IndexSubset());
  CHECK(same == a);

  LabeledMatrix hat = build_doubled(a, subset(a.rows(), {2, 4}), subset(a.cols(), {3, 5}));
  CHECK(hat.rows().labels() == extended_labels({1, 2, 3, 4, 5, 6}, {2, 4}));
  CHECK(hat.cols().labels() == extended_labels({1, 2, 3, 4, 5, 6}, {3, 5}));
  check_entries(hat, {
      {"11", "12", "13", "13", "14", "15", "15", "16"},
      {"21", "22", "23", "23", "24", "25", "25", "26"},
      {"21", "22", "23", "23", "24", "25", "25", "26"},
      {"31", "32", "33", "33", "34", "35", "35", "36"},
      {"41", "42", "43", "43", "44", "45", "45", "46"},
      {"41", "42", "43", "43", "44", "45", "45", "46"},
      {"51", "52", "53", "53", "54", "55", "55", "56"},
      {"61", "62", "63", "63", "64", "65", "65", "66"},
  });
}

TEST_CASE("initialized matrix zero pattern") {
  LabeledMatrix a = symbolic_matrix(6);
  CsmPartition p = partition(a, {2, 4}, {3, 5}, {1, 6});
  LabeledMatrix avec = build_initialized(a, p);
  CHECK(avec.rows().labels() == extended_labels({1, 2, 3, 4, 5, 6}, {2, 4}));
  CHECK(avec.cols().labels() == extended_labels({1, 2, 3, 4, 5, 6}, {3, 5}));
  check_entries(avec, {
      {"11", "12", "13", "0", "14", "15", "0", "16"},
      {"21", "22", "23", "0", "24", "25", "0", "26"},
      {"21", "22", "0", "23", "24", "0", "25", "26"},
      {"31", "32", "0", "33", "34", "0", "35", "36"},
      {"41", "42", "43", "0", "44", "45", "0", "46"},
      {"41", "42", "0", "43", "44", "0", "45", "46"},
      {"51", "52", "0", "53", "54", "0", "55", "56"},
      {"61", "62", "63", "0", "64", "65", "0", "66"},
  });
}

TEST_CASE("one by one initialization is the diagonal doubling") {
  LabeledMatrix one = symbolic_matrix(1);
  CsmPartition p = CsmPartition::of_subsets(one, IndexSubset::full(one.rows()),
                                            IndexSubset::full(one.cols()), IndexSubset());
  LabeledMatrix avec = build_initialized(one, p);
  check_entries(avec, {{"11", "0"}, {"0", "11"}});
}

TEST_CASE("initialized matrix satisfies its defining block conditions") {
  Rng rng(4242);
  for (int t = 0; t < 25; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
    CsmPartition p = random_partition(a, rng);
    LabeledMatrix avec = build_initialized(a, p);

    std::vector<Label> fi = subset_union(p.common_rows, p.first_minor_rows).labels(a.rows());
    std::vector<Label> fplus_i2 = p.second_minor_rows.labels(a.rows());
    for (const Label& f : p.common_rows.labels(a.rows())) fplus_i2.push_back(f.plus());
    std::vector<Label> g_labels = p.common_cols.labels(a.cols());
    std::vector<Label> gplus;
    for (const Label& g : g_labels) gplus.push_back(g.plus());

    IndexSubset fi_ext = IndexSubset::of_labels(avec.rows(), fi);
    IndexSubset sec_ext = IndexSubset::of_labels(avec.rows(), fplus_i2);
    IndexSubset g_ext = IndexSubset::of_labels(avec.cols(), g_labels);
    IndexSubset gplus_ext = IndexSubset::of_labels(avec.cols(), gplus);

    // First block row group: original entries away from G+, zeros on G+.
    IndexSubset fi_base = subset_union(p.common_rows, p.first_minor_rows);
    CHECK(submatrix(avec, Pick::keep, fi_ext, Pick::drop, gplus_ext) ==
          submatrix_keep(a, fi_base, IndexSubset::full(a.cols())));
    LabeledMatrix z1 = submatrix_keep(avec, fi_ext, gplus_ext);
    for (std::size_t r = 0; r < z1.row_count(); ++r)
      for (std::size_t c = 0; c < z1.col_count(); ++c) CHECK(z1.at(r, c).is_zero());

    // Second group: zeros on G, original entries moved into G+.
    LabeledMatrix moved = submatrix(avec, Pick::keep, sec_ext, Pick::drop, g_ext);
    IndexSubset sec_base = subset_union(p.common_rows, p.second_minor_rows);
    LabeledMatrix orig = submatrix_keep(a, sec_base, IndexSubset::full(a.cols()));
    REQUIRE(moved.row_count() == orig.row_count());
    for (std::size_t r = 0; r < orig.row_count(); ++r)
      for (std::size_t c = 0; c < orig.col_count(); ++c) CHECK(moved.at(r, c) == orig.at(r, c));
    LabeledMatrix z2 = submatrix_keep(avec, sec_ext, g_ext);
    for (std::size_t r = 0; r < z2.row_count(); ++r)
      for (std::size_t c = 0; c < z2.col_count(); ++c) CHECK(z2.at(r, c).is_zero());
  }
}

TEST_CASE("submatrix transport between the initialized and original matrices") {
  Rng rng(321);
  for (int t = 0; t < 10; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
    CsmPartition p = random_partition(a, rng);
    LabeledMatrix avec = build_initialized(a, p);

    IndexSubset non_common = complement(a.cols(), p.common_cols);
    IndexSubset fi = subset_union(p.common_rows, p.first_minor_rows);
    IndexSubset sec = subset_union(p.common_rows, p.second_minor_rows);

    for (const auto& j : k_subsets(non_common, p.first_minor_rows.size())) {
      IndexSubset jprime = subset_difference(non_common, j);

      IndexSubset gj = subset_union(p.common_cols, j);
      LabeledMatrix left = submatrix_keep(
          avec, IndexSubset::of_labels(avec.rows(), fi.labels(a.rows())),
          IndexSubset::of_labels(avec.cols(), gj.labels(a.cols())));
      CHECK(left == submatrix_keep(a, fi, gj));

      std::vector<Label> sec_labels = p.second_minor_rows.labels(a.rows());
      for (const Label& f : p.common_rows.labels(a.rows())) sec_labels.push_back(f.plus());
      std::vector<Label> col_labels = jprime.labels(a.cols());
      for (const Label& g : p.common_cols.labels(a.cols())) col_labels.push_back(g.plus());
      LabeledMatrix right = submatrix_keep(avec, IndexSubset::of_labels(avec.rows(), sec_labels),
                                           IndexSubset::of_labels(avec.cols(), col_labels));
      LabeledMatrix expect = submatrix_keep(a, sec, subset_union(p.common_cols, jprime));
      REQUIRE(right.row_count() == expect.row_count());
      REQUIRE(right.col_count() == expect.col_count());
      for (std::size_t r = 0; r < expect.row_count(); ++r)
        for (std::size_t c = 0; c < expect.col_count(); ++c)
          CHECK(right.at(r, c) == expect.at(r, c));
      CHECK(det_leibniz(right) == det_leibniz(expect));
    }
  }
}

TEST_CASE("column splits that touch the wrong block vanish") {
  Rng rng(7001);
  LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
  CsmPartition p = partition(a, {2}, {3}, {1});
  LabeledMatrix avec = build_initialized(a, p);

  std::vector<Label> fi = subset_union(p.common_rows, p.first_minor_rows).labels(a.rows());
  IndexSubset top = IndexSubset::of_labels(avec.rows(), fi);
  IndexSubset bottom = complement(avec.rows(), top);
  IndexSubset g = IndexSubset::of_labels(avec.cols(), {Label::of(3)});
  IndexSubset gplus = IndexSubset::of_labels(avec.cols(), {Label::of(3).plus()});

  std::size_t nonvanishing = 0;
  for (const auto& l : k_subsets(avec.cols(), top.size())) {
    IndexSubset lprime = complement(avec.cols(), l);
    RingValue product =
        det_leibniz(submatrix_keep(avec, top, l)) * det_leibniz(submatrix_keep(avec, bottom, lprime));
    bool touches = !disjoint(l, gplus) || !disjoint(lprime, g);
    if (touches)
      CHECK(product.is_zero());
    else if (!product.is_zero())
      ++nonvanishing;
  }
  CHECK(nonvanishing > 0);
}

TEST_CASE("cleanup reproduces the worked transformation") {
  LabeledMatrix a = symbolic_matrix(6);
  CsmPartition p = partition(a, {2, 4}, {3, 5}, {1, 6});
  LabeledMatrix tilde = build_tilde(build_initialized(a, p));
  check_entries(tilde, {
      {"11", "12", "13", "0", "14", "15", "0", "16"},
      {"21", "22", "23", "0", "24", "25", "0", "26"},
      {"0", "0", "0", "23", "0", "0", "25", "0"},
      {"31", "32", "33", "33", "34", "35", "35", "36"},
      {"41", "42", "43", "0", "44", "45", "0", "46"},
      {"0", "0", "0", "43", "0", "0", "45", "0"},
      {"51", "52", "53", "53", "54", "55", "55", "56"},
      {"61", "62", "63", "0", "64", "65", "0", "66"},
  });

  // The common block and its complement inside the cleaned matrix are the
  // original common block and the original matrix.
  IndexSubset fplus =
      IndexSubset::of_labels(tilde.rows(), {Label::of(2).plus(), Label::of(4).plus()});
  IndexSubset gplus =
      IndexSubset::of_labels(tilde.cols(), {Label::of(3).plus(), Label::of(5).plus()});
  LabeledMatrix block = submatrix_keep(tilde, fplus, gplus);
  LabeledMatrix fg = submatrix_keep(a, subset(a.rows(), {2, 4}), subset(a.cols(), {3, 5}));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(block.at(r, c) == fg.at(r, c));

  LabeledMatrix rest = submatrix_drop(tilde, fplus, gplus);
  REQUIRE(rest.row_count() == 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) CHECK(rest.at(r, c) == a.at(r, c));
}

TEST_CASE("cleanup preserves the determinant") {
  Rng rng(888);
  for (int t = 0; t < 20; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
    CsmPartition p = random_partition(a, rng);
    LabeledMatrix avec = build_initialized(a, p);
    CHECK(det_leibniz(build_tilde(avec)) == det_leibniz(avec));
  }
}

TEST_CASE("initialized determinant closed forms") {
  Rng rng(5005);
  for (int t = 0; t < 30; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 4, rng);
    CsmPartition p = random_partition(a, rng);
    RingValue oracle = det_leibniz(build_initialized(a, p));
    CHECK(initialized_det_sum_form(a, p) == oracle);
    CHECK(initialized_det_product_form(a, p) == oracle);
    int s = initialized_product_sign(a, p);
    CHECK(oracle == (s < 0 ? -csm_lhs(a, p.common_rows, p.common_cols)
                           : csm_lhs(a, p.common_rows, p.common_cols)));
  }
}

TEST_CASE("main identity exhaustively over all partitions") {
  Rng rng(314159);
  std::vector<std::size_t> want_partitions = {3, 13, 63, 321};
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<LabeledMatrix> samples = {
        random_matrix(Ring::integers(), n, rng),
        random_matrix(Ring::integers(), n, rng),
        random_matrix(Ring::modular(5), n, rng),
        random_matrix(Ring::rationals(), n, rng),
        symbolic_matrix(n),
    };
    auto partitions = all_csm_partitions(samples[0].rows(), samples[0].cols());
    CHECK(partitions.size() == want_partitions[n - 1]);
    for (const LabeledMatrix& a : samples)
      for (const auto& p : partitions) {
        p.validate(a.rows(), a.cols());
        RingValue lhs = csm_lhs(a, p.common_rows, p.common_cols);
        for (SignVariant v : {SignVariant::position, SignVariant::rank})
          REQUIRE(csm_rhs(a, p, v) == lhs);
      }
  }
}

TEST_CASE("main identity sampled at larger sizes") {
  Rng rng(161803);
  for (std::size_t n : {5, 6})
    for (int t = 0; t < 25; ++t) {
      LabeledMatrix a = random_matrix(Ring::integers(), n, rng);
      CsmPartition p = random_partition(a, rng);
      RingValue lhs = csm_lhs(a, p.common_rows, p.common_cols);
      REQUIRE(csm_rhs(a, p, SignVariant::position) == lhs);
      REQUIRE(csm_rhs(a, p, SignVariant::rank) == lhs);
    }
}

TEST_CASE("full verification over a prime modulus") {
  Rng rng(7777);
  Ring m7 = Ring::modular(7);
  for (int t = 0; t < 500; ++t) {
    LabeledMatrix a = random_matrix(m7, 6, rng);
    CsmPartition p = random_partition(a, rng);
    CsmReport r = verify_csm(a, p, t % 2 == 0 ? SignVariant::rank : SignVariant::position);
    REQUIRE(r.equal);
    REQUIRE(r.all_ok());
    bool under_cap = a.row_count() + p.common_rows.size() <= kLeibnizCap;
    CHECK(r.initialized_sum_ok.has_value() == under_cap);
    CHECK(r.initialized_product_ok.has_value() == under_cap);
  }
}

TEST_CASE("verification on the identity matrix") {
  LabeledMatrix id = LabeledMatrix::identity(Ring::integers(), OrderedIndexSet::naturals(4));
  for (const auto& p : all_csm_partitions(id.rows(), id.cols())) {
    CsmReport r = verify_csm(id, p, SignVariant::rank);
    REQUIRE(r.all_ok());
    if (p.common_rows == p.common_cols) REQUIRE(r.lhs == id.ring().one());
  }
}

TEST_CASE("no common block reduces to the standard expansion") {
  Rng rng(42424);
  LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
  for (std::size_t k = 0; k <= 5; ++k)
    for (const auto& i : k_subsets(a.rows(), k)) {
      CsmPartition p = CsmPartition::of_subsets(a, IndexSubset(), IndexSubset(), i);
      for (SignVariant v : {SignVariant::position, SignVariant::rank})
        REQUIRE(csm_rhs(a, p, v) == laplace_det(a, i, v));
    }
}

TEST_CASE("empty first-minor rows give a one-term sum") {
  Rng rng(271828);
  for (int t = 0; t < 20; ++t) {
    LabeledMatrix a = random_matrix(Ring::integers(), 5, rng);
    std::size_t fsize = rng.below(6);
    IndexSubset f = IndexSubset::of_positions(rng.pick(5, fsize));
    IndexSubset g = IndexSubset::of_positions(rng.pick(5, fsize));
    CsmPartition p = CsmPartition::of_subsets(a, f, g, IndexSubset());
    auto terms = csm_terms(a, p, SignVariant::rank);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].sign == 1);
    CHECK(csm_outer_sign(a, p, SignVariant::rank) == 1);
    CHECK(csm_rhs(a, p, SignVariant::rank) == csm_lhs(a, f, g));
  }
}

TEST_CASE("the checker notices a corrupted matrix") {
  LabeledMatrix a = int_matrix({{3, 1, 4, 1}, {5, 9, 2, 6}, {5, 3, 5, 8}, {9, 7, 9, 3}});
  CsmPartition p = partition(a, {2}, {2}, {1});
  CsmReport good = verify_csm(a, p, SignVariant::rank);
  CHECK(good.all_ok());

  LabeledMatrix corrupted = a;
  corrupted.at(0, 0) += a.ring().one();
  CHECK(csm_rhs(corrupted, p, SignVariant::rank) != good.lhs);
  CHECK(initialized_det_sum_form(corrupted, p) != initialized_det_sum_form(a, p));
}

TEST_CASE("partition validation") {
  LabeledMatrix a = int_matrix({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK_THROWS_AS(partition(a, {1}, {1, 2}, {2}), InvalidPartition);   // |F| != |G|
  CHECK_THROWS_AS(partition(a, {1}, {1}, {1}), InvalidPartition);      // F and I overlap
  CHECK_THROWS(partition(a, {9}, {1}, {2}));                           // no such label
  CsmPartition bad = partition(a, {1}, {1}, {2});
  CHECK_THROWS(bad.validate(OrderedIndexSet::naturals(2), OrderedIndexSet::naturals(2)));
  LabeledMatrix rect = int_matrix({{1, 2, 3}, {4, 5, 6}});
  CHECK_THROWS_AS(CsmPartition::of_labels(rect, {}, {}, {}), InvalidPartition);
}

TEST_CASE("reports carry the same values in both formats") {
  LabeledMatrix a = symbolic_matrix(3);
  CsmPartition p = partition(a, {2}, {2}, {1});
  CsmReport r = verify_csm(a, p, SignVariant::rank);

  std::string text = report_text(r);
  CHECK(text.find("verdict: IDENTITY HOLDS") != std::string::npos);
  CHECK(text.find("lhs = det(common block) * det(A) = " + r.lhs.str()) != std::string::npos);
  CHECK(text.find("rhs = " + r.rhs.str()) != std::string::npos);
  CHECK(text.find("terms (2):") != std::string::npos);
  CHECK(text.find("initialized matrix, sum form: ok") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(report_json(r));
  CHECK(j["lhs"] == r.lhs.str());
  CHECK(j["rhs"] == r.rhs.str());
  CHECK(j["equal"] == true);
  CHECK(j["all_ok"] == true);
  CHECK(j["terms"].size() == 2);
  CHECK(j["terms"][0]["product"] == r.terms[0].product.str());
  for (const auto& t : r.terms) CHECK(text.find("product=" + t.product.str()) != std::string::npos);
}
