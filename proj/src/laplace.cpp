#include "csmlap/laplace.hpp"

namespace csmlap {

RingValue det_minor(const LabeledMatrix& a) {
  if (!a.is_square()) throw NonSquareMatrix();
  const std::size_t n = a.row_count();
  if (n <= 4) return det_leibniz_serial(a);
  RingValue acc = a.ring().zero();
  const IndexSubset row0 = IndexSubset::range(0, 1);
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const RingValue& e = a.at(0, c);
    if (!e.is_zero()) {
      RingValue t = e * det_minor(submatrix_drop(a, row0, IndexSubset::range(c, 1)));
      if (sign > 0)
        acc += t;
      else
        acc -= t;
    }
    sign = -sign;
  }
  return acc;
}

namespace {

void validate_expansion(const LabeledMatrix& a, const IndexSubset& k_rows) {
  if (!a.is_square()) throw NonSquareMatrix();
  require_subset_of(a.rows(), k_rows);
}

}  // namespace

int laplace_outer_sign(const LabeledMatrix& a, const IndexSubset& k_rows, SignVariant variant) {
  validate_expansion(a, k_rows);
  return sign_from_sum(a.rows(), IndexSubset::full(a.rows()), k_rows, variant);
}

RingValue laplace_det(const LabeledMatrix& a, const IndexSubset& k_rows, SignVariant variant,
                      MinorForm form, ExecMode mode) {
  validate_expansion(a, k_rows);
  const int outer = laplace_outer_sign(a, k_rows, variant);
  const IndexSubset k_comp = complement(a.rows(), k_rows);
  const IndexSubset full_cols = IndexSubset::full(a.cols());
  const auto column_subsets = k_subsets(a.cols(), k_rows.size());

  std::vector<RingValue> vals(column_subsets.size(), a.ring().zero());
  parallel_for(
      column_subsets.size(),
      [&](std::size_t i) {
        const IndexSubset& l_cols = column_subsets[i];
        RingValue m1 = det_minor(submatrix_keep(a, k_rows, l_cols));
        if (m1.is_zero()) return;
        RingValue m2 = form == MinorForm::keep
                           ? det_minor(submatrix_keep(a, k_comp, complement(a.cols(), l_cols)))
                           : det_minor(submatrix_drop(a, k_rows, l_cols));
        int s = sign_from_sum(a.cols(), full_cols, l_cols, variant);
        RingValue t = m1 * m2;
        vals[i] = s > 0 ? std::move(t) : -t;
      },
      mode);

  RingValue sum = a.ring().zero();
  for (const auto& v : vals) sum += v;
  return outer > 0 ? sum : -sum;
}

std::vector<ExpansionTerm> laplace_terms(const LabeledMatrix& a, const IndexSubset& k_rows,
                                         SignVariant variant, MinorForm form) {
  validate_expansion(a, k_rows);
  const IndexSubset k_comp = complement(a.rows(), k_rows);
  const IndexSubset full_cols = IndexSubset::full(a.cols());

  std::vector<ExpansionTerm> terms;
  KSubsetStream stream(full_cols, k_rows.size());
  while (auto l_cols = stream.next()) {
    ExpansionTerm t;
    t.variable_subset = *l_cols;
    t.variable_labels = l_cols->labels(a.cols());
    t.sign = sign_from_sum(a.cols(), full_cols, *l_cols, variant);
    t.minor_first = det_minor(submatrix_keep(a, k_rows, *l_cols));
    t.minor_second = form == MinorForm::keep
                         ? det_minor(submatrix_keep(a, k_comp, complement(a.cols(), *l_cols)))
                         : det_minor(submatrix_drop(a, k_rows, *l_cols));
    RingValue p = t.minor_first * t.minor_second;
    t.product = t.sign > 0 ? std::move(p) : -p;
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace csmlap
