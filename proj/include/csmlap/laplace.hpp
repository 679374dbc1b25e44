#pragma once

#include <vector>

#include "csmlap/matrix.hpp"

namespace csmlap {

// One summand of an expansion: the variable column subset (L for the
// standard expansion, J for the common-submatrix one), its inner sign and
// the two minor determinants. product = sign * minor_first * minor_second;
// the caller applies the outer sign of the whole sum.
struct ExpansionTerm {
  IndexSubset variable_subset;
  std::vector<Label> variable_labels;
  int sign = 1;
  RingValue minor_first;
  RingValue minor_second;
  RingValue product;
};

// Which route computes the second minor: `keep` reads A[K'|L'] directly,
// `drop` reads A(K|L). Both denote the same submatrix; keeping the two
// routes separate lets tests cross-check the index bookkeeping.
enum class MinorForm { keep, drop };

// Determinant along the expansion path: permutation sum up to 4x4, single
// first-row expansion above. Independent of det_leibniz for sizes > 4.
RingValue det_minor(const LabeledMatrix& a);

// Standard Laplace expansion with a fixed row subset K: outer sign from K,
// a sum over all column subsets L of size |K| with inner signs from L, of
// det(A[K|L]) * det(A[K'|L']). The position and rank sign variants agree.
int laplace_outer_sign(const LabeledMatrix& a, const IndexSubset& k_rows, SignVariant variant);
RingValue laplace_det(const LabeledMatrix& a, const IndexSubset& k_rows, SignVariant variant,
                      MinorForm form = MinorForm::keep, ExecMode mode = ExecMode::automatic);
// One term per L in k_subsets order; outer_sign * sum of products equals
// laplace_det exactly. Zero terms are included.
std::vector<ExpansionTerm> laplace_terms(const LabeledMatrix& a, const IndexSubset& k_rows,
                                         SignVariant variant, MinorForm form = MinorForm::keep);

}  // namespace csmlap
