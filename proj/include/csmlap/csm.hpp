#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csmlap/laplace.hpp"

namespace csmlap {

struct InvalidPartition : std::invalid_argument {
  explicit InvalidPartition(const std::string& what) : std::invalid_argument(what) {}
};

// Ordered partition driving the common-submatrix expansion: the rows and
// columns of the common block (same size), plus a split of the remaining
// rows between the two minors of every term. The column side of the split
// (J, J') varies per term and is never stored.
struct CsmPartition {
  IndexSubset common_rows;       // F
  IndexSubset common_cols;       // G
  IndexSubset first_minor_rows;  // I: joins the common block in the first minor
  IndexSubset second_minor_rows; // I': joins it in the second minor

  // second_minor_rows = rows \ common_rows \ first_minor_rows.
  static CsmPartition of_labels(const LabeledMatrix& a, const std::vector<Label>& common_rows,
                                const std::vector<Label>& common_cols,
                                const std::vector<Label>& first_minor_rows);
  static CsmPartition of_subsets(const LabeledMatrix& a, IndexSubset common_rows,
                                 IndexSubset common_cols, IndexSubset first_minor_rows);

  void validate(const OrderedIndexSet& rows, const OrderedIndexSet& cols) const;
};

// Result of checking det(common block) * det(A) against the restricted
// expansion. The two initialized-matrix cross-checks compare det of the
// enlarged matrix (by the permutation oracle) against its collapsed sum
// form and its eliminated product form; they run only while the enlarged
// matrix fits under the oracle cap.
struct CsmReport {
  RingValue lhs;
  RingValue rhs;
  int outer_sign = 1;
  std::vector<ExpansionTerm> terms;
  bool equal = false;
  std::optional<bool> initialized_sum_ok;
  std::optional<bool> initialized_product_ok;

  bool all_ok() const {
    return equal && initialized_sum_ok.value_or(true) && initialized_product_ok.value_or(true);
  }
};

// det(A[F|G]) * det(A), both by the permutation oracle.
RingValue csm_lhs(const LabeledMatrix& a, const IndexSubset& common_rows,
                  const IndexSubset& common_cols);

// The restricted expansion: outer sign from the first-minor rows relative
// to the non-common rows, then a sum over all column subsets J of the
// non-common columns with |J| = |I|, of the signed product
// det(A[F u I | G u J]) * det(A[F u I' | G u J']).
int csm_outer_sign(const LabeledMatrix& a, const CsmPartition& p, SignVariant variant);
RingValue csm_rhs(const LabeledMatrix& a, const CsmPartition& p, SignVariant variant,
                  ExecMode mode = ExecMode::automatic);
// Same value through the drop-notation minors det(A(I'|J')) * det(A(I|J)).
RingValue csm_rhs_complement(const LabeledMatrix& a, const CsmPartition& p, SignVariant variant,
                             ExecMode mode = ExecMode::automatic);
std::vector<ExpansionTerm> csm_terms(const LabeledMatrix& a, const CsmPartition& p,
                                     SignVariant variant, MinorForm form = MinorForm::keep);

// Enlarged matrix over the extended orders in which the common rows and
// columns are duplicated: row f+ repeats row f, column g+ repeats column g.
LabeledMatrix build_doubled(const LabeledMatrix& a, const IndexSubset& common_rows,
                            const IndexSubset& common_cols);

// The initialized matrix: rows F u I carry the original row with zeros in
// the duplicated columns; rows F+ u I' carry it with zeros in the original
// common columns and the common entries moved into the duplicates.
LabeledMatrix build_initialized(const LabeledMatrix& a, const CsmPartition& p);

// Applies the determinant-preserving cleanup to an initialized matrix:
// column g += column g+ for every duplicated column, then row f+ -= row f
// for every duplicated row. The duplicated rows/columns are derived from
// the successor labels of the input.
LabeledMatrix build_tilde(const LabeledMatrix& initialized);

// The two closed forms the initialized matrix's determinant must equal
// (rank signs): the expansion collapsed to original-matrix minors, and
// +- det(A[F|G]) * det(A) with the product sign below.
RingValue initialized_det_sum_form(const LabeledMatrix& a, const CsmPartition& p);
RingValue initialized_det_product_form(const LabeledMatrix& a, const CsmPartition& p);
int initialized_product_sign(const LabeledMatrix& a, const CsmPartition& p);

CsmReport verify_csm(const LabeledMatrix& a, const CsmPartition& p, SignVariant variant,
                     ExecMode mode = ExecMode::automatic);

// Human-readable block and machine-readable JSON with identical content.
std::string report_text(const CsmReport& r);
std::string report_json(const CsmReport& r);

}  // namespace csmlap
