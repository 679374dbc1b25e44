#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csmlap/csm.hpp"

namespace csmlap {

// One fully expanded product of the restricted expansion: for a fixed
// column subset J and one permutation inside each minor, the product of
// the selected entries. sign already folds the outer sign, the inner sign
// of J and both permutation signs; value carries no sign.
struct ExpandedProduct {
  std::size_t term_index = 0;  // which J, in enumeration order
  std::vector<Label> variable_labels;
  int sign = 1;
  RingValue value;
};

// Monomial-level cancellation report for a polynomial-ring matrix: all
// expanded products of the right-hand side, the pairs that cancel exactly,
// the expanded left-hand side, and (for a singleton common block) the
// common factor pulled out of the surviving sum.
struct CancellationReport {
  std::vector<ExpandedProduct> products;
  std::vector<std::pair<std::size_t, std::size_t>> canceling_pairs;  // indices into products
  RingValue rhs_sum;
  RingValue lhs;
  bool equal = false;
  std::optional<RingValue> common_factor;  // det(A[F|G]) when |F| == 1 and it divides
  std::optional<RingValue> cofactor;       // rhs_sum / common_factor
};

// Requires a polynomial-ring matrix; throws std::invalid_argument otherwise.
CancellationReport expansion_report(const LabeledMatrix& a, const CsmPartition& p,
                                    SignVariant variant);

std::string cancellation_text(const CancellationReport& r);
std::string cancellation_json(const CancellationReport& r);

}  // namespace csmlap
