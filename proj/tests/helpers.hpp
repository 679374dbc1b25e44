#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "csmlap/csm.hpp"
#include "csmlap/matrix.hpp"

namespace csmlap::testutil {

// Square integer matrix with natural labels 1..n.
inline LabeledMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  Ring ring = Ring::integers();
  std::size_t n = rows.size();
  std::vector<RingValue> entries;
  for (const auto& row : rows)
    for (long x : row) entries.push_back(ring.from_int(x));
  return LabeledMatrix(ring, OrderedIndexSet::naturals(n),
                       OrderedIndexSet::naturals(rows.empty() ? 0 : rows.front().size()),
                       std::move(entries));
}

inline LabeledMatrix ring_matrix(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  std::size_t n = rows.size();
  std::vector<RingValue> entries;
  for (const auto& row : rows)
    for (long x : row) entries.push_back(ring.from_int(x));
  return LabeledMatrix(ring, OrderedIndexSet::naturals(n),
                       OrderedIndexSet::naturals(rows.empty() ? 0 : rows.front().size()),
                       std::move(entries));
}

inline std::string entry_name(std::size_t i, std::size_t j) {
  return "a" + std::to_string(i) + std::to_string(j);
}

// n x n matrix of distinct indeterminates a11..ann (n <= 9).
inline LabeledMatrix symbolic_matrix(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) vars.push_back(entry_name(i, j));
  Ring ring = Ring::polynomials(vars);
  std::vector<RingValue> entries;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) entries.push_back(ring.indeterminate(entry_name(i, j)));
  return LabeledMatrix(ring, OrderedIndexSet::naturals(n), OrderedIndexSet::naturals(n),
                       std::move(entries));
}

inline IndexSubset subset(const OrderedIndexSet& parent, const std::vector<std::int64_t>& labels) {
  std::vector<Label> ls;
  for (auto x : labels) ls.push_back(Label::of(x));
  return IndexSubset::of_labels(parent, ls);
}

inline CsmPartition partition(const LabeledMatrix& a, const std::vector<std::int64_t>& f,
                              const std::vector<std::int64_t>& g,
                              const std::vector<std::int64_t>& i) {
  return CsmPartition::of_subsets(a, subset(a.rows(), f), subset(a.cols(), g),
                                  subset(a.rows(), i));
}

}  // namespace csmlap::testutil
