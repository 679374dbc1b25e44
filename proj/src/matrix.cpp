#include "csmlap/matrix.hpp"

#include <string>
#include <utility>

namespace csmlap {

LeibnizCapExceeded::LeibnizCapExceeded(std::size_t n)
    : std::length_error("permutation-sum determinant capped at " + std::to_string(kLeibnizCap) +
                        "x" + std::to_string(kLeibnizCap) + ", got " + std::to_string(n)) {}

LabeledMatrix::LabeledMatrix(Ring ring, OrderedIndexSet rows, OrderedIndexSet cols)
    : ring_(std::move(ring)), rows_(std::move(rows)), cols_(std::move(cols)) {
  entries_.assign(rows_.size() * cols_.size(), ring_.zero());
}

LabeledMatrix::LabeledMatrix(Ring ring, OrderedIndexSet rows, OrderedIndexSet cols,
                             std::vector<RingValue> entries)
    : ring_(std::move(ring)), rows_(std::move(rows)), cols_(std::move(cols)),
      entries_(std::move(entries)) {
  if (entries_.size() != rows_.size() * cols_.size())
    throw std::invalid_argument("entry count does not match matrix shape");
  for (const auto& e : entries_)
    if (e.ring() != ring_) throw RingMismatch();
}

LabeledMatrix LabeledMatrix::identity(const Ring& ring, const OrderedIndexSet& labels) {
  LabeledMatrix m(ring, labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = ring.one();
  return m;
}

const RingValue& LabeledMatrix::at(std::size_t r, std::size_t c) const {
  return entries_[r * cols_.size() + c];
}

RingValue& LabeledMatrix::at(std::size_t r, std::size_t c) {
  return entries_[r * cols_.size() + c];
}

const RingValue& LabeledMatrix::at(const Label& r, const Label& c) const {
  return at(rows_.require(r), cols_.require(c));
}

bool operator==(const LabeledMatrix& a, const LabeledMatrix& b) {
  if (a.ring_ != b.ring_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  return a.entries_ == b.entries_;
}

LabeledMatrix submatrix(const LabeledMatrix& a, Pick row_pick, const IndexSubset& row_sel,
                        Pick col_pick, const IndexSubset& col_sel) {
  require_subset_of(a.rows(), row_sel);
  require_subset_of(a.cols(), col_sel);
  IndexSubset rk = row_pick == Pick::keep ? row_sel : complement(a.rows(), row_sel);
  IndexSubset ck = col_pick == Pick::keep ? col_sel : complement(a.cols(), col_sel);
  OrderedIndexSet rows(rk.labels(a.rows()));
  OrderedIndexSet cols(ck.labels(a.cols()));
  std::vector<RingValue> entries;
  entries.reserve(rk.size() * ck.size());
  for (auto r : rk.positions())
    for (auto c : ck.positions()) entries.push_back(a.at(r, c));
  return LabeledMatrix(a.ring(), std::move(rows), std::move(cols), std::move(entries));
}

LabeledMatrix submatrix_keep(const LabeledMatrix& a, const IndexSubset& r, const IndexSubset& c) {
  return submatrix(a, Pick::keep, r, Pick::keep, c);
}

LabeledMatrix submatrix_drop(const LabeledMatrix& a, const IndexSubset& r, const IndexSubset& c) {
  return submatrix(a, Pick::drop, r, Pick::drop, c);
}

LabeledMatrix transpose(const LabeledMatrix& a) {
  std::vector<RingValue> entries;
  entries.reserve(a.row_count() * a.col_count());
  for (std::size_t c = 0; c < a.col_count(); ++c)
    for (std::size_t r = 0; r < a.row_count(); ++r) entries.push_back(a.at(r, c));
  return LabeledMatrix(a.ring(), a.cols(), a.rows(), std::move(entries));
}

LabeledMatrix row_op_sub(const LabeledMatrix& a, const Label& i, const Label& j) {
  std::size_t pi = a.rows().require(i);
  std::size_t pj = a.rows().require(j);
  if (pi == pj) throw std::invalid_argument("row operation needs two distinct rows");
  LabeledMatrix out = a;
  for (std::size_t c = 0; c < a.col_count(); ++c) out.at(pi, c) -= a.at(pj, c);
  return out;
}

LabeledMatrix col_op_add(const LabeledMatrix& a, const Label& i, const Label& j) {
  std::size_t pi = a.cols().require(i);
  std::size_t pj = a.cols().require(j);
  if (pi == pj) throw std::invalid_argument("column operation needs two distinct columns");
  LabeledMatrix out = a;
  for (std::size_t r = 0; r < a.row_count(); ++r) out.at(r, pi) += a.at(r, pj);
  return out;
}

namespace {

// Walks rows top-down, extending a partial product one entry at a time and
// flipping the sign once per inversion (the chosen column's index among the
// still-unused columns). Branches through zero entries are pruned; pruning
// only drops zero addends, so the sum is unchanged.
void leibniz_rec(const LabeledMatrix& a, std::size_t row, std::uint32_t used, int sign,
                 const RingValue& partial, RingValue& acc) {
  const std::size_t n = a.row_count();
  if (row == n) {
    if (sign > 0)
      acc += partial;
    else
      acc -= partial;
    return;
  }
  int flip = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used & (std::uint32_t{1} << c)) continue;
    const RingValue& e = a.at(row, c);
    if (!e.is_zero())
      leibniz_rec(a, row + 1, used | (std::uint32_t{1} << c), sign * flip, partial * e, acc);
    flip = -flip;
  }
}

void require_leibniz_ok(const LabeledMatrix& a) {
  if (!a.is_square()) throw NonSquareMatrix();
  if (a.row_count() > kLeibnizCap) throw LeibnizCapExceeded(a.row_count());
}

}  // namespace

RingValue det_leibniz_serial(const LabeledMatrix& a) {
  require_leibniz_ok(a);
  if (a.row_count() == 0) return a.ring().one();
  RingValue acc = a.ring().zero();
  leibniz_rec(a, 0, 0, 1, a.ring().one(), acc);
  return acc;
}

RingValue det_leibniz_parallel(const LabeledMatrix& a) {
  require_leibniz_ok(a);
  const std::size_t n = a.row_count();
  if (n == 0) return a.ring().one();
  std::vector<RingValue> block(n, a.ring().zero());
  parallel_for(n, [&](std::size_t c) {
    const RingValue& e = a.at(0, c);
    if (e.is_zero()) return;
    RingValue acc = a.ring().zero();
    leibniz_rec(a, 1, std::uint32_t{1} << c, (c % 2 == 0) ? 1 : -1, e, acc);
    block[c] = std::move(acc);
  });
  RingValue sum = a.ring().zero();
  for (auto& b : block) sum += b;
  return sum;
}

RingValue det_leibniz(const LabeledMatrix& a, ExecMode mode) {
  require_leibniz_ok(a);
  switch (mode) {
    case ExecMode::serial:
      return det_leibniz_serial(a);
    case ExecMode::parallel:
      return det_leibniz_parallel(a);
    case ExecMode::automatic:
      return (has_openmp() && worker_count() > 1 && a.row_count() >= 7)
                 ? det_leibniz_parallel(a)
                 : det_leibniz_serial(a);
  }
  return det_leibniz_serial(a);
}

}  // namespace csmlap
