#pragma once

#include <stdexcept>
#include <vector>

#include "csmlap/index_set.hpp"
#include "csmlap/parallel.hpp"
#include "csmlap/ring.hpp"

namespace csmlap {

struct NonSquareMatrix : std::invalid_argument {
  NonSquareMatrix() : std::invalid_argument("matrix is not square") {}
};

struct LeibnizCapExceeded : std::length_error {
  explicit LeibnizCapExceeded(std::size_t n);
};

// Dense matrix whose rows and columns are addressed by labels from two
// ordered index sets. Entries all live in one ring context. Matrices are
// treated as immutable values; transformation helpers return new matrices.
class LabeledMatrix {
 public:
  LabeledMatrix(Ring ring, OrderedIndexSet rows, OrderedIndexSet cols);
  LabeledMatrix(Ring ring, OrderedIndexSet rows, OrderedIndexSet cols,
                std::vector<RingValue> entries);  // row-major

  static LabeledMatrix identity(const Ring& ring, const OrderedIndexSet& labels);

  const Ring& ring() const { return ring_; }
  const OrderedIndexSet& rows() const { return rows_; }
  const OrderedIndexSet& cols() const { return cols_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }
  bool is_square() const { return rows_.size() == cols_.size(); }

  const RingValue& at(std::size_t r, std::size_t c) const;
  RingValue& at(std::size_t r, std::size_t c);
  const RingValue& at(const Label& r, const Label& c) const;

  friend bool operator==(const LabeledMatrix& a, const LabeledMatrix& b);
  friend bool operator!=(const LabeledMatrix& a, const LabeledMatrix& b) { return !(a == b); }

 private:
  Ring ring_;
  OrderedIndexSet rows_;
  OrderedIndexSet cols_;
  std::vector<RingValue> entries_;
};

enum class Pick { keep, drop };

// The four submatrix notations: keep/keep is A[X|Y], drop/drop is A(X|Y),
// and the mixed forms keep/drop, drop/keep. Kept labels stay in order.
LabeledMatrix submatrix(const LabeledMatrix& a, Pick row_pick, const IndexSubset& row_sel,
                        Pick col_pick, const IndexSubset& col_sel);
LabeledMatrix submatrix_keep(const LabeledMatrix& a, const IndexSubset& r, const IndexSubset& c);
LabeledMatrix submatrix_drop(const LabeledMatrix& a, const IndexSubset& r, const IndexSubset& c);

LabeledMatrix transpose(const LabeledMatrix& a);

// Type II elementary operations; both preserve determinants of square
// matrices. row_op_sub replaces row i by (row i - row j); col_op_add
// replaces column i by (column i + column j).
LabeledMatrix row_op_sub(const LabeledMatrix& a, const Label& i, const Label& j);
LabeledMatrix col_op_add(const LabeledMatrix& a, const Label& i, const Label& j);

// Permutation-sum determinant, the independent oracle all expansion code
// is checked against. Exact; refuses matrices larger than kLeibnizCap.
// det of the 0x0 matrix is 1.
inline constexpr std::size_t kLeibnizCap = 9;

RingValue det_leibniz(const LabeledMatrix& a, ExecMode mode = ExecMode::automatic);
RingValue det_leibniz_serial(const LabeledMatrix& a);
// Partitions the permutation sum over the first-row choice; exact
// accumulation is order-independent, partials are still summed in block
// order so results are bit-identical to the serial path.
RingValue det_leibniz_parallel(const LabeledMatrix& a);

}  // namespace csmlap
