#pragma once

#include <cstddef>
#include <vector>

#include "csmlap/matrix.hpp"

namespace csmlap {

struct DesnanotJacobiResult {
  RingValue lhs;  // det(A(1,n|1,n)) * det(A)
  RingValue rhs;  // det(A(1|1)) det(A(n|n)) - det(A(n|1)) det(A(1|n))
  bool equal = false;
};

// Both sides of the corner-minor identity, by the permutation oracle.
// Requires n >= 2; first/last rows and columns are taken by position.
DesnanotJacobiResult desnanot_jacobi(const LabeledMatrix& a);

// A zero interior divisor at this position forced the k x k minor to be
// recomputed by Laplace expansion instead of by condensation.
struct FallbackEvent {
  std::size_t minor_size = 0;  // k
  std::size_t row = 0;         // offset of the affected minor
  std::size_t col = 0;
};

// layers[k-1] holds every k x k contiguous minor of A: entry (i,j) is the
// determinant of the k x k submatrix at offset (i,j).
struct CondensationTrace {
  std::vector<LabeledMatrix> layers;
  std::vector<FallbackEvent> fallback_events;
};

// Iterated corner-minor condensation over an integral domain. Every
// division is checked exact; a zero interior divisor triggers a local
// Laplace fallback for the one affected minor, so the result is total and
// always equals the true determinant.
RingValue det_condensation(const LabeledMatrix& a, CondensationTrace* trace = nullptr,
                           ExecMode mode = ExecMode::automatic);

}  // namespace csmlap
