#include "csmlap/condensation.hpp"

#include "csmlap/laplace.hpp"
#include "csmlap/ring.hpp"

namespace csmlap {

DesnanotJacobiResult desnanot_jacobi(const LabeledMatrix& a) {
  if (!a.is_square()) throw NonSquareMatrix();
  const std::size_t n = a.row_count();
  if (n < 2) throw std::invalid_argument("corner-minor identity needs n >= 2");
  const IndexSubset first = IndexSubset::range(0, 1);
  const IndexSubset last = IndexSubset::range(n - 1, 1);
  const IndexSubset both = subset_union(first, last);

  DesnanotJacobiResult r;
  r.lhs = det_leibniz(submatrix_drop(a, both, both)) * det_leibniz(a);
  r.rhs = det_leibniz(submatrix_drop(a, first, first)) * det_leibniz(submatrix_drop(a, last, last)) -
          det_leibniz(submatrix_drop(a, last, first)) * det_leibniz(submatrix_drop(a, first, last));
  r.equal = (r.lhs == r.rhs);
  return r;
}

RingValue det_condensation(const LabeledMatrix& a, CondensationTrace* trace, ExecMode mode) {
  if (!a.is_square()) throw NonSquareMatrix();
  if (!a.ring().is_integral_domain())
    throw NotIntegralDomain("condensation needs an integral domain, got " + a.ring().spec());
  const std::size_t n = a.row_count();
  if (trace) {
    trace->layers.clear();
    trace->fallback_events.clear();
  }
  if (n == 0) return a.ring().one();
  if (trace) trace->layers.push_back(a);
  if (n == 1) return a.at(0, 0);

  LabeledMatrix interior = a;  // (k-2)-layer; unused while k == 2
  LabeledMatrix prev = a;      // (k-1)-layer
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t dim = n - k + 1;
    LabeledMatrix next(a.ring(), OrderedIndexSet::naturals(dim), OrderedIndexSet::naturals(dim));
    std::vector<unsigned char> fell_back(dim * dim, 0);
    parallel_for(
        dim * dim,
        [&](std::size_t idx) {
          const std::size_t i = idx / dim;
          const std::size_t j = idx % dim;
          RingValue cross = prev.at(i, j) * prev.at(i + 1, j + 1) -
                            prev.at(i + 1, j) * prev.at(i, j + 1);
          if (k == 2) {
            next.at(i, j) = std::move(cross);
            return;
          }
          const RingValue& divisor = interior.at(i + 1, j + 1);
          if (divisor.is_zero()) {
            next.at(i, j) = det_minor(
                submatrix_keep(a, IndexSubset::range(i, k), IndexSubset::range(j, k)));
            fell_back[idx] = 1;
            return;
          }
          next.at(i, j) = exact_div(cross, divisor);
        },
        mode);
    if (trace) {
      for (std::size_t idx = 0; idx < fell_back.size(); ++idx)
        if (fell_back[idx])
          trace->fallback_events.push_back(FallbackEvent{k, idx / dim, idx % dim});
      trace->layers.push_back(next);
    }
    interior = std::move(prev);
    prev = std::move(next);
  }
  return prev.at(0, 0);
}

}  // namespace csmlap
