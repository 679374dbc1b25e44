#include "csmlap/expand.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace csmlap {

namespace {

// All n! permutation products of a small square matrix, in lexicographic
// order of the column choices, as (sign, product) pairs. Zero products are
// included so enumeration order is input-independent.
void permutation_products(const LabeledMatrix& m, std::size_t row, std::vector<std::size_t>& cols,
                          std::vector<bool>& used, int sign, const RingValue& partial,
                          std::vector<std::pair<int, RingValue>>& out) {
  const std::size_t n = m.row_count();
  if (row == n) {
    out.emplace_back(sign, partial);
    return;
  }
  int flip = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (used[c]) continue;
    used[c] = true;
    cols.push_back(c);
    permutation_products(m, row + 1, cols, used, sign * flip, partial * m.at(row, c), out);
    cols.pop_back();
    used[c] = false;
    flip = -flip;
  }
}

std::vector<std::pair<int, RingValue>> permutation_products(const LabeledMatrix& m) {
  if (!m.is_square()) throw NonSquareMatrix();
  if (m.row_count() > kLeibnizCap) throw LeibnizCapExceeded(m.row_count());
  std::vector<std::pair<int, RingValue>> out;
  std::vector<std::size_t> cols;
  std::vector<bool> used(m.row_count(), false);
  permutation_products(m, 0, cols, used, 1, m.ring().one(), out);
  return out;
}

}  // namespace

CancellationReport expansion_report(const LabeledMatrix& a, const CsmPartition& p,
                                    SignVariant variant) {
  if (a.ring().kind() != RingKind::polynomial)
    throw std::invalid_argument("monomial cancellation needs a polynomial-ring matrix");
  p.validate(a.rows(), a.cols());

  const IndexSubset non_common_cols = complement(a.cols(), p.common_cols);
  const IndexSubset rows_first = subset_union(p.common_rows, p.first_minor_rows);
  const IndexSubset rows_second = subset_union(p.common_rows, p.second_minor_rows);
  const int outer = csm_outer_sign(a, p, variant);

  CancellationReport r;
  r.rhs_sum = a.ring().zero();

  std::size_t term_index = 0;
  KSubsetStream stream(non_common_cols, p.first_minor_rows.size());
  while (auto j_cols = stream.next()) {
    const IndexSubset j_comp = subset_difference(non_common_cols, *j_cols);
    const int inner = sign_from_sum(a.cols(), non_common_cols, *j_cols, variant);
    const auto labels = j_cols->labels(a.cols());
    const auto first =
        permutation_products(submatrix_keep(a, rows_first, subset_union(p.common_cols, *j_cols)));
    const auto second =
        permutation_products(submatrix_keep(a, rows_second, subset_union(p.common_cols, j_comp)));
    for (const auto& [s1, v1] : first) {
      for (const auto& [s2, v2] : second) {
        ExpandedProduct ep;
        ep.term_index = term_index;
        ep.variable_labels = labels;
        ep.sign = outer * inner * s1 * s2;
        ep.value = v1 * v2;
        if (!ep.value.is_zero()) {
          if (ep.sign > 0)
            r.rhs_sum += ep.value;
          else
            r.rhs_sum -= ep.value;
        }
        r.products.push_back(std::move(ep));
      }
    }
    ++term_index;
  }

  // pair off equal values of opposite sign, earliest first
  std::map<std::string, std::pair<std::deque<std::size_t>, std::deque<std::size_t>>> by_value;
  for (std::size_t i = 0; i < r.products.size(); ++i) {
    const auto& ep = r.products[i];
    if (ep.value.is_zero()) continue;
    auto& [pos, neg] = by_value[ep.value.str()];
    (ep.sign > 0 ? pos : neg).push_back(i);
  }
  for (auto& [key, queues] : by_value) {
    auto& [pos, neg] = queues;
    while (!pos.empty() && !neg.empty()) {
      std::size_t x = pos.front(), y = neg.front();
      pos.pop_front();
      neg.pop_front();
      r.canceling_pairs.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(r.canceling_pairs.begin(), r.canceling_pairs.end());

  r.lhs = csm_lhs(a, p.common_rows, p.common_cols);
  r.equal = (r.rhs_sum == r.lhs);

  if (p.common_rows.size() == 1) {
    RingValue factor = det_leibniz(submatrix_keep(a, p.common_rows, p.common_cols));
    if (!factor.is_zero()) {
      r.common_factor = factor;
      try {
        r.cofactor = exact_div(r.rhs_sum, factor);
      } catch (const NonExactDivision&) {
        // identity violations leave the factor without a cofactor
      }
    }
  }
  return r;
}

namespace {

std::string label_list(const std::vector<Label>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ',';
    out += ls[i].str();
  }
  return out + "}";
}

}  // namespace

std::string cancellation_text(const CancellationReport& r) {
  std::ostringstream os;
  os << "expanded products (" << r.products.size() << "):\n";
  for (std::size_t i = 0; i < r.products.size(); ++i) {
    const auto& ep = r.products[i];
    os << "  #" << i << "  term=" << ep.term_index << "  J=" << label_list(ep.variable_labels)
       << "  " << (ep.sign > 0 ? '+' : '-') << ep.value.str() << '\n';
  }
  os << "canceling pairs (" << r.canceling_pairs.size() << "):\n";
  for (const auto& [x, y] : r.canceling_pairs) os << "  #" << x << " cancels #" << y << '\n';
  os << "rhs sum = " << r.rhs_sum.str() << '\n';
  os << "lhs     = " << r.lhs.str() << '\n';
  if (r.common_factor) {
    os << "common factor = " << r.common_factor->str() << '\n';
    if (r.cofactor) os << "cofactor      = " << r.cofactor->str() << '\n';
  }
  os << "verdict: " << (r.equal ? "IDENTITY HOLDS" : "IDENTITY VIOLATED") << '\n';
  return os.str();
}

std::string cancellation_json(const CancellationReport& r) {
  nlohmann::json j;
  j["products"] = nlohmann::json::array();
  for (const auto& ep : r.products) {
    nlohmann::json je;
    je["term"] = ep.term_index;
    je["cols"] = nlohmann::json::array();
    for (const auto& l : ep.variable_labels) je["cols"].push_back(l.str());
    je["sign"] = ep.sign;
    je["value"] = ep.value.str();
    j["products"].push_back(std::move(je));
  }
  j["canceling_pairs"] = nlohmann::json::array();
  for (const auto& [x, y] : r.canceling_pairs)
    j["canceling_pairs"].push_back(nlohmann::json::array({x, y}));
  j["rhs_sum"] = r.rhs_sum.str();
  j["lhs"] = r.lhs.str();
  j["equal"] = r.equal;
  j["common_factor"] = r.common_factor ? nlohmann::json(r.common_factor->str()) : nlohmann::json();
  j["cofactor"] = r.cofactor ? nlohmann::json(r.cofactor->str()) : nlohmann::json();
  return j.dump(2);
}

}  // namespace csmlap
