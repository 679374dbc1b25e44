#include "csmlap/index_set.hpp"

#include <algorithm>
#include <cctype>

namespace csmlap {

std::string Label::str() const {
  std::string out;
  if (std::holds_alternative<std::int64_t>(base)) {
    out = std::to_string(std::get<std::int64_t>(base));
  } else {
    out = '"' + std::get<std::string>(base) + '"';
  }
  if (successor) out += '+';
  return out;
}

Label parse_label(const std::string& token) {
  std::string t = token;
  if (t.empty()) throw std::invalid_argument("empty label token");
  bool successor = false;
  if (t.size() > 1 && t.back() == '+') {
    successor = true;
    t.pop_back();
  }
  if (t.size() >= 2 && t.front() == '"' && t.back() == '"') {
    std::string inner = t.substr(1, t.size() - 2);
    if (inner.find('"') != std::string::npos)
      throw std::invalid_argument("bad label token: '" + token + "'");
    return Label{std::move(inner), successor};
  }
  bool numeric = true;
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) numeric = false;
  for (; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) numeric = false;
  if (numeric) return Label{static_cast<std::int64_t>(std::stoll(t)), successor};
  if (t.find('"') != std::string::npos || t.find_first_of(" \t") != std::string::npos)
    throw std::invalid_argument("bad label token: '" + token + "'");
  return Label{std::move(t), successor};
}

OrderedIndexSet::OrderedIndexSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate label: " + labels_[i].str());
}

OrderedIndexSet OrderedIndexSet::naturals(std::size_t n) {
  std::vector<Label> ls;
  ls.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) ls.push_back(Label::of(static_cast<std::int64_t>(i)));
  return OrderedIndexSet(std::move(ls));
}

const Label& OrderedIndexSet::at(std::size_t pos) const {
  if (pos >= labels_.size()) throw std::out_of_range("label position out of range");
  return labels_[pos];
}

std::optional<std::size_t> OrderedIndexSet::find(const Label& l) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == l) return i;
  return std::nullopt;
}

std::size_t OrderedIndexSet::require(const Label& l) const {
  auto p = find(l);
  if (!p) throw std::out_of_range("label not in index set: " + l.str());
  return *p;
}

bool OrderedIndexSet::has_successors() const {
  return std::any_of(labels_.begin(), labels_.end(), [](const Label& l) { return l.successor; });
}

IndexSubset IndexSubset::of_positions(std::vector<std::size_t> positions) {
  for (std::size_t i = 1; i < positions.size(); ++i)
    if (positions[i - 1] >= positions[i])
      throw std::invalid_argument("subset positions must be strictly increasing");
  IndexSubset s;
  s.positions_ = std::move(positions);
  return s;
}

IndexSubset IndexSubset::of_labels(const OrderedIndexSet& parent, const std::vector<Label>& labels) {
  std::vector<std::size_t> ps;
  ps.reserve(labels.size());
  for (const auto& l : labels) ps.push_back(parent.require(l));
  std::sort(ps.begin(), ps.end());
  for (std::size_t i = 1; i < ps.size(); ++i)
    if (ps[i - 1] == ps[i])
      throw std::invalid_argument("duplicate label in subset: " + parent.at(ps[i]).str());
  IndexSubset s;
  s.positions_ = std::move(ps);
  return s;
}

IndexSubset IndexSubset::full(const OrderedIndexSet& parent) {
  return range(0, parent.size());
}

IndexSubset IndexSubset::range(std::size_t first, std::size_t count) {
  IndexSubset s;
  s.positions_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) s.positions_.push_back(first + i);
  return s;
}

std::size_t IndexSubset::max_position() const {
  if (positions_.empty()) throw std::out_of_range("max_position of empty subset");
  return positions_.back();
}

bool IndexSubset::contains(std::size_t pos) const {
  return std::binary_search(positions_.begin(), positions_.end(), pos);
}

std::vector<Label> IndexSubset::labels(const OrderedIndexSet& parent) const {
  require_subset_of(parent, *this);
  std::vector<Label> ls;
  ls.reserve(positions_.size());
  for (auto p : positions_) ls.push_back(parent.at(p));
  return ls;
}

bool disjoint(const IndexSubset& a, const IndexSubset& b) {
  std::size_t i = 0, j = 0;
  const auto& pa = a.positions();
  const auto& pb = b.positions();
  while (i < pa.size() && j < pb.size()) {
    if (pa[i] == pb[j]) return false;
    if (pa[i] < pb[j])
      ++i;
    else
      ++j;
  }
  return true;
}

IndexSubset subset_union(const IndexSubset& a, const IndexSubset& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.positions().begin(), a.positions().end(), b.positions().begin(),
                 b.positions().end(), std::back_inserter(out));
  return IndexSubset::of_positions(std::move(out));
}

IndexSubset subset_difference(const IndexSubset& a, const IndexSubset& b) {
  std::vector<std::size_t> out;
  out.reserve(a.size());
  std::set_difference(a.positions().begin(), a.positions().end(), b.positions().begin(),
                      b.positions().end(), std::back_inserter(out));
  return IndexSubset::of_positions(std::move(out));
}

IndexSubset complement(const OrderedIndexSet& parent, const IndexSubset& s) {
  require_subset_of(parent, s);
  return subset_difference(IndexSubset::full(parent), s);
}

void require_subset_of(const OrderedIndexSet& parent, const IndexSubset& s) {
  if (!s.empty() && s.max_position() >= parent.size())
    throw std::out_of_range("subset position out of range");
}

std::size_t position_at(const IndexSubset& rel, std::size_t pos) {
  const auto& ps = rel.positions();
  return static_cast<std::size_t>(std::upper_bound(ps.begin(), ps.end(), pos) - ps.begin());
}

std::size_t rank_at(const IndexSubset& rel, std::size_t pos) {
  const auto& ps = rel.positions();
  return static_cast<std::size_t>(std::lower_bound(ps.begin(), ps.end(), pos) - ps.begin());
}

std::size_t position(const OrderedIndexSet& set, const IndexSubset& rel, const Label& x) {
  require_subset_of(set, rel);
  return position_at(rel, set.require(x));
}

std::size_t rank(const OrderedIndexSet& set, const IndexSubset& rel, const Label& x) {
  require_subset_of(set, rel);
  return rank_at(rel, set.require(x));
}

int sign_from_sum(const OrderedIndexSet& set, const IndexSubset& rel, const IndexSubset& over,
                  SignVariant variant) {
  require_subset_of(set, rel);
  require_subset_of(set, over);
  std::size_t sum = 0;
  for (auto p : over.positions())
    sum += variant == SignVariant::rank ? rank_at(rel, p) : position_at(rel, p);
  return (sum % 2 == 0) ? 1 : -1;
}

OrderedIndexSet extend_order(const OrderedIndexSet& base, const IndexSubset& marked) {
  if (base.has_successors()) throw std::invalid_argument("order already carries successor labels");
  require_subset_of(base, marked);
  std::vector<Label> out;
  out.reserve(base.size() + marked.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(base.at(i));
    if (marked.contains(i)) out.push_back(base.at(i).plus());
  }
  return OrderedIndexSet(std::move(out));
}

KSubsetStream::KSubsetStream(IndexSubset within, std::size_t k)
    : base_(within.positions()), k_(k) {
  if (k_ > base_.size()) throw std::out_of_range("k exceeds subset size");
  idx_.resize(k_);
  for (std::size_t i = 0; i < k_; ++i) idx_[i] = i;
}

std::optional<IndexSubset> KSubsetStream::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
  } else {
    // advance idx_ to the next k-combination of {0..base_.size()-1}
    std::size_t n = base_.size();
    std::size_t i = k_;
    while (i > 0) {
      --i;
      if (idx_[i] != i + n - k_) {
        ++idx_[i];
        for (std::size_t j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
        break;
      }
      if (i == 0) {
        done_ = true;
        return std::nullopt;
      }
    }
    if (k_ == 0) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<std::size_t> ps;
  ps.reserve(k_);
  for (auto i : idx_) ps.push_back(base_[i]);
  return IndexSubset::of_positions(std::move(ps));
}

std::vector<IndexSubset> k_subsets(const IndexSubset& within, std::size_t k) {
  std::vector<IndexSubset> out;
  KSubsetStream stream(within, k);
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

std::vector<IndexSubset> k_subsets(const OrderedIndexSet& set, std::size_t k) {
  return k_subsets(IndexSubset::full(set), k);
}

}  // namespace csmlap
