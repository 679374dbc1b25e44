#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace csmlap {

// Row/column label. The base is an integer or a string; `successor` marks
// the label f+ that immediately follows its base f in an extended order.
struct Label {
  std::variant<std::int64_t, std::string> base;
  bool successor = false;

  static Label of(std::int64_t n) { return Label{n, false}; }
  static Label of(std::string s) { return Label{std::move(s), false}; }
  Label plus() const { return Label{base, true}; }
  Label base_label() const { return Label{base, false}; }

  // "2", "2+", "\"row a\"", "\"row a\"+"
  std::string str() const;

  friend bool operator==(const Label&, const Label&) = default;
};

// Inverse of Label::str(); bare words are accepted as string labels.
Label parse_label(const std::string& token);

// A finite linearly ordered label set. The sequence IS the order and labels
// are unique. Successor labels are ordinary labels here; extend_order is the
// producer that guarantees each one sits directly after its base (submatrices
// of an extended-order matrix may keep a successor without its base).
class OrderedIndexSet {
 public:
  OrderedIndexSet() = default;
  explicit OrderedIndexSet(std::vector<Label> labels);

  // {1, 2, ..., n} in natural order.
  static OrderedIndexSet naturals(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const Label& at(std::size_t pos) const;
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<std::size_t> find(const Label& l) const;
  std::size_t require(const Label& l) const;  // throws std::out_of_range
  bool contains(const Label& l) const { return find(l).has_value(); }
  bool has_successors() const;

  friend bool operator==(const OrderedIndexSet&, const OrderedIndexSet&) = default;

 private:
  std::vector<Label> labels_;
};

// Subset of an OrderedIndexSet, stored as strictly increasing positions
// within the parent. Iteration order is always parent order.
class IndexSubset {
 public:
  IndexSubset() = default;
  static IndexSubset of_positions(std::vector<std::size_t> positions);
  static IndexSubset of_labels(const OrderedIndexSet& parent, const std::vector<Label>& labels);
  static IndexSubset full(const OrderedIndexSet& parent);
  static IndexSubset range(std::size_t first, std::size_t count);

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  const std::vector<std::size_t>& positions() const { return positions_; }
  std::size_t max_position() const;  // valid when non-empty
  bool contains(std::size_t pos) const;

  std::vector<Label> labels(const OrderedIndexSet& parent) const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::vector<std::size_t> positions_;
};

bool disjoint(const IndexSubset& a, const IndexSubset& b);
IndexSubset subset_union(const IndexSubset& a, const IndexSubset& b);
IndexSubset subset_difference(const IndexSubset& a, const IndexSubset& b);
IndexSubset complement(const OrderedIndexSet& parent, const IndexSubset& s);

// Throws std::out_of_range unless every position of s lies inside parent.
void require_subset_of(const OrderedIndexSet& parent, const IndexSubset& s);

// Number of t in rel with t <= x (position function) resp. t < x (rank
// function), in the order of `set`. x must belong to `set`.
std::size_t position(const OrderedIndexSet& set, const IndexSubset& rel, const Label& x);
std::size_t rank(const OrderedIndexSet& set, const IndexSubset& rel, const Label& x);
std::size_t position_at(const IndexSubset& rel, std::size_t pos);
std::size_t rank_at(const IndexSubset& rel, std::size_t pos);

enum class SignVariant { position, rank };

// (-1)^(sum over x in `over` of rank (or position) of x relative to `rel`).
int sign_from_sum(const OrderedIndexSet& set, const IndexSubset& rel, const IndexSubset& over,
                  SignVariant variant = SignVariant::rank);

// The extended order: every label of `marked` is immediately followed by
// its successor label. The base set must not already carry successors.
OrderedIndexSet extend_order(const OrderedIndexSet& base, const IndexSubset& marked);

// Streams all k-element subsets of `within` (positions relative to the
// common parent) in lexicographic order of their position vectors.
class KSubsetStream {
 public:
  KSubsetStream(IndexSubset within, std::size_t k);
  std::optional<IndexSubset> next();

 private:
  std::vector<std::size_t> base_;
  std::vector<std::size_t> idx_;
  std::size_t k_ = 0;
  bool first_ = true;
  bool done_ = false;
};

std::vector<IndexSubset> k_subsets(const IndexSubset& within, std::size_t k);
std::vector<IndexSubset> k_subsets(const OrderedIndexSet& set, std::size_t k);

}  // namespace csmlap
