#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "csmlap/csm.hpp"

namespace csmlap {

// Deterministic RNG: mt19937_64 plus rejection-sampled bounds, so streams
// are identical across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }
  std::size_t below(std::size_t n);              // uniform on [0, n)
  long int_in(long lo, long hi);                 // uniform on [lo, hi]
  std::vector<std::size_t> pick(std::size_t n, std::size_t k);  // sorted k of [0, n)

 private:
  std::mt19937_64 eng_;
};

// Entry distributions: integers uniform in [-9, 9]; rationals p/q with the
// same p and q in [1, 9]; modular residues uniform; polynomial entries a
// single small monomial c * x^e with c in [-3, 3] and e in {0, 1}.
LabeledMatrix random_matrix(const Ring& ring, std::size_t n, Rng& rng);

// |F| uniform on 0..n-1, |I| uniform on 0..n-|F|, then uniform disjoint
// label sets.
CsmPartition random_partition(const LabeledMatrix& a, Rng& rng);

// Every (F, G, I) with F,G of equal size and I inside rows \ F.
std::vector<CsmPartition> all_csm_partitions(const OrderedIndexSet& rows,
                                             const OrderedIndexSet& cols);

struct FuzzConfig {
  Ring ring = Ring::integers();
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t min_n = 2;
  std::size_t max_n = 6;
  // Exhaustive sweep instead of random trials: every matrix with entries
  // in {0, 1} of size max_n (max_n <= 3), every partition, both variants.
  bool exhaustive = false;
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::string check;
  std::string detail;
};

struct FuzzReport {
  std::size_t trials_run = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> check_counts;  // name -> (pass, fail)
  std::vector<FuzzFailure> failures;  // sorted by trial index

  std::size_t passed_total() const;
  std::size_t failed_total() const;
  bool passed() const { return failed_total() == 0; }
};

// Per trial: a random matrix and partition; checks the standard expansion
// (both sign variants plus the drop-notation form) against the oracle, the
// restricted expansion (both variants plus the drop form) against its
// closed form, the initialized-matrix cross-checks while under the oracle
// cap, the corner-minor identity, and the two degenerate partitions.
// Deterministic under a fixed seed regardless of thread count.
FuzzReport run_fuzz(const FuzzConfig& cfg, ExecMode mode = ExecMode::automatic);

std::string fuzz_text(const FuzzConfig& cfg, const FuzzReport& r);
std::string fuzz_json(const FuzzConfig& cfg, const FuzzReport& r);

}  // namespace csmlap
