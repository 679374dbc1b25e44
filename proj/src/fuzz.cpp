#include "csmlap/fuzz.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "csmlap/condensation.hpp"
#include "csmlap/matrix_io.hpp"

namespace csmlap {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
  const std::uint64_t limit = max - rem;
  std::uint64_t x;
  do {
    x = bits();
  } while (x > limit);
  return static_cast<std::size_t>(x % n);
}

long Rng::int_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo) + 1));
}

std::vector<std::size_t> Rng::pick(std::size_t n, std::size_t k) {
  if (k > n) throw std::invalid_argument("cannot pick more than n elements");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + below(n - i)]);
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

LabeledMatrix random_matrix(const Ring& ring, std::size_t n, Rng& rng) {
  std::vector<RingValue> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    switch (ring.kind()) {
      case RingKind::integer:
        entries.push_back(ring.from_int(rng.int_in(-9, 9)));
        break;
      case RingKind::rational:
        entries.push_back(
            exact_div(ring.from_int(rng.int_in(-9, 9)), ring.from_int(rng.int_in(1, 9))));
        break;
      case RingKind::modular:
        entries.push_back(
            ring.from_mpz(mpz_class(static_cast<unsigned long>(rng.below(ring.modulus())))));
        break;
      case RingKind::polynomial: {
        long c = rng.int_in(-3, 3);
        std::size_t e = rng.below(2);
        std::size_t v = rng.below(ring.indeterminates().size());
        RingValue val = ring.from_int(c);
        if (e == 1) val *= ring.indeterminate(ring.indeterminates()[v]);
        entries.push_back(std::move(val));
        break;
      }
    }
  }
  return LabeledMatrix(ring, OrderedIndexSet::naturals(n), OrderedIndexSet::naturals(n),
                       std::move(entries));
}

CsmPartition random_partition(const LabeledMatrix& a, Rng& rng) {
  const std::size_t n = a.row_count();
  if (n == 0 || !a.is_square()) throw std::invalid_argument("need a square matrix with n >= 1");
  const std::size_t fsize = rng.below(n);
  const std::size_t isize = rng.below(n - fsize + 1);
  IndexSubset common_rows = IndexSubset::of_positions(rng.pick(n, fsize));
  IndexSubset common_cols = IndexSubset::of_positions(rng.pick(n, fsize));
  IndexSubset rest = complement(a.rows(), common_rows);
  std::vector<std::size_t> first;
  first.reserve(isize);
  for (auto i : rng.pick(rest.size(), isize)) first.push_back(rest.positions()[i]);
  return CsmPartition::of_subsets(a, std::move(common_rows), std::move(common_cols),
                                  IndexSubset::of_positions(std::move(first)));
}

std::vector<CsmPartition> all_csm_partitions(const OrderedIndexSet& rows,
                                             const OrderedIndexSet& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("need equal row and column counts");
  std::vector<CsmPartition> out;
  for (std::size_t f = 0; f <= rows.size(); ++f) {
    for (const auto& common_rows : k_subsets(rows, f)) {
      IndexSubset rest = complement(rows, common_rows);
      for (const auto& common_cols : k_subsets(cols, f)) {
        for (std::size_t i = 0; i <= rest.size(); ++i) {
          for (const auto& first : k_subsets(rest, i)) {
            CsmPartition p;
            p.common_rows = common_rows;
            p.common_cols = common_cols;
            p.first_minor_rows = first;
            p.second_minor_rows = subset_difference(rest, first);
            out.push_back(std::move(p));
          }
        }
      }
    }
  }
  return out;
}

std::size_t FuzzReport::passed_total() const {
  std::size_t s = 0;
  for (const auto& [name, pf] : check_counts) s += pf.first;
  return s;
}

std::size_t FuzzReport::failed_total() const {
  std::size_t s = 0;
  for (const auto& [name, pf] : check_counts) s += pf.second;
  return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::string detail;  // empty unless failed
};

std::string label_list(const std::vector<Label>& ls) {
  std::string out = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ',';
    out += ls[i].str();
  }
  return out + "}";
}

std::string subset_str(const IndexSubset& s, const OrderedIndexSet& parent) {
  return label_list(s.labels(parent));
}

// One random trial; all inner kernels run serially because trials
// themselves are the parallel axis.
void run_trial(const FuzzConfig& cfg, std::size_t trial, std::vector<CheckOutcome>& out) {
  Rng rng(splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ull * (trial + 1))));
  const std::size_t n = cfg.min_n + rng.below(cfg.max_n - cfg.min_n + 1);
  const LabeledMatrix a = random_matrix(cfg.ring, n, rng);
  const IndexSubset k_rows = IndexSubset::of_positions(rng.pick(n, rng.below(n + 1)));
  const CsmPartition p = random_partition(a, rng);

  auto context = [&](const std::string& extra) {
    std::ostringstream os;
    os << "trial " << trial << ", n=" << n << ", " << extra << '\n';
    os << "K=" << subset_str(k_rows, a.rows()) << " F=" << subset_str(p.common_rows, a.rows())
       << " G=" << subset_str(p.common_cols, a.cols())
       << " I=" << subset_str(p.first_minor_rows, a.rows()) << '\n';
    os << "matrix:\n" << matrix_file_text(a);
    return os.str();
  };
  auto check = [&](const char* name, const RingValue& got, const RingValue& want) {
    CheckOutcome c{name, got == want, ""};
    if (!c.ok) c.detail = context("got " + got.str() + ", want " + want.str());
    out.push_back(std::move(c));
  };

  const RingValue oracle = det_leibniz_serial(a);
  check("laplace-position", laplace_det(a, k_rows, SignVariant::position, MinorForm::keep,
                                        ExecMode::serial), oracle);
  check("laplace-rank",
        laplace_det(a, k_rows, SignVariant::rank, MinorForm::keep, ExecMode::serial), oracle);
  check("laplace-drop-form",
        laplace_det(a, k_rows, SignVariant::rank, MinorForm::drop, ExecMode::serial), oracle);

  const RingValue lhs = csm_lhs(a, p.common_rows, p.common_cols);
  check("csm-position", csm_rhs(a, p, SignVariant::position, ExecMode::serial), lhs);
  check("csm-rank", csm_rhs(a, p, SignVariant::rank, ExecMode::serial), lhs);
  check("csm-drop-form", csm_rhs_complement(a, p, SignVariant::rank, ExecMode::serial), lhs);

  if (n + p.common_rows.size() <= kLeibnizCap) {
    const LabeledMatrix initialized = build_initialized(a, p);
    const RingValue init_det = det_leibniz_serial(initialized);
    check("initialized-sum", initialized_det_sum_form(a, p), init_det);
    check("initialized-product", initialized_det_product_form(a, p), init_det);
  }

  if (n >= 2) {
    auto dj = desnanot_jacobi(a);
    CheckOutcome c{"desnanot-jacobi", dj.equal, ""};
    if (!c.ok) c.detail = context("lhs " + dj.lhs.str() + ", rhs " + dj.rhs.str());
    out.push_back(std::move(c));
  }

  {  // empty common block: the expansion degenerates to standard Laplace over K
    CsmPartition p0 = CsmPartition::of_subsets(a, IndexSubset(), IndexSubset(), k_rows);
    bool ok_pos = csm_rhs(a, p0, SignVariant::position, ExecMode::serial) ==
                  laplace_det(a, k_rows, SignVariant::position, MinorForm::keep, ExecMode::serial);
    bool ok_rank = csm_rhs(a, p0, SignVariant::rank, ExecMode::serial) ==
                   laplace_det(a, k_rows, SignVariant::rank, MinorForm::keep, ExecMode::serial);
    CheckOutcome c{"degenerate-no-common-block", ok_pos && ok_rank, ""};
    if (!c.ok)
      c.detail = context(std::string("variant mismatch: position ") + (ok_pos ? "ok" : "bad") +
                         ", rank " + (ok_rank ? "ok" : "bad"));
    out.push_back(std::move(c));
  }

  {  // empty first-minor rows: a single all-positive term equal to the lhs
    CsmPartition p1 =
        CsmPartition::of_subsets(a, p.common_rows, p.common_cols, IndexSubset());
    auto terms = csm_terms(a, p1, SignVariant::rank);
    bool ok = terms.size() == 1 && csm_outer_sign(a, p1, SignVariant::rank) == 1 &&
              terms[0].sign == 1 &&
              csm_rhs(a, p1, SignVariant::rank, ExecMode::serial) ==
                  csm_lhs(a, p1.common_rows, p1.common_cols);
    CheckOutcome c{"degenerate-empty-first-rows", ok, ""};
    if (!c.ok) c.detail = context("single-term degeneration failed");
    out.push_back(std::move(c));
  }
}

void validate_config(const FuzzConfig& cfg) {
  if (cfg.min_n < 1 || cfg.max_n < cfg.min_n)
    throw std::invalid_argument("need 1 <= min_n <= max_n");
  if (cfg.max_n > kLeibnizCap)
    throw std::invalid_argument("max_n exceeds the permutation oracle cap");
}

FuzzReport run_exhaustive(const FuzzConfig& cfg, ExecMode mode) {
  const std::size_t n = cfg.max_n;
  if (n > 3) throw std::invalid_argument("exhaustive sweep supports n <= 3");
  const OrderedIndexSet rows = OrderedIndexSet::naturals(n);
  const OrderedIndexSet cols = OrderedIndexSet::naturals(n);
  const auto partitions = all_csm_partitions(rows, cols);
  const std::size_t total = std::size_t{1} << (n * n);

  std::vector<std::vector<CheckOutcome>> per_matrix(total);
  parallel_for(
      total,
      [&](std::size_t e) {
        std::vector<RingValue> entries;
        entries.reserve(n * n);
        for (std::size_t b = 0; b < n * n; ++b)
          entries.push_back(cfg.ring.from_int((e >> b) & 1));
        LabeledMatrix a(cfg.ring, rows, cols, std::move(entries));
        auto& out = per_matrix[e];
        for (const auto& p : partitions) {
          const RingValue lhs = csm_lhs(a, p.common_rows, p.common_cols);
          for (SignVariant variant : {SignVariant::position, SignVariant::rank}) {
            const char* name =
                variant == SignVariant::position ? "exhaustive-position" : "exhaustive-rank";
            RingValue rhs = csm_rhs(a, p, variant, ExecMode::serial);
            CheckOutcome c{name, rhs == lhs, ""};
            if (!c.ok) {
              std::ostringstream os;
              os << "matrix " << e << ": got " << rhs.str() << ", want " << lhs.str() << '\n';
              os << "F=" << subset_str(p.common_rows, rows)
                 << " G=" << subset_str(p.common_cols, cols)
                 << " I=" << subset_str(p.first_minor_rows, rows) << '\n';
              os << "matrix:\n" << matrix_file_text(a);
              c.detail = os.str();
            }
            out.push_back(std::move(c));
          }
        }
      },
      mode);

  FuzzReport r;
  r.trials_run = total;
  for (std::size_t e = 0; e < total; ++e) {
    for (auto& c : per_matrix[e]) {
      auto& pf = r.check_counts[c.name];
      if (c.ok)
        ++pf.first;
      else {
        ++pf.second;
        r.failures.push_back(FuzzFailure{e, c.name, std::move(c.detail)});
      }
    }
  }
  return r;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg, ExecMode mode) {
  validate_config(cfg);
  if (cfg.exhaustive) return run_exhaustive(cfg, mode);
  if (cfg.trials == 0) throw std::invalid_argument("need at least one trial");

  std::vector<std::vector<CheckOutcome>> per_trial(cfg.trials);
  parallel_for(
      cfg.trials, [&](std::size_t t) { run_trial(cfg, t, per_trial[t]); }, mode);

  FuzzReport r;
  r.trials_run = cfg.trials;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    for (auto& c : per_trial[t]) {
      auto& pf = r.check_counts[c.name];
      if (c.ok)
        ++pf.first;
      else {
        ++pf.second;
        r.failures.push_back(FuzzFailure{t, c.name, std::move(c.detail)});
      }
    }
  }
  return r;
}

namespace {

std::string config_line(const FuzzConfig& cfg) {
  std::ostringstream os;
  os << "ring=" << cfg.ring.spec() << " seed=" << cfg.seed;
  if (cfg.exhaustive)
    os << " exhaustive over {0,1} entries, n=" << cfg.max_n;
  else
    os << " trials=" << cfg.trials << " n=" << cfg.min_n << ".." << cfg.max_n;
  return os.str();
}

}  // namespace

std::string fuzz_text(const FuzzConfig& cfg, const FuzzReport& r) {
  std::ostringstream os;
  os << config_line(cfg) << '\n';
  os << "trials run: " << r.trials_run << '\n';
  for (const auto& [name, pf] : r.check_counts)
    os << "  " << name << ": " << pf.first << " passed, " << pf.second << " failed\n";
  for (const auto& f : r.failures) {
    os << "FAIL " << f.check << " (trial " << f.trial << ")\n";
    std::istringstream lines(f.detail);
    std::string line;
    while (std::getline(lines, line)) os << "    " << line << '\n';
  }
  os << "result: "
     << (r.passed() ? "PASS" : "FAIL") << " (" << r.passed_total() + r.failed_total()
     << " checks, " << r.failed_total() << " failed)\n";
  return os.str();
}

std::string fuzz_json(const FuzzConfig& cfg, const FuzzReport& r) {
  nlohmann::json j;
  j["config"]["ring"] = cfg.ring.spec();
  j["config"]["seed"] = cfg.seed;
  j["config"]["trials"] = cfg.trials;
  j["config"]["min_n"] = cfg.min_n;
  j["config"]["max_n"] = cfg.max_n;
  j["config"]["exhaustive"] = cfg.exhaustive;
  j["trials_run"] = r.trials_run;
  j["checks"] = nlohmann::json::object();
  for (const auto& [name, pf] : r.check_counts) {
    j["checks"][name]["passed"] = pf.first;
    j["checks"][name]["failed"] = pf.second;
  }
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf;
    jf["trial"] = f.trial;
    jf["check"] = f.check;
    jf["detail"] = f.detail;
    j["failures"].push_back(std::move(jf));
  }
  j["passed"] = r.passed();
  return j.dump(2);
}

}  // namespace csmlap
