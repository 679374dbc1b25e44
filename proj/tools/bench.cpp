#include <chrono>
#include <cstdio>
#include <string>

#include "csmlap/condensation.hpp"
#include "csmlap/csm.hpp"
#include "csmlap/fuzz.hpp"

namespace {

using namespace csmlap;

double run_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

struct Row {
  std::string name;
  double serial_ms = 0;
  double parallel_ms = 0;
  bool agree = false;
};

void print_row(const Row& r) {
  std::printf("%-34s %10.1f %12.1f %8.2fx   %s\n", r.name.c_str(), r.serial_ms, r.parallel_ms,
              r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
              r.agree ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const Ring ring = Ring::integers();

  std::printf("openmp: %s, workers: %d\n", has_openmp() ? "yes" : "no", worker_count());
  std::printf("%-34s %10s %12s %9s   %s\n", "kernel", "serial/ms", "parallel/ms", "speedup",
              "check");

  {
    Rng rng(1);
    const std::size_t n = quick ? 8 : 9;
    LabeledMatrix a = random_matrix(ring, n, rng);
    RingValue s = ring.zero(), p = ring.zero();
    Row r{"permutation sum " + std::to_string(n) + "x" + std::to_string(n)};
    r.serial_ms = run_ms([&] { s = det_leibniz_serial(a); });
    r.parallel_ms = run_ms([&] { p = det_leibniz_parallel(a); });
    r.agree = (s == p);
    print_row(r);
  }

  {
    Rng rng(2);
    const std::size_t n = quick ? 8 : 10;
    LabeledMatrix a = random_matrix(ring, n, rng);
    CsmPartition p = CsmPartition::of_labels(
        a, {Label::of(2), Label::of(5)}, {Label::of(3), Label::of(4)},
        quick ? std::vector<Label>{Label::of(1), Label::of(3), Label::of(4)}
              : std::vector<Label>{Label::of(1), Label::of(3), Label::of(4), Label::of(7)});
    RingValue s = ring.zero(), q = ring.zero();
    Row r{"restricted expansion " + std::to_string(n) + "x" + std::to_string(n)};
    r.serial_ms = run_ms([&] { s = csm_rhs(a, p, SignVariant::rank, ExecMode::serial); });
    r.parallel_ms = run_ms([&] { q = csm_rhs(a, p, SignVariant::rank, ExecMode::parallel); });
    r.agree = (s == q);
    print_row(r);
  }

  {
    Rng rng(3);
    const std::size_t n = quick ? 24 : 40;
    LabeledMatrix a = random_matrix(ring, n, rng);
    RingValue s = ring.zero(), p = ring.zero();
    Row r{"condensation " + std::to_string(n) + "x" + std::to_string(n)};
    r.serial_ms = run_ms([&] { s = det_condensation(a, nullptr, ExecMode::serial); });
    r.parallel_ms = run_ms([&] { p = det_condensation(a, nullptr, ExecMode::parallel); });
    r.agree = (s == p);
    print_row(r);
  }

  {
    FuzzConfig cfg;
    cfg.seed = 4;
    cfg.trials = quick ? 10 : 40;
    FuzzReport s, p;
    Row r{"fuzz " + std::to_string(cfg.trials) + " trials"};
    r.serial_ms = run_ms([&] { s = run_fuzz(cfg, ExecMode::serial); });
    r.parallel_ms = run_ms([&] { p = run_fuzz(cfg, ExecMode::parallel); });
    r.agree = s.passed() && p.passed() && s.check_counts == p.check_counts;
    print_row(r);
  }

  return 0;
}
