#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "csmlap/condensation.hpp"
#include "csmlap/csm.hpp"
#include "csmlap/expand.hpp"
#include "csmlap/fuzz.hpp"
#include "csmlap/matrix_io.hpp"

namespace {

using namespace csmlap;

// Comma-separated labels; commas inside quoted labels do not split.
std::vector<Label> parse_label_csv(const std::string& text) {
  std::vector<Label> out;
  std::string piece;
  bool in_quote = false;
  auto flush = [&] {
    std::size_t b = piece.find_first_not_of(" \t");
    if (b == std::string::npos) {
      piece.clear();
      return;
    }
    std::size_t e = piece.find_last_not_of(" \t");
    out.push_back(parse_label(piece.substr(b, e - b + 1)));
    piece.clear();
  };
  for (char c : text) {
    if (c == '"') in_quote = !in_quote;
    if (c == ',' && !in_quote) {
      flush();
      continue;
    }
    piece += c;
  }
  flush();
  return out;
}

SignVariant to_variant(const std::string& s) {
  return s == "position" ? SignVariant::position : SignVariant::rank;
}

struct Options {
  std::string matrix_path;
  std::string ring_spec = "integer";
  std::string f_labels, g_labels, i_labels;
  std::string rows_labels;
  std::string variant = "rank";
  std::string algo = "leibniz";
  std::string format = "text";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_n = 6;
  bool exhaustive = false;
};

bool structured(const Options& o) { return o.format == "structured"; }

int run_det(const Options& o) {
  LabeledMatrix a = read_matrix_file(o.matrix_path);
  RingValue d = a.ring().zero();
  if (o.algo == "leibniz") {
    d = det_leibniz(a);
  } else if (o.algo == "laplace") {
    IndexSubset k_rows = o.rows_labels.empty() && !a.rows().empty()
                             ? IndexSubset::range(0, 1)
                             : IndexSubset::of_labels(a.rows(), parse_label_csv(o.rows_labels));
    d = laplace_det(a, k_rows, to_variant(o.variant));
  } else {
    d = det_condensation(a);
  }
  if (structured(o)) {
    nlohmann::json j;
    j["algo"] = o.algo;
    j["determinant"] = d.str();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << d.str() << '\n';
  }
  return 0;
}

int run_verify_laplace(const Options& o) {
  LabeledMatrix a = read_matrix_file(o.matrix_path);
  IndexSubset k_rows = IndexSubset::of_labels(a.rows(), parse_label_csv(o.rows_labels));
  RingValue oracle = det_leibniz(a);
  RingValue by_position = laplace_det(a, k_rows, SignVariant::position);
  RingValue by_rank = laplace_det(a, k_rows, SignVariant::rank);
  RingValue by_drop = laplace_det(a, k_rows, to_variant(o.variant), MinorForm::drop);
  bool ok = by_position == oracle && by_rank == oracle && by_drop == oracle;
  if (structured(o)) {
    nlohmann::json j;
    j["oracle"] = oracle.str();
    j["position_variant"] = by_position.str();
    j["rank_variant"] = by_rank.str();
    j["complement_form"] = by_drop.str();
    j["equal"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "permutation oracle = " << oracle.str() << '\n';
    std::cout << "position variant   = " << by_position.str() << '\n';
    std::cout << "rank variant       = " << by_rank.str() << '\n';
    std::cout << "complement form    = " << by_drop.str() << '\n';
    std::cout << "verdict: " << (ok ? "IDENTITY HOLDS" : "IDENTITY VIOLATED") << '\n';
  }
  return ok ? 0 : 1;
}

int run_verify_csm(const Options& o) {
  LabeledMatrix a = read_matrix_file(o.matrix_path);
  CsmPartition p = CsmPartition::of_labels(a, parse_label_csv(o.f_labels),
                                           parse_label_csv(o.g_labels),
                                           parse_label_csv(o.i_labels));
  CsmReport r = verify_csm(a, p, to_variant(o.variant));
  std::cout << (structured(o) ? report_json(r) + "\n" : report_text(r));
  return r.all_ok() ? 0 : 1;
}

int run_expand(const Options& o) {
  LabeledMatrix a = read_matrix_file(o.matrix_path);
  CsmPartition p = CsmPartition::of_labels(a, parse_label_csv(o.f_labels),
                                           parse_label_csv(o.g_labels),
                                           parse_label_csv(o.i_labels));
  CancellationReport r = expansion_report(a, p, to_variant(o.variant));
  std::cout << (structured(o) ? cancellation_json(r) + "\n" : cancellation_text(r));
  return r.equal ? 0 : 1;
}

int run_fuzz_cmd(const Options& o) {
  FuzzConfig cfg;
  cfg.ring = Ring::parse(o.ring_spec);
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.max_n = o.max_n;
  cfg.exhaustive = o.exhaustive;
  FuzzReport r = run_fuzz(cfg);
  std::cout << (structured(o) ? fuzz_json(cfg, r) + "\n" : fuzz_text(cfg, r));
  return r.passed() ? 0 : 1;
}

int run_build_initialized(const Options& o) {
  LabeledMatrix a = read_matrix_file(o.matrix_path);
  CsmPartition p = CsmPartition::of_labels(a, parse_label_csv(o.f_labels),
                                           parse_label_csv(o.g_labels),
                                           parse_label_csv(o.i_labels));
  LabeledMatrix doubled = build_doubled(a, p.common_rows, p.common_cols);
  LabeledMatrix initialized = build_initialized(a, p);
  LabeledMatrix cleaned = build_tilde(initialized);
  if (structured(o)) {
    nlohmann::json j;
    j["matrix"] = matrix_file_text(a);
    j["doubled"] = matrix_file_text(doubled);
    j["initialized"] = matrix_file_text(initialized);
    j["cleaned"] = matrix_file_text(cleaned);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "input:\n" << matrix_grid(a) << '\n';
    std::cout << "doubled (common rows and columns duplicated):\n" << matrix_grid(doubled) << '\n';
    std::cout << "initialized (zero blocks placed):\n" << matrix_grid(initialized) << '\n';
    std::cout << "cleaned (columns summed, rows subtracted):\n" << matrix_grid(cleaned);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant identities: compute, verify, expand, fuzz"};
  app.require_subcommand(1);
  Options o;

  auto add_matrix = [&](CLI::App* c) {
    c->add_option("--matrix", o.matrix_path, "matrix file")->required();
  };
  auto add_partition = [&](CLI::App* c) {
    c->add_option("--F", o.f_labels, "common row labels, comma separated");
    c->add_option("--G", o.g_labels, "common column labels, comma separated");
    c->add_option("--I", o.i_labels, "first-minor row labels, comma separated");
  };
  auto add_variant = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "sign variant")
        ->check(CLI::IsMember({"position", "rank"}));
  };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* det = app.add_subcommand("det", "compute an exact determinant");
  add_matrix(det);
  det->add_option("--algo", o.algo, "determinant algorithm")
      ->check(CLI::IsMember({"leibniz", "laplace", "condensation"}));
  det->add_option("--rows", o.rows_labels, "expansion row labels (laplace; default first row)");
  add_variant(det);
  add_format(det);

  CLI::App* vlap = app.add_subcommand("verify-laplace", "check the general Laplace expansion");
  add_matrix(vlap);
  vlap->add_option("--rows", o.rows_labels, "expansion row labels, comma separated")->required();
  add_variant(vlap);
  add_format(vlap);

  CLI::App* vcsm = app.add_subcommand("verify-csm", "check the common-submatrix expansion");
  add_matrix(vcsm);
  add_partition(vcsm);
  add_variant(vcsm);
  add_format(vcsm);

  CLI::App* exp = app.add_subcommand("expand", "monomial cancellation report (polynomial ring)");
  add_matrix(exp);
  add_partition(exp);
  add_variant(exp);
  add_format(exp);

  CLI::App* fuzz = app.add_subcommand("fuzz", "randomized identity verification");
  fuzz->add_option("--ring", o.ring_spec, "ring spec: integer|rational|mod:M|poly:x,y");
  fuzz->add_option("--trials", o.trials, "number of random trials");
  fuzz->add_option("--seed", o.seed, "rng seed")->required();
  fuzz->add_option("--max-n", o.max_n, "largest matrix size (exhaustive: the size)");
  fuzz->add_flag("--exhaustive", o.exhaustive, "sweep all {0,1} matrices of size max-n (<= 3)");
  add_format(fuzz);

  CLI::App* bi = app.add_subcommand("build-initialized",
                                    "print the doubled, initialized and cleaned matrices");
  add_matrix(bi);
  add_partition(bi);
  add_format(bi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (det->parsed()) return run_det(o);
    if (vlap->parsed()) return run_verify_laplace(o);
    if (vcsm->parsed()) return run_verify_csm(o);
    if (exp->parsed()) return run_expand(o);
    if (fuzz->parsed()) return run_fuzz_cmd(o);
    if (bi->parsed()) return run_build_initialized(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
