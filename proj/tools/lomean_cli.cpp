// lomean: seeded verification suites, decompositions and operator-monotonicity
// checks for matrix means in the Loewner order.
//
// Exit codes: 0 = all expected properties held, 1 = a mathematical violation
// was found, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lomean/constructions.hpp"
#include "lomean/io_json.hpp"
#include "lomean/monotonicity.hpp"
#include "lomean/suites.hpp"

namespace {

using lomean::json;

std::vector<int> parse_dims(const std::string& spec) {
  std::vector<int> dims;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    const int d = std::stoi(tok, &pos);
    if (pos != tok.size() || d < 1) throw lomean::DomainError("bad dimension '" + tok + "'");
    dims.push_back(d);
  }
  if (dims.empty()) throw lomean::DomainError("empty dimension list");
  return dims;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw lomean::Error("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix means in the Loewner order: verification suites and checks"};
  app.require_subcommand(1);

  // ---- verify ----------------------------------------------------------
  std::string v_suite, v_dims = "2,3,4", v_function = "sqrt", v_out;
  int v_trials = 100;
  std::uint64_t v_seed = 0;
  double v_tol = 1e-9;
  bool v_expect_violation = false, v_serial = false;
  auto* verify = app.add_subcommand("verify", "run a seeded verification suite");
  verify->add_option("suite", v_suite, "one of: reverse-cauchy, hiai-ando, hok, means-axioms, constructions")
      ->required();
  verify->add_option("--dims", v_dims, "comma-separated dimensions (default 2,3,4)");
  verify->add_option("--trials", v_trials, "trials per dimension (default 100)");
  verify->add_option("--seed", v_seed, "global seed (required)")->required();
  verify->add_option("--tol", v_tol, "relative comparison tolerance (default 1e-9)");
  verify->add_option("--function", v_function, "mean generator name (default sqrt)");
  verify->add_option("--out", v_out, "write the JSON report to this file instead of stdout");
  verify->add_flag("--expect-violation", v_expect_violation,
                   "invert the exit logic: succeed iff a violation was found");
  verify->add_flag("--serial", v_serial, "run trials on the serial reference path");

  // ---- decompose -------------------------------------------------------
  std::string d_kind, d_matrix, d_a_file, d_b_file, d_out;
  double d_a = 0.0, d_b = 0.0;
  auto* decompose = app.add_subcommand("decompose", "run a constructive decomposition");
  decompose->add_option("kind", d_kind, "one of: scalar, lemma1, lemma2, chain")->required();
  decompose->add_option("--a", d_a, "scalar a (kind=scalar)");
  decompose->add_option("--b", d_b, "scalar b (kind=scalar)");
  decompose->add_option("--matrix", d_matrix, "matrix JSON file (kind=lemma1)");
  decompose->add_option("--A", d_a_file, "matrix JSON file (kind=lemma2|chain)");
  decompose->add_option("--B", d_b_file, "matrix JSON file (kind=lemma2|chain)");
  decompose->add_option("--out", d_out, "write the result JSON to this file");

  // ---- check-monotone ---------------------------------------------------
  std::string m_function, m_table, m_config, m_out;
  std::uint64_t m_seed = 0;
  int m_trials = -1;
  bool m_hypothesis = false, m_expect_violation = false, m_serial = false;
  auto* monotone = app.add_subcommand("check-monotone", "numeric operator-monotonicity test");
  auto* m_fn_opt = monotone->add_option("--function", m_function, "registry function name");
  monotone->add_option("--table", m_table,
                       "sampled function file {\"t\": [...], \"f\": [...]}; tested as its "
                       "linear interpolant")
      ->excludes(m_fn_opt);
  monotone->add_option("--config", m_config, "config JSON file");
  monotone->add_option("--seed", m_seed, "seed (default 0, deterministic)");
  monotone->add_option("--trials", m_trials, "budget per phase (default 10000)");
  monotone->add_flag("--via-hypothesis", m_hypothesis,
                     "use the characterization-hypothesis search (cross-checked "
                     "against the numeric oracle)");
  monotone->add_option("--out", m_out, "write the verdict JSON to this file");
  monotone->add_flag("--expect-violation", m_expect_violation,
                     "invert the exit logic: succeed iff a violation was found");
  monotone->add_flag("--serial", m_serial, "run trials on the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      lomean::SuiteOptions opt;
      opt.dims = parse_dims(v_dims);
      opt.trials = v_trials;
      opt.seed = v_seed;
      opt.pol.rel = v_tol;
      opt.function = v_function;
      opt.mode = v_serial ? lomean::ExecMode::Serial : lomean::ExecMode::Parallel;
      const lomean::SuiteReport rep = lomean::run_suite(v_suite, opt);
      emit(rep.to_json(), v_out);
      // Checks outside the claims' hypotheses (e.g. hok trials whose AB+BA
      // condition fails) may fail without constituting a violation.
      if (v_expect_violation) return rep.failures > 0 ? 0 : 1;
      return rep.unexpected_failures > 0 ? 1 : 0;
    }

    if (*decompose) {
      if (d_kind == "scalar") {
        if (!decompose->count("--a") || !decompose->count("--b"))
          throw lomean::DomainError("decompose scalar needs --a and --b");
        const auto [x, y] = lomean::scalar_decompose(d_a, d_b);
        const double recon = std::sqrt(x * y) + 0.5 * (y - x);
        emit(json{{"x", x},
                  {"y", y},
                  {"mean", 0.5 * (x + y)},
                  {"reconstruction", recon},
                  {"reconstruction_residual", std::abs(recon - d_b)}},
             d_out);
        return 0;
      }
      if (d_kind == "lemma1") {
        if (d_matrix.empty()) throw lomean::DomainError("decompose lemma1 needs --matrix");
        const auto a = lomean::load_matrix_file(d_matrix);
        emit(lomean::decomposition_to_json(lomean::lemma1_decompose(a)), d_out);
        return 0;
      }
      if (d_kind == "lemma2") {
        if (d_a_file.empty() || d_b_file.empty())
          throw lomean::DomainError("decompose lemma2 needs --A and --B");
        const auto a = lomean::load_matrix_file(d_a_file);
        const auto b = lomean::load_matrix_file(d_b_file);
        emit(lomean::decomposition_to_json(lomean::lemma2_decompose(a, b)), d_out);
        return 0;
      }
      if (d_kind == "chain") {
        if (d_a_file.empty() || d_b_file.empty())
          throw lomean::DomainError("decompose chain needs --A and --B");
        const auto a = lomean::load_matrix_file(d_a_file);
        const auto b = lomean::load_matrix_file(d_b_file);
        emit(lomean::chain_to_json(lomean::matrix_chain(a, b)), d_out);
        return 0;
      }
      throw lomean::DomainError("unknown decompose kind '" + d_kind + "'");
    }

    if (*monotone) {
      lomean::MonotoneConfig cfg;
      if (!m_config.empty()) {
        std::ifstream in(m_config);
        if (!in) throw lomean::Error("cannot open config file: " + m_config);
        json j;
        in >> j;
        cfg = lomean::config_from_json(j);
      }
      if (monotone->count("--seed")) cfg.seed = m_seed;
      if (m_trials >= 0) cfg.trials = m_trials;
      if (m_function.empty() && m_table.empty())
        throw lomean::DomainError("check-monotone needs --function or --table");
      const lomean::ScalarFunction f = m_table.empty() ? lomean::lookup_function(m_function)
                                                       : lomean::load_function_table(m_table);
      const auto mode = m_serial ? lomean::ExecMode::Serial : lomean::ExecMode::Parallel;
      const lomean::MonotonicityVerdict verdict =
          m_hypothesis ? lomean::characterize_via_hypothesis(f, cfg, mode)
                       : lomean::numeric_operator_monotone(f, cfg, mode);
      emit(lomean::verdict_to_json(verdict), m_out);
      if (m_expect_violation) return verdict.violated ? 0 : 1;
      return verdict.violated ? 1 : 0;
    }
  } catch (const lomean::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
