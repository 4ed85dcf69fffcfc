// Command-line front end: verification suites, t-matrix evaluation, and the
// classification pipeline.  All reports are canonical JSON on stdout;
// diagnostics (including timings) go to stderr.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "vla/errors.hpp"
#include "vla/json_io.hpp"
#include "vla/linalg.hpp"
#include "vla/lsmodule.hpp"
#include "vla/rng.hpp"
#include "vla/suites.hpp"

namespace {

using vla::json;
using vla::LatticeVec;
using vla::Matrix;
using vla::Rational;

std::array<Rational, 2> parse_alpha(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw vla::ParseError("--alpha expects two comma-separated rationals");
  return {vla::parse_rational(text.substr(0, comma)),
          vla::parse_rational(text.substr(comma + 1))};
}

LatticeVec parse_lattice(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw vla::ParseError("expected two comma-separated integers");
  return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
}

/// Random invertible rational matrix with small integer entries.
Matrix random_invertible(std::size_t n, std::uint64_t seed) {
  vla::Rng rng(seed);
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = vla::rational(rng.uniform(-3, 3));
    if (vla::inverse(m)) return m;
  }
}

int cmd_verify(const std::string& suite, const vla::SuiteOptions& opt) {
  vla::SuiteReport report = vla::run_suite(suite, opt);
  std::cout << report.to_json().dump(2) << "\n";
  std::cerr << "suite " << report.suite << ": " << report.cases << " cases, "
            << report.failures.size() << " failures, " << report.elapsed_seconds
            << "s\n";
  return report.passed() ? 0 : 1;
}

int cmd_tmatrix(unsigned lambda, const std::string& alpha_text,
                const std::string& r_text) {
  vla::ModuleParams p = vla::ModuleParams::make(lambda, parse_alpha(alpha_text), 0);
  Matrix m = vla::t_matrix(p, parse_lattice(r_text));
  std::cout << vla::to_json(m).dump() << "\n";
  return 0;
}

int cmd_identify(const std::string& input_file, int lambda,
                 const std::string& alpha_text, std::uint64_t conjugate_seed,
                 bool conjugate, int probe_budget, std::uint64_t seed) {
  vla::TRealization real;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw vla::ParseError("cannot open " + input_file);
    json doc = json::parse(in);
    real = vla::realization_from_json(doc);
  } else {
    if (lambda < 0)
      throw vla::ParseError("identify needs --input or --lambda/--alpha");
    vla::ModuleParams p =
        vla::ModuleParams::make(static_cast<unsigned>(lambda),
                                parse_alpha(alpha_text), 0);
    if (conjugate) {
      Matrix conj = random_invertible(p.triple.dim, conjugate_seed);
      Matrix conj_inv = *vla::inverse(conj);
      real = vla::TRealization::from_function(
          p.triple.dim, [p, conj, conj_inv](LatticeVec r) {
            return conj * vla::t_matrix(p, r) * conj_inv;
          });
    } else {
      real = vla::TRealization::from_function(
          p.triple.dim, [p](LatticeVec r) { return vla::t_matrix(p, r); });
    }
  }
  try {
    vla::IdentificationResult result = vla::identify(real, probe_budget, seed);
    std::cout << vla::to_json(result).dump(2) << "\n";
    return 0;
  } catch (const vla::ClassificationError& e) {
    std::cout << json{{"error", e.stage}, {"message", e.what()}}.dump(2) << "\n";
    return e.exit_code;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and checks for the rank-two Hamiltonian "
               "operator algebra and its weight modules"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  bool list = false;
  vla::SuiteOptions opt;
  verify->add_option("suite", suite, "suite name (see --list)");
  verify->add_flag("--list", list, "list available suites");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--samples", opt.samples, "random sample budget")
      ->check(CLI::Range(0, 100000000));
  verify->add_option("--max-lambda", opt.max_lambda, "largest highest weight")
      ->check(CLI::Range(0, 1000));
  verify->add_option("--max-k", opt.max_k, "largest difference order")
      ->check(CLI::Range(1, 30));
  verify->add_option("--range", opt.range, "lattice component range")
      ->check(CLI::Range(0, 1000));

  // tmatrix
  auto* tmatrix = app.add_subcommand("tmatrix", "print one t-matrix");
  unsigned tm_lambda = 0;
  std::string tm_alpha = "0,0", tm_r = "0,0";
  tmatrix->add_option("--lambda", tm_lambda, "highest weight")->required();
  tmatrix->add_option("--alpha", tm_alpha, "alpha as p/q,p/q")->required();
  tmatrix->add_option("--r", tm_r, "lattice point r1,r2")->required();

  // identify
  auto* identify = app.add_subcommand(
      "identify", "recover (alpha, lambda) from a realization");
  std::string id_input, id_alpha = "0,0";
  int id_lambda = -1;
  std::uint64_t id_conj_seed = 0, id_seed = 1;
  int id_budget = 24;
  identify->add_option("--input", id_input, "realization JSON file");
  identify->add_option("--lambda", id_lambda, "highest weight of a synthetic realization");
  identify->add_option("--alpha", id_alpha, "alpha of a synthetic realization");
  auto* conj_opt = identify->add_option("--conjugate-seed", id_conj_seed,
                                        "conjugate the synthetic realization by a "
                                        "seeded random invertible matrix");
  identify->add_option("--probe-budget", id_budget, "extra probes / audit pairs");
  identify->add_option("--seed", id_seed, "seed for random probes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      if (list) {
        json out = json::array();
        for (const vla::SuiteInfo& s : vla::suite_catalog())
          out.push_back(json{{"name", s.name}, {"checks", s.checks}});
        std::cout << out.dump(2) << "\n";
        return 0;
      }
      if (suite.empty()) {
        std::cerr << "verify: missing suite name (use --list)\n";
        return 64;
      }
      return cmd_verify(suite, opt);
    }
    if (tmatrix->parsed()) return cmd_tmatrix(tm_lambda, tm_alpha, tm_r);
    if (identify->parsed())
      return cmd_identify(id_input, id_lambda, id_alpha, id_conj_seed,
                          conj_opt->count() > 0, id_budget, id_seed);
  } catch (const vla::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
  return 0;
}
