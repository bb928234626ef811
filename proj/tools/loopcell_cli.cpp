// loopcell command line: claim-by-claim verification and Bruhat factorization
// of loop-group matrices in the project's exact matrix format.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "loopcell/constructions.hpp"
#include "loopcell/matrix_io.hpp"
#include "loopcell/verify.hpp"

namespace {

// Exit codes: 0 success / all pass, 1 computational failure, 2 usage or
// parse error.
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return lo >= 2 && hi >= lo && hi <= 8;
}

int run_verify(const std::string& claims, const std::string& nrange, uint64_t seed, int samples,
               const std::string& json_path) {
  loopcell::VerifyOptions opt;
  opt.selectors.clear();
  std::string cur;
  std::istringstream cs(claims);
  while (std::getline(cs, cur, ',')) {
    if (cur.empty()) continue;
    if (!loopcell::valid_selector(cur)) {
      std::cerr << "unknown claim selector '" << cur << "'\n";
      return kUsage;
    }
    opt.selectors.push_back(cur);
  }
  if (opt.selectors.empty()) {
    std::cerr << "no claim selector given\n";
    return kUsage;
  }
  if (!parse_range(nrange, opt.n_min, opt.n_max)) {
    std::cerr << "bad n range '" << nrange << "' (want e.g. 3 or 2..5, within 2..8)\n";
    return kUsage;
  }
  opt.seed = seed;
  opt.samples = samples;

  loopcell::VerificationReport report = loopcell::run_claims(opt);
  std::cout << report.summary_table();
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) {
      std::cerr << "cannot write '" << json_path << "'\n";
      return kUsage;
    }
    f << report.to_json().dump(2) << "\n";
  }
  return report.all_pass() ? kOk : kFail;
}

int run_factorize(const std::string& path, bool grassmannian, bool print_lu) {
  loopcell::LaurentMatrix m(1);
  try {
    m = loopcell::read_matrix_file(path);
  } catch (const loopcell::MatrixParseError& e) {
    std::cerr << "parse error in '" << path << "': " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  try {
    loopcell::IwahoriFactorization f = loopcell::iwahori_factorize(m);
    std::cout << "w window = " << f.w.str() << "\n";
    std::cout << "w word   = " << loopcell::greedy_reduced_word(f.w).str() << "\n";
    std::cout << "length   = " << loopcell::perm_length(f.w) << "\n";
    std::cout << "wdot =\n" << f.wdot.str();
    if (print_lu) {
      std::cout << "L =\n" << loopcell::write_matrix(f.L);
      std::cout << "U =\n" << loopcell::write_matrix(f.U);
    }
    if (grassmannian) {
      loopcell::AffinePermutation cell = loopcell::grassmannian_cell(m);
      std::cout << "G0-cell min rep window = " << cell.str() << "\n";
      std::cout << "G0-cell min rep word   = " << loopcell::greedy_reduced_word(cell).str()
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "factorization failed: " << e.what() << "\n";
    return kFail;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopcell: exact affine Weyl / loop group computations"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run verification claims");
  std::string claims = "all";
  std::string nrange = "2..5";
  uint64_t seed = 1;
  int samples = 20;
  std::string json_path;
  verify->add_option("--claims", claims, "comma-separated selectors (default all)");
  verify->add_option("--n", nrange, "rank or rank range, e.g. 3 or 2..5 (n=6 on request)");
  verify->add_option("--seed", seed, "sampler seed");
  verify->add_option("--samples", samples, "samples per randomized claim");
  verify->add_option("--json", json_path, "write the JSON report here");

  auto* factorize = app.add_subcommand("factorize", "factorize a matrix file");
  std::string path;
  bool grassmannian = false;
  bool print_lu = false;
  factorize->add_option("file", path, "matrix file")->required();
  factorize->add_flag("--grassmannian", grassmannian, "also print the G0-cell minimal rep");
  factorize->add_flag("--print-lu", print_lu, "print the L and U factors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (verify->parsed()) return run_verify(claims, nrange, seed, samples, json_path);
  if (factorize->parsed()) return run_factorize(path, grassmannian, print_lu);
  return kUsage;
}
