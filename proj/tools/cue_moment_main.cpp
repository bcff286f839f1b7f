// Command-line front end for the CUE derivative-moment engines. Exact values
// print as rational strings by default; --decimal opts into fixed-point.
// Exit codes: 0 success, 1 validation error, 2 internal contract violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "cuem/errors.hpp"
#include "cuem/haar.hpp"
#include "cuem/modular.hpp"
#include "cuem/moments.hpp"
#include "cuem/n2.hpp"
#include "cuem/painleve.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string format = "plain";
  std::string output;
  int decimal = -1;
  int threads = 1;
};

int default_threads() {
  if (const char* env = std::getenv("CUE_MOMENT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

// d decimal digits, round-to-nearest, exact integer arithmetic.
std::string decimal_string(const cuem::BigRational& v, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = v.numerator() * scale * 2 + v.denominator() * (v.sign() < 0 ? -1 : 1);
  mpz_class scaled = num / (v.denominator() * 2);
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  return (negative ? "-" : "") + s;
}

std::string format_rational(const cuem::BigRational& v, const Options& opt) {
  return opt.decimal >= 0 ? decimal_string(v, opt.decimal) : v.str();
}

void write_out(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(opt.output);
  if (!f) throw cuem::contract_error("cannot open output file " + opt.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
  if (!f) throw cuem::contract_error("write to " + opt.output + " failed");
}

cuem::MomentMethod parse_method(const std::string& name) {
  if (name == "sumofdets") return cuem::MomentMethod::sumofdets;
  if (name == "laguerre-k" || name == "laguerre_k") return cuem::MomentMethod::laguerre_k;
  if (name == "laguerre-n" || name == "laguerre_n") return cuem::MomentMethod::laguerre_n;
  if (name == "painleve") return cuem::MomentMethod::painleve;
  if (name == "general-x" || name == "general_x") return cuem::MomentMethod::general_x;
  throw cuem::validation_error("unknown method '" + name + "'");
}

cuem::ProgressFn stderr_progress(const std::string& label) {
  return [label](std::uint64_t done, std::uint64_t total) {
    std::cerr << "\r" << label << ": " << done << "/" << total;
    if (done == total) std::cerr << "\n";
    std::cerr.flush();
  };
}

std::string polynomial_json(const cuem::RatPolynomial& p) {
  return json(p.coefficient_strings()).dump();
}

std::string roots_csv(const std::vector<std::complex<double>>& roots) {
  std::string out = "re,im\n";
  for (const auto& r : roots)
    out += format_double(r.real()) + "," + format_double(r.imag()) + "\n";
  return out;
}

std::string estimate_json(const cuem::MCEstimate& est) {
  json j;
  j["mean"] = est.mean;
  j["std_error"] = est.std_error;
  j["samples"] = est.samples;
  j["seed"] = est.seed;
  j["chunk_size"] = est.chunk_size;
  return j.dump();
}

std::string estimate_plain(const cuem::MCEstimate& est) {
  return "mean " + format_double(est.mean) + "\nstd_error " + format_double(est.std_error) +
         "\nsamples " + std::to_string(est.samples) + "\nseed " + std::to_string(est.seed) +
         "\nchunk_size " + std::to_string(est.chunk_size);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo moments of derivatives of CUE characteristic polynomials"};
  app.require_subcommand(1);

  Options opt;
  opt.threads = default_threads();
  app.add_option("--format", opt.format, "Output format: plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--output", opt.output, "Write output to a file instead of stdout");
  app.add_option("--decimal", opt.decimal, "Print exact values with this many decimal digits");
  app.add_option("--threads", opt.threads, "Worker cap (default from CUE_MOMENT_THREADS)");

  // moment
  long m_n = 0;
  int m_k = 0;
  std::string m_q = "1", m_method;
  auto* cmd_moment = app.add_subcommand("moment", "Exact 2k-th moment of |Lambda'(x)| over U(N)");
  cmd_moment->add_option("--n", m_n, "Matrix size N")->required();
  cmd_moment->add_option("--k", m_k, "Moment half-order k")->required();
  cmd_moment->add_option("--q", m_q, "|x|^2 as a rational string (default 1)");
  cmd_moment->add_option("--method", m_method,
                         "sumofdets, laguerre-k, laguerre-n, painleve or general-x");

  // f-poly
  int f_k = 0;
  std::string f_method = "sumofdets";
  auto* cmd_fpoly = app.add_subcommand("f-poly", "The ratio polynomial f(N,k)");
  cmd_fpoly->add_option("--k", f_k, "k >= 1")->required();
  cmd_fpoly->add_option("--method", f_method, "sumofdets, laguerre-k or painleve");

  // mod-check
  int mc_k = 0;
  std::string mc_method = "painleve";
  auto* cmd_mod = app.add_subcommand("mod-check", "Verify the mod 4k-1 factorization");
  cmd_mod->add_option("--k", mc_k, "k with 4k-1 prime")->required();
  cmd_mod->add_option("--method", mc_method, "Moment engine behind the check");

  // painleve
  long p_n = 0;
  int p_k = 0, p_order = -1;
  auto* cmd_pain = app.add_subcommand("painleve", "Series coefficients c_j of f_{N,k}(t)");
  cmd_pain->add_option("--n", p_n, "Matrix size N")->required();
  cmd_pain->add_option("--k", p_k, "k >= 1")->required();
  cmd_pain->add_option("--order", p_order, "Truncation order (default 2k)");

  // n2
  auto* cmd_n2 = app.add_subcommand("n2", "Closed forms at N = 2");
  cmd_n2->require_subcommand(1);
  int n2_k = 0;
  std::string n2_q = "1";
  double n2_real_k = std::numeric_limits<double>::quiet_NaN(), n2_x = 1.0;
  auto* cmd_n2_moment = cmd_n2->add_subcommand("moment", "2k-th derivative moment over U(2)");
  cmd_n2_moment->add_option("--k", n2_k, "Integer k (exact path)");
  cmd_n2_moment->add_option("--q", n2_q, "|x|^2 as a rational string");
  cmd_n2_moment->add_option("--real-k", n2_real_k, "Real k (numeric path, needs --x >= 1)");
  cmd_n2_moment->add_option("--x", n2_x, "|x| for the numeric path");
  double n2_r = 0.0;
  auto* cmd_n2_log = cmd_n2->add_subcommand("logmoment", "Average of log|Lambda'(r)| over U(2)");
  cmd_n2_log->add_option("--r", n2_r, "Radius in [0,1)")->required();
  double n2_u = 0.0;
  auto* cmd_n2_zero = cmd_n2->add_subcommand("zerocount", "Mean zero count of Lambda' in |z| <= u");
  cmd_n2_zero->add_option("--u", n2_u, "Radius in [0,1]")->required();

  // mc
  auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo over Haar-random unitaries");
  cmd_mc->require_subcommand(1);
  int h_n = 2, h_bins = 100;
  double h_k = 1.0, h_x = 1.0, h_x_im = 0.0, h_r = 0.0;
  std::uint64_t h_samples = 100000, h_seed = 1, h_chunk = 8192;
  auto* cmd_mc_moment = cmd_mc->add_subcommand("moment", "Sample mean of |Lambda'(x)|^{2k}");
  cmd_mc_moment->add_option("--n", h_n, "Matrix size N")->required();
  cmd_mc_moment->add_option("--k", h_k, "Real moment half-order")->required();
  cmd_mc_moment->add_option("--x", h_x, "Re x (default 1)");
  cmd_mc_moment->add_option("--x-im", h_x_im, "Im x (default 0)");
  auto* cmd_mc_log = cmd_mc->add_subcommand("logmoment", "Sample mean of log|Lambda'(r)|");
  cmd_mc_log->add_option("--n", h_n, "Matrix size N")->required();
  cmd_mc_log->add_option("--r", h_r, "Radius in [0,1)")->required();
  auto* cmd_mc_zeros = cmd_mc->add_subcommand("zeros", "Radial histogram of zeros of Lambda'");
  cmd_mc_zeros->add_option("--n", h_n, "Matrix size N")->required();
  cmd_mc_zeros->add_option("--bins", h_bins, "Histogram bins on [0,1]");
  for (auto* c : {cmd_mc_moment, cmd_mc_log, cmd_mc_zeros}) {
    c->add_option("--samples", h_samples, "Sample count (>= 1000)");
    c->add_option("--seed", h_seed, "RNG seed");
    c->add_option("--chunk-size", h_chunk, "Samples per substream chunk");
  }

  // roots-f
  int r_k = 0;
  std::string r_method = "painleve";
  auto* cmd_roots = app.add_subcommand("roots-f", "Numeric roots of f(N,k)");
  cmd_roots->add_option("--k", r_k, "k >= 1")->required();
  cmd_roots->add_option("--method", r_method, "Moment engine behind f(N,k)");

  // b-k
  int b_k = 0;
  auto* cmd_bk = app.add_subcommand("b-k", "Leading coefficient of the derivative moment in N");
  cmd_bk->add_option("--k", b_k, "k >= 1")->required();

  // Global options may follow the subcommand name.
  for (auto* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*cmd_moment) {
      const cuem::BigRational q = cuem::BigRational::from_string(m_q);
      cuem::MomentMethod method;
      if (!m_method.empty())
        method = parse_method(m_method);
      else
        method = (q == cuem::BigRational(1)) ? cuem::MomentMethod::sumofdets
                                             : cuem::MomentMethod::general_x;
      cuem::ProgressFn progress;
      if (method == cuem::MomentMethod::sumofdets && m_k >= 6)
        progress = stderr_progress("sumofdets");
      const cuem::BigRational v = cuem::deriv_moment(m_n, m_k, method, q, progress);
      write_out(opt, opt.format == "json" ? json(format_rational(v, opt)).dump()
                                          : format_rational(v, opt));
    } else if (*cmd_fpoly) {
      const auto method = parse_method(f_method);
      cuem::ProgressFn progress;
      if (method == cuem::MomentMethod::sumofdets && f_k >= 6)
        progress = stderr_progress("sumofdets");
      const cuem::RatPolynomial f = cuem::f_ratio(f_k, method, opt.threads, progress);
      write_out(opt, opt.format == "json" ? polynomial_json(f) : f.str());
    } else if (*cmd_mod) {
      const auto report = cuem::verify_mod_theorem(mc_k, parse_method(mc_method), opt.threads);
      if (opt.format == "json") {
        json j;
        j["holds"] = report.holds;
        j["p"] = report.p;
        j["lhs"] = report.lhs.coefficients();
        j["rhs"] = report.rhs.coefficients();
        write_out(opt, j.dump());
      } else {
        std::string text = "p 4k-1 = " + std::to_string(report.p);
        text += "\nholds " + std::string(report.holds ? "true" : "false");
        text += "\nlhs " + report.lhs.str();
        text += "\nrhs " + report.rhs.str();
        write_out(opt, text);
      }
    } else if (*cmd_pain) {
      if (p_order < 0) p_order = 2 * p_k;
      const auto series = cuem::painleve_coefficients(p_n, p_k, p_order);
      if (opt.format == "json") {
        std::vector<std::string> c;
        for (int j = 1; j <= series.truncation; ++j) c.push_back(series.coefficient(j).str());
        write_out(opt, json(c).dump());
      } else {
        std::string text;
        for (int j = 1; j <= series.truncation; ++j) {
          text += "c_" + std::to_string(j) + " = " + format_rational(series.coefficient(j), opt);
          if (j < series.truncation) text += "\n";
        }
        write_out(opt, text);
      }
    } else if (*cmd_n2_moment) {
      if (!std::isnan(n2_real_k)) {
        const double v = cuem::u2_moment_real_k(n2_real_k, n2_x);
        write_out(opt, opt.format == "json" ? json(v).dump() : format_double(v));
      } else {
        const cuem::BigRational v =
            cuem::u2_moment_sum(n2_k, cuem::BigRational::from_string(n2_q));
        write_out(opt, opt.format == "json" ? json(format_rational(v, opt)).dump()
                                            : format_rational(v, opt));
      }
    } else if (*cmd_n2_log) {
      const double v = cuem::u2_log_moment(n2_r);
      write_out(opt, opt.format == "json" ? json(v).dump() : format_double(v));
    } else if (*cmd_n2_zero) {
      const double v = cuem::u2_mean_zero_count(n2_u);
      write_out(opt, opt.format == "json" ? json(v).dump() : format_double(v));
    } else if (*cmd_mc_moment) {
      const auto est = cuem::mc_moment(h_n, h_k, {h_x, h_x_im}, h_samples, h_seed, h_chunk,
                                       opt.threads);
      write_out(opt, opt.format == "json" ? estimate_json(est) : estimate_plain(est));
    } else if (*cmd_mc_log) {
      const auto est = cuem::mc_log_moment(h_n, h_r, h_samples, h_seed, h_chunk, opt.threads);
      write_out(opt, opt.format == "json" ? estimate_json(est) : estimate_plain(est));
    } else if (*cmd_mc_zeros) {
      const auto hist = cuem::mc_zero_radii(h_n, h_samples, h_seed, h_bins, h_chunk, opt.threads);
      if (opt.format == "json") {
        json j;
        j["edges"] = hist.edges;
        j["counts"] = hist.counts;
        j["total_zeros"] = hist.total_zeros;
        j["samples"] = hist.samples;
        j["seed"] = hist.seed;
        j["chunk_size"] = hist.chunk_size;
        j["max_modulus"] = hist.max_modulus;
        write_out(opt, j.dump());
      } else {
        write_out(opt, hist.to_csv());
      }
    } else if (*cmd_roots) {
      const auto roots = cuem::roots_of_f(r_k, 1e-10, parse_method(r_method));
      if (opt.format == "json") {
        json j = json::array();
        for (const auto& r : roots) j.push_back({r.real(), r.imag()});
        write_out(opt, j.dump());
      } else {
        write_out(opt, roots_csv(roots));
      }
    } else if (*cmd_bk) {
      const cuem::BigRational v = cuem::b_k_leading(b_k);
      write_out(opt, opt.format == "json" ? json(format_rational(v, opt)).dump()
                                          : format_rational(v, opt));
    }
  } catch (const cuem::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cuem::contract_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
