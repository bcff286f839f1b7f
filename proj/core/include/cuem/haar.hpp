#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cuem {

// N x N complex matrix sampled from Haar measure; unitarity within 1e-10 is
// checked at construction time by the sampler.
struct UnitaryMatrix {
  int n = 0;
  std::vector<std::complex<double>> a;  // row-major

  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<std::size_t>(i) * n + j];
  }
  // max_ij |(X^dagger X - I)_ij|
  double unitarity_defect() const;
};

struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;
};

struct RadialHistogram {
  std::vector<double> edges;           // bins+1 edges spanning [0, 1]
  std::vector<std::uint64_t> counts;   // per bin; the top bin absorbs [1, 1+1e-8]
  std::uint64_t total_zeros = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 0;
  double max_modulus = 0.0;

  // Cumulative count through bin edge i divided by samples: the empirical
  // mean zero-counting function at that radius.
  double cumulative_mean_count(std::size_t edge_index) const;
  // CSV with header u_lo,u_hi,count,cum_fraction.
  std::string to_csv() const;
};

// xoshiro256++ with splitmix64 seeding; the source of all Monte Carlo
// randomness so runs are reproducible across platforms.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);
  std::uint64_t next();
  double uniform01();          // in (0, 1]
  double gaussian();           // standard normal via Box-Muller
  std::complex<double> complex_gaussian();

private:
  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Substream seed for chunk i: splitmix64(seed + (i+1) * golden gamma). Chunked
// runs are bit-identical for a fixed (seed, chunk_size) no matter how many
// workers execute them.
std::uint64_t chunk_substream_seed(std::uint64_t seed, std::uint64_t chunk_index);

// QR of a Ginibre matrix with the R-diagonal phase correction; without the
// correction the distribution is not Haar.
UnitaryMatrix sample_haar(int n, RandomStream& stream);

// Coefficients of Lambda_X(s) = det(I - s X^dagger), ascending, via power
// traces and Newton's identities. Documented cap n <= 12.
std::vector<std::complex<double>> charpoly_coefficients(const UnitaryMatrix& x);

// (Lambda(x), Lambda'(x)) evaluated from the coefficients.
std::pair<std::complex<double>, std::complex<double>> charpoly_and_derivative(
    const UnitaryMatrix& x, std::complex<double> at);

MCEstimate mc_moment(int n, double k, std::complex<double> x, std::uint64_t samples,
                     std::uint64_t seed, std::uint64_t chunk_size = 8192, int threads = 1);

MCEstimate mc_log_moment(int n, double r, std::uint64_t samples, std::uint64_t seed,
                         std::uint64_t chunk_size = 8192, int threads = 1);

// Moduli of the N-1 zeros of Lambda' per sample, binned on [0,1]. N = 2 uses
// the closed-form midpoint zero; N >= 3 runs the simultaneous root finder on
// the derivative coefficients.
RadialHistogram mc_zero_radii(int n, std::uint64_t samples, std::uint64_t seed, int bins,
                              std::uint64_t chunk_size = 8192, int threads = 1);

}  // namespace cuem
