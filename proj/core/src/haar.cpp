#include "cuem/haar.hpp"

#include <Eigen/Dense>
#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "cuem/aberth.hpp"
#include "cuem/errors.hpp"
#include "cuem/parallel.hpp"

namespace cuem {

namespace {

constexpr int kMaxSize = 12;
constexpr double kUnitarityTol = 1e-10;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t rotl(std::uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

}  // namespace

double UnitaryMatrix::unitarity_defect() const {
  double defect = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::complex<double> dot = 0.0;
      for (int l = 0; l < n; ++l) dot += std::conj(at(l, i)) * at(l, j);
      if (i == j) dot -= 1.0;
      defect = std::max(defect, std::abs(dot));
    }
  return defect;
}

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t x = seed;
  for (auto& word : s_) {
    x = splitmix64(x);
    word = x;
  }
}

std::uint64_t RandomStream::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double RandomStream::uniform01() {
  return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::complex<double> RandomStream::complex_gaussian() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t chunk_substream_seed(std::uint64_t seed, std::uint64_t chunk_index) {
  return splitmix64(seed + (chunk_index + 1) * 0x9E3779B97F4A7C15ull);
}

UnitaryMatrix sample_haar(int n, RandomStream& stream) {
  if (n < 1) throw validation_error("Haar sampling needs N >= 1");
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = stream.complex_gaussian();

  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    const std::complex<double> r = qr.matrixQR()(j, j);
    const double mag = std::abs(r);
    const std::complex<double> phase = (mag == 0.0) ? std::complex<double>(1.0) : r / mag;
    q.col(j) *= phase;
  }

  UnitaryMatrix x;
  x.n = n;
  x.a.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x.at(i, j) = q(i, j);
  if (x.unitarity_defect() > kUnitarityTol)
    throw contract_error("sampled matrix misses unitarity tolerance");
  return x;
}

std::vector<std::complex<double>> charpoly_coefficients(const UnitaryMatrix& x) {
  const int n = x.n;
  if (n > kMaxSize) throw size_too_large(n, kMaxSize);

  // Power traces of X^dagger are the conjugated traces of X^j.
  std::vector<std::complex<double>> traces(static_cast<std::size_t>(n) + 1);
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = x.at(i, j);
  Eigen::MatrixXcd power = m;
  for (int j = 1; j <= n; ++j) {
    traces[static_cast<std::size_t>(j)] = std::conj(power.trace());
    if (j < n) power = power * m;
  }

  // Newton's identities: j e_j = sum_{i=1..j} (-1)^{i-1} p_i e_{j-i}.
  std::vector<std::complex<double>> e(static_cast<std::size_t>(n) + 1);
  e[0] = 1.0;
  for (int j = 1; j <= n; ++j) {
    std::complex<double> acc = 0.0;
    for (int i = 1; i <= j; ++i) {
      const std::complex<double> term =
          traces[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - i)];
      acc += (i % 2) ? term : -term;
    }
    e[static_cast<std::size_t>(j)] = acc / static_cast<double>(j);
  }

  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j)
    coeffs[static_cast<std::size_t>(j)] =
        (j % 2) ? -e[static_cast<std::size_t>(j)] : e[static_cast<std::size_t>(j)];
  return coeffs;
}

std::pair<std::complex<double>, std::complex<double>> charpoly_and_derivative(
    const UnitaryMatrix& x, std::complex<double> at) {
  const auto c = charpoly_coefficients(x);
  std::complex<double> value = 0.0, derivative = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    derivative = derivative * at + value;
    value = value * at + c[i];
  }
  return {value, derivative};
}

namespace {

struct ChunkStats {
  double sum = 0.0;
  double sum_sq = 0.0;
};

// Pairwise tree reduction in chunk order; the combination order is fixed, so
// the floating-point result does not depend on the worker count.
ChunkStats pairwise_reduce(std::vector<ChunkStats> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<ChunkStats> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2)
      next.push_back({parts[i].sum + parts[i + 1].sum, parts[i].sum_sq + parts[i + 1].sum_sq});
    if (parts.size() % 2) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts[0];
}

MCEstimate run_chunked(int n, std::uint64_t samples, std::uint64_t seed, std::uint64_t chunk_size,
                       int threads,
                       const std::function<double(const UnitaryMatrix&)>& statistic) {
  if (n < 1) throw validation_error("Monte Carlo needs N >= 1");
  if (n > kMaxSize) throw size_too_large(n, kMaxSize);
  if (samples < 1000) throw validation_error("Monte Carlo needs at least 10^3 samples");
  if (chunk_size == 0) throw validation_error("chunk size must be positive");

  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  std::vector<ChunkStats> parts(chunks);
  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
    RandomStream stream(chunk_substream_seed(seed, c));
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
    const std::uint64_t end = std::min(begin + chunk_size, samples);
    ChunkStats local;
    for (std::uint64_t s = begin; s < end; ++s) {
      const UnitaryMatrix x = sample_haar(n, stream);
      const double v = statistic(x);
      local.sum += v;
      local.sum_sq += v * v;
    }
    parts[c] = local;
  });

  const ChunkStats total = pairwise_reduce(std::move(parts));
  const double count = static_cast<double>(samples);
  const double mean = total.sum / count;
  const double variance = std::max(0.0, (total.sum_sq - total.sum * total.sum / count) /
                                            (count - 1.0));
  MCEstimate est;
  est.mean = mean;
  est.std_error = std::sqrt(variance / count);
  est.samples = samples;
  est.seed = seed;
  est.chunk_size = chunk_size;
  return est;
}

}  // namespace

MCEstimate mc_moment(int n, double k, std::complex<double> x, std::uint64_t samples,
                     std::uint64_t seed, std::uint64_t chunk_size, int threads) {
  return run_chunked(n, samples, seed, chunk_size, threads, [k, x](const UnitaryMatrix& u) {
    const auto [value, derivative] = charpoly_and_derivative(u, x);
    (void)value;
    return std::pow(std::abs(derivative), 2.0 * k);
  });
}

MCEstimate mc_log_moment(int n, double r, std::uint64_t samples, std::uint64_t seed,
                         std::uint64_t chunk_size, int threads) {
  if (!(r >= 0.0 && r < 1.0)) throw validation_error("log moment needs 0 <= r < 1");
  return run_chunked(n, samples, seed, chunk_size, threads, [r](const UnitaryMatrix& u) {
    const auto [value, derivative] = charpoly_and_derivative(u, {r, 0.0});
    (void)value;
    return std::log(std::abs(derivative));
  });
}

double RadialHistogram::cumulative_mean_count(std::size_t edge_index) const {
  std::uint64_t cum = 0;
  for (std::size_t b = 0; b < edge_index && b < counts.size(); ++b) cum += counts[b];
  return static_cast<double>(cum) / static_cast<double>(samples);
}

namespace {

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace

std::string RadialHistogram::to_csv() const {
  std::string out = "u_lo,u_hi,count,cum_fraction\n";
  std::uint64_t cum = 0;
  for (std::size_t b = 0; b < counts.size(); ++b) {
    cum += counts[b];
    out += shortest(edges[b]) + "," + shortest(edges[b + 1]) + "," +
           std::to_string(counts[b]) + "," +
           shortest(static_cast<double>(cum) / static_cast<double>(samples)) + "\n";
  }
  return out;
}

RadialHistogram mc_zero_radii(int n, std::uint64_t samples, std::uint64_t seed, int bins,
                              std::uint64_t chunk_size, int threads) {
  if (n < 2) throw validation_error("zero radii need N >= 2");
  if (n > kMaxSize) throw size_too_large(n, kMaxSize);
  if (samples < 1000) throw validation_error("Monte Carlo needs at least 10^3 samples");
  if (bins < 1) throw validation_error("need at least one bin");
  if (chunk_size == 0) throw validation_error("chunk size must be positive");

  constexpr double kEdgeTol = 1e-8;  // tolerance-inflated upper edge
  const std::uint64_t chunks = (samples + chunk_size - 1) / chunk_size;
  std::vector<std::vector<std::uint64_t>> part_counts(
      chunks, std::vector<std::uint64_t>(static_cast<std::size_t>(bins), 0));
  std::vector<double> part_max(chunks, 0.0);

  parallel_for(static_cast<std::size_t>(chunks), threads, [&](std::size_t c) {
    RandomStream stream(chunk_substream_seed(seed, c));
    const std::uint64_t begin = static_cast<std::uint64_t>(c) * chunk_size;
    const std::uint64_t end = std::min(begin + chunk_size, samples);
    auto& local = part_counts[c];
    double local_max = 0.0;
    for (std::uint64_t s = begin; s < end; ++s) {
      const UnitaryMatrix x = sample_haar(n, stream);
      const auto coeffs = charpoly_coefficients(x);
      std::vector<double> radii;
      if (n == 2) {
        // The single zero sits at the midpoint of the two eigenvalues.
        radii.push_back(std::abs(-coeffs[1] / (2.0 * coeffs[2])));
      } else {
        std::vector<std::complex<double>> d(coeffs.size() - 1);
        for (std::size_t j = 1; j < coeffs.size(); ++j)
          d[j - 1] = static_cast<double>(j) * coeffs[j];
        for (const auto& z : aberth_roots(d)) radii.push_back(std::abs(z));
      }
      for (double radius : radii) {
        local_max = std::max(local_max, radius);
        const double clipped = std::min(radius, 1.0);
        auto bin = static_cast<std::size_t>(clipped * bins);
        if (bin >= static_cast<std::size_t>(bins)) bin = static_cast<std::size_t>(bins) - 1;
        ++local[bin];
      }
    }
    part_max[c] = local_max;
  });

  RadialHistogram h;
  h.samples = samples;
  h.seed = seed;
  h.chunk_size = chunk_size;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b)
    h.edges[static_cast<std::size_t>(b)] = static_cast<double>(b) / bins;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t b = 0; b < h.counts.size(); ++b) h.counts[b] += part_counts[c][b];
    h.max_modulus = std::max(h.max_modulus, part_max[c]);
  }
  for (const auto count : h.counts) h.total_zeros += count;
  if (h.max_modulus > 1.0 + kEdgeTol)
    throw contract_error("a zero of Lambda' landed outside the closed unit disc");
  return h;
}

}  // namespace cuem
