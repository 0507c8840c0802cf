#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mfk/bergman.hpp"
#include "mfk/matroid.hpp"

namespace mfk {

/// Points -log_t|f_i(y)| of the complement, projected orthogonally to e_[n].
struct AmoebaSample {
  double t = 0;
  std::vector<std::vector<double>> points;
};

struct DeviationReport {
  double max = 0;
  double median = 0;
  std::vector<double> distances;
};

namespace detail {

inline std::vector<double> center(std::vector<double> v) {
  double mean = 0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double& x : v) x -= mean;
  return v;
}

/// Tiny dense solve; returns false when the system is singular.
inline bool solve_small(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < k; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (std::abs(a[p][c]) < 1e-12) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  x.resize(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][i];
  return true;
}

/// Euclidean distance from p to the cone spanned by `rays` (all in e^perp).
inline double cone_distance(const std::vector<double>& p, const std::vector<std::vector<double>>& rays) {
  double best = 0;
  for (double x : p) best += x * x;
  const std::size_t k = rays.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::size_t> use;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) use.push_back(i);
    std::vector<std::vector<double>> gram(use.size(), std::vector<double>(use.size()));
    std::vector<double> rhs(use.size());
    for (std::size_t a = 0; a < use.size(); ++a) {
      for (std::size_t b = 0; b < use.size(); ++b)
        for (std::size_t i = 0; i < p.size(); ++i) gram[a][b] += rays[use[a]][i] * rays[use[b]][i];
      for (std::size_t i = 0; i < p.size(); ++i) rhs[a] += rays[use[a]][i] * p[i];
    }
    std::vector<double> x;
    if (!solve_small(gram, rhs, x)) continue;
    if (std::any_of(x.begin(), x.end(), [](double v) { return v < 0; })) continue;
    double d2 = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      double q = p[i];
      for (std::size_t a = 0; a < use.size(); ++a) q -= x[a] * rays[use[a]][i];
      d2 += q * q;
    }
    best = std::min(best, d2);
  }
  return std::sqrt(best);
}

}  // namespace detail

/// -log_t|f_i(y)| for one complex point y of the row space parameters, centered.
inline std::vector<double> amoeba_point(const LinearRealization& r, double t,
                                        const std::vector<std::complex<double>>& y) {
  const RationalMatrix& a = r.matrix;
  std::vector<double> out(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    std::complex<double> f = 0;
    for (std::size_t k = 0; k < a.rows(); ++k) f += a(k, i).get_d() * y[k];
    if (std::abs(f) == 0) throw Error(ErrorCode::kSingularSample, "sample lies on a coordinate hyperplane");
    out[i] = -std::log(std::abs(f)) / std::log(t);
  }
  return detail::center(std::move(out));
}

/// Samples y_k = t^{a_k} e^{iθ_k} with a_k uniform in [-1, 1]. Points whose forms nearly
/// vanish are redrawn; SingularSample is raised after repeated failures.
inline AmoebaSample amoeba_sample(const LinearRealization& r, double t, std::size_t count, std::uint64_t seed) {
  if (!(t > 1)) throw Error(ErrorCode::kParameterOutOfRange, "amoeba base t must exceed 1");
  if (loops(from_matrix(r.matrix)) != 0) throw Error(ErrorCode::kLoopsPresent, "amoeba needs a loop-free realization");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> exponent(-1.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const RationalMatrix& a = r.matrix;
  AmoebaSample out;
  out.t = t;
  constexpr int kMaxRetries = 1000;
  for (std::size_t s = 0; s < count; ++s) {
    int retries = 0;
    while (true) {
      std::vector<std::complex<double>> y(a.rows());
      for (auto& yk : y) yk = std::polar(std::pow(t, exponent(rng)), angle(rng));
      bool ok = true;
      for (std::size_t i = 0; i < a.cols() && ok; ++i) {
        std::complex<double> f = 0;
        double scale = 0;
        for (std::size_t k = 0; k < a.rows(); ++k) {
          const double c = a(k, i).get_d();
          f += c * y[k];
          scale = std::max(scale, std::abs(c * y[k]));
        }
        ok = std::abs(f) > 1e-9 * scale;
      }
      if (ok) {
        out.points.push_back(amoeba_point(r, t, y));
        break;
      }
      if (++retries > kMaxRetries) throw Error(ErrorCode::kSingularSample, "too many samples near the hyperplanes");
    }
  }
  return out;
}

/// Distance of each point to the support of Be(M) with rays e_X (the -Log image).
/// Points are divided by the sampling radius 1 of the exponent box before measuring.
inline DeviationReport support_deviation(const AmoebaSample& sample, const BergmanFan& fan) {
  const int n = fan.n;
  std::vector<std::vector<std::vector<double>>> cones;
  for (const auto& chain : fan.fine_cones) {
    std::vector<std::vector<double>> rays;
    for (ElementSet f : chain) {
      std::vector<double> v(n, 0.0);
      for (int e : elements_of(f)) v[e] = 1.0;
      rays.push_back(detail::center(std::move(v)));
    }
    cones.push_back(std::move(rays));
  }
  DeviationReport out;
  constexpr double kBoxRadius = 1.0;
  for (const auto& p : sample.points) {
    std::vector<double> q(p);
    for (double& x : q) x /= kBoxRadius;
    double best = INFINITY;
    for (const auto& c : cones) best = std::min(best, detail::cone_distance(q, c));
    out.distances.push_back(best);
  }
  if (!out.distances.empty()) {
    out.max = *std::max_element(out.distances.begin(), out.distances.end());
    std::vector<double> sorted = out.distances;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    out.median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  }
  return out;
}

}  // namespace mfk
