#pragma once

// Scheme-level checks shared by the unit tests and the acceptance binary:
// oracle equivalence of the residual, finite-difference Jacobian agreement
// and manufactured-field truncation rates.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "burgers/stepper.hpp"
#include "oracles/scheme_oracle.hpp"

namespace checks {

struct RandomCase {
  burgers::GridSpec grid;
  burgers::ModelParams params;
  burgers::StateField Wn, Wnext;
};

/// N in [2, max_N], entries in [-1, 1], nu in [0.1, 1], wd in [0, 2],
/// gains in [0.5, 2], k in [0.01, 0.2]. theta < 0 draws theta from [0, 1].
inline RandomCase random_case(std::mt19937_64& rng, int max_N, double theta = -1.0) {
  std::uniform_int_distribution<int> n(2, max_N);
  std::uniform_real_distribution<double> u(-1.0, 1.0), unit(0.0, 1.0);
  RandomCase c;
  const int N = max_N == 2 ? 2 : n(rng);
  const double k = 0.01 + 0.19 * unit(rng);
  c.grid = burgers::GridSpec{N, 1, k, 1.0 / N, k};
  c.params.nu = 0.1 + 0.9 * unit(rng);
  c.params.wd = 2.0 * unit(rng);
  c.params.c0 = 0.5 + 1.5 * unit(rng);
  c.params.c1 = 0.5 + 1.5 * unit(rng);
  c.params.theta = theta < 0.0 ? unit(rng) : theta;
  c.Wn.values.resize(N + 1);
  c.Wnext.values.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    c.Wn.values[i] = u(rng);
    c.Wnext.values[i] = u(rng);
  }
  c.Wnext.time_index = 1;
  return c;
}

inline oracle::Params to_oracle(const burgers::ModelParams& p) {
  return {p.nu, p.wd, p.c0, p.c1, p.theta};
}

/// Largest |library row - oracle row| over `count` random cases.
inline double oracle_max_abs_diff(int count, int max_N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int c = 0; c < count; ++c) {
    const RandomCase rc = random_case(rng, max_N);
    const auto lib = burgers::residual(rc.Wnext, rc.Wn, rc.grid, rc.params).rows;
    const auto ref = oracle::rows(rc.Wnext.values, rc.Wn.values, rc.grid.h, rc.grid.k,
                                  to_oracle(rc.params));
    for (std::size_t i = 0; i < lib.size(); ++i) worst = std::max(worst, std::abs(lib[i] - ref[i]));
  }
  return worst;
}

/// Largest entrywise |J - J_fd| / max(|J|, |J_fd|, 1) over `count` random
/// states at fixed N, where J_fd is the central difference of the residual
/// with the given step. Entries outside the band are compared too.
inline double jacobian_max_rel_diff(int count, int N, double theta, double step,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int c = 0; c < count; ++c) {
    RandomCase rc = random_case(rng, 2, theta);
    // Redraw at the requested size.
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    rc.grid.N = N;
    rc.grid.h = 1.0 / N;
    rc.Wn.values.assign(N + 1, 0.0);
    rc.Wnext.values.assign(N + 1, 0.0);
    for (int i = 0; i <= N; ++i) {
      rc.Wn.values[i] = u(rng);
      rc.Wnext.values[i] = u(rng);
    }
    const burgers::Tridiagonal J = burgers::jacobian(rc.Wnext, rc.Wn, rc.grid, rc.params);
    for (int j = 0; j <= N; ++j) {
      burgers::StateField plus = rc.Wnext, minus = rc.Wnext;
      plus.values[j] += step;
      minus.values[j] -= step;
      const auto Fp = burgers::residual(plus, rc.Wn, rc.grid, rc.params).rows;
      const auto Fm = burgers::residual(minus, rc.Wn, rc.grid, rc.params).rows;
      for (int i = 0; i <= N; ++i) {
        const double fd = (Fp[i] - Fm[i]) / (2.0 * step);
        const double an = J.at(i, j);
        const double scale = std::max({std::abs(an), std::abs(fd), 1.0});
        worst = std::max(worst, std::abs(an - fd) / scale);
      }
    }
  }
  return worst;
}

// Manufactured field w = e^{-t}(x³/3 - x²/2); w_x vanishes at both ends.
inline double mf_w(double x, double t) { return std::exp(-t) * (x * x * x / 3.0 - x * x / 2.0); }

inline double mf_forcing(double x, double t, const burgers::ModelParams& p) {
  const double e = std::exp(-t);
  const double q = x * x * x / 3.0 - x * x / 2.0;
  const double q1 = x * x - x;
  const double q2 = 2.0 * x - 1.0;
  return -e * q - p.nu * e * q2 + p.wd * e * q1 + e * e * q * q1;
}

struct Truncation {
  double interior = 0.0;  // max |T_i|, 1 <= i <= N-1
  double boundary = 0.0;  // max(|T_0|, |T_N|)
};

/// Scheme rows on the manufactured field between t0 and t0 + k minus the
/// forcing at t0 + θk, with the exact zero fluxes supplied at both ends.
inline Truncation truncation(int N, double k, const burgers::ModelParams& p, double t0 = 0.25) {
  const burgers::GridSpec g{N, 1, k, 1.0 / N, k};
  burgers::StateField a, b;
  a.values.resize(N + 1);
  b.values.resize(N + 1);
  for (int i = 0; i <= N; ++i) {
    a.values[i] = mf_w(i * g.h, t0);
    b.values[i] = mf_w(i * g.h, t0 + k);
  }
  const auto rows =
      burgers::residual(b, a, g, p, burgers::BoundaryLaw::prescribed(0.0, 0.0)).rows;
  const double tf = t0 + p.theta * k;
  Truncation t;
  for (int i = 0; i <= N; ++i) {
    const double r = std::abs(rows[i] - mf_forcing(i * g.h, tf, p));
    if (i == 0 || i == N) t.boundary = std::max(t.boundary, r);
    else t.interior = std::max(t.interior, r);
  }
  return t;
}

struct Rates {
  std::vector<double> interior;  // observed orders between successive N
  std::vector<double> boundary;
};

/// Orders in h along N, 2N, 4N, ... with k = k_scale * h^k_power.
inline Rates truncation_rates(const std::vector<int>& Ns, double k_scale, double k_power,
                              const burgers::ModelParams& p) {
  Rates r;
  Truncation prev{};
  for (std::size_t j = 0; j < Ns.size(); ++j) {
    const double h = 1.0 / Ns[j];
    const Truncation t = truncation(Ns[j], k_scale * std::pow(h, k_power), p);
    if (j > 0) {
      r.interior.push_back(std::log2(prev.interior / t.interior));
      r.boundary.push_back(std::log2(prev.boundary / t.boundary));
    }
    prev = t;
  }
  return r;
}

inline double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace checks
