#include "burgers/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace burgers::ops {

namespace {

int last_index(std::span<const double> W) { return static_cast<int>(W.size()) - 1; }

void require_index(bool ok, const char* op, int i) {
  if (!ok) throw std::out_of_range(std::string(op) + ": index " + std::to_string(i) + " out of range");
}

void require_same_length(std::span<const double> a, std::span<const double> b, const char* op) {
  if (a.size() != b.size()) throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace

double dx_forward(std::span<const double> W, double h, int i) {
  require_index(i >= 0 && i < last_index(W), "dx_forward", i);
  return (W[i + 1] - W[i]) / h;
}

double dx_backward(std::span<const double> W, double h, int i) {
  require_index(i >= 1 && i <= last_index(W), "dx_backward", i);
  return (W[i] - W[i - 1]) / h;
}

double dx_central(std::span<const double> W, double h, int i) {
  require_index(i >= 1 && i < last_index(W), "dx_central", i);
  return (W[i + 1] - W[i - 1]) / (2.0 * h);
}

double dx2_interior(std::span<const double> W, double h, int i) {
  require_index(i >= 1 && i < last_index(W), "dx2_interior", i);
  return (W[i + 1] - 2.0 * W[i] + W[i - 1]) / (h * h);
}

std::vector<double> theta_combine(std::span<const double> Wn, std::span<const double> Wnp1,
                                  double theta) {
  require_same_length(Wn, Wnp1, "theta_combine");
  std::vector<double> out(Wn.size());
  for (std::size_t i = 0; i < Wn.size(); ++i) out[i] = theta * Wnp1[i] + (1.0 - theta) * Wn[i];
  return out;
}

double phi(std::span<const double> W, double h, int i) {
  const int N = last_index(W);
  require_index(i >= 0 && i <= N && N >= 1, "phi", i);
  if (i == 0) return (2.0 * W[0] + W[1]) * dx_forward(W, h, 0) / 3.0;
  if (i == N) return (2.0 * W[N] + W[N - 1]) * dx_backward(W, h, N) / 3.0;
  return (W[i - 1] + W[i] + W[i + 1]) * dx_central(W, h, i) / 3.0;
}

std::vector<double> phi_field(std::span<const double> W, double h) {
  std::vector<double> out(W.size());
  for (int i = 0; i <= last_index(W); ++i) out[i] = phi(W, h, i);
  return out;
}

double g0_eval(double W0, const ModelParams& p) {
  return ((p.c0 + p.wd) * W0 + (2.0 / (9.0 * p.c0)) * W0 * W0 * W0) / p.nu;
}

double gN_eval(double WN, const ModelParams& p) {
  return -((p.c1 + p.wd) * WN + (2.0 / (9.0 * p.c1)) * WN * WN * WN) / p.nu;
}

double g0_slope(double W0, const ModelParams& p) {
  return (p.c0 + p.wd + (2.0 / (3.0 * p.c0)) * W0 * W0) / p.nu;
}

double gN_slope(double WN, const ModelParams& p) {
  return -(p.c1 + p.wd + (2.0 / (3.0 * p.c1)) * WN * WN) / p.nu;
}

double dx2_boundary(std::span<const double> W, double h, const ModelParams& p, End end) {
  const int N = last_index(W);
  if (N < 1) throw std::invalid_argument("dx2_boundary: need at least two nodes");
  if (end == End::left) return (2.0 / h) * (dx_forward(W, h, 0) - g0_eval(W[0], p));
  return (2.0 / h) * (-dx_backward(W, h, N) + gN_eval(W[N], p));
}

double inner_l2(std::span<const double> W, std::span<const double> V, double h) {
  require_same_length(W, V, "inner_l2");
  const int N = last_index(W);
  double interior = 0.0;
  for (int i = 1; i < N; ++i) interior += W[i] * V[i];
  return 0.5 * h * W[0] * V[0] + h * interior + 0.5 * h * W[N] * V[N];
}

double inner_h(std::span<const double> W, std::span<const double> V, double h) {
  require_same_length(W, V, "inner_h");
  double sum = 0.0;
  for (int i = 1; i <= last_index(W); ++i) sum += W[i] * V[i];
  return h * sum;
}

double max_abs(std::span<const double> W) {
  double m = 0.0;
  for (double v : W) m = std::max(m, std::abs(v));
  return m;
}

NormReport norms(std::span<const double> W, double h) {
  NormReport r;
  r.l2 = std::sqrt(inner_l2(W, W, h));
  r.lh = std::sqrt(inner_h(W, W, h));
  r.linf = max_abs(W);
  double s = 0.0;
  for (int i = 1; i <= last_index(W); ++i) {
    const double d = (W[i] - W[i - 1]) / h;
    s += d * d;
  }
  r.h1_semi = std::sqrt(h * s);
  return r;
}

double transport_form(std::span<const double> W, double h) {
  const int N = last_index(W);
  double interior = 0.0;
  for (int i = 1; i < N; ++i) interior += dx_central(W, h, i) * W[i];
  return 0.5 * h * dx_forward(W, h, 0) * W[0] + h * interior +
         0.5 * h * dx_backward(W, h, N) * W[N];
}

double second_difference_energy(std::span<const double> W, double h, const ModelParams& p) {
  const int N = last_index(W);
  double interior = 0.0;
  for (int i = 1; i < N; ++i) {
    const double d = dx2_interior(W, h, i);
    interior += d * d;
  }
  const double left = dx2_boundary(W, h, p, End::left);
  const double right = dx2_boundary(W, h, p, End::right);
  return 0.5 * h * left * left + h * interior + 0.5 * h * right * right;
}

double first_difference_energy(std::span<const double> W, double h) {
  const int N = last_index(W);
  double interior = 0.0;
  for (int i = 1; i < N; ++i) {
    const double d = dx_central(W, h, i);
    interior += d * d;
  }
  const double left = dx_forward(W, h, 0);
  const double right = dx_backward(W, h, N);
  return 0.5 * h * left * left + h * interior + 0.5 * h * right * right;
}

double norm1_squared(std::span<const double> W, double h) {
  const int N = last_index(W);
  const double semi = norms(W, h).h1_semi;
  const double a = W[0] * W[0];
  const double b = W[N] * W[N];
  return semi * semi + a + b + a * a + b * b;
}

}  // namespace burgers::ops
