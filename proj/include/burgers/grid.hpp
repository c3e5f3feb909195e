#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace burgers {

/// Uniform mesh on [0,1] x [0,T]. h and k are stored once so that every
/// operator sees the same rounding of 1/N and T/M.
struct GridSpec {
  int N = 0;
  int M = 0;
  double T = 0.0;
  double h = 0.0;
  double k = 0.0;

  double x(int i) const noexcept { return i * h; }
  double t(int n) const noexcept { return n * k; }
  int nodes() const noexcept { return N + 1; }
};

/// Throws ConfigError unless N >= 2, M >= 1, T > 0.
GridSpec make_grid(int N, int M, double T);

/// Physical and control constants of the transformed system w = y - w_d.
struct ModelParams {
  double nu = 1.0;
  double wd = 0.0;
  double c0 = 1.0;
  double c1 = 1.0;
  double theta = 1.0;

  /// Throws ConfigError naming the first offending field.
  void validate() const;
};

/// One time level of the grid function.
struct StateField {
  std::vector<double> values;
  int time_index = 0;

  std::size_t size() const noexcept { return values.size(); }
  std::span<const double> view() const noexcept { return values; }
  double operator[](std::size_t i) const { return values[i]; }
};

struct InitialCondition {
  enum class Kind { quadratic5, cosine2, tabulated };

  Kind kind = Kind::quadratic5;
  std::vector<double> table;
  // Closed forms are given in the original variable y and are shifted by
  // w_d; tabulated data are taken as w values unless this is set.
  bool subtract_wd = true;

  static InitialCondition quadratic5() { return {Kind::quadratic5, {}, true}; }
  static InitialCondition cosine2() { return {Kind::cosine2, {}, true}; }
  static InitialCondition tabulated(std::vector<double> values, bool subtract_wd = false) {
    return {Kind::tabulated, std::move(values), subtract_wd};
  }
};

std::string_view to_string(InitialCondition::Kind kind);
InitialCondition::Kind parse_ic_kind(std::string_view name);

/// values[i] = w_0(x_i). Throws ConfigError on a tabulated length mismatch.
StateField sample_initial(const InitialCondition& ic, const GridSpec& grid,
                          const ModelParams& params);

}  // namespace burgers
