#include "burgers/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "burgers/errors.hpp"

namespace burgers {

GridSpec make_grid(int N, int M, double T) {
  if (N < 2) throw ConfigError("grid.N must be >= 2, got " + std::to_string(N));
  if (M < 1) throw ConfigError("grid.M must be >= 1, got " + std::to_string(M));
  if (!(T > 0.0) || !std::isfinite(T))
    throw ConfigError("grid.T must be a positive finite time, got " + std::to_string(T));
  return GridSpec{N, M, T, 1.0 / N, T / M};
}

void ModelParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(nu)) throw ConfigError("params.nu must be > 0");
  if (!std::isfinite(wd) || wd < 0.0) throw ConfigError("params.wd must be >= 0");
  if (!positive(c0)) throw ConfigError("params.c0 must be > 0");
  if (!positive(c1)) throw ConfigError("params.c1 must be > 0");
  if (!std::isfinite(theta) || theta < 0.0 || theta > 1.0)
    throw ConfigError("params.theta must lie in [0, 1]");
}

std::string_view to_string(InitialCondition::Kind kind) {
  switch (kind) {
    case InitialCondition::Kind::quadratic5: return "quadratic5";
    case InitialCondition::Kind::cosine2: return "cosine2";
    case InitialCondition::Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

InitialCondition::Kind parse_ic_kind(std::string_view name) {
  if (name == "quadratic5") return InitialCondition::Kind::quadratic5;
  if (name == "cosine2") return InitialCondition::Kind::cosine2;
  if (name == "tabulated") return InitialCondition::Kind::tabulated;
  throw ConfigError("ic.kind must be one of quadratic5, cosine2, tabulated; got '" +
                    std::string(name) + "'");
}

StateField sample_initial(const InitialCondition& ic, const GridSpec& grid,
                          const ModelParams& params) {
  const int n = grid.nodes();
  StateField field{std::vector<double>(n), 0};
  const double shift = ic.subtract_wd ? params.wd : 0.0;

  switch (ic.kind) {
    case InitialCondition::Kind::quadratic5:
      for (int i = 0; i < n; ++i) {
        const double x = grid.x(i);
        field.values[i] = 5.0 * x * (x - 1.0) - shift;
      }
      break;
    case InitialCondition::Kind::cosine2:
      for (int i = 0; i < n; ++i)
        field.values[i] = 2.0 * std::cos(std::numbers::pi * grid.x(i)) - shift;
      break;
    case InitialCondition::Kind::tabulated:
      if (static_cast<int>(ic.table.size()) != n)
        throw ConfigError("ic.values has " + std::to_string(ic.table.size()) +
                          " entries, grid needs N+1 = " + std::to_string(n));
      for (int i = 0; i < n; ++i) field.values[i] = ic.table[i] - shift;
      break;
  }
  return field;
}

}  // namespace burgers
