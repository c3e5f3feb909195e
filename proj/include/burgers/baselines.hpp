#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/analysis.hpp"

namespace burgers::baselines {

/// One published row. Column a and b are the two error/order column pairs
/// in the order they are printed.
struct Row {
  int resolution = 0;
  std::optional<double> err_a;
  std::optional<double> order_a;
  std::optional<double> err_b;
  std::optional<double> order_b;
};

struct Table {
  std::string id;
  std::string description;
  std::string column_a;
  std::string column_b;
  std::vector<Row> rows;

  const Row* find(int resolution) const;
  std::vector<int> ladder() const;
};

/// Spatial study, θ=1, M=10000, quadratic5 data; columns max norm, L2.
const Table& spatial_state();
/// Temporal study, N=100; column a is θ=1/2, column b is θ=1.
const Table& temporal_state();
/// Spatial controller study, θ=1, M=10000; columns x=0, x=1.
const Table& spatial_controller();

inline constexpr double kOrderTolerance = 0.15;
inline constexpr double kErrorFactor = 2.0;

/// Verdict on one computed value against its published counterpart.
struct Check {
  int resolution = 0;
  std::string column;  // e.g. "order_a"
  double computed = 0.0;
  double published = 0.0;
  bool pass = false;
};

struct Comparison {
  std::vector<Check> checks;

  bool pass() const;
};

/// Computed row with the same two column pairs as a Table.
struct Computed {
  int resolution = 0;
  double err_a = 0.0;
  std::optional<double> order_a;
  double err_b = 0.0;
  std::optional<double> order_b;
};

/// Orders within kOrderTolerance at the two finest published rows that were
/// computed; errors within kErrorFactor at every published row that was
/// computed. A column is skipped when use_a/use_b is false.
Comparison compare(const Table& table, const std::vector<Computed>& rows, bool use_a = true,
                   bool use_b = true);

std::vector<Computed> from_state_rows(const std::vector<analysis::ConvergenceRow>& rows);
std::vector<Computed> from_controller_rows(const std::vector<analysis::ControllerRow>& rows);

}  // namespace burgers::baselines
