#pragma once

// Curve data behind the thirteen comparison figures (branch curves of the
// Bernstein and differential bounds plotted against the slope lambda) and the
// two constant-comparison tables.
//
// Figure data is emitted as rectangular CSV: column 1 is lambda over the
// union of the figure's curve domains, one column per curve, and cells where
// lambda falls outside a curve's own domain are left empty rather than
// extrapolated.  Formatting uses shortest round-trip decimals, so the output
// is bit-stable across runs.

#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "octant/bernstein.hpp"
#include "octant/polarization.hpp"
#include "octant/poly.hpp"
#include "octant/unconditional.hpp"

namespace octant {

using BranchId = std::variant<BranchC, BranchD>;

inline const char* branch_label(const BranchId& id) {
  return std::visit([](auto b) { return branch_label(b); }, id);
}

inline Interval branch_domain(const BranchId& id) {
  if (std::holds_alternative<BranchC>(id)) {
    return branch_curve_c_domain(std::get<BranchC>(id));
  }
  return branch_curve_d_domain(std::get<BranchD>(id));
}

inline double branch_value(const BranchId& id, double lam) {
  if (std::holds_alternative<BranchC>(id)) {
    return branch_curve_c(std::get<BranchC>(id), lam);
  }
  return branch_curve_d(std::get<BranchD>(id), lam);
}

struct FigureSpec {
  int number = 0;
  std::vector<BranchId> curves;
  Interval domain;  // union of the curve domains (always an interval here)
};

// The curve list of each figure.
inline FigureSpec figure_spec(int n) {
  using C = BranchC;
  using D = BranchD;
  std::vector<BranchId> curves;
  switch (n) {
    case 1:
      curves = {C::C1, C::C6, C::C7};
      break;
    case 2:
      curves = {C::C4, C::C5, C::C7};
      break;
    case 3:
      curves = {C::C2, C::C3, C::C4};
      break;
    case 4:
      curves = {C::C2, C::C4, C::C5};
      break;
    case 5:
      curves = {D::D11, D::D21, D::D22};
      break;
    case 6:
      curves = {D::D12, D::D31};
      break;
    case 7:
      curves = {D::D22, D::D42};
      break;
    case 8:
      curves = {D::D21, D::D52};
      break;
    case 9:
      curves = {D::D21, D::D22, D::D51};
      break;
    case 10:
      curves = {D::D6, D::D82, D::D83};
      break;
    case 11:
      curves = {D::D71, D::D101};
      break;
    case 12:
      curves = {D::D72, D::D101, D::D102};
      break;
    case 13:
      curves = {D::D82, D::D83, D::D102};
      break;
    default:
      throw std::domain_error("figure_spec: figure number " +
                              std::to_string(n) + " outside 1..13");
  }
  Interval dom = branch_domain(curves.front());
  for (const auto& c : curves) {
    const Interval d = branch_domain(c);
    dom.lo = std::min(dom.lo, d.lo);
    dom.hi = std::max(dom.hi, d.hi);
  }
  return {n, std::move(curves), dom};
}

// One sampled figure row: lambda plus one optional value per curve (empty
// when lambda is outside that curve's domain).
struct FigureRow {
  double lambda = 0.0;
  std::vector<std::optional<double>> values;
};

inline std::vector<FigureRow> figure_rows(const FigureSpec& spec,
                                          int samples) {
  if (samples < 2) {
    throw std::invalid_argument("figure_rows: samples must be >= 2");
  }
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double lam =
        spec.domain.lo + (spec.domain.hi - spec.domain.lo) *
                             (static_cast<double>(i) /
                              static_cast<double>(samples - 1));
    FigureRow row{lam, {}};
    row.values.reserve(spec.curves.size());
    for (const auto& c : spec.curves) {
      if (branch_domain(c).contains(lam)) {
        row.values.push_back(branch_value(c, lam));
      } else {
        row.values.push_back(std::nullopt);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_figure_csv(std::ostream& os, const FigureSpec& spec,
                             int samples) {
  os << "lambda";
  for (const auto& c : spec.curves) os << ',' << branch_label(c);
  os << '\n';
  for (const FigureRow& row : figure_rows(spec, samples)) {
    os << format_double(row.lambda);
    for (const auto& v : row.values) {
      os << ',';
      if (v) os << format_double(*v);
    }
    os << '\n';
  }
}

// Constant-comparison tables.  The pi/4-sector column is computed by this
// library; every other cell is a reference constant quoted for comparison.
enum class TableKind { Sectors, Lp };

struct TableEntry {
  const char* constant;  // "markov", "polarization", "unconditional"
  const char* domain;
  double value;
  bool computed;  // true: computed here; false: reference constant
};

inline std::vector<TableEntry> comparison_table(TableKind which) {
  constexpr double sqrt2 = std::numbers::sqrt2;
  if (which == TableKind::Sectors) {
    const MarkovConstant markov = markov_constant();
    const PolarizationConstant pol = polarization_constant();
    const UnconditionalConstant unc = unconditional_constant(2048);
    return {
        {"markov", "simplex", 2.0 * std::sqrt(10.0), false},
        {"markov", "sector_pi_2", 2.0 * std::sqrt(5.0), false},
        {"markov", "sector_pi_4", markov.squared, true},
        {"markov", "square", std::sqrt(13.0), false},
        {"polarization", "simplex", 3.0, false},
        {"polarization", "sector_pi_2", 2.0, false},
        {"polarization", "sector_pi_4", pol.value, true},
        {"polarization", "square", 1.5, false},
        {"unconditional", "simplex", 2.0, false},
        {"unconditional", "sector_pi_2", 3.0, false},
        {"unconditional", "sector_pi_4", unc.value, true},
        {"unconditional", "square", 5.0, false},
    };
  }
  return {
      {"markov", "l1", 4.0, false},
      {"markov", "l2", 2.0, false},
      {"markov", "linf", 2.0 * sqrt2, false},
      {"polarization", "l1", 2.0, false},
      {"polarization", "l2", 1.0, false},
      {"polarization", "linf", 2.0, false},
      {"unconditional", "l1", (1.0 + sqrt2) / 2.0, false},
      {"unconditional", "l2", sqrt2, false},
      {"unconditional", "linf", 1.0 + sqrt2, false},
  };
}

inline void write_table_csv(std::ostream& os,
                            const std::vector<TableEntry>& table) {
  os << "constant,domain,value,source\n";
  for (const TableEntry& e : table) {
    os << e.constant << ',' << e.domain << ',' << format_double(e.value) << ','
       << (e.computed ? "computed" : "reference") << '\n';
  }
}

}  // namespace octant
