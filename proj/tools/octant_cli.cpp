// Command-line front end for the octant library: evaluate sector norms and
// the sharp gradient/differential bounds, compute the sharp constants with
// oracle cross-checks, emit figure data as CSV, print the comparison tables,
// and run the full verification suite.
//
// Exit codes: 0 success, 2 usage/domain error, 3 verification failure.
// Data goes to stdout; diagnostics go to stderr.  With --out PATH the same
// bytes written to stdout are also written to PATH.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "octant/octant.hpp"

namespace {

using octant::format_double;
using octant::format_gap;
using ojson = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_verify = 3;

struct Output {
  std::string text;
  int code = exit_ok;
};

struct FormatOptions {
  std::string format = "human";
  std::string out_path;
};

void add_format_flags(CLI::App* sub, FormatOptions& fmt) {
  sub->add_option("--format", fmt.format, "Output format")
      ->check(CLI::IsMember({"human", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", fmt.out_path,
                  "Also write the output to PATH (same bytes as stdout)");
}

std::string poly_str(const octant::Poly& p) {
  return "(" + format_double(p.a) + ", " + format_double(p.b) + ", " +
         format_double(p.c) + ")";
}

ojson poly_json(const octant::Poly& p) {
  return ojson{{"a", p.a}, {"b", p.b}, {"c", p.c}};
}

std::string pad(std::string s, std::size_t width) {
  while (s.size() < width) s.push_back(' ');
  return s;
}

// Oracle for the squared Markov constant: maximize the extreme-family scan of
// the squared gradient length over the arc.
double markov_squared_oracle(int resolution, int refine_iters) {
  auto best_at = [&](double theta) {
    const octant::SectorPoint pt = octant::from_angle(theta);
    return octant::scan_extremes(
               [&pt](const octant::Poly& q) {
                 return octant::squared_length(octant::gradient(q, pt));
               },
               resolution, refine_iters)
        .value;
  };
  const octant::ScanConfig outer{512, 40, 0};
  return octant::max_1d(best_at, 0.0, octant::sector_angle, outer).value;
}

// ---------------------------------------------------------------------------
// norm a b c
// ---------------------------------------------------------------------------

struct NormArgs {
  double a = 0.0, b = 0.0, c = 0.0;
  bool verify = false;
  double tolerance = 1e-6;
  int grid = 4096;
  int refine_iters = 60;
  FormatOptions fmt;
};

Output cmd_norm(const NormArgs& args) {
  const octant::Poly p{args.a, args.b, args.c};
  const double closed = octant::sector_norm(p);
  std::optional<double> oracle;
  double gap = 0.0;
  bool pass = true;
  if (args.verify) {
    oracle =
        octant::numeric_poly_norm(p, {args.grid, args.refine_iters, 0});
    gap = std::abs(closed - *oracle);
    pass = gap <= args.tolerance * std::max(1.0, closed);
  }

  Output out;
  if (args.fmt.format == "json") {
    ojson j{{"command", "norm"},
            {"a", args.a},
            {"b", args.b},
            {"c", args.c},
            {"value", closed}};
    if (oracle) {
      j["verify"] = ojson{{"oracle", *oracle},
                          {"gap", gap},
                          {"tolerance", args.tolerance},
                          {"pass", pass}};
    }
    out.text = j.dump(2) + "\n";
  } else if (args.fmt.format == "csv") {
    out.text = "quantity,value\n";
    out.text += "closed," + format_double(closed) + "\n";
    if (oracle) {
      out.text += "oracle," + format_double(*oracle) + "\n";
      out.text += "gap," + format_double(gap) + "\n";
      out.text += std::string("pass,") + (pass ? "true" : "false") + "\n";
    }
  } else {
    out.text = "sector_norm" + poly_str(p) + " = " + format_double(closed) +
               "\n";
    if (oracle) {
      out.text += "oracle = " + format_double(*oracle) + "\n";
      out.text += "gap = " + format_gap(gap) + "\n";
      out.text += std::string("verification ") + (pass ? "PASS" : "FAIL") +
                  " (tolerance " + format_gap(args.tolerance) + ")\n";
    }
  }
  if (!pass) out.code = exit_verify;
  return out;
}

// ---------------------------------------------------------------------------
// phi x y / psi x y
// ---------------------------------------------------------------------------

struct BoundArgs {
  double x = 0.0, y = 0.0;
  bool verify = false;
  bool witness = false;
  double tolerance = 1e-6;
  int grid = 4096;
  int refine_iters = 60;
  FormatOptions fmt;
};

Output cmd_bound(bool is_phi, const BoundArgs& args) {
  const octant::SectorPoint pt(args.x, args.y);
  const double closed = is_phi ? octant::phi_squared(pt) : octant::psi(pt);

  octant::ExtremeScanResult scan{};
  const bool need_scan = args.verify || args.witness;
  if (need_scan) {
    if (is_phi) {
      scan = octant::scan_extremes(
          [&pt](const octant::Poly& q) {
            return octant::squared_length(octant::gradient(q, pt));
          },
          args.grid, args.refine_iters);
    } else {
      scan = octant::scan_extremes(
          [&pt](const octant::Poly& q) {
            return octant::differential_norm(q, pt);
          },
          args.grid, args.refine_iters);
    }
  }
  const double gap =
      args.verify ? std::abs(closed - scan.value) / std::abs(closed) : 0.0;
  const bool pass = !args.verify || gap <= args.tolerance;

  const char* name = is_phi ? "phi" : "psi";
  const std::string point =
      "(" + format_double(args.x) + ", " + format_double(args.y) + ")";

  Output out;
  if (args.fmt.format == "json") {
    ojson j{{"command", name}, {"x", args.x}, {"y", args.y}};
    if (is_phi) {
      j["squared"] = closed;
      j["value"] = octant::phi(pt);
    } else {
      j["value"] = closed;
    }
    if (args.verify) {
      j["verify"] = ojson{{"oracle", scan.value},
                          {"relative_gap", gap},
                          {"tolerance", args.tolerance},
                          {"pass", pass}};
    }
    if (args.witness) {
      ojson w{{"family", octant::family_name(scan.argmax.family)}};
      if (scan.argmax.family != octant::Family::Corner) {
        w["param"] = scan.argmax.param;
      }
      w["sign"] = scan.argmax.sign;
      w["polynomial"] = poly_json(octant::to_poly(scan.argmax));
      j["witness"] = w;
    }
    out.text = j.dump(2) + "\n";
  } else if (args.fmt.format == "csv") {
    out.text = "quantity,value\n";
    if (is_phi) {
      out.text += "squared," + format_double(closed) + "\n";
      out.text += "value," + format_double(octant::phi(pt)) + "\n";
    } else {
      out.text += "value," + format_double(closed) + "\n";
    }
    if (args.verify) {
      out.text += "oracle," + format_double(scan.value) + "\n";
      out.text += "relative_gap," + format_double(gap) + "\n";
      out.text += std::string("pass,") + (pass ? "true" : "false") + "\n";
    }
    if (args.witness) {
      const octant::Poly w = octant::to_poly(scan.argmax);
      out.text += std::string("witness_family,") +
                  octant::family_name(scan.argmax.family) + "\n";
      if (scan.argmax.family != octant::Family::Corner) {
        out.text += "witness_param," + format_double(scan.argmax.param) + "\n";
      }
      out.text += "witness_sign," + std::to_string(scan.argmax.sign) + "\n";
      out.text += "witness_a," + format_double(w.a) + "\n";
      out.text += "witness_b," + format_double(w.b) + "\n";
      out.text += "witness_c," + format_double(w.c) + "\n";
    }
  } else {
    if (is_phi) {
      out.text = "phi_squared" + point + " = " + format_double(closed) + "\n";
      out.text += "phi" + point + " = " + format_double(octant::phi(pt)) +
                  "\n";
    } else {
      out.text = "psi" + point + " = " + format_double(closed) + "\n";
    }
    if (args.verify) {
      out.text += "oracle = " + format_double(scan.value) + "\n";
      out.text += "relative gap = " + format_gap(gap) + "\n";
      out.text += std::string("verification ") + (pass ? "PASS" : "FAIL") +
                  " (tolerance " + format_gap(args.tolerance) + ")\n";
    }
    if (args.witness) {
      out.text += std::string("witness: family ") +
                  octant::family_name(scan.argmax.family);
      if (scan.argmax.family == octant::Family::P) {
        out.text += ", t = " + format_double(scan.argmax.param);
      } else if (scan.argmax.family == octant::Family::Q) {
        out.text += ", s = " + format_double(scan.argmax.param);
      }
      out.text += std::string(", sign = ") +
                  (scan.argmax.sign > 0 ? "+1" : "-1") + "\n";
      out.text += "witness polynomial = " +
                  poly_str(octant::to_poly(scan.argmax)) + "\n";
    }
  }
  if (!pass) out.code = exit_verify;
  return out;
}

// ---------------------------------------------------------------------------
// constants
// ---------------------------------------------------------------------------

struct ConstantsArgs {
  double tolerance = 1e-6;
  int grid = 2048;
  int refine_iters = 60;
  int bilinear_grid = 512;
  FormatOptions fmt;
};

Output cmd_constants(const ConstantsArgs& args) {
  struct Row {
    const char* name;
    double closed;
    double oracle;
    double gap;  // relative
    octant::Poly witness;
  };
  const octant::MarkovConstant markov = octant::markov_constant();
  const double msq_oracle =
      markov_squared_oracle(args.grid, args.refine_iters);
  const double pol_oracle = octant::bilinear_sup_norm(
      octant::polar_of(octant::polarization_constant().witness),
      args.bilinear_grid, 40);
  const octant::UnconditionalConstant unc =
      octant::unconditional_constant(args.grid);

  auto rel = [](double closed, double oracle) {
    return std::abs(closed - oracle) / closed;
  };
  const std::vector<Row> rows = {
      {"markov_squared", markov.squared, msq_oracle,
       rel(markov.squared, msq_oracle), markov.witness},
      {"markov_linear", markov.linear, std::sqrt(msq_oracle),
       rel(markov.linear, std::sqrt(msq_oracle)), markov.witness},
      {"polarization", octant::polarization_value, pol_oracle,
       rel(octant::polarization_value, pol_oracle),
       octant::polarization_constant().witness},
      {"unconditional", octant::unconditional_value, unc.value,
       rel(octant::unconditional_value, unc.value), unc.witness},
  };
  bool pass = true;
  for (const Row& r : rows) pass = pass && r.gap <= args.tolerance;

  Output out;
  if (args.fmt.format == "json") {
    ojson list = ojson::array();
    for (const Row& r : rows) {
      list.push_back(ojson{{"name", r.name},
                           {"closed", r.closed},
                           {"oracle", r.oracle},
                           {"gap", r.gap},
                           {"witness", poly_json(r.witness)}});
    }
    ojson j{{"command", "constants"},
            {"tolerance", args.tolerance},
            {"pass", pass},
            {"constants", list}};
    out.text = j.dump(2) + "\n";
  } else if (args.fmt.format == "csv") {
    out.text = "constant,closed,oracle,gap,witness_a,witness_b,witness_c\n";
    for (const Row& r : rows) {
      out.text += std::string(r.name) + "," + format_double(r.closed) + "," +
                  format_double(r.oracle) + "," + format_double(r.gap) + "," +
                  format_double(r.witness.a) + "," +
                  format_double(r.witness.b) + "," +
                  format_double(r.witness.c) + "\n";
    }
  } else {
    for (const Row& r : rows) {
      out.text += pad(r.name, 15) + " closed = " + format_double(r.closed) +
                  ", oracle = " + format_double(r.oracle) +
                  ", gap = " + format_gap(r.gap) +
                  ", witness = " + poly_str(r.witness) + "\n";
    }
    out.text += pass ? "all constants verified"
                     : "constant verification FAILED";
    out.text += " (tolerance " + format_gap(args.tolerance) + ")\n";
  }
  if (!pass) out.code = exit_verify;
  return out;
}

// ---------------------------------------------------------------------------
// figure n
// ---------------------------------------------------------------------------

struct FigureArgs {
  int number = 1;
  int samples = 513;
  FormatOptions fmt;
};

Output cmd_figure(const FigureArgs& args) {
  const octant::FigureSpec spec = octant::figure_spec(args.number);
  Output out;
  if (args.fmt.format == "json") {
    const std::vector<octant::FigureRow> rows =
        octant::figure_rows(spec, args.samples);
    ojson columns = ojson::array();
    columns.push_back("lambda");
    for (const octant::BranchId& id : spec.curves) {
      columns.push_back(octant::branch_label(id));
    }
    ojson data = ojson::array();
    for (const octant::FigureRow& row : rows) {
      ojson r = ojson::array();
      r.push_back(row.lambda);
      for (const std::optional<double>& v : row.values) {
        if (v) {
          r.push_back(*v);
        } else {
          r.push_back(nullptr);
        }
      }
      data.push_back(std::move(r));
    }
    ojson j{{"command", "figure"},
            {"figure", args.number},
            {"samples", args.samples},
            {"domain", ojson{{"lo", spec.domain.lo}, {"hi", spec.domain.hi}}},
            {"columns", columns},
            {"rows", data}};
    out.text = j.dump(2) + "\n";
  } else {
    // The natural human-readable form of a figure is its CSV table.
    std::ostringstream os;
    octant::write_figure_csv(os, spec, args.samples);
    out.text = os.str();
  }
  return out;
}

// ---------------------------------------------------------------------------
// table sectors|lp
// ---------------------------------------------------------------------------

struct TableArgs {
  std::string which = "sectors";
  FormatOptions fmt;
};

Output cmd_table(const TableArgs& args) {
  const octant::TableKind kind = args.which == "lp"
                                     ? octant::TableKind::Lp
                                     : octant::TableKind::Sectors;
  const std::vector<octant::TableEntry> entries =
      octant::comparison_table(kind);

  Output out;
  if (args.fmt.format == "json") {
    ojson list = ojson::array();
    for (const octant::TableEntry& e : entries) {
      list.push_back(ojson{{"constant", e.constant},
                           {"domain", e.domain},
                           {"value", e.value},
                           {"source", e.computed ? "computed" : "reference"}});
    }
    ojson j{{"command", "table"}, {"which", args.which}, {"entries", list}};
    out.text = j.dump(2) + "\n";
  } else if (args.fmt.format == "csv") {
    std::ostringstream os;
    octant::write_table_csv(os, entries);
    out.text = os.str();
  } else {
    std::vector<std::array<std::string, 4>> cells = {
        {"constant", "domain", "value", "source"}};
    for (const octant::TableEntry& e : entries) {
      cells.push_back({e.constant, e.domain, format_double(e.value),
                       e.computed ? "computed" : "reference"});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& row : cells) {
      for (std::size_t k = 0; k < 4; ++k) {
        width[k] = std::max(width[k], row[k].size());
      }
    }
    for (const auto& row : cells) {
      std::string line;
      for (std::size_t k = 0; k < 4; ++k) {
        line += pad(row[k], width[k] + (k + 1 < 4 ? 2 : 0));
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out.text += line + "\n";
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyArgs {
  octant::VerifyOptions opt;
  FormatOptions fmt;
};

Output cmd_verify(const VerifyArgs& args) {
  const std::vector<octant::CheckResult> checks =
      octant::run_verification(args.opt);
  int passed = 0;
  for (const octant::CheckResult& c : checks) passed += c.pass ? 1 : 0;
  const bool all = passed == static_cast<int>(checks.size());

  Output out;
  if (args.fmt.format == "json") {
    ojson list = ojson::array();
    for (const octant::CheckResult& c : checks) {
      list.push_back(ojson{{"name", c.name},
                           {"pass", c.pass},
                           {"worst", c.worst},
                           {"tol", c.tol},
                           {"detail", c.detail}});
    }
    ojson j{{"command", "verify"},
            {"samples", args.opt.samples},
            {"seed", args.opt.seed},
            {"tolerance", args.opt.tolerance},
            {"grid", args.opt.grid},
            {"refine_iters", args.opt.refine_iters},
            {"pass", all},
            {"checks", list}};
    out.text = j.dump(2) + "\n";
  } else if (args.fmt.format == "csv") {
    out.text = "check,pass,worst,tol\n";
    for (const octant::CheckResult& c : checks) {
      out.text += c.name + "," + (c.pass ? "true" : "false") + "," +
                  format_double(c.worst) + "," + format_double(c.tol) + "\n";
    }
  } else {
    for (const octant::CheckResult& c : checks) {
      out.text += std::string(c.pass ? "PASS" : "FAIL") + "  " +
                  pad(c.name, 22) + "worst = " + format_gap(c.worst) +
                  "  tol = " + format_gap(c.tol) + "  (" + c.detail + ")\n";
    }
    out.text += std::to_string(passed) + "/" +
                std::to_string(checks.size()) + " checks passed\n";
  }
  if (!all) out.code = exit_verify;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact sup-norms, extreme points, and sharp constants for real "
      "2-homogeneous polynomials on the pi/4 circle sector"};
  app.require_subcommand(1);

  NormArgs norm_args;
  CLI::App* norm_sub = app.add_subcommand(
      "norm", "Closed-form sector sup-norm of a x^2 + b y^2 + c xy");
  norm_sub->add_option("a", norm_args.a, "x^2 coefficient")->required();
  norm_sub->add_option("b", norm_args.b, "y^2 coefficient")->required();
  norm_sub->add_option("c", norm_args.c, "xy coefficient")->required();
  norm_sub->add_flag("--verify", norm_args.verify,
                     "Cross-check against the brute-force arc oracle");
  norm_sub->add_option("--tolerance", norm_args.tolerance,
                       "Verification tolerance (scaled by max(1, value))")
      ->capture_default_str();
  norm_sub->add_option("--grid", norm_args.grid, "Oracle grid samples")
      ->capture_default_str();
  norm_sub->add_option("--refine-iters", norm_args.refine_iters,
                       "Golden-section refinement iterations")
      ->capture_default_str();
  add_format_flags(norm_sub, norm_args.fmt);

  BoundArgs phi_args;
  CLI::App* phi_sub = app.add_subcommand(
      "phi", "Sharp gradient bound (squared and linear scale) at a sector "
             "point");
  phi_sub->add_option("x", phi_args.x, "x coordinate")->required();
  phi_sub->add_option("y", phi_args.y, "y coordinate")->required();
  phi_sub->add_flag("--verify", phi_args.verify,
                    "Cross-check against the extreme-family scan");
  phi_sub->add_flag("--witness", phi_args.witness,
                    "Print the attaining extreme polynomial");
  phi_sub->add_option("--tolerance", phi_args.tolerance,
                      "Relative verification tolerance")
      ->capture_default_str();
  phi_sub->add_option("--grid", phi_args.grid, "Family scan resolution")
      ->capture_default_str();
  phi_sub->add_option("--refine-iters", phi_args.refine_iters,
                      "Golden-section refinement iterations")
      ->capture_default_str();
  add_format_flags(phi_sub, phi_args.fmt);

  BoundArgs psi_args;
  CLI::App* psi_sub = app.add_subcommand(
      "psi", "Sharp differential bound at a sector point");
  psi_sub->add_option("x", psi_args.x, "x coordinate")->required();
  psi_sub->add_option("y", psi_args.y, "y coordinate")->required();
  psi_sub->add_flag("--verify", psi_args.verify,
                    "Cross-check against the extreme-family scan");
  psi_sub->add_flag("--witness", psi_args.witness,
                    "Print the attaining extreme polynomial");
  psi_sub->add_option("--tolerance", psi_args.tolerance,
                      "Relative verification tolerance")
      ->capture_default_str();
  psi_sub->add_option("--grid", psi_args.grid, "Family scan resolution")
      ->capture_default_str();
  psi_sub->add_option("--refine-iters", psi_args.refine_iters,
                      "Golden-section refinement iterations")
      ->capture_default_str();
  add_format_flags(psi_sub, psi_args.fmt);

  ConstantsArgs constants_args;
  CLI::App* constants_sub = app.add_subcommand(
      "constants",
      "Markov (both scales), polarization, and unconditional constants with "
      "oracle cross-checks");
  constants_sub
      ->add_option("--tolerance", constants_args.tolerance,
                   "Relative oracle tolerance")
      ->capture_default_str();
  constants_sub
      ->add_option("--grid", constants_args.grid, "Family scan resolution")
      ->capture_default_str();
  constants_sub
      ->add_option("--refine-iters", constants_args.refine_iters,
                   "Golden-section refinement iterations")
      ->capture_default_str();
  add_format_flags(constants_sub, constants_args.fmt);

  FigureArgs figure_args;
  CLI::App* figure_sub = app.add_subcommand(
      "figure", "Branch-curve data for figures 1-13 (CSV by default)");
  figure_sub->add_option("n", figure_args.number, "Figure number (1-13)")
      ->required();
  figure_sub
      ->add_option("--samples", figure_args.samples,
                   "Lambda samples across the figure domain")
      ->capture_default_str();
  add_format_flags(figure_sub, figure_args.fmt);

  TableArgs table_args;
  CLI::App* table_sub = app.add_subcommand(
      "table", "Comparison tables of sharp constants across domains");
  table_sub->add_option("which", table_args.which, "Which table")
      ->required()
      ->check(CLI::IsMember({"sectors", "lp"}));
  add_format_flags(table_sub, table_args.fmt);

  VerifyArgs verify_args;
  CLI::App* verify_sub = app.add_subcommand(
      "verify", "Run the full oracle-vs-closed-form verification suite");
  verify_sub
      ->add_option("--samples", verify_args.opt.samples,
                   "Random polynomials per sampled check")
      ->capture_default_str();
  verify_sub->add_option("--seed", verify_args.opt.seed, "Corpus seed")
      ->capture_default_str();
  verify_sub
      ->add_option("--tolerance", verify_args.opt.tolerance,
                   "Tolerance for closed-form vs oracle comparisons")
      ->capture_default_str();
  verify_sub->add_option("--grid", verify_args.opt.grid, "Oracle grid samples")
      ->capture_default_str();
  verify_sub
      ->add_option("--refine-iters", verify_args.opt.refine_iters,
                   "Golden-section refinement iterations")
      ->capture_default_str();
  add_format_flags(verify_sub, verify_args.fmt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Output out;
  const FormatOptions* fmt = nullptr;
  try {
    if (*norm_sub) {
      out = cmd_norm(norm_args);
      fmt = &norm_args.fmt;
    } else if (*phi_sub) {
      out = cmd_bound(true, phi_args);
      fmt = &phi_args.fmt;
    } else if (*psi_sub) {
      out = cmd_bound(false, psi_args);
      fmt = &psi_args.fmt;
    } else if (*constants_sub) {
      out = cmd_constants(constants_args);
      fmt = &constants_args.fmt;
    } else if (*figure_sub) {
      out = cmd_figure(figure_args);
      fmt = &figure_args.fmt;
    } else if (*table_sub) {
      out = cmd_table(table_args);
      fmt = &table_args.fmt;
    } else if (*verify_sub) {
      out = cmd_verify(verify_args);
      fmt = &verify_args.fmt;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_usage;
  }

  std::fputs(out.text.c_str(), stdout);
  if (fmt != nullptr && !fmt->out_path.empty()) {
    std::ofstream file(fmt->out_path, std::ios::binary);
    if (!file) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   fmt->out_path.c_str());
      return exit_usage;
    }
    file << out.text;
    if (!file) {
      std::fprintf(stderr, "error: failed writing %s\n",
                   fmt->out_path.c_str());
      return exit_usage;
    }
  }
  return out.code;
}
