// Command-line driver: series solve, error tables, divergence figure, radii.
//
// Exit codes: 0 success, 2 configuration or parse error, 3 numerical failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <taylorwave/taylorwave.hpp>

namespace tw = taylorwave;

namespace {

constexpr int exit_config = 2;
constexpr int exit_numerical = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tw::config_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tw::config_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw tw::config_error("failed writing '" + path.string() + "'");
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec) throw tw::config_error("cannot create output directory '" + dir + "': " + ec.message());
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-power-series solutions of evolution PDEs in the tanh-polynomial ring"};
  app.require_subcommand(1);

  // solve
  std::string system_file, init_spec;
  std::size_t solve_order = 0;
  bool print_coeffs = false;
  auto* solve_cmd = app.add_subcommand("solve", "Run the coefficient recurrence for a system file");
  solve_cmd->add_option("--system", system_file, "System file, one `name' = expr` per line")->required();
  solve_cmd->add_option("--init", init_spec, "Initial tanh polynomials, e.g. \"u=0,1; v=1,-1/4\"")->required();
  solve_cmd->add_option("--order", solve_order, "Truncation order N >= 1")->required();
  solve_cmd->add_flag("--print-coeffs", print_coeffs, "Print every tanh-polynomial coefficient as CSV");

  // table
  std::string table_fixture = "riccati", table_orders = "2,5", table_x = "-15,-10,-5,5,10", table_t = "0.1:0.5:0.1",
              table_out;
  auto* table_cmd = app.add_subcommand("table", "Partial-sum error table against the exact traveling waves");
  table_cmd->add_option("--fixture", table_fixture, "riccati | coupled | transport")->capture_default_str();
  table_cmd->add_option("--orders", table_orders, "Comma-separated truncation orders")->capture_default_str();
  table_cmd->add_option("--x", table_x, "x grid: list or start:stop:step")->capture_default_str();
  table_cmd->add_option("--t", table_t, "t grid: list or start:stop:step")->capture_default_str();
  table_cmd->add_option("--out", table_out, "Output directory (stdout if omitted)");

  // figure
  std::string fig_fixture = "riccati", fig_field, fig_x = "0", fig_orders = "5,15", fig_pade, fig_out;
  double fig_tmax = 0.5;
  std::size_t fig_samples = 201;
  bool fig_svg = false;
  auto* figure_cmd = app.add_subcommand("figure", "Exact curve against degree-N partial sums (and Pade)");
  figure_cmd->add_option("--fixture", fig_fixture, "riccati | coupled | transport")->capture_default_str();
  figure_cmd->add_option("--field", fig_field, "Field to plot (default: first)");
  figure_cmd->add_option("--x", fig_x, "Spatial point")->capture_default_str();
  figure_cmd->add_option("--orders", fig_orders, "Comma-separated partial-sum degrees")->capture_default_str();
  figure_cmd->add_option("--pade", fig_pade, "Pade orders L,M");
  figure_cmd->add_option("--t-max", fig_tmax, "Right end of the t axis")->capture_default_str();
  figure_cmd->add_option("--samples", fig_samples, "Number of t samples (>= 200)")->capture_default_str();
  figure_cmd->add_option("--out", fig_out, "Output directory (stdout if omitted)");
  figure_cmd->add_flag("--svg", fig_svg, "Also write figure.svg (needs --out)");

  // radius
  std::string radius_x;
  double radius_k = 1.0, radius_omega = 5.5;
  auto* radius_cmd = app.add_subcommand("radius", "Convergence radius R(x) of the time series of a tanh wave");
  radius_cmd->add_option("--x", radius_x, "x values: list or start:stop:step")->required();
  radius_cmd->add_option("--k", radius_k, "Spatial wavenumber")->capture_default_str();
  radius_cmd->add_option("--omega", radius_omega, "Temporal rate")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  try {
    if (*solve_cmd) {
      const auto sys = tw::parse_system(read_file(system_file));
      const auto init = tw::parse_initial_spec(init_spec, sys);
      const auto sol = tw::solve(sys, init, solve_order);
      std::string out = "# order=" + std::to_string(sol.order) + "\n";
      out += "# residual=" + tw::csv::format(tw::residual(sys, sol)) + "\n";
      if (print_coeffs) {
        out += "order,field,power,coefficient\n";
        for (std::size_t j = 0; j <= sol.order; ++j)
          for (std::size_t i = 0; i < sys.size(); ++i) {
            const auto& p = sol.series[i][j];
            for (std::size_t k = 0; k <= p.degree(); ++k)
              out += std::to_string(j) + ',' + sys.fields[i] + ',' + std::to_string(k) + ',' + tw::csv::format(p[k]) + '\n';
          }
      }
      std::cout << out;
    } else if (*table_cmd) {
      tw::experiment_config cfg;
      cfg.fixture = table_fixture;
      cfg.orders = tw::parse_order_list(table_orders);
      cfg.x_grid = tw::parse_grid(table_x);
      cfg.t_grid = tw::parse_grid(table_t);
      const auto csv = tw::to_csv(tw::make_error_table(cfg));
      if (table_out.empty()) std::cout << csv;
      else write_file(prepare_out_dir(table_out) / "error_table.csv", csv);
    } else if (*figure_cmd) {
      tw::experiment_config cfg;
      cfg.fixture = fig_fixture;
      cfg.field = fig_field;
      cfg.orders = tw::parse_order_list(fig_orders);
      cfg.x_grid = tw::parse_grid(fig_x);
      if (cfg.x_grid.size() != 1) throw tw::config_error("figure takes a single x value");
      if (!fig_pade.empty()) cfg.pade = tw::parse_pade_orders(fig_pade);
      cfg.t_max = fig_tmax;
      cfg.samples = fig_samples;
      cfg.svg = fig_svg;
      if (cfg.svg && fig_out.empty()) throw tw::config_error("--svg needs --out");
      const auto fig = tw::make_divergence_figure(cfg);
      const auto csv = tw::to_csv(fig);
      if (fig_out.empty()) {
        std::cout << csv;
      } else {
        const auto dir = prepare_out_dir(fig_out);
        write_file(dir / "figure.csv", csv);
        if (cfg.svg) write_file(dir / "figure.svg", tw::to_svg(fig));
      }
    } else if (*radius_cmd) {
      const tw::traveling_wave w{0.0, 1.0, radius_k, radius_omega};
      std::string out = "x,radius\n";
      for (double x : tw::parse_grid(radius_x))
        out += tw::csv::format(x) + ',' + tw::csv::format(tw::convergence_radius(w, x)) + '\n';
      std::cout << out;
    }
  } catch (const tw::input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_config;
  } catch (const tw::numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  }
  return 0;
}
