#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "fixtures.hpp"
#include "pade.hpp"
#include "solver.hpp"
#include "time_series.hpp"
#include "traveling_wave.hpp"

namespace taylorwave {

struct experiment_config {
  std::string fixture = "riccati";
  std::string field;  // empty: first field of the fixture (figure only)
  std::vector<std::size_t> orders{5, 15};
  std::vector<double> x_grid{0.0};
  std::vector<double> t_grid;
  std::optional<std::pair<std::size_t, std::size_t>> pade;
  double t_max = 0.5;
  std::size_t samples = 201;
  bool svg = false;
};

inline void validate(const experiment_config& cfg) {
  if (cfg.orders.empty()) throw config_error("at least one truncation order is required");
  for (auto n : cfg.orders)
    if (n < 1) throw config_error("truncation orders must be >= 1");
  if (cfg.x_grid.empty()) throw config_error("x grid is empty");
  for (double x : cfg.x_grid)
    if (!std::isfinite(x)) throw config_error("x grid contains a non-finite value");
  for (double t : cfg.t_grid)
    if (!std::isfinite(t) || t < 0.0) throw config_error("t values must be finite and >= 0");
  if (!std::isfinite(cfg.t_max) || cfg.t_max <= 0.0) throw config_error("t-max must be positive");
  if (cfg.samples < 200) throw config_error("figure needs at least 200 samples");
}

namespace csv {

// 17 significant digits: byte-stable output that parses back to the
// identical double.
inline std::string format(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) throw input_error("bad number '" + std::string(s) + "' in CSV");
  return v;
}

inline std::vector<std::string_view> split(std::string_view line, char sep = ',') {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = line.find(sep, start);
    out.push_back(line.substr(start, p - start));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

// Non-empty, non-comment lines.
inline std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

}  // namespace csv

struct error_row {
  std::string field;
  double x = 0.0;
  double t = 0.0;
  std::size_t order = 0;
  double approx = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
  double radius = 0.0;
  double t_over_radius = 0.0;

  friend bool operator==(const error_row&, const error_row&) = default;
};

inline constexpr std::string_view error_table_header = "field,x,t,order,approx,exact,abs_error,radius,t_over_radius";

// Partial sums of the solver output against the closed-form waves, one row per
// (field, x, t, order) in that sort order.
inline std::vector<error_row> make_error_table(const experiment_config& cfg) {
  validate(cfg);
  if (cfg.t_grid.empty()) throw config_error("t grid is empty");
  const fixture fx = builtin_fixture(cfg.fixture);

  std::vector<std::size_t> orders = cfg.orders;
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  std::vector<double> xs = cfg.x_grid, ts = cfg.t_grid;
  std::sort(xs.begin(), xs.end());
  std::sort(ts.begin(), ts.end());

  // Prefix stability: one solve at the top order serves every lower order.
  const auto sol = solve(fx.system, fx.initial, orders.back());

  std::vector<error_row> rows;
  rows.reserve(fx.system.size() * xs.size() * ts.size() * orders.size());
  for (std::size_t i = 0; i < fx.system.size(); ++i) {
    const auto& wave = fx.exact[i];
    for (double x : xs) {
      const double radius = convergence_radius(wave, x);
      for (double t : ts) {
        const double exact = wave_eval(wave, x, t);
        for (std::size_t n : orders) {
          error_row r;
          r.field = fx.system.fields[i];
          r.x = x;
          r.t = t;
          r.order = n;
          r.approx = series_eval(sol.series[i].truncated(n), x, t);
          r.exact = exact;
          r.abs_error = std::abs(r.approx - r.exact);
          r.radius = radius;
          r.t_over_radius = t / radius;
          rows.push_back(std::move(r));
        }
      }
    }
  }
  return rows;
}

inline std::string to_csv(const std::vector<error_row>& rows) {
  std::string out;
  out += "# abs_error = |approx - exact| (absolute error)\n";
  out += error_table_header;
  out += '\n';
  for (const auto& r : rows) {
    out += r.field;
    for (double v : {r.x, r.t}) out += ',' + csv::format(v);
    out += ',' + std::to_string(r.order);
    for (double v : {r.approx, r.exact, r.abs_error, r.radius, r.t_over_radius}) out += ',' + csv::format(v);
    out += '\n';
  }
  return out;
}

inline std::vector<error_row> parse_error_table(std::string_view text) {
  const auto lines = csv::data_lines(text);
  if (lines.empty() || lines.front() != error_table_header) throw input_error("missing error table header");
  std::vector<error_row> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = csv::split(lines[i]);
    if (f.size() != 9) throw input_error("error table row has " + std::to_string(f.size()) + " columns");
    error_row r;
    r.field = std::string(f[0]);
    r.x = csv::parse_double(f[1]);
    r.t = csv::parse_double(f[2]);
    const auto res = std::from_chars(f[3].data(), f[3].data() + f[3].size(), r.order);
    if (res.ec != std::errc{} || res.ptr != f[3].data() + f[3].size()) throw input_error("bad order in CSV");
    r.approx = csv::parse_double(f[4]);
    r.exact = csv::parse_double(f[5]);
    r.abs_error = csv::parse_double(f[6]);
    r.radius = csv::parse_double(f[7]);
    r.t_over_radius = csv::parse_double(f[8]);
    rows.push_back(std::move(r));
  }
  return rows;
}

// Exact curve, partial sums T_n and optionally a Pade curve on a uniform t grid.
struct divergence_figure {
  std::string fixture;
  std::string field;
  double x = 0.0;
  double radius = 0.0;
  std::vector<std::size_t> orders;
  std::optional<std::pair<std::size_t, std::size_t>> pade;
  std::vector<double> t;
  std::vector<double> exact;
  std::vector<std::vector<double>> partial;  // one column per order
  std::vector<double> pade_values;
};

inline divergence_figure make_divergence_figure(const experiment_config& cfg) {
  validate(cfg);
  const fixture fx = builtin_fixture(cfg.fixture);
  std::size_t fi = 0;
  if (!cfg.field.empty()) {
    const auto idx = fx.system.index_of(cfg.field);
    if (!idx) throw config_error("fixture '" + fx.name + "' has no field '" + cfg.field + "'");
    fi = *idx;
  }

  divergence_figure fig;
  fig.fixture = fx.name;
  fig.field = fx.system.fields[fi];
  fig.x = cfg.x_grid.front();
  fig.orders = cfg.orders;
  fig.pade = cfg.pade;
  const auto& wave = fx.exact[fi];
  fig.radius = convergence_radius(wave, fig.x);

  std::size_t top = *std::max_element(cfg.orders.begin(), cfg.orders.end());
  if (cfg.pade) top = std::max(top, cfg.pade->first + cfg.pade->second);
  const auto sol = solve(fx.system, fx.initial, top);
  const auto scalar = series_at(sol.series[fi], fig.x);

  std::optional<pade_approximant> P;
  if (cfg.pade) P = pade_fit(scalar.coeffs(), cfg.pade->first, cfg.pade->second);

  std::vector<time_series<double>> partials;
  for (auto n : cfg.orders) partials.push_back(scalar.truncated(n));
  fig.partial.resize(cfg.orders.size());

  const std::size_t intervals = cfg.samples - 1;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double t = cfg.t_max * static_cast<double>(i) / static_cast<double>(intervals);
    fig.t.push_back(t);
    fig.exact.push_back(wave_eval(wave, fig.x, t));
    for (std::size_t k = 0; k < partials.size(); ++k) fig.partial[k].push_back(series_eval(partials[k], t));
    if (P) fig.pade_values.push_back(pade_eval(*P, t));
  }
  return fig;
}

inline std::string to_csv(const divergence_figure& fig) {
  std::string out;
  out += "# fixture=" + fig.fixture + "\n";
  out += "# field=" + fig.field + "\n";
  out += "# x=" + csv::format(fig.x) + "\n";
  out += "# radius=" + csv::format(fig.radius) + "\n";
  out += "t,exact";
  for (auto n : fig.orders) out += ",T" + std::to_string(n);
  if (fig.pade) out += ",pade_" + std::to_string(fig.pade->first) + "_" + std::to_string(fig.pade->second);
  out += '\n';
  for (std::size_t i = 0; i < fig.t.size(); ++i) {
    out += csv::format(fig.t[i]) + ',' + csv::format(fig.exact[i]);
    for (const auto& col : fig.partial) out += ',' + csv::format(col[i]);
    if (fig.pade) out += ',' + csv::format(fig.pade_values[i]);
    out += '\n';
  }
  return out;
}

// Value of a "# key=value" metadata line, if present.
inline std::optional<std::string> csv_metadata(std::string_view text, std::string_view key) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    if (line.size() > 2 && line.substr(0, 2) == "# ") {
      line.remove_prefix(2);
      const auto eq = line.find('=');
      if (eq != std::string_view::npos && line.substr(0, eq) == key) return std::string(line.substr(eq + 1));
    }
  }
  return std::nullopt;
}

namespace detail {

inline std::string fixed(double v, int digits = 2) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, r.ptr);
}

}  // namespace detail

// Static plot: curves are clipped to a y window around the exact solution so
// diverging partial sums leave the frame instead of flattening it.
inline std::string to_svg(const divergence_figure& fig) {
  constexpr double width = 640, height = 420, left = 60, right = 20, top = 20, bottom = 50;
  const double pw = width - left - right, ph = height - top - bottom;

  double lo = *std::min_element(fig.exact.begin(), fig.exact.end());
  double hi = *std::max_element(fig.exact.begin(), fig.exact.end());
  const double pad = std::max(0.25 * (hi - lo), 0.1);
  lo -= pad;
  hi += pad;
  const double tmax = fig.t.back();

  auto px = [&](double t) { return left + pw * t / tmax; };
  auto py = [&](double y) { return top + ph * (hi - y) / (hi - lo); };
  auto polyline = [&](const std::vector<double>& ys, const std::string& style) {
    std::string s = "  <polyline clip-path=\"url(#plot)\" fill=\"none\" stroke=\"black\" " + style + " points=\"";
    for (std::size_t i = 0; i < fig.t.size(); ++i) {
      const double y = std::clamp(ys[i], lo - 10 * (hi - lo), hi + 10 * (hi - lo));
      s += (i ? " " : "") + detail::fixed(px(fig.t[i])) + "," + detail::fixed(py(y));
    }
    return s + "\"/>\n";
  };

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n";
  s += "  <defs><clipPath id=\"plot\"><rect x=\"" + detail::fixed(left) + "\" y=\"" + detail::fixed(top) +
       "\" width=\"" + detail::fixed(pw) + "\" height=\"" + detail::fixed(ph) + "\"/></clipPath></defs>\n";
  s += "  <rect x=\"" + detail::fixed(left) + "\" y=\"" + detail::fixed(top) + "\" width=\"" + detail::fixed(pw) +
       "\" height=\"" + detail::fixed(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double t = tmax * i / 5.0;
    s += "  <text x=\"" + detail::fixed(px(t)) + "\" y=\"" + detail::fixed(height - bottom + 18) +
         "\" font-size=\"12\" text-anchor=\"middle\">" + detail::fixed(t) + "</text>\n";
    const double y = lo + (hi - lo) * i / 5.0;
    s += "  <text x=\"" + detail::fixed(left - 6) + "\" y=\"" + detail::fixed(py(y) + 4) +
         "\" font-size=\"12\" text-anchor=\"end\">" + detail::fixed(y) + "</text>\n";
  }
  s += "  <text x=\"" + detail::fixed(left + pw / 2) + "\" y=\"" + detail::fixed(height - 10) +
       "\" font-size=\"13\" text-anchor=\"middle\">t</text>\n";

  if (fig.radius <= tmax) {
    s += "  <line x1=\"" + detail::fixed(px(fig.radius)) + "\" y1=\"" + detail::fixed(top) + "\" x2=\"" +
         detail::fixed(px(fig.radius)) + "\" y2=\"" + detail::fixed(top + ph) +
         "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  }

  static const char* const styles[] = {"stroke-dasharray=\"8,4\"", "stroke-dasharray=\"2,3\"",
                                       "stroke-dasharray=\"12,3,2,3\"", "stroke-dasharray=\"4,4\""};
  s += polyline(fig.exact, "stroke-width=\"1.5\"");
  for (std::size_t k = 0; k < fig.partial.size(); ++k) s += polyline(fig.partial[k], styles[k % 4]);
  if (fig.pade) s += polyline(fig.pade_values, "stroke=\"gray\" stroke-width=\"1.5\"");

  double ly = top + 16;
  auto legend = [&](const std::string& label) {
    s += "  <text x=\"" + detail::fixed(left + pw - 8) + "\" y=\"" + detail::fixed(ly) +
         "\" font-size=\"12\" text-anchor=\"end\">" + label + "</text>\n";
    ly += 16;
  };
  legend("solid: exact");
  for (std::size_t k = 0; k < fig.orders.size(); ++k)
    legend(std::string(k % 4 == 0 ? "dashed" : k % 4 == 1 ? "dotted" : "broken") + ": degree " +
           std::to_string(fig.orders[k]));
  if (fig.pade) legend("gray: Pade [" + std::to_string(fig.pade->first) + "/" + std::to_string(fig.pade->second) + "]");
  legend("vertical line: t = R(x) = " + detail::fixed(fig.radius, 4));
  s += "</svg>\n";
  return s;
}

}  // namespace taylorwave
