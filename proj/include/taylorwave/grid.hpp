#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "pde_dsl.hpp"
#include "tanh_poly.hpp"

namespace taylorwave {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p - start)));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

inline double to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size())
    throw config_error("not a number: '" + std::string(s) + "'");
  return v;
}

// Fixed-point decimal m * 10^-places, for exact grid arithmetic.
struct decimal {
  std::int64_t mantissa = 0;
  int places = 0;
};

inline decimal to_decimal(std::string_view s) {
  s = trim(s);
  decimal d;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  bool seen_dot = false, any = false;
  for (char c : s) {
    if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      if (d.mantissa > 100000000000000LL) throw config_error("grid value has too many digits");
      d.mantissa = d.mantissa * 10 + (c - '0');
      if (seen_dot) ++d.places;
      any = true;
    } else {
      throw config_error("grid range bounds must be plain decimals: '" + std::string(s) + "'");
    }
  }
  if (!any) throw config_error("empty grid value");
  if (neg) d.mantissa = -d.mantissa;
  return d;
}

inline std::int64_t rescale(const decimal& d, int places) {
  std::int64_t m = d.mantissa;
  for (int i = d.places; i < places; ++i) m *= 10;
  return m;
}

}  // namespace detail

// "2,5,15" -> {2, 5, 15}.
inline std::vector<std::size_t> parse_order_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto tok : detail::split_on(text, ',')) {
    std::size_t v = 0;
    const auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || r.ec != std::errc{} || r.ptr != tok.data() + tok.size())
      throw config_error("not a nonnegative integer: '" + std::string(tok) + "'");
    out.push_back(v);
  }
  return out;
}

// Either a comma list "-15,-10,5" or an inclusive decimal range
// "start:stop:step". Range points are computed as exact decimals and rounded
// once, so "0.1:0.5:0.1" yields 0.3 and not 0.30000000000000004.
inline std::vector<double> parse_grid(std::string_view text) {
  text = detail::trim(text);
  if (text.find(':') == std::string_view::npos) {
    std::vector<double> out;
    for (auto tok : detail::split_on(text, ',')) out.push_back(detail::to_double(tok));
    return out;
  }
  const auto parts = detail::split_on(text, ':');
  if (parts.size() != 3) throw config_error("range must be start:stop:step");
  const auto a = detail::to_decimal(parts[0]);
  const auto b = detail::to_decimal(parts[1]);
  const auto h = detail::to_decimal(parts[2]);
  const int places = std::max({a.places, b.places, h.places});
  const std::int64_t A = detail::rescale(a, places), B = detail::rescale(b, places), H = detail::rescale(h, places);
  if (H <= 0) throw config_error("range step must be positive");
  if (B < A) throw config_error("range stop is below start");
  const std::int64_t count = (B - A) / H + 1;
  if (count > 1000000) throw config_error("range has too many points");
  const double denom = std::pow(10.0, places);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(static_cast<double>(A + i * H) / denom);
  return out;
}

// "L,M" -> {L, M}.
inline std::pair<std::size_t, std::size_t> parse_pade_orders(std::string_view text) {
  const auto v = parse_order_list(text);
  if (v.size() != 2) throw config_error("Pade orders must be given as L,M");
  return {v[0], v[1]};
}

// Initial data as tanh polynomials, e.g. "u=0,1; v=1,-1/4". Coefficients are
// listed from the constant term upward; every field must be given exactly once.
inline std::vector<tanh_poly> parse_initial_spec(std::string_view text, const pde_system& sys) {
  std::vector<std::optional<tanh_poly>> slots(sys.size());
  for (auto entry : detail::split_on(text, ';')) {
    if (entry.empty()) continue;
    const auto eq = entry.find('=');
    if (eq == std::string_view::npos) throw config_error("initial data entry needs name=coefficients: '" + std::string(entry) + "'");
    const auto name = detail::trim(entry.substr(0, eq));
    const auto idx = sys.index_of(name);
    if (!idx) throw unknown_field(std::string(name));
    if (slots[*idx]) throw config_error("initial data for '" + std::string(name) + "' given twice");

    std::vector<double> coeffs;
    for (auto tok : detail::split_on(entry.substr(eq + 1), ',')) {
      bool neg = false;
      std::string_view t = tok;
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        neg = t.front() == '-';
        t.remove_prefix(1);
      }
      std::size_t pos = 0;
      const auto r = detail::scan_rational(t, pos);
      if (!r || pos != t.size()) throw config_error("bad coefficient '" + std::string(tok) + "'");
      coeffs.push_back(neg ? -r->to_double() : r->to_double());
    }
    slots[*idx] = tanh_poly(std::move(coeffs));
  }
  std::vector<tanh_poly> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw dimension_mismatch("no initial data for field '" + sys.fields[i] + "'");
    out.push_back(*slots[i]);
  }
  return out;
}

}  // namespace taylorwave
