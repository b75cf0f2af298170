#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "pde_dsl.hpp"
#include "tanh_poly.hpp"
#include "traveling_wave.hpp"

namespace taylorwave {

// A system together with initial data and the closed-form traveling wave of
// every field, so that series output can be compared against exact values.
struct fixture {
  std::string name;
  std::string source;
  pde_system system;
  std::vector<tanh_poly> initial;
  std::vector<traveling_wave> exact;
};

// Polynomial in tanh(x) equal to wave w at t = 0 (k = 1).
inline tanh_poly initial_profile(const traveling_wave& w) { return tanh_poly{w.a, w.b}; }

namespace fixtures {

// tanh(x - 11t/2) from  u' = -(11/2)(1 - u^2).
inline fixture riccati() {
  fixture f;
  f.name = "riccati";
  f.source = "u' = -11/2 * (1 - u^2)\n";
  f.system = parse_system(f.source);
  const traveling_wave w{0.0, 1.0, 1.0, 5.5};
  f.initial = {initial_profile(w)};
  f.exact = {w};
  return f;
}

// The three tanh waves u, v, z, each from its own Riccati-type law.
inline fixture coupled() {
  fixture f;
  f.name = "coupled";
  f.source =
      "u' = -11/4 * (1 - 4*(u - 1)^2)\n"
      "v' = 11/8 * (1 - 16*(v - 1)^2)\n"
      "z' = 11/2 * (1 - (z - 2)^2)\n";
  f.system = parse_system(f.source);
  for (const auto& s : reference_waves()) {
    f.initial.push_back(initial_profile(s.wave));
    f.exact.push_back(s.wave);
  }
  return f;
}

// Linear transport at speed 11/2 of the same three profiles.
inline fixture transport() {
  fixture f;
  f.name = "transport";
  f.source =
      "u' = -11/2 * u_x\n"
      "v' = -11/2 * v_x\n"
      "z' = -11/2 * z_x\n";
  f.system = parse_system(f.source);
  for (const auto& s : reference_waves()) {
    f.initial.push_back(initial_profile(s.wave));
    f.exact.push_back(s.wave);
  }
  return f;
}

}  // namespace fixtures

inline fixture builtin_fixture(std::string_view name) {
  if (name == "riccati") return fixtures::riccati();
  if (name == "coupled") return fixtures::coupled();
  if (name == "transport") return fixtures::transport();
  throw config_error("unknown fixture '" + std::string(name) + "' (expected riccati, coupled or transport)");
}

}  // namespace taylorwave
