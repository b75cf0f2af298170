#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taylorwave {

// Two families: bad input (parse/config/shape) and numerical failure.
// The CLI maps them to exit codes 2 and 3.
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class syntax_error : public input_error {
public:
  syntax_error(std::size_t line, std::size_t column, const std::string& what)
      : input_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class unknown_field : public input_error {
public:
  explicit unknown_field(std::string name) : input_error("unknown field '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

class unsupported_derivative : public input_error {
public:
  using input_error::input_error;
};

class duplicate_equation : public input_error {
public:
  explicit duplicate_equation(const std::string& name) : input_error("field '" + name + "' has more than one equation") {}
};

class dimension_mismatch : public input_error {
public:
  using input_error::input_error;
};

class config_error : public input_error {
public:
  using input_error::input_error;
};

class truncation_too_deep : public numerical_error {
public:
  truncation_too_deep(std::size_t requested, std::size_t available)
      : numerical_error("truncation order " + std::to_string(requested) + " exceeds available order " +
                        std::to_string(available)) {}
};

class degenerate_wave : public numerical_error {
public:
  degenerate_wave() : numerical_error("traveling wave has zero temporal rate; no finite singularity") {}
};

class insufficient_data : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class insufficient_coefficients : public numerical_error {
public:
  insufficient_coefficients(std::size_t needed, std::size_t have)
      : numerical_error("Pade fit needs " + std::to_string(needed) + " coefficients, got " + std::to_string(have)) {}
};

class degenerate_system : public numerical_error {
public:
  using numerical_error::numerical_error;
};

class pole_at_evaluation : public numerical_error {
public:
  explicit pole_at_evaluation(double t) : numerical_error("denominator vanishes at t = " + std::to_string(t)) {}
};

}  // namespace taylorwave
