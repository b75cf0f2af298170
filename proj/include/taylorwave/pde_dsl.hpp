#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "tanh_poly.hpp"
#include "time_series.hpp"

namespace taylorwave {

// Exact literal kept as a reduced fraction until evaluation.
struct rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr rational() = default;
  constexpr rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw input_error("rational literal with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  rational operator-() const { return rational(-num, den); }
  friend bool operator==(const rational&, const rational&) = default;

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

namespace ast {

struct node;
using ptr = std::shared_ptr<const node>;

enum class binary_op { add, sub, mul };

struct constant {
  rational value;
};
struct field {
  std::size_t index;
};
// Spatial derivative of order >= 1 applied to a declared field.
struct derivative {
  std::size_t field;
  unsigned order;
};
struct negate {
  ptr operand;
};
struct binary {
  binary_op op;
  ptr lhs, rhs;
};
// Positive integer exponent only.
struct power {
  ptr base;
  unsigned exponent;
};

struct node {
  std::variant<constant, field, derivative, negate, binary, power> v;
};

inline ptr make_const(rational r) { return std::make_shared<const node>(node{constant{r}}); }
inline ptr make_field(std::size_t i) { return std::make_shared<const node>(node{field{i}}); }
inline ptr make_deriv(std::size_t i, unsigned k) { return std::make_shared<const node>(node{derivative{i, k}}); }
inline ptr make_neg(ptr a) { return std::make_shared<const node>(node{negate{std::move(a)}}); }
inline ptr make_binary(binary_op op, ptr a, ptr b) {
  return std::make_shared<const node>(node{binary{op, std::move(a), std::move(b)}});
}
inline ptr make_add(ptr a, ptr b) { return make_binary(binary_op::add, std::move(a), std::move(b)); }
inline ptr make_sub(ptr a, ptr b) { return make_binary(binary_op::sub, std::move(a), std::move(b)); }
inline ptr make_mul(ptr a, ptr b) { return make_binary(binary_op::mul, std::move(a), std::move(b)); }
inline ptr make_pow(ptr a, unsigned e) { return std::make_shared<const node>(node{power{std::move(a), e}}); }

// Structural equality.
inline bool equal(const ptr& a, const ptr& b) {
  if (a == b) return true;
  if (!a || !b || a->v.index() != b->v.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->v);
        if constexpr (std::is_same_v<T, constant>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, field>) return x.index == y.index;
        else if constexpr (std::is_same_v<T, derivative>) return x.field == y.field && x.order == y.order;
        else if constexpr (std::is_same_v<T, negate>) return equal(x.operand, y.operand);
        else if constexpr (std::is_same_v<T, binary>) return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
        else return x.exponent == y.exponent && equal(x.base, y.base);
      },
      a->v);
}

inline unsigned max_spatial_order(const ptr& e) {
  return std::visit(
      [](const auto& x) -> unsigned {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, derivative>) return x.order;
        else if constexpr (std::is_same_v<T, negate>) return max_spatial_order(x.operand);
        else if constexpr (std::is_same_v<T, binary>) return std::max(max_spatial_order(x.lhs), max_spatial_order(x.rhs));
        else if constexpr (std::is_same_v<T, power>) return max_spatial_order(x.base);
        else return 0u;
      },
      e->v);
}

}  // namespace ast

// Right-hand sides of  d/dt field_i = rhs_i  in field declaration order.
struct pde_system {
  std::vector<std::string> fields;
  std::vector<ast::ptr> rhs;

  std::size_t size() const noexcept { return fields.size(); }

  unsigned max_spatial_order() const {
    unsigned m = 0;
    for (const auto& e : rhs) m = std::max(m, ast::max_spatial_order(e));
    return m;
  }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < fields.size(); ++i)
      if (fields[i] == name) return i;
    return std::nullopt;
  }
};

inline bool operator==(const pde_system& a, const pde_system& b) {
  if (a.fields != b.fields || a.rhs.size() != b.rhs.size()) return false;
  for (std::size_t i = 0; i < a.rhs.size(); ++i)
    if (!ast::equal(a.rhs[i], b.rhs[i])) return false;
  return true;
}

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
inline bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Decimal or integer-fraction literal, e.g. "5.5", "11/4", "3". Advances pos.
// Returns nullopt if no literal starts at pos.
inline std::optional<rational> scan_rational(std::string_view s, std::size_t& pos) {
  std::size_t p = pos;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any = false;
  constexpr std::int64_t limit = std::numeric_limits<std::int64_t>::max() / 10;
  while (p < s.size() && is_digit(s[p])) {
    if (num > limit) throw input_error("numeric literal too large");
    num = num * 10 + (s[p] - '0');
    ++p;
    any = true;
  }
  if (p < s.size() && s[p] == '.') {
    ++p;
    while (p < s.size() && is_digit(s[p])) {
      if (num > limit || den > limit) throw input_error("numeric literal has too many digits");
      num = num * 10 + (s[p] - '0');
      den *= 10;
      ++p;
      any = true;
    }
    if (!any) return std::nullopt;
  } else if (any && p + 1 < s.size() && s[p] == '/' && is_digit(s[p + 1])) {
    ++p;
    std::int64_t d = 0;
    while (p < s.size() && is_digit(s[p])) {
      if (d > limit) throw input_error("numeric literal too large");
      d = d * 10 + (s[p] - '0');
      ++p;
    }
    den = d;
  }
  if (!any) return std::nullopt;
  pos = p;
  return rational(num, den);
}

// Recursive descent over one right-hand side.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := literal | field | field_x..x | d_x(field) | d_x^k(field) | '(' expr ')'
//
// Unary minus binds looser than '^', so "-u^2" is -(u^2). A minus directly in
// front of a literal that is not raised to a power folds into the literal.
class rhs_parser {
public:
  rhs_parser(std::string_view text, std::size_t line, std::size_t col0, const std::vector<std::string>& fields)
      : s_(text), line_(line), col0_(col0), fields_(fields) {}

  ast::ptr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw syntax_error(line_, col0_ + pos_ + 1, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ast::ptr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) lhs = ast::make_add(std::move(lhs), term());
      else if (accept('-')) lhs = ast::make_sub(std::move(lhs), term());
      else return lhs;
    }
  }

  ast::ptr term() {
    auto lhs = unary();
    while (accept('*')) lhs = ast::make_mul(std::move(lhs), unary());
    return lhs;
  }

  ast::ptr unary() {
    if (!accept('-')) return power();
    skip_ws();
    const std::size_t save = pos_;
    if (auto lit = scan_rational(s_, pos_)) {
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '^') return ast::make_const(-*lit);
      pos_ = save;
    }
    return ast::make_neg(unary());
  }

  ast::ptr power() {
    auto base = primary();
    if (!accept('^')) return base;
    skip_ws();
    std::size_t p = pos_;
    auto e = scan_rational(s_, p);
    if (!e || e->den != 1 || e->num < 1) fail("exponent must be a positive integer");
    if (e->num > 64) fail("exponent too large");
    pos_ = p;
    return ast::make_pow(std::move(base), static_cast<unsigned>(e->num));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_ident_char(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t field_index(const std::string& name) const {
    for (std::size_t i = 0; i < fields_.size(); ++i)
      if (fields_[i] == name) return i;
    throw unknown_field(name);
  }

  ast::ptr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (auto lit = scan_rational(s_, pos_)) return ast::make_const(*lit);
    if (!is_ident_start(s_[pos_])) fail("unexpected '" + std::string(1, s_[pos_]) + "'");

    const std::string id = identifier();
    if (id == "d_x" || id == "d_t") return derivative_call(id);

    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '(') fail("unsupported function '" + id + "'");

    const auto us = id.find('_');
    if (us == std::string::npos) return ast::make_field(field_index(id));

    const std::string base = id.substr(0, us);
    const std::string suffix = id.substr(us + 1);
    if (suffix.empty()) fail("malformed identifier '" + id + "'");
    if (suffix.find_first_not_of('x') != std::string::npos) {
      if (suffix.find('t') != std::string::npos)
        throw unsupported_derivative("time derivative '" + id + "' is not allowed on a right-hand side");
      fail("malformed derivative '" + id + "'");
    }
    return ast::make_deriv(field_index(base), static_cast<unsigned>(suffix.size()));
  }

  // d_x(u), d_x^k(u); the argument must be a bare declared field.
  ast::ptr derivative_call(const std::string& id) {
    if (id == "d_t") throw unsupported_derivative("time derivatives are not allowed on a right-hand side");
    unsigned order = 1;
    if (accept('^')) {
      skip_ws();
      auto k = scan_rational(s_, pos_);
      if (!k || k->den != 1 || k->num < 1) fail("derivative order must be a positive integer");
      order = static_cast<unsigned>(k->num);
    }
    expect('(');
    auto arg = expr();
    expect(')');
    const auto* f = std::get_if<ast::field>(&arg->v);
    if (!f) throw unsupported_derivative("d_x applies only to a declared field, not to a subexpression");
    return ast::make_deriv(f->index, order);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
  const std::vector<std::string>& fields_;
};

inline int precedence(const ast::ptr& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::binary>) return x.op == ast::binary_op::mul ? 2 : 1;
        else if constexpr (std::is_same_v<T, ast::negate>) return 3;
        else if constexpr (std::is_same_v<T, ast::power>) return 4;
        else if constexpr (std::is_same_v<T, ast::constant>) return x.value.num < 0 ? 3 : 5;
        else return 5;
      },
      e->v);
}

inline void print(std::ostream& os, const ast::ptr& e, const std::vector<std::string>& fields);

inline void print_wrapped(std::ostream& os, const ast::ptr& e, const std::vector<std::string>& fields, bool wrap) {
  if (wrap) os << '(';
  print(os, e, fields);
  if (wrap) os << ')';
}

inline void print(std::ostream& os, const ast::ptr& e, const std::vector<std::string>& fields) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::constant>) {
          os << x.value.str();
        } else if constexpr (std::is_same_v<T, ast::field>) {
          os << fields.at(x.index);
        } else if constexpr (std::is_same_v<T, ast::derivative>) {
          os << fields.at(x.field) << '_' << std::string(x.order, 'x');
        } else if constexpr (std::is_same_v<T, ast::negate>) {
          os << '-';
          const bool wrap = precedence(x.operand) < 4 || std::holds_alternative<ast::constant>(x.operand->v);
          print_wrapped(os, x.operand, fields, wrap);
        } else if constexpr (std::is_same_v<T, ast::binary>) {
          const int p = x.op == ast::binary_op::mul ? 2 : 1;
          print_wrapped(os, x.lhs, fields, precedence(x.lhs) < p);
          os << (x.op == ast::binary_op::add ? " + " : x.op == ast::binary_op::sub ? " - " : " * ");
          print_wrapped(os, x.rhs, fields, precedence(x.rhs) <= p);
        } else {
          print_wrapped(os, x.base, fields, precedence(x.base) < 5);
          os << '^' << x.exponent;
        }
      },
      e->v);
}

}  // namespace detail

inline std::string to_string(const ast::ptr& e, const std::vector<std::string>& fields) {
  std::ostringstream os;
  detail::print(os, e, fields);
  return os.str();
}

inline std::string to_string(const pde_system& sys) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    os << sys.fields[i] << "' = ";
    detail::print(os, sys.rhs[i], sys.fields);
    os << '\n';
  }
  return os.str();
}

// One equation per line, `name' = expr`; '#' starts a comment. Field order is
// the order in which equations appear.
inline pde_system parse_system(std::string_view text) {
  struct line_eq {
    std::size_t line;
    std::size_t rhs_col;
    std::string name;
    std::string_view rhs;
  };
  std::vector<line_eq> eqs;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t p = 0;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p == line.size()) continue;

    if (!detail::is_ident_start(line[p])) throw syntax_error(line_no, p + 1, "expected field name");
    const std::size_t name_start = p;
    while (p < line.size() && std::isalnum(static_cast<unsigned char>(line[p]))) ++p;
    std::string name(line.substr(name_start, p - name_start));
    if (p < line.size() && line[p] == '_')
      throw syntax_error(line_no, p + 1, "field names may not contain '_'");
    while (p < line.size() && line[p] == ' ') ++p;
    if (p >= line.size() || line[p] != '\'') throw syntax_error(line_no, p + 1, "expected ' after field name");
    ++p;
    while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
    if (p >= line.size() || line[p] != '=') throw syntax_error(line_no, p + 1, "expected '='");
    ++p;

    for (const auto& e : eqs)
      if (e.name == name) throw duplicate_equation(name);
    eqs.push_back({line_no, p, std::move(name), line.substr(p)});
  }
  if (eqs.empty()) throw input_error("system has no equations");

  pde_system sys;
  for (const auto& e : eqs) sys.fields.push_back(e.name);
  for (const auto& e : eqs) sys.rhs.push_back(detail::rhs_parser(e.rhs, e.line, e.rhs_col, sys.fields).parse());
  return sys;
}

namespace detail {

using spatial_series = time_series<tanh_poly>;

inline spatial_series eval_node(const ast::ptr& e, const std::vector<spatial_series>& state, std::size_t n) {
  return std::visit(
      [&](const auto& x) -> spatial_series {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ast::constant>) {
          return spatial_series::constant(tanh_poly(x.value.to_double()), n);
        } else if constexpr (std::is_same_v<T, ast::field>) {
          return state[x.index].truncated(n);
        } else if constexpr (std::is_same_v<T, ast::derivative>) {
          const unsigned k = x.order;
          return state[x.field].truncated(n).map([k](const tanh_poly& p) { return p.dx(k); });
        } else if constexpr (std::is_same_v<T, ast::negate>) {
          return -eval_node(x.operand, state, n);
        } else if constexpr (std::is_same_v<T, ast::binary>) {
          auto a = eval_node(x.lhs, state, n);
          auto b = eval_node(x.rhs, state, n);
          switch (x.op) {
            case ast::binary_op::add: return a + b;
            case ast::binary_op::sub: return a - b;
            case ast::binary_op::mul: return series_mul(a, b, n);
          }
          return a;
        } else {
          const auto base = eval_node(x.base, state, n);
          auto acc = base;
          for (unsigned i = 1; i < x.exponent; ++i) acc = series_mul(acc, base, n);
          return acc;
        }
      },
      e->v);
}

}  // namespace detail

// f(state) for every right-hand side, each truncated at order n.
inline std::vector<time_series<tanh_poly>> eval_rhs(const pde_system& sys, const std::vector<time_series<tanh_poly>>& state,
                                                    std::size_t n) {
  if (state.size() != sys.size())
    throw dimension_mismatch("state has " + std::to_string(state.size()) + " fields, system has " +
                             std::to_string(sys.size()));
  for (const auto& s : state)
    if (s.order() < n) throw truncation_too_deep(n, s.order());
  std::vector<time_series<tanh_poly>> out;
  out.reserve(sys.size());
  for (const auto& e : sys.rhs) out.push_back(detail::eval_node(e, state, n));
  return out;
}

}  // namespace taylorwave
