#include "ccr/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "ccr/error.hpp"

namespace ccr {

namespace {

class Parser {
 public:
  Parser(std::string_view src, int dim) : src_(src), dim_(dim) {}

  ParsedElement run() {
    ExprPtr expr = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return ParsedElement{std::move(expr), family_};
  }

 private:
  std::string_view src_;
  int dim_;
  std::size_t pos_ = 0;
  GeneratorFamily family_ = GeneratorFamily::none;

  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_char(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }
  }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void note_family(GeneratorFamily family, std::size_t at) {
    if (family_ == GeneratorFamily::none) {
      family_ = family;
    } else if (family_ != family) {
      throw ParseError("cannot mix W and R generators in one expression", at);
    }
  }

  Rational parse_rational_token() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
    }
    if (pos_ == start) {
      throw ParseError("expected a rational literal", pos_);
    }
    try {
      return parse_rational(src_.substr(start, pos_ - start));
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::optional<double> try_parse_real() {
    skip_ws();
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  double parse_real_token() {
    const auto value = try_parse_real();
    if (!value) {
      throw ParseError("expected a real literal", pos_);
    }
    return *value;
  }

  std::vector<Rational> parse_vector_literal(char close, std::size_t at) {
    std::vector<Rational> coords;
    coords.push_back(parse_rational_token());
    while (accept(',')) {
      coords.push_back(parse_rational_token());
    }
    expect(close, "to close the vector literal");
    if (dim_ > 0 && static_cast<int>(coords.size()) != dim_) {
      throw ParseError("vector literal has " + std::to_string(coords.size()) +
                           " coordinates, expected " + std::to_string(dim_),
                       at);
    }
    return coords;
  }

  // Attempts '(' real [sign real 'i'] ')' and rolls back on mismatch.
  std::optional<ExprPtr> try_complex_literal() {
    const std::size_t save = pos_;
    if (!accept('(')) return std::nullopt;
    const auto re = try_parse_real();
    if (!re) {
      pos_ = save;
      return std::nullopt;
    }
    double im = 0.0;
    skip_ws();
    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
      const double sign = src_[pos_] == '-' ? -1.0 : 1.0;
      const std::size_t sign_pos = pos_;
      ++pos_;
      const auto mag = try_parse_real();
      if (!mag || !accept('i')) {
        pos_ = save;
        (void)sign_pos;
        return std::nullopt;
      }
      im = sign * *mag;
    } else if (pos_ < src_.size() && src_[pos_] == 'i') {
      ++pos_;
      im = *re;
      if (!accept(')')) {
        pos_ = save;
        return std::nullopt;
      }
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::scalar;
      node->value = {0.0, im};
      return node;
    }
    if (!accept(')')) {
      pos_ = save;
      return std::nullopt;
    }
    auto node = std::make_shared<Expr>();
    node->kind = ExprKind::scalar;
    node->value = {*re, im};
    return node;
  }

  ExprPtr parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept_word("adj")) {
      expect('(', "after adj");
      ExprPtr inner = parse_expr();
      expect(')', "to close adj");
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::adjoint;
      node->children.push_back(std::move(inner));
      return node;
    }
    if (accept('W')) {
      note_family(GeneratorFamily::weyl, at);
      expect('[', "after W");
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::weyl;
      node->coords = parse_vector_literal(']', at);
      return node;
    }
    if (accept('R')) {
      note_family(GeneratorFamily::resolvent, at);
      expect('(', "after R");
      const std::size_t lambda_at = pos_;
      const double lambda = parse_real_token();
      if (lambda == 0.0) {
        throw ParseError("lambda must be nonzero", lambda_at);
      }
      expect(';', "between lambda and the vector");
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::resolvent;
      node->lambda = lambda;
      node->coords = parse_vector_literal(')', at);
      return node;
    }
    if (peek_char('(')) {
      if (auto literal = try_complex_literal()) {
        return *literal;
      }
      expect('(', "to open a group");
      ExprPtr inner = parse_expr();
      expect(')', "to close a group");
      return inner;
    }
    if (auto real = try_parse_real()) {
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::scalar;
      node->value = {*real, 0.0};
      return node;
    }
    throw ParseError("expected W[...], R(...), adj(...), a scalar or '('",
                     pos_);
  }

  ExprPtr parse_factor() {
    ExprPtr base = parse_atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      int exponent = 0;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        exponent = exponent * 10 + (src_[pos_] - '0');
        ++pos_;
      }
      if (pos_ == at || exponent <= 0) {
        throw ParseError("exponent must be a positive integer", at);
      }
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::power;
      node->exponent = exponent;
      node->children.push_back(std::move(base));
      return node;
    }
    return base;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (accept('*')) {
      auto node = std::make_shared<Expr>();
      node->kind = ExprKind::mul;
      node->children.push_back(std::move(lhs));
      node->children.push_back(parse_factor());
      lhs = std::move(node);
    }
    return lhs;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      if (accept('+')) {
        auto node = std::make_shared<Expr>();
        node->kind = ExprKind::add;
        node->children.push_back(std::move(lhs));
        node->children.push_back(parse_term());
        lhs = std::move(node);
      } else if (peek_char('-')) {
        ++pos_;
        auto node = std::make_shared<Expr>();
        node->kind = ExprKind::sub;
        node->children.push_back(std::move(lhs));
        node->children.push_back(parse_term());
        lhs = std::move(node);
      } else {
        break;
      }
    }
    return lhs;
  }
};

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::add:
    case ExprKind::sub:
      return 1;
    case ExprKind::mul:
      return 2;
    case ExprKind::power:
      return 3;
    default:
      return 4;
  }
}

void print(const Expr& expr, std::string& out) {
  const auto child = [&](const Expr& c, int min_prec) {
    if (precedence(c.kind) < min_prec) {
      out += "(";
      print(c, out);
      out += ")";
    } else {
      print(c, out);
    }
  };
  switch (expr.kind) {
    case ExprKind::weyl: {
      out += "W[";
      for (std::size_t i = 0; i < expr.coords.size(); ++i) {
        if (i) out += ",";
        out += format_rational(expr.coords[i]);
      }
      out += "]";
      break;
    }
    case ExprKind::resolvent: {
      out += "R(" + format_double(expr.lambda) + ";";
      for (std::size_t i = 0; i < expr.coords.size(); ++i) {
        if (i) out += ",";
        out += format_rational(expr.coords[i]);
      }
      out += ")";
      break;
    }
    case ExprKind::scalar: {
      out += "(" + format_double(expr.value.real());
      if (expr.value.imag() >= 0.0) {
        out += "+" + format_double(expr.value.imag()) + "i";
      } else {
        out += "-" + format_double(-expr.value.imag()) + "i";
      }
      out += ")";
      break;
    }
    case ExprKind::add:
      child(*expr.children[0], 1);
      out += "+";
      child(*expr.children[1], 2);
      break;
    case ExprKind::sub:
      child(*expr.children[0], 1);
      out += "-";
      child(*expr.children[1], 2);
      break;
    case ExprKind::mul:
      child(*expr.children[0], 2);
      out += "*";
      child(*expr.children[1], 3);
      break;
    case ExprKind::adjoint:
      out += "adj(";
      print(*expr.children[0], out);
      out += ")";
      break;
    case ExprKind::power:
      child(*expr.children[0], 4);
      out += "^" + std::to_string(expr.exponent);
      break;
  }
}

}  // namespace

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.coords != b.coords || a.lambda != b.lambda ||
      a.value != b.value || a.exponent != b.exponent ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

ParsedElement parse_element(std::string_view src, int dim) {
  return Parser(src, dim).run();
}

std::string to_string(const Expr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

WeylElement evaluate_weyl(const Expr& expr, const SymplecticSpace& space) {
  switch (expr.kind) {
    case ExprKind::weyl:
      return weyl_generator(space, expr.coords);
    case ExprKind::resolvent:
      throw Error("resolvent generator in a Weyl context");
    case ExprKind::scalar:
      return scale(expr.value, weyl_unit(space));
    case ExprKind::add:
      return add(evaluate_weyl(*expr.children[0], space),
                 evaluate_weyl(*expr.children[1], space));
    case ExprKind::sub:
      return subtract(evaluate_weyl(*expr.children[0], space),
                      evaluate_weyl(*expr.children[1], space));
    case ExprKind::mul:
      return multiply(evaluate_weyl(*expr.children[0], space),
                      evaluate_weyl(*expr.children[1], space));
    case ExprKind::adjoint:
      return adjoint(evaluate_weyl(*expr.children[0], space));
    case ExprKind::power: {
      WeylElement base = evaluate_weyl(*expr.children[0], space);
      WeylElement out = base;
      for (int i = 1; i < expr.exponent; ++i) out = multiply(out, base);
      return out;
    }
  }
  throw Error("corrupt expression node");
}

Eigen::MatrixXcd evaluate_resolvent(const Expr& expr, const FockRep& rep) {
  switch (expr.kind) {
    case ExprKind::weyl:
      throw Error("Weyl generator in a resolvent context");
    case ExprKind::resolvent:
      return resolvent_matrix(rep, expr.lambda, expr.coords);
    case ExprKind::scalar:
      return expr.value * Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
    case ExprKind::add:
      return evaluate_resolvent(*expr.children[0], rep) +
             evaluate_resolvent(*expr.children[1], rep);
    case ExprKind::sub:
      return evaluate_resolvent(*expr.children[0], rep) -
             evaluate_resolvent(*expr.children[1], rep);
    case ExprKind::mul:
      return evaluate_resolvent(*expr.children[0], rep) *
             evaluate_resolvent(*expr.children[1], rep);
    case ExprKind::adjoint:
      return evaluate_resolvent(*expr.children[0], rep).adjoint();
    case ExprKind::power: {
      const Eigen::MatrixXcd base = evaluate_resolvent(*expr.children[0], rep);
      Eigen::MatrixXcd out = base;
      for (int i = 1; i < expr.exponent; ++i) out = out * base;
      return out;
    }
  }
  throw Error("corrupt expression node");
}

std::complex<double> evaluate_character(const Expr& expr,
                                        const Character& chi) {
  switch (expr.kind) {
    case ExprKind::weyl:
      throw Error("Weyl generator in a resolvent context");
    case ExprKind::resolvent:
      return character_value(chi,
                             ResolventFactor{expr.lambda, expr.coords, false});
    case ExprKind::scalar:
      return expr.value;
    case ExprKind::add:
      return evaluate_character(*expr.children[0], chi) +
             evaluate_character(*expr.children[1], chi);
    case ExprKind::sub:
      return evaluate_character(*expr.children[0], chi) -
             evaluate_character(*expr.children[1], chi);
    case ExprKind::mul:
      return evaluate_character(*expr.children[0], chi) *
             evaluate_character(*expr.children[1], chi);
    case ExprKind::adjoint:
      return std::conj(evaluate_character(*expr.children[0], chi));
    case ExprKind::power: {
      const std::complex<double> base =
          evaluate_character(*expr.children[0], chi);
      std::complex<double> out = base;
      for (int i = 1; i < expr.exponent; ++i) out *= base;
      return out;
    }
  }
  throw Error("corrupt expression node");
}

std::optional<ResolventWord> as_word(const Expr& expr) {
  switch (expr.kind) {
    case ExprKind::resolvent:
      return ResolventWord{{ResolventFactor{expr.lambda, expr.coords, false}}};
    case ExprKind::mul: {
      const auto left = as_word(*expr.children[0]);
      const auto right = as_word(*expr.children[1]);
      if (!left || !right) return std::nullopt;
      return concat(*left, *right);
    }
    case ExprKind::adjoint: {
      const auto inner = as_word(*expr.children[0]);
      if (!inner) return std::nullopt;
      return adjoint(*inner);
    }
    case ExprKind::power: {
      const auto inner = as_word(*expr.children[0]);
      if (!inner) return std::nullopt;
      ResolventWord out;
      for (int i = 0; i < expr.exponent; ++i) out = concat(out, *inner);
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::vector<std::string> split_expressions(std::string_view list) {
  std::vector<std::string> out;
  int depth = 0;
  std::string current;
  for (char c : list) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
      continue;
    }
    current += c;
  }
  out.push_back(current);
  for (auto& s : out) {
    const auto first = s.find_first_not_of(" \t");
    const auto last = s.find_last_not_of(" \t");
    s = first == std::string::npos ? "" : s.substr(first, last - first + 1);
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace ccr
