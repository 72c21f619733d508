#ifndef CCR_EXPR_HPP
#define CCR_EXPR_HPP

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccr/fock.hpp"
#include "ccr/weyl.hpp"

namespace ccr {

// Element literals:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' INT]
//   atom   := 'W' '[' rational (',' rational)* ']'
//           | 'R' '(' real ';' rational (',' rational)* ')'
//           | 'adj' '(' expr ')'
//           | '(' real [('+'|'-') real 'i'] ')'
//           | real
//           | '(' expr ')'
// Whitespace-insensitive; rationals are `p` or `p/q`; one expression uses
// generators of a single family.

enum class ExprKind { weyl, resolvent, scalar, add, sub, mul, adjoint, power };
enum class GeneratorFamily { none, weyl, resolvent };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind{};
  std::vector<Rational> coords;     // weyl / resolvent generator index
  double lambda = 0.0;              // resolvent generator
  std::complex<double> value{};     // scalar literal
  int exponent = 1;                 // power
  std::vector<ExprPtr> children;
};

bool equal(const Expr& a, const Expr& b);

struct ParsedElement {
  ExprPtr ast;
  GeneratorFamily family = GeneratorFamily::none;
};

/// Parses one element literal; `dim` is the expected vector arity (2d).
/// Throws ParseError with the byte offset of the offending token.
ParsedElement parse_element(std::string_view src, int dim);

/// Grammar-conformant rendering; parse(to_string(parse(s))) has the same AST.
std::string to_string(const Expr& expr);

WeylElement evaluate_weyl(const Expr& expr, const SymplecticSpace& space);
Eigen::MatrixXcd evaluate_resolvent(const Expr& expr, const FockRep& rep);
std::complex<double> evaluate_character(const Expr& expr, const Character& chi);

/// Flattens a pure product of resolvent generators (with adj and powers)
/// into a word; nullopt when the expression contains sums or scalars.
std::optional<ResolventWord> as_word(const Expr& expr);

/// Splits on commas at bracket depth zero, trimming whitespace.
std::vector<std::string> split_expressions(std::string_view list);

}  // namespace ccr

#endif
