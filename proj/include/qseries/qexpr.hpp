#pragma once

// A small expression language for eta quotients and theta functions:
//
//   5*f5^5/f1^6
//   B(q^7)/C(q^7) - q*A(q^7)/B(q^7) - q^2 + q^5*C(q^7)/A(q^7)
//   a(q)^3*f1^3*f9 + 6*q*f9*f3^9
//
// The grammar is documented in docs/expression-language.md.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qseries/series.hpp"

namespace qseries::qexpr {

enum class TokenKind {
  Integer,
  Identifier,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  End,
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string message,
             std::vector<std::string> expected = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Splits text into tokens, not including the trailing End token.
std::vector<Token> tokenize(std::string_view text);

enum class NodeKind {
  Integer,     // value
  QPower,      // q^exponent
  Euler,       // f<k>
  CubicTheta,  // a(q^k)
  Septic,      // A, B or C in q
  Theta,       // theta(a, b)
  Negate,
  Add,
  Subtract,
  Multiply,
  Divide,
  Power,       // child ^ exponent
  Substitute,  // child evaluated at q^k
};

struct Node;
using Expr = std::shared_ptr<const Node>;

struct Node {
  NodeKind kind = NodeKind::Integer;
  mpz_class value;       // Integer
  long exponent = 0;     // QPower, Power
  std::size_t k = 0;     // Euler, CubicTheta, Substitute
  std::size_t a = 0;     // Theta
  std::size_t b = 0;     // Theta
  char septic = 0;       // 'A', 'B' or 'C'
  std::vector<Expr> children;
};

Expr make_integer(const mpz_class& value);
Expr make_qpower(long exponent);
Expr make_euler(std::size_t k);
Expr make_cubic_theta(std::size_t k);
Expr make_septic(char which);
Expr make_theta(std::size_t a, std::size_t b);
Expr make_negate(Expr e);
Expr make_binary(NodeKind kind, Expr lhs, Expr rhs);
Expr make_power(Expr base, long exponent);
Expr make_substitute(Expr e, std::size_t k);

/// Parses a token sequence produced by tokenize().
Expr parse(const std::vector<Token>& tokens);
Expr parse(std::string_view text);

/// Canonical text form; parse(print(e)) is structurally equal to e.
std::string print(const Expr& e);

bool structurally_equal(const Expr& x, const Expr& y);

struct EvalContext {
  std::size_t order = 1;
  CoefficientRing ring;
};

class EvalError : public std::runtime_error {
 public:
  EvalError(std::string subexpression, const std::string& reason);

  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

/// Bottom-up evaluation.  The result order may fall below ctx.order when a
/// division consumes valuation.
Series evaluate(const Expr& e, const EvalContext& ctx);

}  // namespace qseries::qexpr
