#pragma once

// The expression language of the command line.
//
//   sum     := neg (('+' | '-') neg)*
//   neg     := '-' neg | prod
//   prod    := power ('*' power)*
//   power   := primary ('^' INT)?
//   primary := INT | INT '/' INT | '(' sum ')' | atom | form
//
// Atoms: e(n/d), e(n), mu~(n), mu*(n), nu(n), nu*(n), mu~p, mu*p,
// delta(k/m), delta(k/p^n), tau(m), sqrt(s), t.
// Forms: sigma_n{x}, rho~_n{x}, rho_n{x}, pi_n, star{x}, reduce_p{x},
// twist(a,N){x}, theta{x}(y), phi{x}, psi{x}, iota{x}.

#include <string>
#include <vector>

#include "bce/error.hpp"
#include "bce/numbers.hpp"

namespace bce {

enum class ExprKind {
  // literals and atoms; `ints` holds the numbers as written
  Int,        // {n}
  Frac,       // {n, d}
  E,          // {n} or {n, d}; n may be negative
  MuTilde,    // {n}
  MuStar,     // {n}
  Nu,         // {n}
  NuStar,     // {n}
  MuTildeP,   // {}
  MuStarP,    // {}
  Delta,      // {k, m} or {k, base, exp}
  Tau,        // {m}
  Sqrt,       // {s}
  Generator,  // {}
  Pi,         // {n}
  // operators
  Add,
  Sub,
  Neg,
  Mul,
  Pow,  // {exponent}, args {base}
  // functional forms
  Sigma,      // {n}
  RhoTilde,   // {n}
  Rho,        // {n}
  Star,
  Reduce,     // {p}
  Twist,      // {a, N}
  Theta,      // args {x, y}
  Phi,
  Psi,
  Iota,
};

struct Expr {
  ExprKind kind;
  std::vector<Int> ints;
  std::vector<Expr> args;

  bool operator==(const Expr& o) const = default;
};

/// Syntax error with a 1-based position and the set of tokens that would
/// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what,
             std::vector<std::string> expected = {});
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

Expr parse_expr(const std::string& text);

/// Minimal-parenthesis text; parse_expr(print_expr(x)) == x.
std::string print_expr(const Expr& x);

}  // namespace bce
