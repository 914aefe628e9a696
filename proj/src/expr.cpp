#include "bce/expr.hpp"

#include <cctype>
#include <map>

namespace bce {

namespace {

std::string describe_position(std::size_t line, std::size_t column) {
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what,
                       std::vector<std::string> expected)
    : Error(describe_position(line, column) + ": " + what +
            (expected.empty() ? "" : " (expected " + join(expected) + ")")),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Int, Ident, Punct, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string show(const Token& t) {
  switch (t.type) {
    case Tok::End:
      return "end of input";
    case Tok::Int:
      return "integer " + t.text;
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{Tok::Punct, "", line, column};
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      tok.type = Tok::Int;
      tok.text = text.substr(i, j - i);
      advance(j - i);
    } else if (is_alpha(c)) {
      std::size_t j = i;
      while (j < text.size() && is_alpha(text[j])) ++j;
      std::string word = text.substr(i, j - i);
      // mu~, mu*, nu*, rho~ and the p-local generators mu~p, mu*p
      if ((word == "mu" || word == "rho") && j < text.size() && text[j] == '~') {
        word += text[j++];
      } else if ((word == "mu" || word == "nu") && j < text.size() && text[j] == '*') {
        word += text[j++];
      }
      if ((word == "mu~" || word == "mu*") && j < text.size() && text[j] == 'p' &&
          (j + 1 == text.size() || !(std::isalnum(static_cast<unsigned char>(text[j + 1])) || text[j + 1] == '_'))) {
        word += text[j++];
      }
      tok.type = Tok::Ident;
      tok.text = word;
      advance(j - i);
    } else if (std::string("+-*/^(){}_,").find(c) != std::string::npos) {
      tok.text = std::string(1, c);
      advance(1);
    } else {
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::End, "", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Expr parse() {
    Expr e = sum();
    if (peek().type != Tok::End) fail(peek(), "unexpected " + show(peek()), {"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& what, std::vector<std::string> expected = {}) {
    throw ParseError(at.line, at.column, what, std::move(expected));
  }

  bool accept(const char* punct) {
    if (peek().type == Tok::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const char* punct) {
    if (!accept(punct)) fail(peek(), "unexpected " + show(peek()), {std::string("'") + punct + "'"});
  }

  Int integer() {
    if (peek().type != Tok::Int) fail(peek(), "unexpected " + show(peek()), {"integer"});
    return Int(next().text);
  }

  Int signed_integer() {
    const bool negative = accept("-");
    Int n = integer();
    return negative ? Int(-n) : n;
  }

  Int denominator() {
    const Token& at = peek();
    Int d = integer();
    if (d == 0) fail(at, "denominator is zero");
    return d;
  }

  Expr sum() {
    Expr lhs = neg();
    for (;;) {
      if (accept("+")) {
        lhs = Expr{ExprKind::Add, {}, {std::move(lhs), neg()}};
      } else if (accept("-")) {
        lhs = Expr{ExprKind::Sub, {}, {std::move(lhs), neg()}};
      } else {
        return lhs;
      }
    }
  }

  Expr neg() {
    if (accept("-")) return Expr{ExprKind::Neg, {}, {neg()}};
    return prod();
  }

  Expr prod() {
    Expr lhs = power();
    while (accept("*")) lhs = Expr{ExprKind::Mul, {}, {std::move(lhs), power()}};
    return lhs;
  }

  Expr power() {
    Expr base = primary();
    if (accept("^")) return Expr{ExprKind::Pow, {integer()}, {std::move(base)}};
    return base;
  }

  Expr braced() {
    expect("{");
    Expr inner = sum();
    expect("}");
    return inner;
  }

  Int subscript() {
    expect("_");
    return integer();
  }

  Expr unary_atom(ExprKind kind) {
    expect("(");
    Int n = integer();
    expect(")");
    return Expr{kind, {n}, {}};
  }

  Expr primary() {
    const Token& tok = peek();
    if (tok.type == Tok::Int) {
      Int n = integer();
      if (accept("/")) return Expr{ExprKind::Frac, {n, denominator()}, {}};
      return Expr{ExprKind::Int, {n}, {}};
    }
    if (accept("(")) {
      Expr inner = sum();
      expect(")");
      return inner;
    }
    if (tok.type != Tok::Ident) fail(tok, "unexpected " + show(tok), {"integer", "'('", "'-'", "identifier"});
    const std::string word = next().text;

    static const std::map<std::string, ExprKind> simple = {
        {"mu~", ExprKind::MuTilde}, {"mu*", ExprKind::MuStar}, {"nu", ExprKind::Nu},
        {"nu*", ExprKind::NuStar},  {"tau", ExprKind::Tau},    {"sqrt", ExprKind::Sqrt},
    };
    static const std::map<std::string, ExprKind> subscripted = {
        {"sigma", ExprKind::Sigma}, {"rho~", ExprKind::RhoTilde}, {"rho", ExprKind::Rho},
        {"reduce", ExprKind::Reduce},
    };
    static const std::map<std::string, ExprKind> unary_forms = {
        {"star", ExprKind::Star}, {"phi", ExprKind::Phi}, {"psi", ExprKind::Psi}, {"iota", ExprKind::Iota},
    };

    if (auto it = simple.find(word); it != simple.end()) return unary_atom(it->second);
    if (auto it = subscripted.find(word); it != subscripted.end()) {
      Int n = subscript();
      return Expr{it->second, {n}, {braced()}};
    }
    if (auto it = unary_forms.find(word); it != unary_forms.end()) return Expr{it->second, {}, {braced()}};
    if (word == "e") {
      expect("(");
      Int n = signed_integer();
      if (accept("/")) {
        Int d = denominator();
        expect(")");
        return Expr{ExprKind::E, {n, d}, {}};
      }
      expect(")");
      return Expr{ExprKind::E, {n}, {}};
    }
    if (word == "delta") {
      expect("(");
      Int k = integer();
      expect("/");
      Int m = denominator();
      if (accept("^")) {
        Int exponent = integer();
        expect(")");
        return Expr{ExprKind::Delta, {k, m, exponent}, {}};
      }
      expect(")");
      return Expr{ExprKind::Delta, {k, m}, {}};
    }
    if (word == "pi") return Expr{ExprKind::Pi, {subscript()}, {}};
    if (word == "mu~p") return Expr{ExprKind::MuTildeP, {}, {}};
    if (word == "mu*p") return Expr{ExprKind::MuStarP, {}, {}};
    if (word == "t") return Expr{ExprKind::Generator, {}, {}};
    if (word == "twist") {
      expect("(");
      Int a = integer();
      expect(",");
      Int level = integer();
      expect(")");
      return Expr{ExprKind::Twist, {a, level}, {braced()}};
    }
    if (word == "theta") {
      Expr x = braced();
      expect("(");
      Expr y = sum();
      expect(")");
      return Expr{ExprKind::Theta, {}, {std::move(x), std::move(y)}};
    }
    fail(tok, "unknown function '" + word + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::Add:
    case ExprKind::Sub:
      return 1;
    case ExprKind::Neg:
      return 2;
    case ExprKind::Mul:
      return 3;
    case ExprKind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print(const Expr& x, int min_prec, std::string& out);

void print_braced(const Expr& x, std::string& out) {
  out += '{';
  print(x, 1, out);
  out += '}';
}

void print(const Expr& x, int min_prec, std::string& out) {
  const bool wrap = precedence(x.kind) < min_prec;
  if (wrap) out += '(';
  auto num = [&](std::size_t i) { out += to_string(x.ints.at(i)); };
  auto call = [&](const char* name) {
    out += name;
    out += '(';
    num(0);
    out += ')';
  };
  auto form = [&](const char* name) {
    out += name;
    out += '_';
    num(0);
    print_braced(x.args.at(0), out);
  };
  switch (x.kind) {
    case ExprKind::Int:
      num(0);
      break;
    case ExprKind::Frac:
      num(0);
      out += '/';
      num(1);
      break;
    case ExprKind::E:
      out += "e(";
      num(0);
      if (x.ints.size() > 1) {
        out += '/';
        num(1);
      }
      out += ')';
      break;
    case ExprKind::MuTilde:
      call("mu~");
      break;
    case ExprKind::MuStar:
      call("mu*");
      break;
    case ExprKind::Nu:
      call("nu");
      break;
    case ExprKind::NuStar:
      call("nu*");
      break;
    case ExprKind::MuTildeP:
      out += "mu~p";
      break;
    case ExprKind::MuStarP:
      out += "mu*p";
      break;
    case ExprKind::Delta:
      out += "delta(";
      num(0);
      out += '/';
      num(1);
      if (x.ints.size() > 2) {
        out += '^';
        num(2);
      }
      out += ')';
      break;
    case ExprKind::Tau:
      call("tau");
      break;
    case ExprKind::Sqrt:
      call("sqrt");
      break;
    case ExprKind::Generator:
      out += 't';
      break;
    case ExprKind::Pi:
      out += "pi_";
      num(0);
      break;
    case ExprKind::Add:
    case ExprKind::Sub:
      print(x.args.at(0), 1, out);
      out += x.kind == ExprKind::Add ? " + " : " - ";
      print(x.args.at(1), 2, out);
      break;
    case ExprKind::Neg:
      out += '-';
      print(x.args.at(0), 2, out);
      break;
    case ExprKind::Mul:
      print(x.args.at(0), 3, out);
      out += '*';
      print(x.args.at(1), 4, out);
      break;
    case ExprKind::Pow:
      print(x.args.at(0), 5, out);
      out += '^';
      num(0);
      break;
    case ExprKind::Sigma:
      form("sigma");
      break;
    case ExprKind::RhoTilde:
      form("rho~");
      break;
    case ExprKind::Rho:
      form("rho");
      break;
    case ExprKind::Reduce:
      form("reduce");
      break;
    case ExprKind::Star:
      out += "star";
      print_braced(x.args.at(0), out);
      break;
    case ExprKind::Phi:
      out += "phi";
      print_braced(x.args.at(0), out);
      break;
    case ExprKind::Psi:
      out += "psi";
      print_braced(x.args.at(0), out);
      break;
    case ExprKind::Iota:
      out += "iota";
      print_braced(x.args.at(0), out);
      break;
    case ExprKind::Twist:
      out += "twist(";
      num(0);
      out += ',';
      num(1);
      out += ')';
      print_braced(x.args.at(0), out);
      break;
    case ExprKind::Theta:
      out += "theta";
      print_braced(x.args.at(0), out);
      out += '(';
      print(x.args.at(1), 1, out);
      out += ')';
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const Expr& x) {
  std::string out;
  print(x, 1, out);
  return out;
}

}  // namespace bce
