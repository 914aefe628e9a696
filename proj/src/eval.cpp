#include "bce/eval.hpp"

namespace bce {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Int positive(const Int& n, const char* what) {
  if (n < 1) throw DomainError(std::string(what) + " needs a positive integer, got " + to_string(n));
  return n;
}

BCElem to_bc(const Value& v, const Ring& ring, const char* op) {
  if (auto c = std::get_if<Coeff>(&v)) return bc_scalar(ring, *c);
  if (auto x = std::get_if<BCElem>(&v)) return *x;
  if (auto h = std::get_if<HeckeElem>(&v)) return phi(*h);
  throw DomainError(std::string(op) + " does not apply to elements of C_p");
}

GroupRingElem to_group_ring(const Value& v, const Ring& ring, const char* op) {
  if (auto x = std::get_if<CpElem>(&v)) {
    if (!cp_is_abelian(*x)) throw DomainError(std::string(op) + " needs an element of T(p), not one involving mu~p or mu*p");
    return iota_inv(cp_abelian_part(*x));
  }
  BCElem x = to_bc(v, ring, op);
  if (!is_abelian(x)) {
    throw DomainError(std::string(op) + " applies to the group ring; the argument involves mu~ or mu*");
  }
  return abelian_part(x);
}

/// Puts a group-ring result back in the algebra the argument came from.
Value like(const Value& source, const GroupRingElem& x) {
  if (std::holds_alternative<CpElem>(source)) return cp_from_tp(iota(x));
  if (std::holds_alternative<HeckeElem>(source)) return hecke_embed_gr(x);
  return embed_gr(x);
}

HeckeElem to_hecke(const Value& v, const Ring& ring) {
  if (auto h = std::get_if<HeckeElem>(&v)) return *h;
  if (auto c = std::get_if<Coeff>(&v)) return hecke_one(ring).scaled(*c);
  if (auto x = std::get_if<BCElem>(&v); x && is_abelian(*x)) return hecke_embed_gr(abelian_part(*x));
  throw RingMismatch("cannot combine nu-generators with mu~ or mu* terms; convert with phi{...}");
}

CpElem to_cp(const Value& v, const Ring& ring) {
  if (auto x = std::get_if<CpElem>(&v)) return *x;
  if (auto c = std::get_if<Coeff>(&v)) return cp_one(ring).scaled(*c);
  throw RingMismatch("cannot combine C_p elements with the crossed product; convert with iota{...}");
}

/// Brings both operands into a common algebra: scalars promote to anything,
/// group-ring elements of A promote into the Hecke presentation.
std::pair<Value, Value> unify(Value a, Value b, const Ring& ring) {
  if (a.index() == b.index()) return {std::move(a), std::move(b)};
  if (std::holds_alternative<CpElem>(a) || std::holds_alternative<CpElem>(b)) {
    return {to_cp(a, ring), to_cp(b, ring)};
  }
  if (std::holds_alternative<HeckeElem>(a) || std::holds_alternative<HeckeElem>(b)) {
    return {to_hecke(a, ring), to_hecke(b, ring)};
  }
  return {to_bc(a, ring, "+"), to_bc(b, ring, "+")};
}

Value add(const Value& a, const Value& b, const Ring& ring) {
  auto [x, y] = unify(a, b, ring);
  return std::visit(
      [&](const auto& l) -> Value {
        using T = std::decay_t<decltype(l)>;
        return l + std::get<T>(y);
      },
      x);
}

Value negate(const Value& a) {
  return std::visit([](const auto& l) -> Value { return -l; }, a);
}

Value multiply(const Value& a, const Value& b, const Ring& ring) {
  auto [x, y] = unify(a, b, ring);
  return std::visit(overloaded{
                        [&](const Coeff& l) -> Value { return l * std::get<Coeff>(y); },
                        [&](const BCElem& l) -> Value { return bc_mul(l, std::get<BCElem>(y)); },
                        [&](const HeckeElem& l) -> Value { return hecke_mul(l, std::get<HeckeElem>(y)); },
                        [&](const CpElem& l) -> Value { return cp_mul(l, std::get<CpElem>(y)); },
                    },
                    x);
}

Value power(const Value& a, const Int& e) {
  return std::visit(overloaded{
                        [&](const Coeff& l) -> Value { return l.pow(e); },
                        [&](const BCElem& l) -> Value { return bc_pow(l, e); },
                        [&](const HeckeElem& l) -> Value { return hecke_pow(l, e); },
                        [&](const CpElem& l) -> Value { return cp_pow(l, e); },
                    },
                    a);
}

Value eval(const Expr& x, const Ring& ring) {
  auto arg = [&](std::size_t i) { return eval(x.args.at(i), ring); };
  switch (x.kind) {
    case ExprKind::Int:
      return Coeff::from_int(ring, x.ints[0]);
    case ExprKind::Frac:
      return Coeff::from_rat(ring, Rat(x.ints[0], x.ints[1]));
    case ExprKind::E:
      return embed_gr(gr_e(ring, QmodZ(x.ints[0], x.ints.size() > 1 ? x.ints[1] : Int(1))));
    case ExprKind::MuTilde:
      return mu_tilde(ring, positive(x.ints[0], "mu~"));
    case ExprKind::MuStar:
      return mu_star(ring, positive(x.ints[0], "mu*"));
    case ExprKind::Nu:
      return nu(ring, positive(x.ints[0], "nu"));
    case ExprKind::NuStar:
      return nu_star(ring, positive(x.ints[0], "nu*"));
    case ExprKind::MuTildeP:
      return cp_mu_tilde(ring);
    case ExprKind::MuStarP:
      return cp_mu_star(ring);
    case ExprKind::Delta: {
      const Residue p = char_of(ring);
      Int den = x.ints[1];
      if (x.ints.size() > 2) den = pow(den, static_cast<unsigned long>(to_u64(x.ints[2])));
      Rat a(x.ints[0], den);
      a.canonicalize();
      if (a >= 1) throw DomainError("delta(" + to_string(a) + ") lies outside [0, 1)");
      return cp_from_tp(tp_delta(ring, PAdicFrac(p, a)));
    }
    case ExprKind::Tau:
      return cp_from_tp(tau(ring, to_u64(x.ints[0])));
    case ExprKind::Sqrt:
      return Coeff::sqrt(ring, x.ints[0]);
    case ExprKind::Generator:
      return Coeff::field_generator(ring);
    case ExprKind::Pi:
      return embed_gr(pi(positive(x.ints[0], "pi"), ring));
    case ExprKind::Add:
      return add(arg(0), arg(1), ring);
    case ExprKind::Sub:
      return add(arg(0), negate(arg(1)), ring);
    case ExprKind::Neg:
      return negate(arg(0));
    case ExprKind::Mul:
      return multiply(arg(0), arg(1), ring);
    case ExprKind::Pow:
      return power(arg(0), x.ints[0]);
    case ExprKind::Sigma: {
      Value v = arg(0);
      return like(v, sigma(positive(x.ints[0], "sigma"), to_group_ring(v, ring, "sigma")));
    }
    case ExprKind::RhoTilde: {
      Value v = arg(0);
      return like(v, rho_tilde(positive(x.ints[0], "rho~"), to_group_ring(v, ring, "rho~")));
    }
    case ExprKind::Rho: {
      Value v = arg(0);
      return like(v, rho(positive(x.ints[0], "rho"), to_group_ring(v, ring, "rho")));
    }
    case ExprKind::Reduce: {
      Value v = arg(0);
      return like(v, reduce_mod_p(to_group_ring(v, ring, "reduce"), x.ints[0]));
    }
    case ExprKind::Twist: {
      Value v = arg(0);
      return like(v, galois_twist(x.ints[0], positive(x.ints[1], "twist"), to_group_ring(v, ring, "twist")));
    }
    case ExprKind::Star: {
      Value v = arg(0);
      if (auto h = std::get_if<HeckeElem>(&v)) return hecke_star(*h);
      return bc_star(to_bc(v, ring, "star"));
    }
    case ExprKind::Phi:
      return to_bc(arg(0), ring, "phi");
    case ExprKind::Psi:
      return psi(to_hecke(arg(0), ring));
    case ExprKind::Iota:
      return cp_from_tp(iota(to_group_ring(arg(0), ring, "iota")));
    case ExprKind::Theta: {
      Value op = arg(0);
      Value v = arg(1);
      if (auto c = std::get_if<CpElem>(&op)) {
        return cp_from_tp(cp_act(*c, iota(to_group_ring(v, ring, "theta"))));
      }
      return embed_gr(theta_act(to_bc(op, ring, "theta"), to_group_ring(v, ring, "theta")));
    }
  }
  throw Error("unreachable");
}

struct Term {
  std::string monomial;  // empty for the unit
  Coeff c;
};

std::string body(const std::string& monomial, const Coeff& c) {
  if (monomial.empty()) return c.str();
  if (c.is_one()) return monomial;
  return (c.needs_parens() ? "(" + c.str() + ")" : c.str()) + "*" + monomial;
}

std::string format_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.c.is_negative();
    const std::string text = body(t.monomial, negative ? -t.c : t.c);
    if (out.empty()) {
      out = negative ? "-" + text : text;
    } else {
      out += (negative ? " - " : " + ") + text;
    }
  }
  return out;
}

std::string join_factors(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
  return out;
}

std::string e_str(const QmodZ& r) { return "e(" + r.str() + ")"; }

template <class Mono>
std::string format_crossed(const LinComb<Mono>& x, const char* left, const char* right) {
  std::vector<Term> terms;
  for (const auto& [m, c] : x.terms()) {
    std::vector<std::string> f;
    if (m.deg.a() != 1) f.push_back(std::string(left) + "(" + to_string(m.deg.a()) + ")");
    if (!m.r.is_zero()) f.push_back(e_str(m.r));
    if (m.deg.b() != 1) f.push_back(std::string(right) + "(" + to_string(m.deg.b()) + ")");
    terms.push_back({join_factors(f), c});
  }
  return format_terms(terms);
}

std::string power_str(const char* base, long k) {
  return k == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(k);
}

}  // namespace

Value evaluate(const Expr& x, const Ring& ring) { return eval(x, ring); }

std::string format(const GroupRingElem& x) {
  std::vector<Term> terms;
  for (const auto& [r, c] : x.terms()) terms.push_back({r.is_zero() ? "" : e_str(r), c});
  return format_terms(terms);
}

std::string format(const BCElem& x) { return format_crossed(x, "mu~", "mu*"); }

std::string format(const HeckeElem& x) { return format_crossed(x, "nu", "nu*"); }

std::string format(const CpElem& x) {
  std::vector<Term> terms;
  for (const auto& [key, c] : x.terms()) {
    std::vector<std::string> f;
    if (key.k > 0) f.push_back(power_str("mu~p", key.k));
    if (key.a.value() != 0) {
      f.push_back("delta(" + to_string(key.a.value()) + ")");
    }
    if (key.k < 0) f.push_back(power_str("mu*p", -key.k));
    terms.push_back({join_factors(f), c});
  }
  return format_terms(terms);
}

std::string format(const Value& v) {
  return std::visit(overloaded{
                        [](const Coeff& c) { return c.str(); },
                        [](const auto& x) { return format(x); },
                    },
                    v);
}

std::string format(const AlgebraValue& v) {
  return std::visit([](const auto& x) { return format(x); }, v);
}

Json value_to_json(const Value& v) {
  return std::visit(overloaded{
                        [](const Coeff& c) { return to_json(bc_scalar(c.ring(), c)); },
                        [](const auto& x) { return to_json(x); },
                    },
                    v);
}

CpElem as_cp(const Value& v) {
  if (auto x = std::get_if<CpElem>(&v)) return *x;
  if (auto c = std::get_if<Coeff>(&v)) return cp_one(c->ring()).scaled(*c);
  const Ring ring = std::visit(overloaded{
                                   [](const Coeff& c) { return c.ring(); },
                                   [](const auto& x) { return x.ring(); },
                               },
                               v);
  return cp_from_tp(iota(to_group_ring(v, ring, "the matrix model")));
}

}  // namespace bce
