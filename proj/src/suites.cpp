#include "bce/suites.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "bce/eval.hpp"
#include "bce/random.hpp"

namespace bce {

bool SuiteReport::ok() const {
  for (const auto& c : checks) {
    if (c.failed) return false;
  }
  return true;
}

std::string SuiteReport::str() const {
  std::ostringstream out;
  std::size_t failed_checks = 0;
  out << "suite " << suite << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    out << (c.failed ? "  FAIL  " : "  pass  ") << c.name << "  " << c.passed << "/" << (c.passed + c.failed)
        << "\n";
    if (c.failed) {
      ++failed_checks;
      out << "        first failure: " << c.first_failure << "\n";
    }
  }
  out << suite << ": " << checks.size() - failed_checks << "/" << checks.size() << " checks passed";
  if (failed_checks) out << "; reproduce with: bce suite " << suite << " --seed " << seed;
  out << "\n";
  return out.str();
}

namespace {

class Suite {
 public:
  Suite(SuiteReport& report, std::uint64_t seed) : report_(report), rng(seed) {}

  /// Starts a new named check; subsequent expect() calls count toward it.
  void check(std::string name) { report_.checks.push_back(CheckResult{std::move(name), 0, 0, {}}); }

  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    CheckResult& c = report_.checks.back();
    if (ok) {
      ++c.passed;
      return;
    }
    if (!c.failed) c.first_failure = describe();
    ++c.failed;
  }

  void expect(bool ok) {
    expect(ok, [] { return std::string("(no detail)"); });
  }

 private:
  SuiteReport& report_;

 public:
  RandomSource rng;
};

std::string show(const GroupRingElem& x) { return format(x); }

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();

BCElem gr(const GroupRingElem& x) { return embed_gr(x); }

void relations(Suite& s) {
  std::vector<GroupRingElem> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(s.rng.group_ring(Z, 4, 24));

  s.check("mu~_n x mu*_n = rho~_n(x)");
  for (int n = 2; n <= 12; ++n) {
    for (const auto& x : xs) {
      s.expect(bc_mul(bc_mul(mu_tilde(Z, n), gr(x)), mu_star(Z, n)) == gr(rho_tilde(n, x)),
               [&] { return "n=" + std::to_string(n) + " x=" + show(x); });
    }
  }
  s.check("mu*_n x = sigma_n(x) mu*_n");
  for (int n = 2; n <= 12; ++n) {
    for (const auto& x : xs) {
      s.expect(bc_mul(mu_star(Z, n), gr(x)) == bc_mul(gr(sigma(n, x)), mu_star(Z, n)),
               [&] { return "n=" + std::to_string(n) + " x=" + show(x); });
    }
  }
  s.check("x mu~_n = mu~_n sigma_n(x)");
  for (int n = 2; n <= 12; ++n) {
    for (const auto& x : xs) {
      s.expect(bc_mul(gr(x), mu_tilde(Z, n)) == bc_mul(mu_tilde(Z, n), gr(sigma(n, x))),
               [&] { return "n=" + std::to_string(n) + " x=" + show(x); });
    }
  }
  s.check("mu~ and mu* are multiplicative, mu*_n mu~_n = n, coprime commutation");
  for (int n = 2; n <= 12; ++n) {
    for (int m = 2; m <= 12; ++m) {
      auto where = [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); };
      s.expect(mu_tilde(Z, n * m) == bc_mul(mu_tilde(Z, n), mu_tilde(Z, m)), where);
      s.expect(mu_star(Z, n * m) == bc_mul(mu_star(Z, n), mu_star(Z, m)), where);
      if (gcd(Int(n), Int(m)) == 1) {
        s.expect(bc_mul(mu_tilde(Z, n), mu_star(Z, m)) == bc_mul(mu_star(Z, m), mu_tilde(Z, n)), where);
      }
    }
    s.expect(bc_mul(mu_star(Z, n), mu_tilde(Z, n)) == bc_scalar(Z, Coeff::from_int(Z, n)));
  }

  s.check("sigma_nm = sigma_n sigma_m, rho~_mn = rho~_m rho~_n");
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= 12; ++m) {
      const auto x = s.rng.group_ring(Z, 3, 12);
      auto where = [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + show(x); };
      s.expect(sigma(n * m, x) == sigma(n, sigma(m, x)), where);
      s.expect(rho_tilde(n * m, x) == rho_tilde(m, rho_tilde(n, x)), where);
    }
  }
  s.check("rho~_m(sigma_m(x) y) = x rho~_m(y)");
  for (int i = 0; i < 200; ++i) {
    const Int m = s.rng.uniform(1, 12);
    const auto x = s.rng.group_ring(Z, 3, 12), y = s.rng.group_ring(Z, 3, 12);
    s.expect(rho_tilde(m, gr_mul(sigma(m, x), y)) == gr_mul(x, rho_tilde(m, y)),
             [&] { return "m=" + to_string(m) + " x=" + show(x) + " y=" + show(y); });
  }
  s.check("sigma_c rho~_b = (b,c) rho~_b' sigma_c'");
  for (int i = 0; i < 200; ++i) {
    const Int b = s.rng.uniform(1, 12), c = s.rng.uniform(1, 12);
    const Int g = gcd(b, c);
    const auto x = s.rng.group_ring(Z, 3, 12);
    s.expect(sigma(c, rho_tilde(b, x)) == rho_tilde(b / g, sigma(c / g, x)).scaled(g),
             [&] { return "b=" + to_string(b) + " c=" + to_string(c) + " x=" + show(x); });
  }

  s.check("over Q: pi_n idempotent, pi_n pi_m = pi_lcm, sigma_n rho_n = id, rho_n sigma_n = pi_n");
  for (int n = 1; n <= 12; ++n) {
    s.expect(gr_mul(pi(n, Q), pi(n, Q)) == pi(n, Q), [&] { return "pi_" + std::to_string(n); });
    for (int m = 1; m <= 12; ++m) {
      s.expect(gr_mul(pi(n, Q), pi(m, Q)) == pi(lcm(Int(n), Int(m)), Q),
               [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
    const auto x = s.rng.group_ring(Q, 3, 12);
    s.expect(sigma(n, rho(n, x)) == x, [&] { return "n=" + std::to_string(n) + " x=" + show(x); });
    s.expect(rho(n, sigma(n, x)) == gr_mul(pi(n, Q), x),
             [&] { return "n=" + std::to_string(n) + " x=" + show(x); });
  }
}

void associativity(Suite& s) {
  s.check("(xy)z = x(yz) on monomials");
  for (int i = 0; i < 500; ++i) {
    const auto x = s.rng.bc_monomial(Z, 8, 12), y = s.rng.bc_monomial(Z, 8, 12), z = s.rng.bc_monomial(Z, 8, 12);
    s.expect(bc_mul(bc_mul(x, y), z) == bc_mul(x, bc_mul(y, z)),
             [&] { return "x=" + format(x) + " y=" + format(y) + " z=" + format(z); });
  }
  s.check("(xy)z = x(yz) on sums over F_3");
  const Ring F3 = Ring::prime_field(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = s.rng.bc_element(F3, 3, 6, 8), y = s.rng.bc_element(F3, 3, 6, 8),
               z = s.rng.bc_element(F3, 3, 6, 8);
    s.expect(bc_mul(bc_mul(x, y), z) == bc_mul(x, bc_mul(y, z)),
             [&] { return "x=" + format(x) + " y=" + format(y) + " z=" + format(z); });
  }
  s.check("product degrees multiply");
  for (int i = 0; i < 300; ++i) {
    const auto x = s.rng.bc_monomial(Z, 12, 12), y = s.rng.bc_monomial(Z, 12, 12);
    const PosRational want = x.terms().begin()->first.deg * y.terms().begin()->first.deg;
    bool ok = true;
    const BCElem xy = bc_mul(x, y);
    for (const auto& [m, c] : xy.terms()) ok = ok && m.deg == want;
    s.expect(ok, [&] { return "x=" + format(x) + " y=" + format(y); });
  }
  s.check("star is an anti-multiplicative involution over Q");
  for (int i = 0; i < 100; ++i) {
    const auto x = s.rng.bc_element(Q, 3, 6, 8), y = s.rng.bc_element(Q, 3, 6, 8);
    s.expect(bc_star(bc_star(x)) == x, [&] { return "x=" + format(x); });
    s.expect(bc_star(bc_mul(x, y)) == bc_mul(bc_star(y), bc_star(x)),
             [&] { return "x=" + format(x) + " y=" + format(y); });
  }
}

void rep_oracle(Suite& s) {
  s.check("bc_mul agrees with the action on E");
  for (int i = 0; i < 500; ++i) {
    const auto x = s.rng.bc_element(Z, 2, 8, 12), y = s.rng.bc_element(Z, 2, 8, 12);
    s.expect(bc_normal_coords(bc_mul(x, y)) == bc_act(x, bc_normal_coords(y)),
             [&] { return "x=" + format(x) + " y=" + format(y); });
  }
  s.check("normal coordinates are a relabeling");
  for (int i = 0; i < 200; ++i) {
    const auto x = s.rng.bc_element(Z, 4, 12, 12);
    s.expect(from_normal_coords(bc_normal_coords(x)) == x, [&] { return "x=" + format(x); });
  }
  s.check("theta is a representation");
  for (int i = 0; i < 200; ++i) {
    const auto x = s.rng.bc_element(Z, 2, 6, 8), y = s.rng.bc_element(Z, 2, 6, 8);
    const auto xi = s.rng.group_ring(Z, 3, 8);
    s.expect(theta_act(bc_mul(x, y), xi) == theta_act(x, theta_act(y, xi)),
             [&] { return "x=" + format(x) + " y=" + format(y) + " xi=" + show(xi); });
  }
}

void charp(Suite& s) {
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    const std::string tag = "p=" + std::to_string(p) + ": ";
    const GroupRingElem one = gr_one(F);

    s.check(tag + "rho~_p(1)^2 = 0");
    const auto pit = rho_tilde(p, one);
    s.expect(gr_mul(pit, pit).is_zero(), [&] { return show(pit); });

    s.check(tag + "iota is bijective and multiplicative at levels <= 4");
    for (unsigned long level = 0; level <= 4 && pow(Int(p), level) <= 125; ++level) {
      const Int size = pow(Int(p), level);
      for (Int k = 0; k < size; ++k) {
        const auto x = gr_e(F, QmodZ(k, size));
        s.expect(iota_inv(iota(x)) == x, [&] { return show(x); });
      }
      for (const auto& a : truncated_basis(p, level)) {
        const auto d = tp_delta(F, a);
        s.expect(iota(iota_inv(d)) == d, [&] { return "delta " + a.str(); });
      }
    }
    for (int i = 0; i < 100; ++i) {
      const auto x = iota_inv(s.rng.tp_element(F, 3, 3)), y = iota_inv(s.rng.tp_element(F, 3, 3));
      s.expect(iota(gr_mul(x, y)) == tp_mul(iota(x), iota(y)), [&] { return show(x) + " , " + show(y); });
    }

    s.check(tag + "iota intertwines sigma_p and rho~_p");
    for (int i = 0; i < 100; ++i) {
      const auto x = iota_inv(s.rng.tp_element(F, 3, 3));
      s.expect(iota(sigma(p, x)) == tp_sigma(iota(x)), [&] { return show(x); });
      s.expect(iota(rho_tilde(p, x)) == tp_rho(iota(x)), [&] { return show(x); });
    }

    s.check(tag + "Ker sigma_p is nil of exponent p");
    for (int i = 0; i < 100; ++i) {
      TpElem f(F);
      const TpElem sample = s.rng.tp_element(F, 4, 3);
      for (const auto& [a, c] : sample.terms()) {
        if (a.value() * p >= 1) f.add_term(a, c);
      }
      if (f.is_zero()) f = tp_delta(F, PAdicFrac(p, Rat(p - 1, p)));
      s.expect(in_ker_sigma(f) && ker_sigma_nilpotency(f));
    }

    s.check(tag + "tau relations for 1 <= m, n <= 5");
    for (const auto& r : tau_relations_check(F, 5)) s.expect(r.ok, [&] { return r.name; });

    s.check(tag + "mu*_p mu~_p = 0 in C_p");
    s.expect(cp_mul(cp_mu_star(F), cp_mu_tilde(F)).is_zero());

    s.check(tag + "truncated matrices are lower triangular");
    for (unsigned long level = 0; level <= 4 && pow(Int(p), level) <= 125; ++level) {
      for (const auto& x : {cp_mu_tilde(F), cp_mu_star(F), cp_from_tp(tau(F, 1))}) {
        s.expect(cp_matrix(x, level).is_lower_triangular(), [&] { return format(x) + " level " + std::to_string(level); });
      }
      for (int i = 0; i < 10; ++i) {
        const auto x = s.rng.cp_element(F, 3, 2, 2);
        s.expect(cp_matrix(x, level).is_lower_triangular(), [&] { return format(x); });
      }
    }

    s.check(tag + "random nonzero elements act nontrivially");
    for (int i = 0; i < 100; ++i) {
      const auto x = s.rng.cp_element(F, 3, 2, 2);
      s.expect(faithfulness_witness(x, 6).has_value(), [&] { return format(x); });
    }

    s.check(tag + "G+ decomposition words evaluate back");
    for (int i = 0; i < 100; ++i) {
      const long n = s.rng.signed_uniform(-3, 3);
      const long den = static_cast<long>(p * p);
      Rat a(s.rng.signed_uniform(-den, 3 * den), den);
      a.canonicalize();
      GElem g{p, n, a};
      if (!g_in_plus(g)) continue;
      s.expect(g_decompose(g).evaluate(p) == g, [&] { return "n=" + std::to_string(n) + " a=" + to_string(a); });
    }
  }
}

void frobenius(Suite& s) {
  for (const char* tag : {"fp:2", "fp:3", "fq:2,2", "fq:3,2"}) {
    const Ring F = Ring::parse(tag);
    s.check(std::string("sigma_{p^l} with Frobenius^l equals the p^l-th power over ") + F.name());
    for (int i = 0; i < 100; ++i) {
      const auto f = s.rng.group_ring(F, 3, 12);
      const unsigned long l = s.rng.uniform(0, 3);
      s.expect(frobenius_identity_check(f, l), [&] { return "l=" + std::to_string(l) + " f=" + show(f); });
    }
  }
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    const Int P = p;
    s.check("p=" + std::to_string(p) + ": reduction is a homomorphism intertwining sigma_n");
    for (int i = 0; i < 100; ++i) {
      const auto x = s.rng.group_ring(F, 3, 30), y = s.rng.group_ring(F, 3, 30);
      const Int n = s.rng.uniform(1, 12);
      s.expect(reduce_mod_p(gr_mul(x, y), P) == gr_mul(reduce_mod_p(x, P), reduce_mod_p(y, P)),
               [&] { return show(x) + " , " + show(y); });
      s.expect(reduce_mod_p(sigma(n, x), P) == sigma(n, reduce_mod_p(x, P)),
               [&] { return "n=" + to_string(n) + " x=" + show(x); });
    }
    s.check("p=" + std::to_string(p) + ": sigma_p is invertible on the reduced algebra");
    for (Int den = 1; den <= 30; ++den) {
      if (gcd(den, P) != 1) continue;
      for (Int k = 0; k < den; ++k) {
        if (gcd(k, den) != 1 && !(k == 0 && den == 1)) continue;
        const auto x = gr_e(F, QmodZ(k, den));
        s.expect(sigma(P, reduced_rho(P, x, P)) == x && reduced_rho(P, sigma(P, x), P) == x,
                 [&] { return show(x); });
      }
    }
  }
}

void hecke(Suite& s) {
  const Ring R = Ring::sqrt_rationals();
  s.check("nu relations hold through phi");
  for (int n = 2; n <= 12; ++n) {
    const auto x = s.rng.group_ring(Z, 3, 24);
    const auto hx = hecke_embed_gr(x);
    auto where = [&] { return "n=" + std::to_string(n) + " x=" + show(x); };
    s.expect(hecke_mul(hecke_mul(nu(Z, n), hx), nu_star(Z, n)) == hecke_embed_gr(rho_tilde(n, x)), where);
    s.expect(hecke_mul(nu_star(Z, n), hx) == hecke_mul(hecke_embed_gr(sigma(n, x)), nu_star(Z, n)), where);
    s.expect(hecke_mul(hx, nu(Z, n)) == hecke_mul(nu(Z, n), hecke_embed_gr(sigma(n, x))), where);
    s.expect(hecke_mul(nu_star(Z, n), nu(Z, n)) == hecke_one(Z).scaled(Int(n)), where);
    for (int m = 2; m <= 12; ++m) {
      s.expect(nu(Z, n * m) == hecke_mul(nu(Z, n), nu(Z, m)), where);
      s.expect(nu_star(Z, n * m) == hecke_mul(nu_star(Z, n), nu_star(Z, m)), where);
      if (gcd(Int(n), Int(m)) == 1) {
        s.expect(hecke_mul(nu(Z, n), nu_star(Z, m)) == hecke_mul(nu_star(Z, m), nu(Z, n)), where);
      }
    }
  }
  s.check("phi is a bijective homomorphism");
  for (int i = 0; i < 300; ++i) {
    const auto x = s.rng.hecke_element(Z, 2, 6, 8), y = s.rng.hecke_element(Z, 2, 6, 8);
    s.expect(phi_inv(phi(x)) == x && phi(hecke_mul(x, y)) == bc_mul(phi(x), phi(y)),
             [&] { return format(x) + " , " + format(y); });
  }
  s.check("psi is a star-preserving homomorphism over Q(sqrt)");
  for (int i = 0; i < 300; ++i) {
    const auto x = s.rng.hecke_element(R, 2, 6, 6), y = s.rng.hecke_element(R, 2, 6, 6);
    s.expect(psi(hecke_mul(x, y)) == bc_mul(psi(x), psi(y)), [&] { return format(x) + " , " + format(y); });
    s.expect(bc_star(psi(x)) == psi(hecke_star(x)), [&] { return format(x); });
  }
  s.check("sigma_{i/2} phi = psi on monomials");
  for (int a = 1; a <= 12; ++a) {
    for (int b = 1; b <= 12; ++b) {
      if (gcd(Int(a), Int(b)) != 1) continue;
      const auto w = hecke_monomial(R, a, s.rng.qmodz(12), b);
      s.expect(sigma_i_half(phi(w)) == psi(w), [&] { return format(w); });
    }
  }
  s.check("phi does not preserve the involution");
  const auto witness = involution_mismatch_witness();
  s.expect(witness.mismatch() && witness.phi_of_star == mu_star(Q, 2) &&
           witness.star_of_phi == mu_star(Q, 2).scaled(Int(2)));
  s.check("both stars restrict to e(r) -> e(-r)");
  for (int i = 0; i < 100; ++i) {
    const auto x = s.rng.group_ring(Q, 3, 12);
    GroupRingElem inverted(Q);
    for (const auto& [r, c] : x.terms()) inverted.add_term(-r, c);
    s.expect(bc_star(embed_gr(x)) == embed_gr(inverted) && hecke_star(hecke_embed_gr(x)) == hecke_embed_gr(inverted),
             [&] { return show(x); });
  }
}

const std::map<std::string, std::function<void(Suite&)>>& registry() {
  static const std::map<std::string, std::function<void(Suite&)>> suites = {
      {"relations", relations}, {"associativity", associativity}, {"rep-oracle", rep_oracle},
      {"charp", charp},         {"frobenius", frobenius},         {"hecke", hecke},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "associativity", "rep-oracle",
                                                 "charp",     "frobenius",     "hecke"};
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  auto it = registry().find(name);
  if (it == registry().end()) {
    std::string known;
    for (const auto& n : suite_names()) known += (known.empty() ? "" : ", ") + n;
    throw Error("unknown suite '" + name + "' (known: " + known + ")");
  }
  SuiteReport report{name, seed, {}};
  Suite s(report, seed);
  it->second(s);
  return report;
}

}  // namespace bce
