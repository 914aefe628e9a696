#include <doctest.h>

#include "bce/char_p.hpp"
#include "bce/eval.hpp"
#include "bce/random.hpp"

using namespace bce;

namespace {

PAdicFrac a(Residue p, long k, long d) { return PAdicFrac(p, Rat(k, d)); }
TpElem d(const Ring& F, long k, long den) { return tp_delta(F, a(F.characteristic(), k, den)); }
CpElem cd(const Ring& F, long k, long den) { return cp_from_tp(d(F, k, den)); }
GroupRingElem e(const Ring& R, long n, long den) { return gr_e(R, QmodZ(Int(n), Int(den))); }

// (delta_0 - delta_{1/p^l})^k expanded by repeated convolution, no binomials.
TpElem iota_oracle(const Ring& F, const QmodZ& r) {
  const Residue p = F.characteristic();
  const long den = to_u64(r.den());
  if (den == 1) return tp_one(F);
  TpElem base = tp_one(F) - tp_delta(F, a(p, 1, den));
  TpElem out = tp_one(F);
  for (Int k = 0; k < r.num(); ++k) out = tp_mul(out, base);
  return out;
}

}  // namespace

TEST_CASE("PAdicFrac") {
  CHECK(a(2, 2, 4) == a(2, 1, 2));
  CHECK(a(3, 1, 9).str() == "1/3^2");
  CHECK(PAdicFrac(5).str() == "0/5^0");
  CHECK(PAdicFrac::parse(3, "2/3^1") == a(3, 2, 3));
  CHECK_THROWS_AS(a(2, 1, 3), DomainError);
  CHECK_THROWS_AS(a(2, 3, 2), DomainError);
}

TEST_CASE("tp_mul") {
  const Ring F3 = Ring::prime_field(3), F2 = Ring::prime_field(2);
  CHECK(tp_mul(d(F3, 1, 3), d(F3, 1, 3)) == d(F3, 2, 3));
  CHECK(tp_mul(d(F3, 2, 3), d(F3, 2, 3)).is_zero());
  const TpElem s = tp_one(F2) + d(F2, 1, 2);
  CHECK(tp_mul(s, s) == tp_one(F2));
  CHECK_THROWS_AS(tp_mul(d(F2, 1, 2), d(F3, 1, 3)), RingMismatch);
  CHECK_THROWS_AS(tp_one(Ring::rationals()), DomainError);
}

TEST_CASE("iota") {
  const Ring F2 = Ring::prime_field(2);
  CHECK(iota(e(F2, 1, 2)) == tp_one(F2) + d(F2, 1, 2));
  CHECK(tp_mul(iota(e(F2, 1, 4)), iota(e(F2, 1, 4))) == iota(e(F2, 1, 2)));
  CHECK_THROWS_AS(iota(e(F2, 1, 3)), DomainError);
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    CHECK(iota(rho_tilde(p, gr_one(F))) == d(F, p - 1, p));
    for (long den : {1L, static_cast<long>(p), static_cast<long>(p * p), static_cast<long>(p * p * p)}) {
      for (long k = 0; k < den; ++k) {
        const QmodZ r{Int(k), Int(den)};
        CHECK(iota(gr_e(F, r)) == iota_oracle(F, r));
        CHECK(iota_inv(iota(gr_e(F, r))) == gr_e(F, r));
      }
    }
  }
}

TEST_CASE("tp_sigma and tp_rho") {
  const Ring F2 = Ring::prime_field(2), F3 = Ring::prime_field(3);
  CHECK(tp_sigma(d(F2, 1, 4)) == d(F2, 1, 2));
  CHECK(tp_sigma(d(F3, 2, 3)).is_zero());
  CHECK(tp_rho(tp_one(F2)) == d(F2, 1, 2));
  RandomSource rng(53);
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    for (int i = 0; i < 50; ++i) {
      const GroupRingElem x = iota_inv(rng.tp_element(F, 3, 3));
      CHECK(iota(sigma(p, x)) == tp_sigma(iota(x)));
      CHECK(iota(rho_tilde(p, x)) == tp_rho(iota(x)));
    }
  }
}

TEST_CASE("Ker sigma_p is nil") {
  const Ring F2 = Ring::prime_field(2), F3 = Ring::prime_field(3);
  CHECK(in_ker_sigma(d(F2, 1, 2)));
  CHECK(ker_sigma_nilpotency(d(F2, 1, 2)));
  CHECK_FALSE(in_ker_sigma(tp_one(F2)));
  CHECK_FALSE(ker_sigma_nilpotency(tp_one(F2)));
  const TpElem f = d(F3, 2, 3) + d(F3, 8, 9);
  CHECK(in_ker_sigma(f));
  CHECK(ker_sigma_nilpotency(f));
  CHECK(tp_pow(f, 3).is_zero());
  CHECK(tp_pow(f, 2) == tp_mul(f, f));
  CHECK(tp_pow(f, 2).is_zero());  // every pairwise sum is >= 1
}

TEST_CASE("tau") {
  const Ring F2 = Ring::prime_field(2);
  CHECK(tau(F2, 1) == d(F2, 1, 2));
  CHECK(tp_mul(tau(F2, 1), tau(F2, 1)).is_zero());
  CHECK(tp_rho(tau(F2, 1)) == tau(F2, 2));
  CHECK(tau(F2, 2) == d(F2, 3, 4));
  CHECK(tau(F2, 0) == tp_one(F2));
  for (Residue p : {2u, 3u, 5u}) {
    for (const auto& r : tau_relations_check(Ring::prime_field(p), 5)) {
      CAPTURE(r.name);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("cp_mul") {
  const Ring F2 = Ring::prime_field(2), F3 = Ring::prime_field(3);
  CHECK(cp_mul(cp_mu_star(F2), cp_mu_tilde(F2)).is_zero());
  CHECK(cp_mul(cp_mul(cd(F3, 1, 3), cp_mu_star(F3)), cp_mul(cp_mu_tilde(F3), cd(F3, 1, 9))).is_zero());
  const CpElem lhs = cp_mul(cp_mu_tilde(F2), cd(F2, 1, 2));
  const CpElem rhs = cp_mul(cd(F2, 1, 4), cp_mu_star(F2));
  CHECK(cp_mul(lhs, rhs) == cd(F2, 7, 8));
  CHECK(cp_mul(cp_mu_tilde(F2), cp_mu_star(F2)) == cp_from_tp(tau(F2, 1)));
  CHECK(cp_mul(cp_mu_tilde(F2), cp_mu_tilde(F2)) == cp_pow(cp_mu_tilde(F2), 2));
}

TEST_CASE("C_p is associative") {
  RandomSource rng(59);
  for (Residue p : {2u, 3u}) {
    const Ring F = Ring::prime_field(p);
    for (int i = 0; i < 100; ++i) {
      const auto x = rng.cp_element(F, 2, 2, 2), y = rng.cp_element(F, 2, 2, 2), z = rng.cp_element(F, 2, 2, 2);
      CHECK(cp_mul(cp_mul(x, y), z) == cp_mul(x, cp_mul(y, z)));
    }
  }
}

TEST_CASE("triangular action") {
  const Ring F2 = Ring::prime_field(2);
  CHECK(cp_act(cp_mu_tilde(F2), tp_one(F2)) == d(F2, 1, 2));
  CHECK(cp_act(cp_mu_star(F2), d(F2, 3, 4)).is_zero());
  CHECK(cp_act(cd(F2, 1, 2), d(F2, 1, 4)) == d(F2, 3, 4));
  RandomSource rng(61);
  for (Residue p : {2u, 3u}) {
    const Ring F = Ring::prime_field(p);
    for (int i = 0; i < 100; ++i) {
      const auto x = rng.cp_element(F, 2, 2, 2), y = rng.cp_element(F, 2, 2, 2);
      const auto v = rng.tp_element(F, 3, 3);
      CHECK(cp_act(cp_mul(x, y), v) == cp_act(x, cp_act(y, v)));
    }
  }
}

TEST_CASE("truncated matrices") {
  const Ring F2 = Ring::prime_field(2);
  const TriangularMatrix m = cp_matrix(cp_mu_tilde(F2), 2);
  REQUIRE(m.basis.size() == 4);
  CHECK(m.is_lower_triangular());
  // ones exactly at c = (d + 1)/2 inside the truncation
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool one = m.basis[i].value() == (m.basis[j].value() + 1) / 2;
      CHECK(m.entries[i][j] == (one ? Coeff::one(F2) : Coeff::zero(F2)));
    }
  }
  CHECK(m.grid() ==
        "  0 | . . . .\n"
        "1/4 | . . . .\n"
        "1/2 | 1 . . .\n"
        "3/4 | . . 1 .\n");
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    for (unsigned long level = 0; level <= 3; ++level) {
      CHECK(cp_matrix(cp_mu_star(F), level).is_lower_triangular());
      CHECK(cp_matrix(cp_from_tp(tau(F, 2)), level).is_lower_triangular());
    }
  }
}

TEST_CASE("faithfulness probe") {
  RandomSource rng(67);
  for (Residue p : {2u, 3u}) {
    const Ring F = Ring::prime_field(p);
    for (int i = 0; i < 50; ++i) CHECK(faithfulness_witness(rng.cp_element(F, 3, 2, 2), 6).has_value());
  }
  CHECK_FALSE(faithfulness_witness(CpElem(Ring::prime_field(2)), 3).has_value());
}

TEST_CASE("G+ membership and decomposition") {
  for (Residue p : {2u, 3u}) {
    CHECK(g_in_plus(GElem{p, -1, Rat(p - 1, p)}));
    const GWord w = g_decompose(GElem{p, -1, Rat(p - 1, p)});
    CHECK(w.letter == GWord::Letter::Alpha);
    CHECK(w.power == 1);
    CHECK(w.translation == 0);
    CHECK_FALSE(g_in_plus(GElem{p, -1, Rat(0)}));
    CHECK_THROWS_AS(g_decompose(GElem{p, -1, Rat(0)}), DomainError);
  }
  const GWord w = g_decompose(GElem{2, 2, Rat(1, 4)});
  CHECK(w.str() == "g_1/4 beta^2");
  // closed form against dense sampling of x in [0, 1]
  for (Residue p : {2u, 3u}) {
    for (long n = -3; n <= 3; ++n) {
      for (long k = -20; k <= 40; ++k) {
        Rat shift(k, 16);
        shift.canonicalize();
        const GElem g{p, n, shift};
        bool preserved = true;
        for (long c = 0; c <= 32 && preserved; ++c) {
          for (long x = c; x <= 32 && preserved; ++x) preserved = g.apply(Rat(x, 32)) >= Rat(c, 32);
        }
        CAPTURE(n);
        CAPTURE(k);
        if (p == 2) CHECK(g_in_plus(g) == preserved);
        if (g_in_plus(g)) CHECK(g_decompose(g).evaluate(p) == g);
      }
    }
  }
}

TEST_CASE("reduction") {
  const Ring F3 = Ring::prime_field(3), F2 = Ring::prime_field(2);
  CHECK(reduce_mod_p(e(F3, 1, 6), 3) == e(F3, 1, 2));
  CHECK(reduce_mod_p(e(F2, 1, 4), 2) == gr_one(F2));
  CHECK(sigma(3, reduced_rho(3, e(F3, 1, 5), 3)) == e(F3, 1, 5));
  CHECK(reduced_rho(2, e(F3, 1, 5), 3) == rho(2, e(F3, 1, 5)));
  RandomSource rng(71);
  for (Residue p : {2u, 3u, 5u}) {
    const Ring F = Ring::prime_field(p);
    for (int i = 0; i < 50; ++i) {
      const auto x = rng.group_ring(F, 3, 30), y = rng.group_ring(F, 3, 30);
      CHECK(reduce_mod_p(gr_mul(x, y), p) == gr_mul(reduce_mod_p(x, p), reduce_mod_p(y, p)));
      for (long n = 1; n <= 12; ++n) CHECK(reduce_mod_p(sigma(n, x), p) == sigma(n, reduce_mod_p(x, p)));
    }
  }
}

TEST_CASE("Frobenius identities") {
  const Ring F2 = Ring::prime_field(2), F4 = Ring::parse("fq:2,2");
  const auto f = e(F2, 1, 3);
  CHECK(frobenius_twist(f, 1) == e(F2, 2, 3));
  CHECK(frobenius_identity_check(f, 1));
  CHECK(frobenius_identity_check(gr_one(F4), 3));
  const Coeff t = Coeff::field_generator(F4);
  const auto g = gr_e(F4, QmodZ(1, 5)).scaled(t);
  CHECK(frobenius_twist(g, 1) == gr_e(F4, QmodZ(2, 5)).scaled(t * t));
  CHECK(frobenius_twist(g, 1) == gr_mul(g, g));
  CHECK_THROWS_AS(frobenius_identity_check(gr_one(Ring::rationals()), 1), DomainError);
  RandomSource rng(73);
  for (const char* tag : {"fp:2", "fp:3", "fq:2,2", "fq:3,2"}) {
    const Ring F = Ring::parse(tag);
    for (int i = 0; i < 50; ++i) CHECK(frobenius_identity_check(rng.group_ring(F, 3, 12), rng.uniform(0, 3)));
  }
}
