#include "bce/char_p.hpp"

#include <algorithm>
#include <sstream>

#include "bce/error.hpp"

namespace bce {

namespace {

Int big(Residue p) { return Int(std::to_string(p)); }

void check_p_power_den(Residue p, const Rat& value) {
  if (value < 0 || value >= 1) {
    throw DomainError("p-adic fraction " + to_string(value) + " is outside [0, 1)");
  }
  if (!is_power_of(value.get_den(), big(p))) {
    throw DomainError("denominator of " + to_string(value) + " is not a power of " + std::to_string(p));
  }
}

// (-1)^j C(k, j) mod p for the j <= k where it is nonzero. By Lucas these are
// exactly the j whose base-p digits are bounded by those of k.
std::vector<std::pair<unsigned long, long>> signed_binomials_mod_p(unsigned long k, Residue p) {
  std::vector<unsigned long> digits;
  for (unsigned long r = k; r > 0; r /= p) digits.push_back(r % p);
  std::vector<std::pair<unsigned long, long>> out = {{0, 1}};
  unsigned long place = 1;
  for (unsigned long d : digits) {
    std::vector<std::pair<unsigned long, long>> next;
    for (unsigned long i = 0; i <= d; ++i) {
      const long b = to_u64(binomial(d, i)) % p;
      for (const auto& [j, c] : out) next.emplace_back(j + i * place, c * b % static_cast<long>(p));
    }
    out = std::move(next);
    place *= p;
  }
  for (auto& [j, c] : out) {
    if (j % 2 == 1) c = -c;
  }
  return out;
}

}  // namespace

PAdicFrac::PAdicFrac(Residue p, const Int& k, unsigned long n) : p_(p), value_(k, pow(big(p), n)) {
  value_.canonicalize();
  check_p_power_den(p_, value_);
}

PAdicFrac::PAdicFrac(Residue p, const Rat& value) : p_(p), value_(value) {
  value_.canonicalize();
  check_p_power_den(p_, value_);
}

unsigned long PAdicFrac::n() const { return log_exact(value_.get_den(), big(p_)); }

std::string PAdicFrac::str() const {
  return to_string(k()) + "/" + std::to_string(p_) + "^" + std::to_string(n());
}

PAdicFrac PAdicFrac::parse(Residue p, const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return PAdicFrac(p, Rat(parse_int(text)));
  Int k = parse_int(text.substr(0, slash));
  std::string den = text.substr(slash + 1);
  auto caret = den.find('^');
  if (caret == std::string::npos) {
    Int d = parse_int(den);
    if (d == 0) throw DomainError("zero denominator in '" + text + "'");
    Rat q(k, d);
    q.canonicalize();
    return PAdicFrac(p, q);
  }
  if (parse_int(den.substr(0, caret)) != big(p)) {
    throw DomainError("'" + text + "' is not a fraction over powers of " + std::to_string(p));
  }
  return PAdicFrac(p, k, to_u64(parse_int(den.substr(caret + 1))));
}

Residue char_of(const Ring& ring) {
  if (!ring.is_finite_field()) {
    throw DomainError("characteristic-p structure needs a finite field, not " + ring.name());
  }
  return ring.characteristic();
}

TpElem tp_delta(const Ring& ring, const PAdicFrac& a) {
  if (a.p() != char_of(ring)) throw RingMismatch("delta label prime differs from the ring characteristic");
  return TpElem::basis(ring, a);
}

TpElem tp_one(const Ring& ring) { return tp_delta(ring, PAdicFrac(char_of(ring))); }

TpElem tp_mul(const TpElem& f, const TpElem& g) {
  f.check_ring(g);
  const Residue p = char_of(f.ring());
  TpElem out(f.ring());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      Rat sum = a.value() + b.value();
      if (sum >= 1) break;  // b ascending: all later sums are >= 1 too
      out.add_term(PAdicFrac(p, sum), ca * cb);
    }
  }
  return out;
}

TpElem tp_pow(const TpElem& f, const Int& exponent) {
  if (exponent < 0) throw DomainError("negative powers are not defined in T(p)");
  TpElem result = tp_one(f.ring());
  TpElem base = f;
  Int k = exponent;
  while (k > 0) {
    if (k % 2 == 1) result = tp_mul(result, base);
    k /= 2;
    if (k > 0) base = tp_mul(base, base);
  }
  return result;
}

TpElem iota(const GroupRingElem& x) {
  const Residue p = char_of(x.ring());
  TpElem out(x.ring());
  for (const auto& [r, c] : x.terms()) {
    if (!is_power_of(r.den(), big(p))) {
      throw DomainError("iota needs p-power denominators; e(" + r.str() + ") is outside Q_" +
                        std::to_string(p) + "/Z_" + std::to_string(p));
    }
    // (delta_0 - delta_{1/p^l})^k = sum_j C(k, j) (-1)^j delta_{j/p^l}, k < p^l
    for (const auto& [j, b] : signed_binomials_mod_p(to_u64(r.num()), p)) {
      out.add_term(PAdicFrac(p, Rat(Int(j), r.den())), c * Coeff::from_int(x.ring(), b));
    }
  }
  return out;
}

GroupRingElem iota_inv(const TpElem& f) {
  char_of(f.ring());
  GroupRingElem out(f.ring());
  for (const auto& [a, c] : f.terms()) {
    // delta_{j/p^l} = iota((1 - e(1/p^l))^j)
    const Int den = a.value().get_den();
    for (const auto& [i, b] : signed_binomials_mod_p(to_u64(a.k()), f.ring().characteristic())) {
      out.add_term(QmodZ(Int(i), den), c * Coeff::from_int(f.ring(), b));
    }
  }
  return out;
}

TpElem tp_sigma(const TpElem& f) {
  const Residue p = char_of(f.ring());
  TpElem out(f.ring());
  for (const auto& [a, c] : f.terms()) {
    Rat image = a.value() * big(p);
    if (image < 1) out.add_term(PAdicFrac(p, image), c);
  }
  return out;
}

TpElem tp_rho(const TpElem& f) {
  const Residue p = char_of(f.ring());
  TpElem out(f.ring());
  for (const auto& [a, c] : f.terms()) {
    Rat image = (a.value() + Rat(big(p) - 1)) / big(p);
    out.add_term(PAdicFrac(p, image), c);
  }
  return out;
}

bool in_ker_sigma(const TpElem& f) {
  const Residue p = char_of(f.ring());
  const Rat threshold(1, big(p));
  for (const auto& [a, c] : f.terms()) {
    if (a.value() < threshold) return false;
  }
  return true;
}

bool ker_sigma_nilpotency(const TpElem& f) {
  if (!in_ker_sigma(f)) return false;
  return tp_pow(f, big(char_of(f.ring()))).is_zero();
}

TpElem tau(const Ring& ring, unsigned long m) {
  const Residue p = char_of(ring);
  const Int pm = pow(big(p), m);
  return tp_delta(ring, PAdicFrac(p, Rat(pm - 1, pm)));
}

std::vector<RelationCheck> tau_relations_check(const Ring& ring, unsigned long bound) {
  std::vector<RelationCheck> out;
  for (unsigned long m = 1; m <= bound; ++m) {
    for (unsigned long n = 1; n <= bound; ++n) {
      const std::string suffix = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      out.push_back({"tau_m tau_n = 0 " + suffix, tp_mul(tau(ring, m), tau(ring, n)).is_zero()});
      TpElem image = tau(ring, n);
      for (unsigned long i = 0; i < m; ++i) image = tp_rho(image);
      out.push_back({"rho~^m(tau_n) = tau_{m+n} " + suffix, image == tau(ring, m + n)});
    }
    out.push_back({"sigma_p(tau_n) = 0 (" + std::to_string(m) + ")", tp_sigma(tau(ring, m)).is_zero()});
  }
  return out;
}

CpElem cp_from_tp(const TpElem& f) {
  CpElem out(f.ring());
  for (const auto& [a, c] : f.terms()) out.add_term(CpKey{0, a}, c);
  return out;
}

CpElem cp_one(const Ring& ring) { return cp_from_tp(tp_one(ring)); }

CpElem cp_mu_tilde(const Ring& ring) { return CpElem::basis(ring, CpKey{1, PAdicFrac(char_of(ring))}); }

CpElem cp_mu_star(const Ring& ring) { return CpElem::basis(ring, CpKey{-1, PAdicFrac(char_of(ring))}); }

bool cp_is_abelian(const CpElem& x) {
  return std::all_of(x.terms().begin(), x.terms().end(), [](const auto& t) { return t.first.k == 0; });
}

TpElem cp_abelian_part(const CpElem& x) {
  TpElem out(x.ring());
  for (const auto& [key, c] : x.terms()) {
    if (key.k != 0) throw DomainError("expected an element of T(p), found a mu~_p / mu*_p term");
    out.add_term(key.a, c);
  }
  return out;
}

namespace {

TpElem sigma_pow(TpElem f, long k) {
  for (long i = 0; i < k && !f.is_zero(); ++i) f = tp_sigma(f);
  return f;
}

TpElem rho_pow(TpElem f, long k) {
  for (long i = 0; i < k; ++i) f = tp_rho(f);
  return f;
}

// Product of two basis monomials, added to out with coefficient c.
void add_cp_product(CpElem& out, const CpKey& x, const CpKey& y, const Coeff& c) {
  const Ring& ring = out.ring();
  const TpElem dx = TpElem::basis(ring, x.a);
  const TpElem dy = TpElem::basis(ring, y.a);
  TpElem z(ring);
  long k = 0;
  if (x.k >= 1 && y.k >= 1) {
    // mu~^n x mu~^m y = mu~^(n+m) sigma^m(x) y
    z = tp_mul(sigma_pow(dx, y.k), dy);
    k = x.k + y.k;
  } else if (x.k <= 0 && y.k <= 0) {
    // x mu*^n y mu*^m = x sigma^n(y) mu*^(n+m)
    z = tp_mul(dx, sigma_pow(dy, -x.k));
    k = x.k + y.k;
  } else if (x.k <= 0) {
    // x mu*^n mu~^m y vanishes for n > 0; for n = 0 it is mu~^m sigma^m(x) y
    if (x.k < 0) return;
    z = tp_mul(sigma_pow(dx, y.k), dy);
    k = y.k;
  } else {
    // mu~^n x y mu*^m
    const long n = x.k;
    const long m = -y.k;
    TpElem xy = tp_mul(dx, dy);
    if (m >= n) {
      z = rho_pow(xy, n);
      k = -(m - n);
    } else {
      z = rho_pow(xy, m);
      k = n - m;
    }
  }
  for (const auto& [a, ca] : z.terms()) out.add_term(CpKey{k, a}, c * ca);
}

// theta of one basis monomial on one basis vector.
TpElem act_cp_monomial(const CpKey& key, const TpElem& xi) {
  const TpElem shift = TpElem::basis(xi.ring(), key.a);
  if (key.k >= 1) return rho_pow(tp_mul(shift, xi), key.k);
  return tp_mul(shift, sigma_pow(xi, -key.k));
}

}  // namespace

CpElem cp_mul(const CpElem& x, const CpElem& y) {
  x.check_ring(y);
  char_of(x.ring());
  CpElem out(x.ring());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) add_cp_product(out, kx, ky, cx * cy);
  }
  return out;
}

CpElem cp_pow(const CpElem& x, const Int& exponent) {
  if (exponent < 0) throw DomainError("negative powers are not defined in C_p");
  CpElem result = cp_one(x.ring());
  for (Int i = 0; i < exponent; ++i) result = cp_mul(result, x);
  return result;
}

TpElem cp_act(const CpElem& x, const TpElem& xi) {
  x.check_ring(CpElem(xi.ring()));
  TpElem out(x.ring());
  for (const auto& [key, c] : x.terms()) out.add_scaled(act_cp_monomial(key, xi), c);
  return out;
}

std::vector<PAdicFrac> truncated_basis(Residue p, unsigned long level) {
  const Int size = pow(big(p), level);
  std::vector<PAdicFrac> out;
  for (Int j = 0; j < size; ++j) out.emplace_back(p, Rat(j, size));
  return out;
}

TriangularMatrix cp_matrix(const CpElem& x, unsigned long level) {
  const Residue p = char_of(x.ring());
  TriangularMatrix m{p, level, truncated_basis(p, level), {}};
  const std::size_t size = m.basis.size();
  m.entries.assign(size, std::vector<Coeff>(size, Coeff::zero(x.ring())));
  const Int scale = pow(big(p), level);
  for (std::size_t col = 0; col < size; ++col) {
    TpElem image = cp_act(x, TpElem::basis(x.ring(), m.basis[col]));
    for (const auto& [c, v] : image.terms()) {
      Rat idx = c.value() * scale;
      if (idx.get_den() != 1) continue;  // beyond the truncation
      m.entries[to_u64(idx.get_num())][col] = v;
    }
  }
  return m;
}

bool TriangularMatrix::is_lower_triangular() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries[i].size(); ++j) {
      if (!entries[i][j].is_zero()) return false;
    }
  }
  return true;
}

std::string TriangularMatrix::grid() const {
  std::vector<std::string> labels;
  std::size_t label_width = 0;
  std::size_t cell_width = 1;
  for (const auto& b : basis) {
    labels.push_back(to_string(b.value()));
    label_width = std::max(label_width, labels.back().size());
  }
  for (const auto& row : entries) {
    for (const auto& c : row) {
      if (!c.is_zero()) cell_width = std::max(cell_width, c.str().size());
    }
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << std::string(label_width - labels[i].size(), ' ') << labels[i] << " |";
    for (const auto& c : entries[i]) {
      std::string cell = c.is_zero() ? "." : c.str();
      out << ' ' << std::string(cell_width - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::optional<PAdicFrac> faithfulness_witness(const CpElem& x, unsigned long max_level) {
  const Residue p = char_of(x.ring());
  for (unsigned long level = 0; level <= max_level; ++level) {
    for (const auto& b : truncated_basis(p, level)) {
      if (b.n() != level) continue;  // already tried at a lower level
      if (!cp_act(x, TpElem::basis(x.ring(), b)).is_zero()) return b;
    }
  }
  return std::nullopt;
}

Rat GElem::apply(const Rat& b) const {
  Rat scale = n >= 0 ? Rat(pow(big(p), static_cast<unsigned long>(n)))
                     : Rat(Int(1), pow(big(p), static_cast<unsigned long>(-n)));
  return scale * b + a;
}

GElem GElem::compose(const GElem& other) const {
  // p^n (p^n' b + a') + a
  return GElem{p, n + other.n, apply(other.a)};
}

bool g_in_plus(const GElem& g) {
  if (g.n >= 0) return g.a >= 0;
  const Int pm = pow(big(g.p), static_cast<unsigned long>(-g.n));
  return g.a >= 1 - Rat(Int(1), pm);
}

std::string GWord::str() const {
  std::string out = "g_" + to_string(translation);
  if (power == 0) return out;
  out += letter == Letter::Alpha ? " alpha" : " beta";
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

GElem GWord::evaluate(Residue p) const {
  GElem word{p, 0, translation};
  const GElem gen = letter == Letter::Alpha ? GElem{p, -1, Rat(big(p) - 1, big(p))} : GElem{p, 1, Rat(0)};
  for (unsigned long i = 0; i < power; ++i) word = word.compose(gen);
  return word;
}

GWord g_decompose(const GElem& g) {
  if (!g_in_plus(g)) {
    throw DomainError("(" + std::to_string(g.n) + ", " + to_string(g.a) + ") is not in G+");
  }
  if (g.n >= 0) return GWord{g.a, GWord::Letter::Beta, static_cast<unsigned long>(g.n)};
  const unsigned long m = static_cast<unsigned long>(-g.n);
  const Rat b = g.a - 1 + Rat(Int(1), pow(big(g.p), m));
  return GWord{b, GWord::Letter::Alpha, m};
}

GroupRingElem reduce_mod_p(const GroupRingElem& x, const Int& p) {
  if (!is_prime(p)) throw DomainError(to_string(p) + " is not prime");
  GroupRingElem out(x.ring());
  for (const auto& [r, c] : x.terms()) out.add_term(p_decompose(r, p).second, c);
  return out;
}

GroupRingElem reduced_rho(const Int& n, const GroupRingElem& x, const Int& p) {
  if (n < 1) throw DomainError("reduced rho needs n >= 1");
  if (x.ring().is_finite_field() && big(x.ring().characteristic()) != p) {
    throw RingMismatch("reduction prime differs from the ring characteristic");
  }
  auto [k, rest] = split_prime_power(n, p);
  const Int pk = pow(p, k);
  GroupRingElem inverted(x.ring());
  for (const auto& [r, c] : x.terms()) {
    if (r.den() % p == 0) {
      throw DomainError("e(" + r.str() + ") is not in the reduced algebra (denominator divisible by " +
                        to_string(p) + ")");
    }
    inverted.add_term(QmodZ(r.num() * inverse_mod(pk, r.den()), r.den()), c);
  }
  return rest == 1 ? inverted : rho(rest, inverted);
}

GroupRingElem frobenius_twist(const GroupRingElem& f, unsigned long l) {
  const Residue p = char_of(f.ring());
  const Int pl = pow(big(p), l);
  GroupRingElem out(f.ring());
  for (const auto& [r, c] : f.terms()) out.add_term(qmodz_scale(pl, r), frobenius_coeff(c, l));
  return out;
}

bool frobenius_identity_check(const GroupRingElem& f, unsigned long l) {
  const Int pl = pow(big(char_of(f.ring())), l);
  return frobenius_twist(f, l) == gr_pow(f, pl);
}

}  // namespace bce
