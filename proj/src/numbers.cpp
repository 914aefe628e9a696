#include "bce/numbers.hpp"

#include <limits>

#include "bce/error.hpp"

namespace bce {

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inverse_mod(const Int& a, const Int& m) {
  if (m == 1) return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NotInvertible(to_string(a) + " is not a unit modulo " + to_string(m));
  }
  return r;
}

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_power_of(const Int& n, const Int& p) {
  if (n < 1) return false;
  Int m = n;
  while (m % p == 0) m /= p;
  return m == 1;
}

unsigned long log_exact(const Int& n, const Int& p) {
  return split_prime_power(n, p).first;
}

std::pair<unsigned long, Int> split_prime_power(const Int& n, const Int& p) {
  unsigned long k = 0;
  Int rest = n;
  while (rest != 0 && rest % p == 0) {
    rest /= p;
    ++k;
  }
  return {k, rest};
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n < 1) throw DomainError("squarefree_split expects a positive integer");
  Int f = 1;
  Int s = 1;
  Int rest = n;
  for (Int d = 2; d * d <= rest; ++d) {
    unsigned long e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    f *= pow(d, e / 2);
    if (e % 2 == 1) s *= d;
  }
  s *= rest;
  return {f, s};
}

bool is_squarefree(const Int& n) { return n >= 1 && squarefree_split(n).first == 1; }

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int parse_int(const std::string& text) {
  Int n;
  if (text.empty() || n.set_str(text, 10) != 0) {
    throw Error("not an integer: '" + text + "'");
  }
  return n;
}

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) { return q.get_str(); }

std::uint64_t to_u64(const Int& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
    throw DomainError("integer " + to_string(n) + " does not fit a machine word");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

}  // namespace bce
