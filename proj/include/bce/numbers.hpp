#pragma once

// Arbitrary-precision integer helpers shared by every module.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

namespace bce {

using Int = mpz_class;
using Rat = mpq_class;

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Non-negative residue of a modulo m (m > 0).
Int mod(const Int& a, const Int& m);

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
Int inverse_mod(const Int& a, const Int& m);

Int pow(const Int& base, unsigned long exp);

/// Trial-division primality test.
bool is_prime(const Int& n);

/// True if n = p^k for some k >= 0 (so 1 counts).
bool is_power_of(const Int& n, const Int& p);

/// Exponent k with n = p^k; caller guarantees is_power_of(n, p).
unsigned long log_exact(const Int& n, const Int& p);

/// Splits n = p^k * rest with p not dividing rest.
std::pair<unsigned long, Int> split_prime_power(const Int& n, const Int& p);

/// Writes n > 0 as f^2 * s with s squarefree; returns (f, s).
std::pair<Int, Int> squarefree_split(const Int& n);

bool is_squarefree(const Int& n);

/// Binomial coefficient C(n, k).
Int binomial(unsigned long n, unsigned long k);

/// Parses a (possibly signed) decimal integer; throws bce::Error on junk.
Int parse_int(const std::string& text);

/// Parses "p/q" or "p"; throws on a zero denominator.
Rat parse_rat(const std::string& text);

std::string to_string(const Int& n);
std::string to_string(const Rat& q);

/// Fits n in an unsigned 64-bit machine word (throws otherwise).
std::uint64_t to_u64(const Int& n);

}  // namespace bce
