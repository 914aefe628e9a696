#include "bce/coeff.hpp"

#include <sstream>

#include "bce/error.hpp"

namespace bce {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Residue reduce_int(const Int& n, Residue p) { return to_u64(mod(n, Int(std::to_string(p)))); }

[[noreturn]] void mismatch(const Coeff& a, const Coeff& b) {
  throw RingMismatch("coefficient ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
}

}  // namespace

Ring Ring::integers() { return Ring(); }

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::Rational;
  return r;
}

Ring Ring::prime_field(Residue p) {
  if (!is_prime(Int(std::to_string(p)))) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
  Ring r;
  r.kind_ = RingKind::PrimeField;
  r.p_ = p;
  return r;
}

Ring Ring::extension_field(std::shared_ptr<const ExtensionField> field) {
  Ring r;
  r.kind_ = RingKind::ExtensionField;
  r.p_ = field->p();
  r.field_ = std::move(field);
  return r;
}

Ring Ring::sqrt_rationals() {
  Ring r;
  r.kind_ = RingKind::SqrtRational;
  return r;
}

Ring Ring::parse(const std::string& tag) {
  if (tag == "z") return integers();
  if (tag == "q") return rationals();
  if (tag == "qsqrt") return sqrt_rationals();
  auto residue = [&](const std::string& s) { return to_u64(parse_int(s)); };
  if (tag.rfind("fp:", 0) == 0) return prime_field(residue(tag.substr(3)));
  if (tag.rfind("fq:", 0) == 0) {
    std::string rest = tag.substr(3);
    auto c1 = rest.find(',');
    if (c1 == std::string::npos) throw DomainError("fq ring needs fq:<p>,<k>[,<poly>]");
    Residue p = residue(rest.substr(0, c1));
    auto c2 = rest.find(',', c1 + 1);
    std::string k_text = rest.substr(c1 + 1, c2 == std::string::npos ? std::string::npos : c2 - c1 - 1);
    auto k = static_cast<unsigned>(residue(k_text));
    std::optional<FpPoly> modulus;
    if (c2 != std::string::npos) modulus = parse_fp_poly(rest.substr(c2 + 1), p);
    return extension_field(ExtensionField::make(p, k, modulus));
  }
  throw DomainError("unknown ring '" + tag + "' (expected z, q, fp:<p>, fq:<p>,<k>[,<poly>] or qsqrt)");
}

std::string Ring::tag() const {
  switch (kind_) {
    case RingKind::Integer:
      return "z";
    case RingKind::Rational:
      return "q";
    case RingKind::PrimeField:
      return "fp:" + std::to_string(p_);
    case RingKind::ExtensionField:
      return "fq:" + std::to_string(p_) + "," + std::to_string(field_->k()) + "," +
             field_->modulus_str();
    case RingKind::SqrtRational:
      return "qsqrt";
  }
  return "?";
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integer:
      return "Z";
    case RingKind::Rational:
      return "Q";
    case RingKind::PrimeField:
      return "F_" + std::to_string(p_);
    case RingKind::ExtensionField:
      return "F_" + std::to_string(field_->order());
    case RingKind::SqrtRational:
      return "Q(sqrt)";
  }
  return "?";
}

bool Ring::operator==(const Ring& o) const {
  if (kind_ != o.kind_ || p_ != o.p_) return false;
  if (kind_ == RingKind::ExtensionField) return field_ == o.field_ || *field_ == *o.field_;
  return true;
}

Coeff Coeff::from_int(const Ring& ring, const Int& n) {
  switch (ring.kind()) {
    case RingKind::Integer:
      return Coeff(n);
    case RingKind::Rational:
      return Coeff(Rat(n));
    case RingKind::PrimeField:
      return Coeff(FpValue{ring.characteristic(), reduce_int(n, ring.characteristic())});
    case RingKind::ExtensionField:
      return Coeff(FqValue{ring.field(), ring.field()->constant(reduce_int(n, ring.characteristic()))});
    case RingKind::SqrtRational:
      return Coeff(SqrtRational(Rat(n)));
  }
  throw Error("unreachable");
}

Coeff Coeff::from_rat(const Ring& ring, const Rat& value) {
  Rat q = value;
  q.canonicalize();
  if (q.get_den() == 1) return from_int(ring, q.get_num());
  switch (ring.kind()) {
    case RingKind::Rational:
      return Coeff(q);
    case RingKind::SqrtRational:
      return Coeff(SqrtRational(q));
    default:
      return from_int(ring, q.get_num()) * inverse_of_integer(ring, q.get_den());
  }
}

Coeff Coeff::sqrt(const Ring& ring, const Int& n) {
  if (ring.kind() != RingKind::SqrtRational) {
    throw DomainError("sqrt(" + to_string(n) + ") needs the ring qsqrt, not " + ring.name());
  }
  return Coeff(SqrtRational::sqrt(n));
}

Coeff Coeff::field_generator(const Ring& ring) {
  if (ring.kind() != RingKind::ExtensionField) {
    throw DomainError("the generator t exists only in F_{p^k}, not " + ring.name());
  }
  return Coeff(FqValue{ring.field(), ring.field()->generator()});
}

Ring Coeff::ring() const {
  return std::visit(overloaded{
                        [](const Int&) { return Ring::integers(); },
                        [](const Rat&) { return Ring::rationals(); },
                        [](const FpValue& x) { return Ring::prime_field(x.p); },
                        [](const FqValue& x) { return Ring::extension_field(x.field); },
                        [](const SqrtRational&) { return Ring::sqrt_rationals(); },
                    },
                    v_);
}

bool Coeff::is_zero() const {
  return std::visit(overloaded{
                        [](const Int& x) { return x == 0; },
                        [](const Rat& x) { return x == 0; },
                        [](const FpValue& x) { return x.v == 0; },
                        [](const FqValue& x) { return x.field->is_zero(x.v); },
                        [](const SqrtRational& x) { return x.is_zero(); },
                    },
                    v_);
}

bool Coeff::is_one() const { return *this == from_int(ring(), 1); }

Coeff Coeff::operator+(const Coeff& o) const {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  return std::visit(
      overloaded{
          [&](const Int& x) { return Coeff(Int(x + std::get<Int>(o.v_))); },
          [&](const Rat& x) { return Coeff(Rat(x + std::get<Rat>(o.v_))); },
          [&](const FpValue& x) {
            const auto& y = std::get<FpValue>(o.v_);
            if (x.p != y.p) mismatch(*this, o);
            return Coeff(FpValue{x.p, PrimeField::add(x.v, y.v, x.p)});
          },
          [&](const FqValue& x) {
            const auto& y = std::get<FqValue>(o.v_);
            if (!(*x.field == *y.field)) mismatch(*this, o);
            return Coeff(FqValue{x.field, x.field->add(x.v, y.v)});
          },
          [&](const SqrtRational& x) { return Coeff(x + std::get<SqrtRational>(o.v_)); },
      },
      v_);
}

Coeff Coeff::operator-() const {
  return std::visit(overloaded{
                        [](const Int& x) { return Coeff(Int(-x)); },
                        [](const Rat& x) { return Coeff(Rat(-x)); },
                        [](const FpValue& x) { return Coeff(FpValue{x.p, PrimeField::sub(0, x.v, x.p)}); },
                        [](const FqValue& x) { return Coeff(FqValue{x.field, x.field->neg(x.v)}); },
                        [](const SqrtRational& x) { return Coeff(-x); },
                    },
                    v_);
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  return std::visit(
      overloaded{
          [&](const Int& x) { return Coeff(Int(x * std::get<Int>(o.v_))); },
          [&](const Rat& x) { return Coeff(Rat(x * std::get<Rat>(o.v_))); },
          [&](const FpValue& x) {
            const auto& y = std::get<FpValue>(o.v_);
            if (x.p != y.p) mismatch(*this, o);
            return Coeff(FpValue{x.p, PrimeField::mul(x.v, y.v, x.p)});
          },
          [&](const FqValue& x) {
            const auto& y = std::get<FqValue>(o.v_);
            if (!(*x.field == *y.field)) mismatch(*this, o);
            return Coeff(FqValue{x.field, x.field->mul(x.v, y.v)});
          },
          [&](const SqrtRational& x) { return Coeff(x * std::get<SqrtRational>(o.v_)); },
      },
      v_);
}

Coeff Coeff::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  Coeff result = one(ring());
  Coeff base = *this;
  Int k = e;
  while (k > 0) {
    if (k % 2 == 1) result = result * base;
    k /= 2;
    if (k > 0) base = base * base;
  }
  return result;
}

Coeff Coeff::inverse() const {
  return std::visit(overloaded{
                        [](const Int& x) {
                          if (x == 1 || x == -1) return Coeff(x);
                          throw NotInvertible(to_string(x) + " is not a unit in Z");
                        },
                        [](const Rat& x) {
                          if (x == 0) throw NotInvertible("0 has no inverse in Q");
                          return Coeff(Rat(1 / x));
                        },
                        [](const FpValue& x) { return Coeff(FpValue{x.p, PrimeField::inv(x.v, x.p)}); },
                        [](const FqValue& x) { return Coeff(FqValue{x.field, x.field->inv(x.v)}); },
                        [](const SqrtRational& x) { return Coeff(x.inverse()); },
                    },
                    v_);
}

bool Coeff::operator==(const Coeff& o) const {
  if (v_.index() != o.v_.index()) return false;
  return std::visit(overloaded{
                        [&](const Int& x) { return x == std::get<Int>(o.v_); },
                        [&](const Rat& x) { return x == std::get<Rat>(o.v_); },
                        [&](const FpValue& x) {
                          const auto& y = std::get<FpValue>(o.v_);
                          return x.p == y.p && x.v == y.v;
                        },
                        [&](const FqValue& x) {
                          const auto& y = std::get<FqValue>(o.v_);
                          return *x.field == *y.field && x.v == y.v;
                        },
                        [&](const SqrtRational& x) { return x == std::get<SqrtRational>(o.v_); },
                    },
                    v_);
}

std::string Coeff::str() const {
  return std::visit(overloaded{
                        [](const Int& x) { return to_string(x); },
                        [](const Rat& x) { return to_string(x); },
                        [](const FpValue& x) { return std::to_string(x.v); },
                        [](const FqValue& x) { return fp_poly_str(x.v); },
                        [](const SqrtRational& x) { return x.str(); },
                    },
                    v_);
}

bool Coeff::needs_parens() const {
  return std::visit(overloaded{
                        [](const FqValue& x) {
                          int nonzero = 0;
                          for (auto c : x.v) nonzero += c != 0;
                          return nonzero > 1;
                        },
                        [](const SqrtRational& x) { return x.terms().size() > 1; },
                        [](const auto&) { return false; },
                    },
                    v_);
}

bool Coeff::is_negative() const {
  return std::visit(overloaded{
                        [](const Int& x) { return x < 0; },
                        [](const Rat& x) { return x < 0; },
                        [](const SqrtRational& x) {
                          return !x.is_zero() && x.terms().begin()->second < 0;
                        },
                        [](const auto&) { return false; },
                    },
                    v_);
}

Coeff inverse_of_integer(const Ring& ring, const Int& n) {
  Coeff c = Coeff::from_int(ring, n);
  if (ring.kind() == RingKind::Integer) {
    if (n == 1 || n == -1) return c;
    throw NotInvertible(to_string(n) + " is not invertible over Z");
  }
  if (c.is_zero()) {
    std::ostringstream msg;
    msg << to_string(n) << " is not invertible over " << ring.name();
    if (ring.is_finite_field()) msg << " (characteristic " << ring.characteristic() << ")";
    throw NotInvertible(msg.str());
  }
  return c.inverse();
}

Coeff frobenius_coeff(const Coeff& x, unsigned long l) {
  return std::visit(overloaded{
                        [&](const FpValue&) { return x; },
                        [&](const FqValue& y) {
                          ExtensionField::Elem v = y.v;
                          for (unsigned long i = 0; i < l; ++i) {
                            v = y.field->pow(v, y.field->p());
                          }
                          return Coeff(FqValue{y.field, v});
                        },
                        [&](const auto&) -> Coeff {
                          throw DomainError("Frobenius needs a finite field, not " + x.ring().name());
                        },
                    },
                    x.value());
}

Coeff change_ring(const Coeff& x, const Ring& target) {
  if (x.ring() == target) return x;
  return std::visit(overloaded{
                        [&](const Int& n) { return Coeff::from_int(target, n); },
                        [&](const Rat& q) { return Coeff::from_rat(target, q); },
                        [&](const auto&) -> Coeff {
                          throw RingMismatch("cannot map " + x.ring().name() + " into " + target.name());
                        },
                    },
                    x.value());
}

}  // namespace bce
