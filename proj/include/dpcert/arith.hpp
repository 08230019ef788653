#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "dpcert/error.hpp"

namespace dpcert {

// Element of Q(sqrt(d)): a + b*sqrt(d), components in lowest terms.
struct Quad {
  mpq_class a;
  mpq_class b;

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a == y.a && x.b == y.b;
  }
};

// Exact field element. The representation alternatives correspond to the
// three domain kinds; a Scalar is only meaningful together with its Domain.
class Scalar {
 public:
  Scalar() : rep_(std::uint64_t{0}) {}
  explicit Scalar(std::uint64_t fp_value) : rep_(fp_value) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(Quad q) : rep_(std::move(q)) {}

  std::uint64_t fp() const { return std::get<std::uint64_t>(rep_); }
  const mpq_class& rat() const { return std::get<mpq_class>(rep_); }
  const Quad& quad() const { return std::get<Quad>(rep_); }

  bool is_fp() const { return std::holds_alternative<std::uint64_t>(rep_); }
  bool is_rat() const { return std::holds_alternative<mpq_class>(rep_); }
  bool is_quad() const { return std::holds_alternative<Quad>(rep_); }

  // Structural equality; all representations are kept canonical, so this
  // coincides with equality in the field.
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.rep_ == y.rep_; }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  std::variant<std::uint64_t, mpq_class, Quad> rep_;
};

bool is_prime_u64(std::uint64_t n);

// Exact coefficient domain: F_p, Q, or Q(sqrt(d)).
class Domain {
 public:
  enum class Kind { PrimeField, Rationals, QuadraticField };

  static Domain prime_field(std::uint64_t p);
  static Domain rationals();
  static Domain quadratic_field(std::uint64_t d);

  // Spec strings: "fp:<p>", "q", "qsqrt:<d>".
  static Domain parse_spec(std::string_view spec);
  std::string spec() const;

  Kind kind() const { return kind_; }
  std::uint64_t characteristic() const { return kind_ == Kind::PrimeField ? p_ : 0; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t radicand() const { return d_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_integer(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  // sqrt(d) as an element; only valid for quadratic fields.
  Scalar sqrt_gen() const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar inv(const Scalar& a) const;  // DivisionByZero on 0
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar pow(const Scalar& a, std::uint64_t e) const;

  // 1/m! ; requires m < p in positive characteristic (NotInvertible otherwise).
  Scalar factorial_unit(std::uint64_t m) const;

  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Domain& x, const Domain& y) {
    return x.kind_ == y.kind_ && x.p_ == y.p_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Domain& x, const Domain& y) { return !(x == y); }

 private:
  Domain(Kind k, std::uint64_t p, std::uint64_t d) : kind_(k), p_(p), d_(d) {}

  Kind kind_;
  std::uint64_t p_ = 0;  // modulus for PrimeField
  std::uint64_t d_ = 0;  // radicand for QuadraticField
};

// Modular inverse by extended Euclid; a need not be reduced. p prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace dpcert
