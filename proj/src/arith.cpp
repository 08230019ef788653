#include "dpcert/arith.hpp"

#include <charconv>

namespace dpcert {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::InvalidPrime: return "InvalidPrime";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::TermCapExceeded: return "TermCapExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::ResourceCap: return "ResourceCap";
    case Errc::UnsupportedFrame: return "UnsupportedFrame";
    case Errc::BoundExceedsP: return "BoundExceedsP";
    case Errc::InvalidAssignment: return "InvalidAssignment";
    case Errc::NotInIdeal: return "NotInIdeal";
    case Errc::NotInSquareOfMaximalIdeal: return "NotInSquareOfMaximalIdeal";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::InvalidBounds: return "InvalidBounds";
    case Errc::CertificateInapplicable: return "CertificateInapplicable";
    case Errc::DegenerateIndex: return "DegenerateIndex";
    case Errc::InvalidDomain: return "InvalidDomain";
    case Errc::InvalidInstance: return "InvalidInstance";
  }
  return "UnknownError";
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  for (std::uint64_t i = 17; i * i <= n; i += 2) {
    if (n % i == 0) return false;
  }
  return true;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) fail(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p));
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::int64_t tmp = t - quot * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - quot * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) fail(Errc::NotInvertible, std::to_string(a) + " mod " + std::to_string(p));
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

namespace {

// Keep p below 2^31 so products of reduced values fit in uint64.
constexpr std::uint64_t kMaxPrime = (1ull << 31);

bool is_squarefree(std::uint64_t d) {
  for (std::uint64_t i = 2; i * i <= d; ++i) {
    if (d % (i * i) == 0) return false;
  }
  return true;
}

mpq_class quad_norm(const Quad& x, std::uint64_t d) {
  return x.a * x.a - mpq_class(static_cast<unsigned long>(d)) * x.b * x.b;
}

}  // namespace

Domain Domain::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxPrime) fail(Errc::InvalidPrime, "modulus too large (must be < 2^31)");
  return Domain(Kind::PrimeField, p, 0);
}

Domain Domain::rationals() { return Domain(Kind::Rationals, 0, 0); }

Domain Domain::quadratic_field(std::uint64_t d) {
  if (d < 2 || !is_squarefree(d))
    fail(Errc::InvalidDomain, "radicand must be square-free and >= 2, got " + std::to_string(d));
  return Domain(Kind::QuadraticField, 0, d);
}

Domain Domain::parse_spec(std::string_view spec) {
  if (spec == "q") return rationals();
  auto parse_num = [&](std::string_view s) -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
      fail(Errc::InvalidDomain, "bad domain spec '" + std::string(spec) + "'");
    return v;
  };
  if (spec.substr(0, 3) == "fp:") return prime_field(parse_num(spec.substr(3)));
  if (spec.substr(0, 6) == "qsqrt:") return quadratic_field(parse_num(spec.substr(6)));
  fail(Errc::InvalidDomain, "bad domain spec '" + std::string(spec) + "'");
}

std::string Domain::spec() const {
  switch (kind_) {
    case Kind::PrimeField: return "fp:" + std::to_string(p_);
    case Kind::Rationals: return "q";
    case Kind::QuadraticField: return "qsqrt:" + std::to_string(d_);
  }
  return "";
}

Scalar Domain::zero() const {
  switch (kind_) {
    case Kind::PrimeField: return Scalar(std::uint64_t{0});
    case Kind::Rationals: return Scalar(mpq_class(0));
    case Kind::QuadraticField: return Scalar(Quad{mpq_class(0), mpq_class(0)});
  }
  return Scalar();
}

Scalar Domain::one() const { return from_int(1); }

Scalar Domain::from_int(long v) const {
  return from_integer(mpz_class(v));
}

Scalar Domain::from_integer(const mpz_class& v) const {
  switch (kind_) {
    case Kind::PrimeField: {
      mpz_class r = v % static_cast<unsigned long>(p_);
      if (r < 0) r += static_cast<unsigned long>(p_);
      return Scalar(static_cast<std::uint64_t>(r.get_ui()));
    }
    case Kind::Rationals: return Scalar(mpq_class(v));
    case Kind::QuadraticField: return Scalar(Quad{mpq_class(v), mpq_class(0)});
  }
  return Scalar();
}

Scalar Domain::from_rational(const mpq_class& v) const {
  switch (kind_) {
    case Kind::PrimeField: {
      mpz_class den = v.get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_)))
        fail(Errc::NotInvertible,
             "denominator " + den.get_str() + " is not invertible mod " + std::to_string(p_));
      Scalar num = from_integer(v.get_num());
      Scalar d = from_integer(den);
      return mul(num, inv(d));
    }
    case Kind::Rationals: return Scalar(v);
    case Kind::QuadraticField: return Scalar(Quad{v, mpq_class(0)});
  }
  return Scalar();
}

Scalar Domain::sqrt_gen() const {
  if (kind_ != Kind::QuadraticField)
    fail(Errc::InvalidDomain, "sqrt generator only exists in quadratic fields");
  return Scalar(Quad{mpq_class(0), mpq_class(1)});
}

bool Domain::is_zero(const Scalar& a) const {
  switch (kind_) {
    case Kind::PrimeField: return a.fp() == 0;
    case Kind::Rationals: return a.rat() == 0;
    case Kind::QuadraticField: return a.quad().a == 0 && a.quad().b == 0;
  }
  return false;
}

bool Domain::is_one(const Scalar& a) const { return a == one(); }

Scalar Domain::add(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::PrimeField: {
      std::uint64_t s = a.fp() + b.fp();
      if (s >= p_) s -= p_;
      return Scalar(s);
    }
    case Kind::Rationals: return Scalar(mpq_class(a.rat() + b.rat()));
    case Kind::QuadraticField:
      return Scalar(Quad{a.quad().a + b.quad().a, a.quad().b + b.quad().b});
  }
  return Scalar();
}

Scalar Domain::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Domain::neg(const Scalar& a) const {
  switch (kind_) {
    case Kind::PrimeField: return Scalar(a.fp() == 0 ? std::uint64_t{0} : p_ - a.fp());
    case Kind::Rationals: return Scalar(mpq_class(-a.rat()));
    case Kind::QuadraticField: return Scalar(Quad{-a.quad().a, -a.quad().b});
  }
  return Scalar();
}

Scalar Domain::mul(const Scalar& a, const Scalar& b) const {
  switch (kind_) {
    case Kind::PrimeField: return Scalar((a.fp() * b.fp()) % p_);
    case Kind::Rationals: return Scalar(mpq_class(a.rat() * b.rat()));
    case Kind::QuadraticField: {
      const Quad& x = a.quad();
      const Quad& y = b.quad();
      mpq_class dd(static_cast<unsigned long>(d_));
      return Scalar(Quad{x.a * y.a + dd * x.b * y.b, x.a * y.b + x.b * y.a});
    }
  }
  return Scalar();
}

Scalar Domain::inv(const Scalar& a) const {
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero");
  switch (kind_) {
    case Kind::PrimeField: return Scalar(inv_mod(a.fp(), p_));
    case Kind::Rationals: return Scalar(mpq_class(1 / a.rat()));
    case Kind::QuadraticField: {
      // (a + b*sqrt(d))^(-1) = (a - b*sqrt(d)) / (a^2 - d*b^2); the norm is
      // nonzero since d is square-free (> 1), so sqrt(d) is irrational.
      const Quad& x = a.quad();
      mpq_class nrm = quad_norm(x, d_);
      return Scalar(Quad{x.a / nrm, -x.b / nrm});
    }
  }
  return Scalar();
}

Scalar Domain::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Domain::pow(const Scalar& a, std::uint64_t e) const {
  Scalar result = one();
  Scalar base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar Domain::factorial_unit(std::uint64_t m) const {
  if (kind_ == Kind::PrimeField && m >= p_)
    fail(Errc::NotInvertible,
         std::to_string(m) + "! is not invertible in characteristic " + std::to_string(p_));
  Scalar f = one();
  for (std::uint64_t i = 2; i <= m; ++i) f = mul(f, from_int(static_cast<long>(i)));
  return inv(f);
}

std::string Domain::to_string(const Scalar& a) const {
  switch (kind_) {
    case Kind::PrimeField: return std::to_string(a.fp());
    case Kind::Rationals: return a.rat().get_str();
    case Kind::QuadraticField: {
      const Quad& x = a.quad();
      if (x.b == 0) return x.a.get_str();
      std::string s;
      if (x.a != 0) s = x.a.get_str() + (x.b > 0 ? "+" : "");
      if (x.b == 1)
        s += "t";
      else if (x.b == -1)
        s += "-t";
      else
        s += x.b.get_str() + "*t";
      return s;
    }
  }
  return "";
}

}  // namespace dpcert
