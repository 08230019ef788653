#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcert/arith.hpp"
#include "helpers.hpp"

using namespace dpcert;
using dpcert::test::Rng;

namespace {

Scalar quad(const Domain& d, long a, long b) {
  return d.add(d.from_int(a), d.mul(d.from_int(b), d.sqrt_gen()));
}

}  // namespace

TEST_CASE("modular inverse agrees with the Fermat oracle") {
  for (std::uint64_t p : {5ull, 7ull, 101ull, 65537ull}) {
    Domain F = Domain::prime_field(p);
    Rng rng(p);
    for (int i = 0; i < 50; ++i) {
      std::uint64_t a = 1 + rng.below(p - 1);
      Scalar inv = F.inv(Scalar(a));
      // independent route: a^(p-2) by binary powering
      Scalar fermat = F.pow(Scalar(a), p - 2);
      CHECK(inv == fermat);
      CHECK(F.is_one(F.mul(Scalar(a), inv)));
    }
  }
  CHECK(Domain::prime_field(5).inv(Scalar(std::uint64_t{2})) == Scalar(std::uint64_t{3}));
}

TEST_CASE("inverse of one is one in every domain") {
  for (Domain d : {Domain::prime_field(7), Domain::rationals(), Domain::quadratic_field(2)}) {
    CHECK(d.inv(d.one()) == d.one());
  }
}

TEST_CASE("quadratic inverse via the conjugate") {
  Domain d = Domain::quadratic_field(2);
  Scalar x = quad(d, 1, 1);                 // 1 + sqrt(2)
  Scalar expected = quad(d, -1, 1);         // -1 + sqrt(2)
  CHECK(d.inv(x) == expected);
  CHECK(d.is_one(d.mul(x, d.inv(x))));
}

TEST_CASE("inverting zero raises DivisionByZero") {
  for (Domain d : {Domain::prime_field(3), Domain::rationals(), Domain::quadratic_field(5)}) {
    CHECK_THROWS_WITH_AS(d.inv(d.zero()), doctest::Contains("DivisionByZero"), Error);
  }
}

TEST_CASE("factorial units") {
  Domain f5 = Domain::prime_field(5);
  CHECK(f5.factorial_unit(2) == Scalar(std::uint64_t{3}));  // 2! = 2, 1/2 = 3 mod 5
  for (Domain d : {Domain::prime_field(7), Domain::rationals(), Domain::quadratic_field(3)})
    CHECK(d.factorial_unit(0) == d.one());
  CHECK(Domain::rationals().factorial_unit(3) == Scalar(mpq_class(1, 6)));
  CHECK_THROWS_AS(f5.factorial_unit(5), Error);
  CHECK_THROWS_AS(Domain::prime_field(3).factorial_unit(7), Error);
}

TEST_CASE("field axioms hold exactly on random triples") {
  for (Domain d : {Domain::prime_field(7), Domain::rationals(), Domain::quadratic_field(2)}) {
    Rng rng(99);
    auto rand_scalar = [&]() {
      if (d.kind() == Domain::Kind::QuadraticField)
        return quad(d, static_cast<long>(rng.below(19)) - 9, static_cast<long>(rng.below(19)) - 9);
      return d.from_rational(mpq_class(static_cast<long>(rng.below(19)) - 9,
                                       1 + static_cast<long>(rng.below(7))));
    };
    for (int i = 0; i < 100; ++i) {
      Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
      CHECK(d.add(d.add(a, b), c) == d.add(a, d.add(b, c)));
      CHECK(d.mul(d.mul(a, b), c) == d.mul(a, d.mul(b, c)));
      CHECK(d.add(a, b) == d.add(b, a));
      CHECK(d.mul(a, b) == d.mul(b, a));
      CHECK(d.mul(a, d.add(b, c)) == d.add(d.mul(a, b), d.mul(a, c)));
      CHECK(d.is_zero(d.sub(a, a)));
      if (!d.is_zero(a)) CHECK(d.is_one(d.mul(a, d.inv(a))));
    }
  }
}

TEST_CASE("quadratic arithmetic restricted to b = 0 matches the rationals") {
  Domain q = Domain::rationals();
  Domain qs = Domain::quadratic_field(2);
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    mpq_class a(static_cast<long>(rng.below(41)) - 20, 1 + static_cast<long>(rng.below(9)));
    mpq_class b(static_cast<long>(rng.below(41)) - 20, 1 + static_cast<long>(rng.below(9)));
    a.canonicalize();
    b.canonicalize();
    Scalar qa = q.from_rational(a), qb = q.from_rational(b);
    Scalar sa = qs.from_rational(a), sb = qs.from_rational(b);
    CHECK(qs.add(sa, sb).quad().a == q.add(qa, qb).rat());
    CHECK(qs.mul(sa, sb).quad().a == q.mul(qa, qb).rat());
    CHECK(qs.mul(sa, sb).quad().b == 0);
    if (b != 0) CHECK(qs.div(sa, sb).quad().a == q.div(qa, qb).rat());
  }
}

TEST_CASE("Fermat: a^p = a in F_p") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 31ull}) {
    Domain F = Domain::prime_field(p);
    Rng rng(p + 1);
    for (int i = 0; i < 50; ++i) {
      Scalar a(rng.below(p));
      CHECK(F.pow(a, p) == a);
    }
  }
}

TEST_CASE("domain specs") {
  CHECK(Domain::parse_spec("fp:7") == Domain::prime_field(7));
  CHECK(Domain::parse_spec("q") == Domain::rationals());
  CHECK(Domain::parse_spec("qsqrt:2") == Domain::quadratic_field(2));
  CHECK(Domain::prime_field(13).spec() == "fp:13");
  CHECK(Domain::quadratic_field(5).spec() == "qsqrt:5");
  CHECK_THROWS_AS(Domain::parse_spec("fp:4"), Error);      // not prime
  CHECK_THROWS_AS(Domain::parse_spec("qsqrt:4"), Error);   // not square-free
  CHECK_THROWS_AS(Domain::parse_spec("qsqrt:1"), Error);
  CHECK_THROWS_AS(Domain::parse_spec("zz"), Error);
}

TEST_CASE("rational literals in positive characteristic") {
  Domain f5 = Domain::prime_field(5);
  CHECK(f5.from_rational(mpq_class(1, 2)) == Scalar(std::uint64_t{3}));
  CHECK_THROWS_WITH_AS(f5.from_rational(mpq_class(1, 5)), doctest::Contains("NotInvertible"),
                       Error);
  CHECK_THROWS_AS(f5.from_rational(mpq_class(3, 10)), Error);
}

TEST_CASE("characteristic bookkeeping") {
  CHECK(Domain::prime_field(7).characteristic() == 7);
  CHECK(Domain::rationals().characteristic() == 0);
  CHECK(Domain::quadratic_field(3).characteristic() == 0);
}
