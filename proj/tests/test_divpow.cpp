#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpcert/combinat.hpp"
#include "dpcert/divpow.hpp"
#include "helpers.hpp"

using namespace dpcert;
using dpcert::test::P;
using dpcert::test::Rng;

namespace {

FramePtr ci_frame(std::uint64_t p, std::vector<std::uint32_t> bounds) {
  return QuotientFrame::build(Domain::prime_field(p), bounds.size(), std::move(bounds), {});
}

FramePtr koblitz_frame() {
  Domain f2 = Domain::prime_field(2);
  return QuotientFrame::build(f2, 6, std::vector<std::uint32_t>(6, 2),
                              {P("x1*x2 + x3*x4 + x5*x6", 6, f2)});
}

// Concatenates two frames over the same field: variables side by side,
// generators lifted through the inclusion of each block.
FramePtr join_frames(const QuotientFrame& a, const QuotientFrame& b) {
  std::size_t n = a.nvars() + b.nvars();
  std::vector<std::uint32_t> bounds = a.bounds();
  bounds.insert(bounds.end(), b.bounds().begin(), b.bounds().end());
  auto lift = [&](const Polynomial& f, std::size_t offset) {
    Polynomial out(a.domain(), n);
    for (const auto& [m, c] : f.terms()) {
      Monomial big(n);
      for (std::size_t j = 0; j < m.nvars(); ++j) big[offset + j] = m[j];
      out.add_term(big, c);
    }
    return out;
  };
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(lift(g, 0));
  for (const auto& g : b.generators()) gens.push_back(lift(g, a.nvars()));
  return QuotientFrame::build(a.domain(), n, bounds, gens);
}

}  // namespace

TEST_CASE("canonical structures and delta on generators") {
  FramePtr fx3 = ci_frame(3, {3});
  DPStructure dp = DPStructure::canonical(fx3);
  CHECK(dp.delta(P("x1", 1, fx3->domain())).is_zero());

  Domain f2 = Domain::prime_field(2);
  FramePtr two = ci_frame(2, {2, 2});
  DPStructure shifted =
      DPStructure::canonical(two, {P("x2", 2, f2), Polynomial::zero(f2, 2)});
  CHECK(shifted.delta(P("x1", 2, f2)) == P("x2", 2, f2));
  AxiomReport rep = check_delta_axioms(shifted, 200, 42);
  CHECK(rep.ok);

  CHECK_THROWS_WITH_AS(DPStructure::canonical(ci_frame(3, {4})),
                       doctest::Contains("BoundExceedsP"), Error);
  CHECK_THROWS_WITH_AS(
      DPStructure::canonical(two, {P("1", 2, f2), Polynomial::zero(f2, 2)}),
      doctest::Contains("InvalidAssignment"), Error);
}

TEST_CASE("delta: worked examples") {
  FramePtr b0 = ci_frame(2, {2, 2, 2, 2, 2, 2});
  Domain f2 = b0->domain();
  DPStructure dp = DPStructure::canonical(b0);
  CHECK(dp.delta(P("x1*x2 + x3*x4 + x5*x6", 6, f2)) ==
        P("x1*x2*x3*x4 + x1*x2*x5*x6 + x3*x4*x5*x6", 6, f2));
  CHECK(dp.delta(P("x1*x2", 6, f2)).is_zero());

  CHECK_THROWS_WITH_AS(dp.delta(P("1 + x1", 6, f2)), doctest::Contains("NotInIdeal"), Error);
}

TEST_CASE("axiom sweep: canonical structures pass for p in {2,3,5}") {
  CHECK(check_delta_axioms(DPStructure::canonical(ci_frame(2, {2, 2, 2, 2})), 200, 7).ok);
  CHECK(check_delta_axioms(DPStructure::canonical(ci_frame(3, {3, 3})), 200, 7).ok);
  CHECK(check_delta_axioms(DPStructure::canonical(ci_frame(5, {5, 5})), 120, 7).ok);
}

TEST_CASE("axiom sweep: arbitrary valid assignments pass (torsor)") {
  Rng rng(2718);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    FramePtr frame = ci_frame(p, {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p)});
    const Domain& dom = frame->domain();
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Polynomial> ys;
      for (std::size_t j = 0; j < 2; ++j) {
        Polynomial y(dom, 2);
        for (int t = 0; t < 3; ++t) {
          Monomial m = frame->monomial_at(1 + rng.below(frame->basis_size() - 1));
          y.add_term(m, dom.from_int(static_cast<long>(1 + rng.below(p - 1))));
        }
        ys.push_back(y);
      }
      DPStructure dp = DPStructure::canonical(frame, ys);
      CHECK(check_delta_axioms(dp, 80, 1000 + trial).ok);
    }
  }
}

TEST_CASE("axiom sweep: a constant-shifted assignment fails with a witness") {
  Domain f2 = Domain::prime_field(2);
  FramePtr two = ci_frame(2, {2, 2});
  DPStructure bad = DPStructure::unchecked(
      two, {P("1 + x1", 2, f2), Polynomial::zero(f2, 2)});
  AxiomReport rep = check_delta_axioms(bad, 200, 42);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failure.empty());
  CHECK(rep.seed == 42);
}

TEST_CASE("the difference of two structures is additive, p-linear, zero on m^2") {
  Rng rng(11);
  for (std::uint64_t p : {2ull, 3ull}) {
    FramePtr frame = ci_frame(p, {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(p),
                                  static_cast<std::uint32_t>(p)});
    const Domain& dom = frame->domain();
    std::vector<Polynomial> ys;
    for (std::size_t j = 0; j < 3; ++j)
      ys.push_back(frame->normal_form(
          P("x1*x2", 3, dom).scale(dom.from_int(static_cast<long>(1 + rng.below(p - 1))))));
    DPStructure base = DPStructure::canonical(frame);
    DPStructure moved = DPStructure::canonical(frame, ys);
    auto tau = [&](const Polynomial& f) {
      return frame->normal_form(moved.delta(f, 64).sub(base.delta(f, 64)));
    };
    for (int i = 0; i < 40; ++i) {
      Polynomial x(dom, 3), y(dom, 3);
      for (int t = 0; t < 2; ++t) {
        x.add_term(frame->monomial_at(1 + rng.below(frame->basis_size() - 1)), dom.one());
        y.add_term(frame->monomial_at(1 + rng.below(frame->basis_size() - 1)), dom.one());
      }
      x = frame->normal_form(x);
      y = frame->normal_form(y);
      // additive
      CHECK(tau(frame->normal_form(x.add(y))) == frame->normal_form(tau(x).add(tau(y))));
      // p-homogeneous on scalars
      Scalar c = dom.from_int(static_cast<long>(1 + rng.below(p - 1)));
      CHECK(tau(x.scale(c)) == tau(x).scale(dom.pow(c, p)));
      // vanishes on the square of the augmentation ideal
      CHECK(tau(frame->normal_form(x.mul(y))).is_zero());
    }
  }
}

TEST_CASE("dp_exists: positive and negative instances") {
  DpExistenceReport kob = dp_exists(*koblitz_frame());
  CHECK_FALSE(kob.exists);
  CHECK_FALSE(kob.remainder.is_zero());

  Domain f3 = Domain::prime_field(3);
  FramePtr gen3 = QuotientFrame::build(f3, 5, std::vector<std::uint32_t>(5, 3),
                                       {P("x1^2 + x2*x3 + x4*x5", 5, f3)});
  CHECK_FALSE(dp_exists(*gen3).exists);

  Domain f2 = Domain::prime_field(2);
  FramePtr mono = QuotientFrame::build(f2, 2, {2, 2}, {P("x1*x2", 2, f2)});
  CHECK(dp_exists(*mono).exists);

  // and the canonical structure on such a frame passes the sweep
  CHECK(check_delta_axioms(DPStructure::canonical(mono), 150, 3).ok);
  FramePtr pair4 = QuotientFrame::build(f2, 4, {2, 2, 2, 2}, {P("x1*x2 + x3*x4", 4, f2)});
  CHECK(dp_exists(*pair4).exists);
  CHECK(check_delta_axioms(DPStructure::canonical(pair4), 150, 3).ok);

  FramePtr linear = QuotientFrame::build(f2, 2, {2, 2}, {P("x1 + x1*x2", 2, f2)});
  CHECK_THROWS_WITH_AS(dp_exists(*linear), doctest::Contains("NotInSquareOfMaximalIdeal"), Error);

  FramePtr wide = QuotientFrame::build(f3, 1, {4}, {});
  CHECK_THROWS_WITH_AS(dp_exists(*wide), doctest::Contains("BoundExceedsP"), Error);
}

TEST_CASE("an obstructed frame defeats every assignment") {
  FramePtr kob = koblitz_frame();
  const Domain& dom = kob->domain();
  auto witness = assignment_free_defect(*kob);
  REQUIRE(witness.has_value());
  auto [a_mon, x_mon] = *witness;
  Polynomial a = Polynomial::term(dom, 6, a_mon, dom.one());
  Polynomial x = Polynomial::term(dom, 6, x_mon, dom.one());

  // a^p = 0 in the frame, so the axiom-2 right side vanishes for every
  // assignment, while the left side is a fixed nonzero value.
  CHECK(kob->normal_form(a.pow(2)).is_zero());
  Rng rng(13);
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<Polynomial> ys;
    for (std::size_t j = 0; j < 6; ++j) {
      Polynomial y(dom, 6);
      std::size_t terms = rng.below(3);
      for (std::size_t t = 0; t < terms; ++t)
        y.add_term(kob->monomial_at(1 + rng.below(kob->basis_size() - 1)), dom.one());
      ys.push_back(kob->normal_form(y));
    }
    DPStructure dp = DPStructure::unchecked(kob, ys);
    Polynomial lhs = dp.delta(kob->normal_form(a.mul(x)), 64);
    Polynomial rhs = kob->normal_form(a.pow(2).mul(dp.delta(x, 64)));
    CHECK(lhs != rhs);
    CHECK(rhs.is_zero());
  }

  // a frame that admits a structure has no such witness
  Domain f2 = Domain::prime_field(2);
  FramePtr mono = QuotientFrame::build(f2, 2, {2, 2}, {P("x1*x2", 2, f2)});
  CHECK_FALSE(assignment_free_defect(*mono).has_value());
}

TEST_CASE("homomorphism checks: the symmetric-power example at p = 3") {
  Domain f3 = Domain::prime_field(3);
  FramePtr a = ci_frame(3, {3});
  FramePtr b = ci_frame(3, {2, 2});
  DPStructure dpa = DPStructure::canonical(a);
  DPStructure dpb = DPStructure::canonical(b);
  HomReport rep = check_dp_hom({P("x1 + x2", 2, f3)}, dpa, dpb);
  CHECK(rep.dp_compatible);
}

TEST_CASE("homomorphism checks: identity and a mismatch") {
  Domain f2 = Domain::prime_field(2);
  FramePtr one = ci_frame(2, {2});
  FramePtr two = ci_frame(2, {2, 2});

  DPStructure src = DPStructure::canonical(one);
  std::vector<Polynomial> ident = {P("x1", 1, f2)};
  CHECK(check_dp_hom(ident, src, src).dp_compatible);

  // target gamma_p(y1) = y2 while the source insists on 0
  DPStructure dst =
      DPStructure::canonical(two, {P("x2", 2, f2), Polynomial::zero(f2, 2)});
  HomReport rep = check_dp_hom({P("x1", 2, f2)}, src, dst);
  CHECK_FALSE(rep.dp_compatible);
  CHECK(rep.detail.find("x1") != std::string::npos);

  // ill-defined map: the source relation x1*x2 does not die
  FramePtr rel = QuotientFrame::build(f2, 2, {2, 2}, {P("x1*x2", 2, f2)});
  DPStructure src_rel = DPStructure::canonical(rel);
  CHECK_THROWS_WITH_AS(
      check_dp_hom({P("x1", 2, f2), P("x2", 2, f2)}, src_rel,
                   DPStructure::canonical(ci_frame(2, {2, 2}))),
      doctest::Contains("NotAHomomorphism"), Error);
}

TEST_CASE("symmetric-power embedding") {
  SymEmbedResult r3 = sym_embed(3, {3});
  CHECK(r3.images.size() == 1);
  CHECK(r3.images[0] == P("x1 + x2", 2, r3.target->domain()));
  CHECK(r3.injective);
  CHECK(r3.delta_zero);

  SymEmbedResult r2 = sym_embed(2, {2, 2});
  CHECK(r2.target->nvars() == 2);  // a variable renaming
  CHECK(r2.injective);
  CHECK(r2.delta_zero);

  SymEmbedResult r5 = sym_embed(5, {3, 4});
  CHECK(r5.target->nvars() == 5);
  CHECK(r5.injective);
  CHECK(r5.delta_zero);
  // truncation: (y1+y2)^3 = 0 once only two square-zero variables are involved
  CHECK(r5.target->normal_form(r5.images[0].pow(3)).is_zero());
  CHECK_FALSE(r5.target->normal_form(r5.images[0].pow(2)).is_zero());

  CHECK_THROWS_WITH_AS(sym_embed(3, {4}), doctest::Contains("InvalidBounds"), Error);
  CHECK_THROWS_WITH_AS(sym_embed(3, {1}), doctest::Contains("InvalidBounds"), Error);
}

TEST_CASE("truncated divided power algebra: product rule") {
  TruncatedDPAlgebra alg2(2, {5});
  auto x1 = alg2.sym(0, 1);
  auto x2 = alg2.sym(0, 2);
  CHECK(alg2.mul(x1, x1) == alg2.sym(0, 2).scale(alg2.domain().from_int(2)));  // = 0 in char 2
  CHECK(alg2.mul(x1, x1).is_zero());
  CHECK(alg2.mul(x2, x2).is_zero());  // binom(4,2) = 6 = 0 in F_2
  CHECK(alg2.mul(alg2.one(), x2) == x2);

  TruncatedDPAlgebra alg3(3, {9});
  CHECK(alg3.mul(alg3.sym(0, 1), alg3.sym(0, 1)) ==
        alg3.sym(0, 2).scale(alg3.domain().from_int(2)));

  // cap overflow maps to zero
  CHECK(alg3.mul(alg3.sym(0, 5), alg3.sym(0, 4)).is_zero());

  // random agreement with the bignum binomial oracle
  Rng rng(77);
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    TruncatedDPAlgebra alg(p, {12, 12});
    for (int i = 0; i < 40; ++i) {
      std::uint32_t m1 = static_cast<std::uint32_t>(rng.below(12));
      std::uint32_t m2 = static_cast<std::uint32_t>(rng.below(12));
      std::uint32_t k1 = static_cast<std::uint32_t>(rng.below(12));
      std::uint32_t k2 = static_cast<std::uint32_t>(rng.below(12));
      auto prod = alg.mul(alg.mul(alg.sym(0, m1), alg.sym(1, m2)),
                          alg.mul(alg.sym(0, k1), alg.sym(1, k2)));
      if (m1 + k1 >= 12 || m2 + k2 >= 12) {
        CHECK(prod.is_zero());
        continue;
      }
      mpz_class expected = binom_exact(m1 + k1, m1) * binom_exact(m2 + k2, m2);
      std::uint64_t emod = mpz_fdiv_ui(expected.get_mpz_t(), static_cast<unsigned long>(p));
      Monomial target(2);
      target[0] = m1 + k1;
      target[1] = m2 + k2;
      CHECK(prod.coeff(target) == Scalar(emod));
    }
  }
}

TEST_CASE("the map sym^[m] -> x^m/m! into the framed quotient is a ring map") {
  Rng rng(101);
  for (std::uint64_t p : {3ull, 5ull}) {
    std::vector<std::uint32_t> caps = {static_cast<std::uint32_t>(p),
                                       static_cast<std::uint32_t>(p)};
    TruncatedDPAlgebra alg(p, caps);
    FramePtr frame = ci_frame(p, caps);
    auto rand_elem = [&]() {
      TruncatedDPAlgebra::Element e = alg.zero();
      for (int t = 0; t < 3; ++t) {
        Monomial m(2);
        m[0] = static_cast<std::uint32_t>(rng.below(p));
        m[1] = static_cast<std::uint32_t>(rng.below(p));
        e.add_term(m, alg.domain().from_int(static_cast<long>(1 + rng.below(p - 1))));
      }
      return e;
    };
    for (int i = 0; i < 30; ++i) {
      auto a = rand_elem();
      auto b = rand_elem();
      Polynomial lhs = alg.to_quotient(alg.mul(a, b), *frame);
      Polynomial rhs = frame->normal_form(alg.to_quotient(a, *frame).mul(alg.to_quotient(b, *frame)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("product frames: a structure upstairs restricts to the factors") {
  Domain f2 = Domain::prime_field(2);
  FramePtr good1 = QuotientFrame::build(f2, 2, {2, 2}, {P("x1*x2", 2, f2)});
  FramePtr good2 = QuotientFrame::build(f2, 4, {2, 2, 2, 2}, {P("x1*x2 + x3*x4", 4, f2)});
  FramePtr joined = join_frames(*good1, *good2);
  CHECK(dp_exists(*joined).exists);
  CHECK(dp_exists(*good1).exists);
  CHECK(dp_exists(*good2).exists);

  // contrapositive: joining the obstructed quadric keeps the join obstructed
  FramePtr bad_join = join_frames(*koblitz_frame(), *good1);
  CHECK_FALSE(dp_exists(*bad_join).exists);
}
