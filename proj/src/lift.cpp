#include "dpcert/lift.hpp"

#include <algorithm>

namespace dpcert {

LiftingContext::LiftingContext(std::uint64_t p_, std::uint32_t r_, std::uint64_t e_)
    : p(p_), r(r_), e(e_) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  if (r < 1) fail(Errc::InvalidBounds, "r must be >= 1");
  std::uint64_t qq = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    if (qq > (1ull << 31) / p) fail(Errc::ResourceCap, "q = p^r overflows");
    qq *= p;
  }
  if (e < 1 || e > qq - 1)
    fail(Errc::InvalidBounds,
         "e must satisfy 1 <= e <= q-1 = " + std::to_string(qq - 1) + ", got " + std::to_string(e));
}

std::uint64_t LiftingContext::q() const {
  std::uint64_t qq = 1;
  for (std::uint32_t i = 0; i < r; ++i) qq *= p;
  return qq;
}

std::uint64_t LiftingContext::half_step() const { return q() / p; }

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Obstructed: return "obstructed";
    case Verdict::Unobstructed: return "unobstructed";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
  }
  return "?";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Membership: return "membership";
    case Method::Certificate: return "certificate";
    case Method::Auto: return "auto";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view s) {
  if (s == "membership") return Method::Membership;
  if (s == "certificate") return Method::Certificate;
  if (s == "auto") return Method::Auto;
  return std::nullopt;
}

FloorHypothesisResult check_floor_hypothesis(const Polynomial& f0,
                                             const std::vector<std::uint32_t>& bounds,
                                             const LiftingContext& ctx) {
  FloorHypothesisResult res;
  std::uint64_t q = ctx.q();
  for (const auto& [m, c] : f0.terms()) {
    std::uint64_t sum = 0;
    for (std::size_t j = 0; j < bounds.size(); ++j) {
      if (bounds[j] == 0 || m[j] == 0) continue;
      sum += (q * m[j]) / bounds[j];
    }
    bool ok = sum >= ctx.e + 1;
    res.rows.push_back(FloorBreakdown{m, sum, ok});
    if (!ok) res.ok = false;
  }
  return res;
}

namespace {

// Drop every term with an exponent above `max_exp` (truncation at y^(q+1)).
Polynomial truncate_exponents(const Polynomial& f, std::uint64_t max_exp) {
  Polynomial out(f.domain(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    bool dead = false;
    for (std::size_t j = 0; j < m.nvars(); ++j)
      if (m[j] > max_exp) {
        dead = true;
        break;
      }
    if (!dead) out.add_term(m, c);
  }
  return out;
}

AlphaCertificate alpha_from_symbols(const std::array<Scalar, 3>& coeffs,
                                    const LiftingContext& ctx) {
  Domain dom = Domain::prime_field(ctx.p);
  std::uint64_t q = ctx.q();
  std::uint64_t h = ctx.half_step();

  Polynomial g(dom, 3);
  for (std::size_t i = 0; i < 3; ++i) g.add_term(Monomial::var(3, i), coeffs[i]);

  Polynomial gf = frobenius_power(g, ctx.r - 1);  // y_i^(p^(r-1)) with powered coefficients
  Polynomial w = wp(gf, ctx.p);

  Polynomial acc = Polynomial::constant(dom, 3, dom.one());
  for (std::uint64_t i = 0; i + 1 < q; ++i) acc = truncate_exponents(acc.mul(g), q);
  Polynomial prod = truncate_exponents(acc.mul(w), q);

  Scalar fact = dom.one();
  for (std::uint64_t i = 2; i < ctx.p; ++i) fact = dom.mul(fact, dom.from_int(static_cast<long>(i)));
  prod = prod.scale(fact);  // (p-1)! * f0^(q-1) * w_p(f0^(p^(r-1)))

  Monomial target(3);
  target[0] = static_cast<std::uint32_t>(q - h);
  target[1] = static_cast<std::uint32_t>(q - h);
  target[2] = static_cast<std::uint32_t>(2 * h - 1);

  AlphaCertificate cert{prod.coeff(target), target, {q - h, q - h, 2 * h - 1}, {0, 1, 2}};
  return cert;
}

}  // namespace

AlphaCertificate certificate_alpha(const LiftingContext& ctx) {
  Domain dom = Domain::prime_field(ctx.p);
  return alpha_from_symbols({dom.one(), dom.one(), dom.one()}, ctx);
}

AlphaCertificate certificate_alpha(const Polynomial& f0, const LiftingContext& ctx) {
  if (f0.term_count() != 3)
    fail(Errc::CertificateInapplicable,
         "certificate needs exactly three monomials, got " + std::to_string(f0.term_count()));
  std::vector<Monomial> mons;
  std::vector<Scalar> coeffs;
  for (const auto& [m, c] : f0.terms()) {
    if (m.total_degree() < 2)
      fail(Errc::CertificateInapplicable, "monomials must have total degree >= 2");
    mons.push_back(m);
    coeffs.push_back(c);
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!mons[i].coprime(mons[j]))
        fail(Errc::CertificateInapplicable, "monomial supports overlap");

  std::uint64_t q = ctx.q();
  std::uint64_t h = ctx.half_step();
  const std::array<std::uint64_t, 3> exps = {q - h, q - h, 2 * h - 1};

  // The labeling of the three monomials as y1, y2, y3 is free; try each
  // choice of the special low-power slot y3.
  for (std::size_t special = 0; special < 3; ++special) {
    std::array<std::size_t, 3> roles{};  // roles[k] = input index playing y_(k+1)
    std::size_t pos = 0;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != special) roles[pos++] = i;
    roles[2] = special;

    bool degree_ok = true;
    for (std::size_t k = 0; k < 3 && degree_ok; ++k) {
      const Monomial& m = mons[roles[k]];
      for (std::size_t v = 0; v < m.nvars(); ++v) {
        if (static_cast<std::uint64_t>(m[v]) * exps[k] >= q) {
          degree_ok = false;
          break;
        }
      }
    }
    if (!degree_ok) continue;

    AlphaCertificate cert = alpha_from_symbols(
        {coeffs[roles[0]], coeffs[roles[1]], coeffs[roles[2]]}, ctx);
    cert.roles = roles;
    Monomial target(f0.nvars());
    for (std::size_t k = 0; k < 3; ++k) {
      const Monomial& m = mons[roles[k]];
      for (std::size_t v = 0; v < m.nvars(); ++v)
        target[v] += static_cast<std::uint32_t>(m[v] * exps[k]);
    }
    cert.target = target;
    return cert;
  }
  fail(Errc::CertificateInapplicable,
       "no labeling keeps every variable's degree in y1^(q-h) y2^(q-h) y3^(2h-1) below q");
}

namespace {

bool same_poly_set(const Polynomial& f, const std::vector<Polynomial>& gens) {
  for (const auto& g : gens)
    if (f == g) return true;
  return false;
}

}  // namespace

ObstructionReport lift_obstruction(const LiftInput& input, const LiftingContext& ctx,
                                   Method method, std::uint64_t basis_cap) {
  ObstructionReport report(ctx);
  report.instance = input.name;
  std::uint64_t q = ctx.q();

  if (input.domain.characteristic() != ctx.p)
    fail(Errc::WrongCharacteristic, "instance domain must be F_" + std::to_string(ctx.p));
  for (auto b : input.bounds)
    if (b < 1 || b > q) {
      report.verdict = Verdict::HypothesisNotMet;
      report.floor.ok = false;
      return report;  // criterion requires 1 <= i_j <= q
    }
  if (!same_poly_set(input.f0, input.gens))
    fail(Errc::InvalidInstance, "f0 must be one of the instance generators");

  report.floor = check_floor_hypothesis(input.f0, input.bounds, ctx);
  if (!report.floor.ok) {
    report.verdict = Verdict::HypothesisNotMet;
    return report;
  }

  Method chosen = method;
  if (chosen == Method::Auto) {
    std::uint64_t size = 1;
    bool fits = true;
    for (auto b : input.bounds) {
      if (size > basis_cap / b) {
        fits = false;
        break;
      }
      size *= b;
    }
    chosen = fits ? Method::Membership : Method::Certificate;
  }
  report.method_used = chosen;

  if (chosen == Method::Certificate) {
    bool plain_frame = input.gens.size() == 1;
    bool bounds_q = std::all_of(input.bounds.begin(), input.bounds.end(),
                                [&](std::uint32_t b) { return b == q; });
    if (!plain_frame || !bounds_q)
      fail(Errc::CertificateInapplicable,
           "certificate route needs bounds all q and a single generator f0");
    AlphaCertificate cert = certificate_alpha(input.f0, ctx);
    // Soundness: the witness monomial must survive modulo (x^q).
    for (std::size_t v = 0; v < cert.target.nvars(); ++v)
      if (cert.target[v] >= q)
        fail(Errc::CertificateInapplicable, "target monomial dies modulo the pure powers");
    bool zero = input.domain.is_zero(cert.alpha);
    report.alpha = std::move(cert);
    report.verdict = zero ? Verdict::Unobstructed : Verdict::Obstructed;
    return report;
  }

  FramePtr frame = QuotientFrame::build(input.domain, input.nvars, input.bounds, input.gens,
                                        basis_cap);
  Polynomial powered = frobenius_power(input.f0, ctx.r - 1);
  Polynomial w = wp(powered, ctx.p);
  MembershipCertificate cert = frame->is_member(w);
  report.verdict = cert.member ? Verdict::Unobstructed : Verdict::Obstructed;
  report.membership = std::move(cert);
  return report;
}

ObstructionReport lift_obstruction(const Polynomial& f0, const QuotientFrame& frame,
                                   const LiftingContext& ctx, Method method,
                                   std::uint64_t basis_cap) {
  LiftInput input;
  input.domain = frame.domain();
  input.nvars = frame.nvars();
  input.bounds = frame.bounds();
  input.gens = frame.generators();
  input.f0 = frame.reduce_pure_powers(f0);
  return lift_obstruction(input, ctx, method, basis_cap);
}

}  // namespace dpcert
