#include "dpcert/families.hpp"

#include "dpcert/divpow.hpp"
#include "dpcert/parse.hpp"

namespace dpcert {

const char* family_name(Family f) {
  switch (f) {
    case Family::HypersurfaceQ: return "hypersurface-q";
    case Family::Quadratic: return "quadratic";
    case Family::DirectSystem: return "direct-system";
    case Family::GorensteinWitness: return "gorenstein-witness";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
  if (s == "hypersurface-q") return Family::HypersurfaceQ;
  if (s == "quadratic") return Family::Quadratic;
  if (s == "direct-system") return Family::DirectSystem;
  if (s == "gorenstein-witness") return Family::GorensteinWitness;
  return std::nullopt;
}

namespace {

// x_{lo} * x_{lo+1} * ... * x_{hi-1} (0-based, half-open)
Monomial var_product(std::size_t n, std::size_t lo, std::size_t hi) {
  Monomial m(n);
  for (std::size_t j = lo; j < hi; ++j) m[j] = 1;
  return m;
}

Instance hypersurface_instance(std::uint64_t p, std::uint32_t r) {
  LiftingContext ctx(p, r, 1);  // placeholder e; replaced below
  std::uint64_t q = ctx.q();
  Domain dom = Domain::prime_field(p);
  std::size_t n = static_cast<std::size_t>(3 * q);

  Instance inst;
  inst.name = "hypersurface-q" + std::to_string(q);
  inst.domain = dom;
  inst.nvars = n;
  inst.bounds.assign(n, static_cast<std::uint32_t>(q));
  Polynomial f0(dom, n);
  for (std::size_t block = 0; block < 3; ++block)
    f0.add_term(var_product(n, block * q, (block + 1) * q), dom.one());
  inst.gens.push_back(std::move(f0));
  inst.context = LiftingContext(p, r, q - 1);
  inst.notes.push_back("product-triple hypersurface, q = " + std::to_string(q) +
                       ", not liftable once m_R^q = 0 and pR != 0");
  return inst;
}

}  // namespace

Instance gen_family(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::HypersurfaceQ:
      return hypersurface_instance(params.p, params.r);

    case Family::Quadratic: {
      std::uint64_t p = params.p;
      if (p < 3) fail(Errc::InvalidInstance, "quadratic family needs p >= 3");
      Domain dom = Domain::prime_field(p);
      std::size_t w = static_cast<std::size_t>(p - 1);
      std::size_t n = 6 * w;
      auto var = [&](std::size_t block, std::size_t i) { return block * w + i; };
      Polynomial g(dom, n);
      for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
          for (std::size_t pair = 0; pair < 3; ++pair) {
            Monomial m(n);
            m[var(2 * pair, i)] = 1;
            m[var(2 * pair + 1, j)] = 1;
            g.add_term(m, dom.one());
          }
        }
      }
      Instance inst;
      inst.name = "quadratic-p" + std::to_string(p);
      inst.domain = dom;
      inst.nvars = n;
      inst.bounds.assign(n, 2);
      inst.gens.push_back(std::move(g));
      inst.context = LiftingContext(p, 1, p - 2);
      inst.notes.push_back("quadratic equations in 6(p-1) square-zero variables; not liftable "
                           "once m_R^(p-1) = 0 and pR != 0");
      return inst;
    }

    case Family::DirectSystem: {
      std::uint32_t stage = params.index;
      if (stage == 0) fail(Errc::DegenerateIndex, "stage 0 is the point Spec k");
      std::uint64_t p = params.p;
      Domain dom = Domain::prime_field(p);

      std::size_t n = 0;
      std::uint64_t pk = 1;
      std::vector<std::uint32_t> bounds;
      for (std::uint32_t k = 0; k < stage; ++k) {
        for (std::uint64_t i = 0; i < 3 * pk; ++i)
          bounds.push_back(static_cast<std::uint32_t>(pk));
        n += static_cast<std::size_t>(3 * pk);
        if (k + 1 < stage) pk *= p;
      }

      Polynomial f(dom, n);
      std::size_t offset = 0;
      pk = 1;
      for (std::uint32_t k = 0; k < stage; ++k) {
        for (std::size_t block = 0; block < 3; ++block)
          f.add_term(var_product(n, offset + block * pk, offset + (block + 1) * pk), dom.one());
        offset += static_cast<std::size_t>(3 * pk);
        pk *= p;
      }

      Instance inst;
      inst.name = "direct-system-n" + std::to_string(stage);
      inst.domain = dom;
      inst.nvars = n;
      inst.bounds = std::move(bounds);
      inst.gens.push_back(std::move(f));
      if (stage >= 2) {
        std::uint64_t q = 1;
        for (std::uint32_t k = 0; k + 1 < stage; ++k) q *= p;
        inst.context = LiftingContext(p, stage - 1, q - 1);
      }
      inst.notes.push_back("stage " + std::to_string(stage) +
                           " of the direct system; the newest block carries the product-triple "
                           "generator at q = p^" + std::to_string(stage - 1));
      return inst;
    }

    case Family::GorensteinWitness: {
      Instance hyper = hypersurface_instance(params.p, params.r);
      FramePtr b0 = QuotientFrame::build(hyper.domain, hyper.nvars, hyper.bounds, {});
      LinkageResult lk = link(*b0, hyper.gens.front());

      Instance inst;
      inst.name = "gorenstein-witness-q" + std::to_string(LiftingContext(params.p, params.r, 1).q());
      inst.domain = hyper.domain;
      inst.nvars = hyper.nvars;
      inst.bounds = hyper.bounds;
      inst.gens = lk.annihilator_gens;
      inst.context = hyper.context;
      inst.notes.push_back("linked algebra B0/(0:f0) of " + hyper.name + "; dim = " +
                           std::to_string(lk.dim_linked) + ", Gorenstein = " +
                           (lk.gorenstein ? "yes" : "no") +
                           "; a lift of this algebra would lift " + hyper.name);
      return inst;
    }
  }
  fail(Errc::InvalidInstance, "unknown family");
}

namespace {

std::vector<Polynomial> koblitz_generators(const Domain& dom, bool char_zero) {
  // t specializes to 0 over F_2 and to sqrt(2) over Q(sqrt 2).
  std::vector<std::string> texts;
  if (char_zero)
    texts = {"x1^2 + t*x4*x5*x6", "x2^2 + t*x3", "x3^2", "x4^2",
             "x5^2",              "x6^2",        "x1*x2 + x3*x4 + x5*x6"};
  else
    texts = {"x1^2", "x2^2", "x3^2", "x4^2", "x5^2", "x6^2", "x1*x2 + x3*x4 + x5*x6"};
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(parse_poly(t, 6, dom));
  return gens;
}

}  // namespace

Instance koblitz_instance() {
  Instance inst;
  inst.name = "koblitz";
  inst.domain = Domain::prime_field(2);
  inst.nvars = 6;
  inst.bounds.assign(6, 2);
  inst.gens.push_back(parse_poly("x1*x2 + x3*x4 + x5*x6", 6, inst.domain));
  inst.context = LiftingContext(2, 1, 1);
  inst.notes.push_back("length-36 algebra with square-zero variables and one quadric; no divided "
                       "powers, no lift once p m_R = 0 and m_R^2 = 0");
  return inst;
}

Instance koblitz_char0_instance() {
  Instance inst;
  inst.name = "koblitz-char0";
  inst.domain = Domain::quadratic_field(2);
  inst.nvars = 6;
  inst.bounds.assign(6, 0);  // the ideal is not framed; Groebner routes only
  inst.gens = koblitz_generators(inst.domain, true);
  inst.order = MonomialOrder::Degrevlex;
  inst.notes.push_back("characteristic-zero fiber over Q(sqrt 2) of the deformed ideal; "
                       "quotient length must match the F_2 fiber");
  return inst;
}

KoblitzReport verify_koblitz() {
  KoblitzReport report;

  Instance kob = koblitz_instance();
  FramePtr frame = frame_of(kob);
  report.dp_absent = !dp_exists(*frame).exists;

  ObstructionReport ob = lift_obstruction(lift_input_of(kob), *kob.context, Method::Membership);
  report.obstruction = ob.verdict;

  Domain f2 = Domain::prime_field(2);
  std::vector<Polynomial> gens2 = koblitz_generators(f2, false);
  auto len2d = quotient_length(buchberger(gens2, MonomialOrder::Degrevlex));
  auto len2l = quotient_length(buchberger(gens2, MonomialOrder::Lex));
  report.len_char2_degrevlex = len2d.value_or(0);
  report.len_char2_lex = len2l.value_or(0);

  Domain q2 = Domain::quadratic_field(2);
  std::vector<Polynomial> gens0 = koblitz_generators(q2, true);
  auto len0d = quotient_length(buchberger(gens0, MonomialOrder::Degrevlex));
  auto len0l = quotient_length(buchberger(gens0, MonomialOrder::Lex));
  report.len_char0_degrevlex = len0d.value_or(0);
  report.len_char0_lex = len0l.value_or(0);

  report.pass = report.dp_absent && report.obstruction == Verdict::Obstructed &&
                report.len_char2_degrevlex == 36 && report.len_char2_lex == 36 &&
                report.len_char0_degrevlex == 36 && report.len_char0_lex == 36;
  return report;
}

}  // namespace dpcert
