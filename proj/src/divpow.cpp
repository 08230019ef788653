#include "dpcert/divpow.hpp"

#include <algorithm>

#include "dpcert/combinat.hpp"

namespace dpcert {

namespace {

void require_char_p_small_bounds(const QuotientFrame& frame) {
  std::uint64_t p = frame.domain().characteristic();
  if (p == 0)
    fail(Errc::WrongCharacteristic, "divided power structures need characteristic p > 0");
  for (auto b : frame.bounds())
    if (b > p)
      fail(Errc::BoundExceedsP, "frame bound " + std::to_string(b) + " exceeds p = " +
                                    std::to_string(p));
}

}  // namespace

DPStructure DPStructure::canonical(FramePtr frame, std::vector<Polynomial> assignments) {
  require_char_p_small_bounds(*frame);
  std::size_t n = frame->nvars();
  if (assignments.empty())
    assignments.assign(n, Polynomial::zero(frame->domain(), n));
  if (assignments.size() != n)
    fail(Errc::InvalidAssignment, "need one gamma_p value per frame variable");
  for (auto& y : assignments) {
    y = frame->normal_form(y);
    if (!frame->domain().is_zero(y.constant_coeff()))
      fail(Errc::InvalidAssignment, "gamma_p(x_j) = " + y.to_string() +
                                        " lies outside the augmentation ideal");
  }
  return DPStructure(std::move(frame), std::move(assignments));
}

DPStructure DPStructure::unchecked(FramePtr frame, std::vector<Polynomial> assignments) {
  return DPStructure(std::move(frame), std::move(assignments));
}

Polynomial DPStructure::delta(const Polynomial& f, std::size_t wp_term_cap) const {
  const Domain& dom = frame_->domain();
  Polynomial g = frame_->normal_form(f);
  if (!dom.is_zero(g.constant_coeff()))
    fail(Errc::NotInIdeal, "delta of an element with constant term " +
                               dom.to_string(g.constant_coeff()));
  std::uint64_t p = dom.characteristic();
  Polynomial out(dom, frame_->nvars());
  for (const auto& [m, c] : g.terms()) {
    if (m.total_degree() != 1) continue;
    for (std::size_t j = 0; j < frame_->nvars(); ++j) {
      if (m[j] == 1) {
        out = out.add(gamma_[j].scale(dom.pow(c, p)));
        break;
      }
    }
  }
  out = out.add(wp(g, p, wp_term_cap));
  return frame_->normal_form(out);
}

namespace {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

// Random sparse algebra element with at most `max_terms` monomials of
// degree >= min_degree, nonzero coefficients.
Polynomial random_element(const QuotientFrame& frame, SplitMix64& rng, std::size_t max_terms,
                          std::uint64_t min_degree) {
  const Domain& dom = frame.domain();
  std::uint64_t p = dom.characteristic();
  Polynomial out(dom, frame.nvars());
  std::size_t want = 1 + rng.below(max_terms);
  for (std::size_t t = 0; t < want; ++t) {
    Monomial m = frame.monomial_at(rng.below(frame.basis_size()));
    if (m.total_degree() < min_degree) continue;
    out.add_term(m, dom.from_int(static_cast<long>(1 + rng.below(p - 1 == 0 ? 1 : p - 1))));
  }
  return frame.normal_form(out);
}

}  // namespace

AxiomReport check_delta_axioms(const DPStructure& dp, std::size_t sample_count,
                               std::uint64_t seed) {
  const QuotientFrame& frame = *dp.frame();
  const Domain& dom = frame.domain();
  std::uint64_t p = dp.p();
  AxiomReport report;
  report.seed = seed;
  report.samples = sample_count;
  SplitMix64 rng(seed);

  std::vector<Scalar> fu(p);
  for (std::uint64_t i = 0; i < p; ++i) fu[i] = dom.factorial_unit(i);

  auto violation = [&](const std::string& what) {
    report.ok = false;
    report.failure = what;
  };

  for (std::size_t s = 0; s < sample_count && report.ok; ++s) {
    Polynomial x = random_element(frame, rng, 7, 1);
    Polynomial y = random_element(frame, rng, 7, 1);
    Polynomial a = random_element(frame, rng, 3, 0);

    const std::size_t cap = frame.basis_size();
    Polynomial dx = dp.delta(x, cap);
    if (!dom.is_zero(dx.constant_coeff())) {
      violation("gamma_p(x) leaves the augmentation ideal at x = " + x.to_string());
      break;
    }

    // (1) p! gamma_p(x) = x^p; in characteristic p this is x^p = 0.
    if (!frame.normal_form(x.pow(p)).is_zero()) {
      violation("x^p != 0 at x = " + x.to_string());
      break;
    }

    // (2) gamma_p(a x) = a^p gamma_p(x).
    Polynomial ax = frame.normal_form(a.mul(x));
    Polynomial lhs2 = dp.delta(ax, cap);
    Polynomial rhs2 = frame.normal_form(a.pow(p).mul(dx));
    if (lhs2 != rhs2) {
      violation("gamma_p(a*x) != a^p gamma_p(x) at a = " + a.to_string() +
                ", x = " + x.to_string() + "; lhs = " + lhs2.to_string() +
                ", rhs = " + rhs2.to_string());
      break;
    }

    // (3) gamma_p(x+y) = gamma_p(x) + gamma_p(y) + sum_{i=1}^{p-1} x^i y^{p-i} / (i! (p-i)!).
    Polynomial lhs3 = dp.delta(frame.normal_form(x.add(y)), cap);
    Polynomial rhs3 = dx.add(dp.delta(y, cap));
    for (std::uint64_t i = 1; i < p; ++i) {
      Scalar c = dom.mul(fu[i], fu[p - i]);
      rhs3 = rhs3.add(x.pow(i).mul(y.pow(p - i)).scale(c));
    }
    rhs3 = frame.normal_form(rhs3);
    if (lhs3 != rhs3) {
      violation("sum rule fails at x = " + x.to_string() + ", y = " + y.to_string() +
                "; lhs = " + lhs3.to_string() + ", rhs = " + rhs3.to_string());
      break;
    }
  }
  return report;
}

DpExistenceReport dp_exists(const QuotientFrame& frame, std::size_t wp_term_cap) {
  require_char_p_small_bounds(frame);
  std::uint64_t p = frame.domain().characteristic();
  for (const auto& g : frame.generators()) {
    for (const auto& [m, c] : g.terms()) {
      if (m.total_degree() < 2)
        fail(Errc::NotInSquareOfMaximalIdeal,
             "generator " + g.to_string() + " has a term of degree < 2");
    }
  }
  DpExistenceReport report;
  report.remainder = Polynomial::zero(frame.domain(), frame.nvars());
  for (const auto& g : frame.generators()) {
    MembershipCertificate cert = frame.is_member(wp(g, p, wp_term_cap));
    if (!cert.member) {
      report.exists = false;
      report.generator = g.to_string();
      report.remainder = std::move(cert.remainder);
      return report;
    }
  }
  return report;
}

Polynomial eval_subst(const Polynomial& f, const std::vector<Polynomial>& images,
                      const QuotientFrame& target) {
  const Domain& dom = target.domain();
  Polynomial acc(dom, target.nvars());
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(dom, target.nvars(), c);
    for (std::size_t j = 0; j < m.nvars(); ++j) {
      if (m[j] == 0) continue;
      term = target.normal_form(term.mul(images[j].pow(m[j])));
      if (term.is_zero()) break;
    }
    acc = acc.add(term);
  }
  return target.normal_form(acc);
}

HomReport check_dp_hom(const std::vector<Polynomial>& images, const DPStructure& source,
                       const DPStructure& target) {
  const QuotientFrame& src = *source.frame();
  const QuotientFrame& dst = *target.frame();
  if (images.size() != src.nvars())
    fail(Errc::NotAHomomorphism, "need one image per source variable");
  if (src.domain() != dst.domain())
    fail(Errc::NotAHomomorphism, "source and target coefficient domains differ");

  std::vector<Polynomial> nf_images;
  nf_images.reserve(images.size());
  for (const auto& im : images) {
    Polynomial g = dst.normal_form(im);
    if (!dst.domain().is_zero(g.constant_coeff()))
      fail(Errc::NotAHomomorphism, "image " + g.to_string() + " is outside the augmentation ideal");
    nf_images.push_back(std::move(g));
  }

  for (std::size_t j = 0; j < src.nvars(); ++j) {
    Polynomial rel = dst.normal_form(nf_images[j].pow(src.bounds()[j]));
    if (!rel.is_zero())
      fail(Errc::NotAHomomorphism, "phi(x" + std::to_string(j + 1) + ")^" +
                                       std::to_string(src.bounds()[j]) + " = " + rel.to_string() +
                                       " != 0");
  }
  for (const auto& g : src.generators()) {
    Polynomial rel = eval_subst(g, nf_images, dst);
    if (!rel.is_zero())
      fail(Errc::NotAHomomorphism,
           "phi(" + g.to_string() + ") = " + rel.to_string() + " != 0");
  }

  HomReport report;
  for (std::size_t j = 0; j < src.nvars(); ++j) {
    Polynomial lhs = target.delta(nf_images[j], dst.basis_size());
    Polynomial rhs = eval_subst(source.gamma_p(j), nf_images, dst);
    if (lhs != rhs) {
      report.dp_compatible = false;
      report.detail = "eta_p(phi(x" + std::to_string(j + 1) + ")) = " + lhs.to_string() +
                      " but phi(gamma_p(x" + std::to_string(j + 1) + ")) = " + rhs.to_string();
      return report;
    }
  }
  return report;
}

SymEmbedResult sym_embed(std::uint64_t p, const std::vector<std::uint32_t>& bounds) {
  if (!is_prime_u64(p)) fail(Errc::InvalidPrime, std::to_string(p) + " is not prime");
  for (auto b : bounds)
    if (b < 2 || b > p)
      fail(Errc::InvalidBounds, "bounds must lie in [2, p], got " + std::to_string(b));

  Domain dom = Domain::prime_field(p);
  std::size_t n = bounds.size();
  std::size_t nb = 0;
  for (auto b : bounds) nb += b - 1;

  SymEmbedResult res;
  res.source = QuotientFrame::build(dom, n, bounds, {});
  res.target = QuotientFrame::build(dom, nb, std::vector<std::uint32_t>(nb, 2), {});

  std::size_t offset = 0;
  for (std::size_t l = 0; l < n; ++l) {
    Polynomial img(dom, nb);
    for (std::uint32_t j = 0; j + 1 < bounds[l]; ++j)
      img.add_term(Monomial::var(nb, offset + j), dom.one());
    res.images.push_back(std::move(img));
    offset += bounds[l] - 1;
  }

  for (std::size_t l = 0; l < n; ++l) {
    if (!res.target->normal_form(res.images[l].pow(bounds[l])).is_zero())
      fail(Errc::NotAHomomorphism, "symmetric-power image fails the pure-power relation");
  }

  // Injectivity: images of the source monomial basis must stay independent.
  Echelon ech(dom, res.target->basis_size());
  for (std::uint64_t i = 0; i < res.source->basis_size(); ++i) {
    Monomial e = res.source->monomial_at(i);
    Polynomial img = Polynomial::constant(dom, nb, dom.one());
    for (std::size_t l = 0; l < n; ++l)
      if (e[l]) img = res.target->normal_form(img.mul(res.images[l].pow(e[l])));
    if (!img.is_zero()) ech.insert(res.target->to_vec(img));
  }
  ech.finalize();
  res.injective = ech.rank() == res.source->basis_size();

  DPStructure target_dp = DPStructure::canonical(res.target);
  res.delta_zero = true;
  for (std::size_t l = 0; l < n; ++l) {
    if (!target_dp.delta(res.images[l], res.target->basis_size()).is_zero()) {
      res.delta_zero = false;
      break;
    }
  }
  return res;
}

TruncatedDPAlgebra::TruncatedDPAlgebra(std::uint64_t p, std::vector<std::uint32_t> caps)
    : dom_(Domain::prime_field(p)), caps_(std::move(caps)) {
  for (auto c : caps_)
    if (c < 1) fail(Errc::InvalidBounds, "caps must be >= 1");
}

TruncatedDPAlgebra::Element TruncatedDPAlgebra::sym(std::size_t j, std::uint32_t m) const {
  if (m >= caps_[j]) return zero();
  return Polynomial::term(dom_, caps_.size(), Monomial::var(caps_.size(), j, m), dom_.one());
}

TruncatedDPAlgebra::Element TruncatedDPAlgebra::mul(const Element& a, const Element& b) const {
  std::uint64_t p = dom_.characteristic();
  Element out = zero();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Scalar c = dom_.mul(ca, cb);
      Monomial m(caps_.size());
      bool dead = false;
      for (std::size_t j = 0; j < caps_.size() && !dead; ++j) {
        std::uint32_t s = ma[j] + mb[j];
        if (s >= caps_[j]) {
          dead = true;
          break;
        }
        m[j] = s;
        c = dom_.mul(c, binom_mod_p(s, ma[j], p));
      }
      if (!dead) out.add_term(m, c);
    }
  }
  return out;
}

Polynomial TruncatedDPAlgebra::to_quotient(const Element& a, const QuotientFrame& frame) const {
  const Domain& dom = frame.domain();
  Polynomial out(dom, frame.nvars());
  for (const auto& [m, c] : a.terms()) {
    Scalar coeff = c;
    for (std::size_t j = 0; j < caps_.size(); ++j)
      coeff = dom.mul(coeff, dom.factorial_unit(m[j]));
    out.add_term(m, coeff);
  }
  return frame.normal_form(out);
}

std::optional<std::pair<Monomial, Monomial>> assignment_free_defect(
    const QuotientFrame& frame, std::size_t max_pairs) {
  require_char_p_small_bounds(frame);
  std::uint64_t p = frame.domain().characteristic();
  std::size_t tried = 0;
  for (std::uint64_t i = 1; i < frame.basis_size(); ++i) {
    Monomial a = frame.monomial_at(i);
    if (a.total_degree() < 1) continue;
    for (std::uint64_t k = i; k < frame.basis_size(); ++k) {
      Monomial x = frame.monomial_at(k);
      if (x.total_degree() < 1) continue;
      if (++tried > max_pairs) return std::nullopt;
      Polynomial prod = frame.normal_form(
          Polynomial::term(frame.domain(), frame.nvars(), a.mul(x), frame.domain().one()));
      if (prod.is_zero() || prod.term_count() < 2) continue;
      Polynomial w = wp(prod, p, prod.term_count());
      if (!frame.normal_form(w).is_zero()) return std::make_pair(a, x);
    }
  }
  return std::nullopt;
}

}  // namespace dpcert
