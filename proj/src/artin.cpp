#include "dpcert/artin.hpp"

#include <algorithm>

namespace dpcert {

std::shared_ptr<const QuotientFrame> QuotientFrame::build(Domain dom, std::size_t n,
                                                          std::vector<std::uint32_t> bounds,
                                                          const std::vector<Polynomial>& extra_gens,
                                                          std::uint64_t basis_cap) {
  if (bounds.size() != n) fail(Errc::InvalidBounds, "bounds length != variable count");
  for (auto b : bounds)
    if (b < 1) fail(Errc::InvalidBounds, "bounds must be >= 1");

  std::uint64_t size = 1;
  for (auto b : bounds) {
    if (size > basis_cap / b)
      fail(Errc::ResourceCap, "monomial basis exceeds cap " + std::to_string(basis_cap) +
                                  "; use the certificate method or a Groebner length");
    size *= b;
  }

  auto frame = std::shared_ptr<QuotientFrame>(new QuotientFrame(std::move(dom), n, std::move(bounds)));
  frame->basis_size_ = size;
  frame->strides_.assign(n, 1);
  for (std::size_t j = n; j-- > 1;) frame->strides_[j - 1] = frame->strides_[j] * frame->bounds_[j];

  for (const auto& g : extra_gens) {
    if (g.nvars() != n) fail(Errc::InvalidInstance, "generator has wrong variable count");
    if (g.domain() != frame->dom_) fail(Errc::InvalidInstance, "generator domain mismatch");
    Polynomial red = frame->reduce_pure_powers(g);
    if (!red.is_zero()) frame->gens_.push_back(std::move(red));
  }

  frame->ideal_ = Echelon(frame->dom_, size);
  // Row space of { m * g : g generator, m basis monomial }, reduced modulo
  // the pure powers.
  std::vector<std::uint32_t> e(n, 0);
  for (const auto& g : frame->gens_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
      SparseVec row;
      for (const auto& [mon, c] : g.terms()) {
        std::uint64_t target = 0;
        bool dead = false;
        for (std::size_t j = 0; j < n; ++j) {
          std::uint32_t sum = mon[j] + e[j];
          if (sum >= frame->bounds_[j]) {
            dead = true;
            break;
          }
          target += sum * frame->strides_[j];
        }
        if (!dead) row.emplace_back(target, c);
      }
      if (!row.empty()) {
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        frame->ideal_.insert(row);
      }
      // next exponent vector in lexicographic order
      for (std::size_t j = n; j-- > 0;) {
        if (++e[j] < frame->bounds_[j]) break;
        e[j] = 0;
      }
    }
  }
  frame->ideal_.finalize();
  return frame;
}

std::uint64_t QuotientFrame::index_of(const Monomial& m) const {
  std::uint64_t idx = 0;
  for (std::size_t j = 0; j < n_; ++j) idx += static_cast<std::uint64_t>(m[j]) * strides_[j];
  return idx;
}

Monomial QuotientFrame::monomial_at(std::uint64_t idx) const {
  Monomial m(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    m[j] = static_cast<std::uint32_t>(idx / strides_[j]);
    idx %= strides_[j];
  }
  return m;
}

SparseVec QuotientFrame::to_vec(const Polynomial& f) const {
  SparseVec v;
  v.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) v.emplace_back(index_of(m), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Polynomial QuotientFrame::from_vec(const SparseVec& v) const {
  Polynomial f(dom_, n_);
  for (const auto& [idx, c] : v) f.add_term(monomial_at(idx), c);
  return f;
}

Polynomial QuotientFrame::reduce_pure_powers(const Polynomial& f) const {
  Polynomial out(dom_, n_);
  for (const auto& [m, c] : f.terms()) {
    bool dead = false;
    for (std::size_t j = 0; j < n_; ++j) {
      if (m[j] >= bounds_[j]) {
        dead = true;
        break;
      }
    }
    if (!dead) out.add_term(m, c);
  }
  return out;
}

Polynomial QuotientFrame::normal_form(const Polynomial& f) const {
  return from_vec(ideal_.reduce(to_vec(reduce_pure_powers(f))));
}

MembershipCertificate QuotientFrame::is_member(const Polynomial& f) const {
  Polynomial rem = normal_form(f);
  return MembershipCertificate{rem.is_zero(), std::move(rem)};
}

std::vector<Polynomial> annihilator_of_set(const QuotientFrame& frame,
                                           const std::vector<Polynomial>& gens) {
  if (!frame.generators().empty())
    fail(Errc::UnsupportedFrame, "annihilators are only computed in complete intersection frames");
  const std::uint64_t dim = frame.basis_size();
  std::vector<Polynomial> reduced;
  reduced.reserve(gens.size());
  for (const auto& g : gens) reduced.push_back(frame.reduce_pure_powers(g));

  auto image_of = [&](std::size_t i) -> SparseVec {
    Monomial m = frame.monomial_at(i);
    SparseVec img;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      Polynomial prod = frame.reduce_pure_powers(reduced[k].mul_term(m, frame.domain().one()));
      for (const auto& [mon, c] : prod.terms())
        img.emplace_back(k * dim + frame.index_of(mon), c);
    }
    std::sort(img.begin(), img.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return img;
  };

  std::vector<SparseVec> ker =
      kernel_basis(frame.domain(), dim, dim * reduced.size(), image_of);
  std::vector<Polynomial> out;
  out.reserve(ker.size());
  for (const auto& v : ker) out.push_back(frame.from_vec(v));
  return out;
}

std::vector<Polynomial> annihilator(const QuotientFrame& frame, const Polynomial& f) {
  return annihilator_of_set(frame, {f});
}

std::vector<Polynomial> principal_ideal_rows(const QuotientFrame& frame, const Polynomial& f) {
  if (!frame.generators().empty())
    fail(Errc::UnsupportedFrame, "principal ideal rows need a complete intersection frame");
  Echelon ech(frame.domain(), frame.basis_size());
  Polynomial red = frame.reduce_pure_powers(f);
  for (std::uint64_t i = 0; i < frame.basis_size(); ++i) {
    Polynomial prod = frame.reduce_pure_powers(
        red.mul_term(frame.monomial_at(i), frame.domain().one()));
    if (!prod.is_zero()) ech.insert(frame.to_vec(prod));
  }
  ech.finalize();
  std::vector<Polynomial> rows;
  rows.reserve(ech.rank());
  for (std::size_t i = 0; i < ech.rank(); ++i) rows.push_back(frame.from_vec(ech.row(i)));
  return rows;
}

std::uint64_t socle_dim(const QuotientFrame& frame) {
  if (frame.generators().empty()) return 1;  // tensor of k[x]/(x^i): socle = prod x^(i-1)
  const std::uint64_t dim = frame.basis_size();
  const std::size_t n = frame.nvars();
  const Domain& dom = frame.domain();

  auto image_of = [&](std::size_t i) -> SparseVec {
    Monomial m = frame.monomial_at(i);
    SparseVec img;
    for (std::size_t j = 0; j < n; ++j) {
      Monomial mj = m;
      mj[j] += 1;
      if (mj[j] >= frame.bounds()[j]) continue;  // x_j * m = 0 already
      SparseVec rem = frame.ideal().reduce({{frame.index_of(mj), dom.one()}});
      for (const auto& [idx, c] : rem) img.emplace_back(j * dim + idx, c);
    }
    std::sort(img.begin(), img.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return img;
  };

  std::vector<SparseVec> ker = kernel_basis(dom, dim, dim * n, image_of);
  return ker.size() - frame.ideal().rank();
}

namespace {

// Re-echelonize a set of vectors with columns ordered by grlex-ascending
// monomial, so pivots follow the degree filtration.
std::vector<Polynomial> degree_sorted_rref(const QuotientFrame& frame,
                                           const std::vector<Polynomial>& vecs) {
  std::vector<Monomial> basis(frame.basis_size(), Monomial(frame.nvars()));
  for (std::uint64_t i = 0; i < frame.basis_size(); ++i) basis[i] = frame.monomial_at(i);
  std::vector<std::uint64_t> order(frame.basis_size());
  for (std::uint64_t i = 0; i < order.size(); ++i) order[i] = i;
  GrlexLess less;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return less(basis[a], basis[b]); });
  std::vector<std::uint64_t> position(order.size());
  for (std::uint64_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  Echelon ech(frame.domain(), frame.basis_size());
  for (const auto& v : vecs) {
    SparseVec row;
    for (const auto& [m, c] : v.terms()) row.emplace_back(position[frame.index_of(m)], c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ech.insert(row);
  }
  ech.finalize();
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    Polynomial f(frame.domain(), frame.nvars());
    for (const auto& [idx, c] : ech.row(i)) f.add_term(basis[order[idx]], c);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

LinkageResult link(const QuotientFrame& frame, const Polynomial& f) {
  std::vector<Polynomial> ann = annihilator(frame, f);

  // Ideal generators: sweep the degree-sorted RREF basis lowest degree
  // first, keeping vectors not already in the ideal generated so far.
  std::vector<Polynomial> graded = degree_sorted_rref(frame, ann);
  std::vector<Polynomial> gens;
  Echelon span(frame.domain(), frame.basis_size());
  for (const auto& v : graded) {
    span.finalize();
    if (span.contains(frame.to_vec(v))) continue;
    gens.push_back(v);
    for (std::uint64_t i = 0; i < frame.basis_size(); ++i) {
      Polynomial prod =
          frame.reduce_pure_powers(v.mul_term(frame.monomial_at(i), frame.domain().one()));
      if (!prod.is_zero()) span.insert(frame.to_vec(prod));
    }
  }

  FramePtr a0 = QuotientFrame::build(frame.domain(), frame.nvars(), frame.bounds(), {f});
  FramePtr c0 = QuotientFrame::build(frame.domain(), frame.nvars(), frame.bounds(), ann);

  LinkageResult out;
  out.annihilator_basis = std::move(ann);
  out.annihilator_gens = std::move(gens);
  out.dim_linked = c0->length();
  out.dim_quotient = a0->length();
  out.gorenstein = socle_dim(*c0) == 1;
  out.linked = std::move(c0);
  return out;
}

}  // namespace dpcert
