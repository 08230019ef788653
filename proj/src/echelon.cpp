#include "dpcert/echelon.hpp"

#include <algorithm>
#include <cassert>

namespace dpcert {

namespace {

void axpy_u8(std::uint32_t* dst, const std::uint8_t* src, std::uint32_t c, std::size_t begin,
             std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) dst[i] += c * src[i];
}

}  // namespace

Echelon::Echelon(Domain dom, std::size_t ncols)
    : dom_(std::move(dom)),
      ncols_(ncols),
      fp_mode_(dom_.kind() == Domain::Kind::PrimeField && dom_.modulus() < 256),
      pivot_of_col_(ncols, -1) {
  if (fp_mode_) p_ = static_cast<std::uint32_t>(dom_.modulus());
}

std::size_t Echelon::rank() const { return fp_mode_ ? byte_rows_.size() : rows_.size(); }

bool Echelon::insert(const SparseVec& row) {
  if (row.empty()) return false;
  finalized_ = false;
  if (fp_mode_) {
    scratch_.assign(ncols_, 0);
    std::size_t first = ncols_;
    for (const auto& [idx, c] : row) {
      scratch_[idx] = static_cast<std::uint32_t>(c.fp());
      first = std::min(first, static_cast<std::size_t>(idx));
    }
    for (std::size_t j = first; j < ncols_; ++j) {
      std::uint32_t v = scratch_[j] % p_;
      if (v == 0) continue;
      std::int64_t pr = pivot_of_col_[j];
      if (pr >= 0) {
        axpy_u8(scratch_.data(), byte_rows_[static_cast<std::size_t>(pr)].data(), p_ - v, j,
                ncols_);
      } else {
        // New pivot: reduce, normalize to leading 1, store.
        std::vector<std::uint8_t> stored(ncols_, 0);
        std::uint32_t vinv = static_cast<std::uint32_t>(inv_mod(v, p_));
        for (std::size_t i = j; i < ncols_; ++i)
          stored[i] = static_cast<std::uint8_t>((scratch_[i] % p_) * vinv % p_);
        pivot_of_col_[j] = static_cast<std::int64_t>(byte_rows_.size());
        byte_rows_.push_back(std::move(stored));
        pivot_cols_.push_back(j);
        return true;
      }
    }
    return false;
  }

  std::vector<Scalar> scr(ncols_, dom_.zero());
  std::size_t first = ncols_;
  for (const auto& [idx, c] : row) {
    scr[idx] = c;
    first = std::min(first, static_cast<std::size_t>(idx));
  }
  for (std::size_t j = first; j < ncols_; ++j) {
    if (dom_.is_zero(scr[j])) continue;
    std::int64_t pr = pivot_of_col_[j];
    if (pr >= 0) {
      const auto& prow = rows_[static_cast<std::size_t>(pr)];
      Scalar c = scr[j];
      for (std::size_t i = j; i < ncols_; ++i)
        if (!dom_.is_zero(prow[i])) scr[i] = dom_.sub(scr[i], dom_.mul(c, prow[i]));
    } else {
      Scalar lead_inv = dom_.inv(scr[j]);
      for (std::size_t i = j; i < ncols_; ++i) scr[i] = dom_.mul(scr[i], lead_inv);
      pivot_of_col_[j] = static_cast<std::int64_t>(rows_.size());
      rows_.push_back(std::move(scr));
      pivot_cols_.push_back(j);
      return true;
    }
  }
  return false;
}

void Echelon::finalize() {
  if (finalized_) return;
  std::sort(pivot_cols_.begin(), pivot_cols_.end());
  if (fp_mode_) {
    // Process pivots from the right; each row is cleared against all later
    // (already canonical) pivot rows in one accumulator pass.
    for (std::size_t k = pivot_cols_.size(); k-- > 0;) {
      std::size_t r = static_cast<std::size_t>(pivot_of_col_[pivot_cols_[k]]);
      auto& row = byte_rows_[r];
      scratch_.assign(ncols_, 0);
      for (std::size_t i = 0; i < ncols_; ++i) scratch_[i] = row[i];
      for (std::size_t k2 = k + 1; k2 < pivot_cols_.size(); ++k2) {
        std::uint64_t col = pivot_cols_[k2];
        std::uint32_t v = scratch_[col] % p_;
        if (v == 0) continue;
        std::size_t r2 = static_cast<std::size_t>(pivot_of_col_[col]);
        axpy_u8(scratch_.data(), byte_rows_[r2].data(), p_ - v, col, ncols_);
      }
      for (std::size_t i = 0; i < ncols_; ++i)
        row[i] = static_cast<std::uint8_t>(scratch_[i] % p_);
    }
  } else {
    for (std::size_t k = pivot_cols_.size(); k-- > 0;) {
      std::size_t r = static_cast<std::size_t>(pivot_of_col_[pivot_cols_[k]]);
      auto& row = rows_[r];
      for (std::size_t k2 = k + 1; k2 < pivot_cols_.size(); ++k2) {
        std::uint64_t col = pivot_cols_[k2];
        if (dom_.is_zero(row[col])) continue;
        const auto& prow = rows_[static_cast<std::size_t>(pivot_of_col_[col])];
        Scalar c = row[col];
        for (std::size_t i = col; i < ncols_; ++i)
          if (!dom_.is_zero(prow[i])) row[i] = dom_.sub(row[i], dom_.mul(c, prow[i]));
      }
    }
  }
  finalized_ = true;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  assert(finalized_);
  SparseVec out;
  if (fp_mode_) {
    scratch_.assign(ncols_, 0);
    std::size_t first = ncols_;
    for (const auto& [idx, c] : v) {
      scratch_[idx] = static_cast<std::uint32_t>(c.fp());
      first = std::min(first, static_cast<std::size_t>(idx));
    }
    for (std::size_t j = first; j < ncols_; ++j) {
      std::uint32_t val = scratch_[j] % p_;
      if (val == 0) continue;
      std::int64_t pr = pivot_of_col_[j];
      if (pr < 0) continue;
      axpy_u8(scratch_.data(), byte_rows_[static_cast<std::size_t>(pr)].data(), p_ - val, j,
              ncols_);
    }
    for (std::size_t i = first; i < ncols_; ++i) {
      std::uint32_t val = scratch_[i] % p_;
      if (val) out.emplace_back(i, Scalar(std::uint64_t{val}));
    }
    return out;
  }

  std::vector<Scalar> scr(ncols_, dom_.zero());
  std::size_t first = ncols_;
  for (const auto& [idx, c] : v) {
    scr[idx] = c;
    first = std::min(first, static_cast<std::size_t>(idx));
  }
  for (std::size_t j = first; j < ncols_; ++j) {
    if (dom_.is_zero(scr[j])) continue;
    std::int64_t pr = pivot_of_col_[j];
    if (pr < 0) continue;
    const auto& prow = rows_[static_cast<std::size_t>(pr)];
    Scalar c = scr[j];
    for (std::size_t i = j; i < ncols_; ++i)
      if (!dom_.is_zero(prow[i])) scr[i] = dom_.sub(scr[i], dom_.mul(c, prow[i]));
  }
  for (std::size_t i = first; i < ncols_; ++i)
    if (!dom_.is_zero(scr[i])) out.emplace_back(i, scr[i]);
  return out;
}

bool Echelon::contains(const SparseVec& v) const { return reduce(v).empty(); }

SparseVec Echelon::row(std::size_t i) const {
  assert(finalized_ && i < pivot_cols_.size());
  std::size_t r = static_cast<std::size_t>(pivot_of_col_[pivot_cols_[i]]);
  SparseVec out;
  if (fp_mode_) {
    const auto& row = byte_rows_[r];
    for (std::size_t c = 0; c < ncols_; ++c)
      if (row[c]) out.emplace_back(c, Scalar(std::uint64_t{row[c]}));
  } else {
    const auto& row = rows_[r];
    for (std::size_t c = 0; c < ncols_; ++c)
      if (!dom_.is_zero(row[c])) out.emplace_back(c, row[c]);
  }
  return out;
}

std::vector<SparseVec> kernel_basis(const Domain& dom, std::size_t dim_src, std::size_t dim_dst,
                                    const std::function<SparseVec(std::size_t)>& image_of) {
  // Augmented rows [image | unit vector]; rows whose pivot lands in the
  // tracking block encode kernel combinations.
  Echelon ech(dom, dim_dst + dim_src);
  for (std::size_t i = 0; i < dim_src; ++i) {
    SparseVec row = image_of(i);
    row.emplace_back(dim_dst + i, dom.one());
    ech.insert(row);
  }
  ech.finalize();
  std::vector<SparseVec> kernel;
  const auto& pivots = ech.pivot_cols();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < dim_dst) continue;
    SparseVec full = ech.row(i);
    SparseVec tracked;
    for (const auto& [idx, c] : full)
      if (idx >= dim_dst) tracked.emplace_back(idx - dim_dst, c);
    kernel.push_back(std::move(tracked));
  }
  return kernel;
}

}  // namespace dpcert
