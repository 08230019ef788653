#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dpcert/arith.hpp"

namespace dpcert {

using SparseVec = std::vector<std::pair<std::uint64_t, Scalar>>;  // sorted by index

// Row space over a field in reduced row echelon form. Rows are inserted one
// at a time; finalize() back-eliminates into full RREF (pivot columns
// strictly increasing, pivots 1, pivot columns cleared elsewhere).
//
// Prime fields with p < 256 use byte rows with an unreduced uint32
// accumulator; entries stay below ncols * (p-1)^2, so one reduction per
// element at the end of a pass suffices.
class Echelon {
 public:
  Echelon(Domain dom, std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const;
  bool finalized() const { return finalized_; }

  // Returns true when the row was independent (rank grew).
  bool insert(const SparseVec& row);

  void finalize();

  // Canonical remainder of v against the rows; zero entries dropped.
  // Requires finalize().
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const;

  // Pivot columns in increasing order (valid after finalize()).
  const std::vector<std::uint64_t>& pivot_cols() const { return pivot_cols_; }
  // Row with pivot pivot_cols()[i], as a sparse vector. Requires finalize().
  SparseVec row(std::size_t i) const;

 private:
  bool fp_mode() const { return fp_mode_; }

  Domain dom_;
  std::size_t ncols_;
  bool fp_mode_;
  bool finalized_ = false;

  // fp mode
  std::uint32_t p_ = 0;
  std::vector<std::vector<std::uint8_t>> byte_rows_;
  mutable std::vector<std::uint32_t> scratch_;

  // generic mode
  std::vector<std::vector<Scalar>> rows_;

  std::vector<std::int64_t> pivot_of_col_;   // -1 when none
  std::vector<std::uint64_t> pivot_cols_;    // increasing after finalize
};

// RREF basis of the kernel of a linear map, given the image of each source
// basis vector. Images are produced lazily to keep peak memory low.
std::vector<SparseVec> kernel_basis(const Domain& dom, std::size_t dim_src, std::size_t dim_dst,
                                    const std::function<SparseVec(std::size_t)>& image_of);

}  // namespace dpcert
