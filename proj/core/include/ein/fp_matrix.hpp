#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ein/prime_field.hpp"

namespace ein {

// Dense row-major matrix over F_p. Entries are expected to be reduced mod p;
// builders in this library guarantee that.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n);
  static FpMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                            const PrimeField& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Residue& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Residue operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<Residue> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> entries() const noexcept { return data_; }

  FpMatrix transpose() const;
  void swap_rows(std::size_t r1, std::size_t r2) noexcept;

  bool is_reduced(const PrimeField& field) const noexcept;

  bool operator==(const FpMatrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> data_;
};

// Places blocks side by side. All blocks must share a row count; zero-column
// blocks are allowed and contribute nothing.
FpMatrix hconcat(std::span<const FpMatrix> blocks, std::size_t rows);

FpMatrix multiply(const FpMatrix& lhs, const FpMatrix& rhs, const PrimeField& field);

// Rank over F_p by row echelon elimination. Pivots are chosen as the first
// nonzero entry (lowest row index) in the leftmost unprocessed column, so the
// elimination sequence is fully deterministic.
std::size_t rank(const FpMatrix& m, const PrimeField& field);

// Same as rank() but reduces `m` to row echelon form in place.
std::size_t rank_in_place(FpMatrix& m, const PrimeField& field);

inline std::size_t kernel_dim(const FpMatrix& m, const PrimeField& field) {
  return m.cols() - rank(m, field);
}

inline std::size_t cokernel_dim(const FpMatrix& m, const PrimeField& field) {
  return m.rows() - rank(m, field);
}

}  // namespace ein
