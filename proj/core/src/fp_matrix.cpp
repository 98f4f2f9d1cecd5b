#include "ein/fp_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "ein/errors.hpp"

namespace ein {

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                             const PrimeField& field) {
  const std::size_t nrows = rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : rows.begin()->size();
  FpMatrix m(nrows, ncols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != ncols) throw PreconditionError("ragged matrix rows");
    std::size_t c = 0;
    for (std::int64_t v : row) m(r, c++) = field.reduce(v);
    ++r;
  }
  return m;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void FpMatrix::swap_rows(std::size_t r1, std::size_t r2) noexcept {
  if (r1 == r2) return;
  std::swap_ranges(data_.begin() + r1 * cols_, data_.begin() + (r1 + 1) * cols_,
                   data_.begin() + r2 * cols_);
}

bool FpMatrix::is_reduced(const PrimeField& field) const noexcept {
  return std::all_of(data_.begin(), data_.end(), [&](Residue v) { return v < field.p(); });
}

FpMatrix hconcat(std::span<const FpMatrix> blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.cols() != 0 && b.rows() != rows) throw PreconditionError("hconcat: row count mismatch");
    cols += b.cols();
  }
  FpMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows() && b.cols() != 0; ++r) {
      std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + offset);
    }
    offset += b.cols();
  }
  return out;
}

FpMatrix multiply(const FpMatrix& lhs, const FpMatrix& rhs, const PrimeField& field) {
  if (lhs.cols() != rhs.rows()) throw PreconditionError("multiply: inner dimension mismatch");
  FpMatrix out(lhs.rows(), rhs.cols());
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const std::uint64_t a = lhs(i, k);
      if (a == 0) continue;
      auto dst = out.row(i);
      auto src = rhs.row(k);
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        dst[j] = static_cast<Residue>((dst[j] + a * src[j]) % p);
      }
    }
  }
  return out;
}

namespace {

std::size_t eliminate_eager(FpMatrix& m, const PrimeField& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = field.p();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    m.swap_rows(r, pivot);

    auto prow = m.row(r);
    const Residue inv = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);

    for (std::size_t i = r + 1; i < rows; ++i) {
      auto row = m.row(i);
      const std::uint64_t factor = row[c];
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      for (std::size_t j = c; j < cols; ++j) {
        row[j] = static_cast<Residue>((row[j] + neg * prow[j]) % p);
      }
    }
    ++r;
  }
  return r;
}

// Same pivoting as eliminate_eager, but non-pivot rows live in 64-bit words
// and are reduced only when read. Each update adds less than p^2 < 2^32, so
// for p < 2^16 up to 2^32 updates fit.
std::size_t eliminate_lazy(FpMatrix& m, const PrimeField& field) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::uint64_t p = field.p();
  std::vector<std::uint64_t> work(m.entries().begin(), m.entries().end());
  std::vector<std::uint32_t> prow(cols);
  const auto at = [&](std::size_t i) { return work.data() + i * cols; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    for (; pivot < rows; ++pivot) {
      std::uint64_t& v = at(pivot)[c];
      v %= p;
      if (v != 0) break;
    }
    if (pivot == rows) continue;
    if (pivot != r) std::swap_ranges(at(r), at(r) + cols, at(pivot));

    std::uint64_t* pr = at(r);
    const Residue inv = field.inv(static_cast<Residue>(pr[c]));
    for (std::size_t j = c; j < cols; ++j) {
      pr[j] = field.mul(static_cast<Residue>(pr[j] % p), inv);
      prow[j] = static_cast<std::uint32_t>(pr[j]);
    }

    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* row = at(i);
      const std::uint64_t factor = row[c] % p;
      row[c] = 0;
      if (factor == 0) continue;
      const std::uint64_t neg = p - factor;
      const std::uint32_t* src = prow.data();
      for (std::size_t j = c + 1; j < cols; ++j) row[j] += neg * src[j];
    }
    ++r;
  }
  for (std::size_t k = 0; k < work.size(); ++k) m(k / cols, k % cols) = static_cast<Residue>(work[k] % p);
  return r;
}

}  // namespace

std::size_t rank_in_place(FpMatrix& m, const PrimeField& field) {
  assert(m.is_reduced(field));
  if (m.empty()) return 0;
  return field.p() < (1u << 16) ? eliminate_lazy(m, field) : eliminate_eager(m, field);
}

std::size_t rank(const FpMatrix& m, const PrimeField& field) {
  if (m.empty()) return 0;
  FpMatrix work = m;
  return rank_in_place(work, field);
}

}  // namespace ein
