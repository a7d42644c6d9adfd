#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace koszul {

using FieldElement = std::uint32_t;

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

/// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  FieldElement neg(FieldElement a) const noexcept { return a == 0 ? 0 : p_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return static_cast<FieldElement>(std::uint64_t{a} * b % p_);
  }
  FieldElement inv(FieldElement a) const;
  FieldElement from_int(std::int64_t v) const noexcept;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t p) noexcept;

/// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVector = std::vector<std::pair<std::size_t, FieldElement>>;

/// Matrix over F_p. Entries are stored sparsely by row; absent entries are zero.
class PrimeFieldMatrix {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    std::int64_t value;
  };

  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  /// Duplicate coordinates are summed; values are reduced mod p.
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p, std::span<const Entry> entries);

  static PrimeFieldMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows,
                                     std::uint32_t p, std::size_t cols_if_empty = 0);
  static PrimeFieldMatrix identity(std::size_t k, std::uint32_t p);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  const SparseVector& row(std::size_t r) const { return data_[r]; }
  std::size_t nonzeros() const noexcept;
  double density() const noexcept;
  bool is_zero() const noexcept { return nonzeros() == 0; }

  PrimeFieldMatrix transpose() const;
  std::vector<FieldElement> apply(std::span<const FieldElement> v) const;

  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&);

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<SparseVector> data_;
};

/// Product a * b. Throws DimensionError on shape or characteristic mismatch.
PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);

/// Row space in echelon form, built one vector at a time.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::uint32_t p) : field_(p) {}

  /// Reduces v against the stored pivots; keeps it and returns true if it is independent.
  bool insert(SparseVector v);
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  PrimeField field_;
  std::vector<std::pair<std::size_t, SparseVector>> pivots_;  // sorted by pivot column
};

/// Rank by Gaussian elimination. Rows are eliminated sparsely unless the matrix is denser
/// than 25%, in which case a dense pass is used.
std::size_t rank(const PrimeFieldMatrix& m);
std::size_t rank_dense(const PrimeFieldMatrix& m);
std::size_t rank_sparse(const PrimeFieldMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column of the reduced row echelon form.
std::vector<std::vector<FieldElement>> kernel_basis(const PrimeFieldMatrix& m);

/// dim of ker(d_in) / im(d_out) for C_{q+1} --d_out--> C_q --d_in--> C_{q-1}.
/// Throws DimensionError if cols(d_in) != rows(d_out) and InvariantError if d_in d_out != 0.
std::size_t homology_dim(const PrimeFieldMatrix& d_in, const PrimeFieldMatrix& d_out);

}  // namespace koszul
