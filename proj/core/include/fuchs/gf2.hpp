#pragma once

// Bit-packed linear algebra over F2. Vectors are packed into 64-bit limbs;
// dimensions in this project stay <= 128, so everything is dense.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace fuchs::gf2 {

/// Fixed-length bit vector over F2. The logical length is immutable;
/// bits beyond it are kept zero.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : n_(n), limbs_((n + 63) / 64, 0) {}

  /// Parse from a string like "1010" (index 0 first).
  static Vec from_bits(std::string_view bits);

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (limbs_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool v = true) {
    if (v)
      limbs_[i >> 6] |= std::uint64_t{1} << (i & 63);
    else
      limbs_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { limbs_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  Vec& operator^=(const Vec& o);
  friend Vec operator^(Vec a, const Vec& b) { return a ^= b; }

  bool is_zero() const;
  /// Index of the lowest set bit, or npos if zero.
  std::size_t lowest_set() const;
  std::size_t popcount() const;

  /// Indices of all set bits, ascending.
  std::vector<std::size_t> support() const;

  friend bool operator==(const Vec& a, const Vec& b) = default;

  const std::vector<std::uint64_t>& limbs() const { return limbs_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> limbs_;
};

/// Reduced row-echelon basis of a subspace of F2^n. Pivot columns are
/// strictly increasing and each pivot column is set in exactly one row,
/// so coset representatives under reduce() are canonical.
class Basis {
 public:
  explicit Basis(std::size_t ambient_dim) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  /// Insert v into the span. Returns true iff the span grew.
  bool insert(Vec v);

  /// Canonical representative of v + span(basis): zero in all pivot columns.
  Vec reduce(Vec v) const;

  bool contains(const Vec& v) const { return reduce(v).is_zero(); }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Columns that are not pivots, ascending (free coordinates of the
  /// quotient space).
  std::vector<std::size_t> free_columns() const;

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Dense matrix over F2, stored row-major.
class Matrix {
 public:
  Matrix(std::size_t n_rows, std::size_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), rows_(n_rows, Vec(n_cols)) {}

  static Matrix identity(std::size_t n);
  /// Build from 0/1 entries given row by row.
  static Matrix from_rows(const std::vector<std::vector<int>>& entries);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return n_cols_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

  Vec& row(std::size_t i) { return rows_[i]; }
  const Vec& row(std::size_t i) const { return rows_[i]; }

  std::size_t rank() const;
  Matrix transposed() const;

  /// Some x with M*x = b, or nullopt when the system is inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  /// M*x (x has length n_cols).
  Vec apply(const Vec& x) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t n_rows_, n_cols_;
  std::vector<Vec> rows_;
};

}  // namespace fuchs::gf2
