#include "fuchs/gf2.hpp"

#include <algorithm>
#include <bit>

#include "fuchs/errors.hpp"

namespace fuchs::gf2 {

Vec Vec::from_bits(std::string_view bits) {
  Vec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw dimension_error("Vec::from_bits: expected only '0'/'1'");
  }
  return v;
}

Vec& Vec::operator^=(const Vec& o) {
  if (n_ != o.n_) throw dimension_error("Vec xor: length mismatch");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
  return *this;
}

bool Vec::is_zero() const {
  for (auto w : limbs_)
    if (w) return false;
  return true;
}

std::size_t Vec::lowest_set() const {
  for (std::size_t i = 0; i < limbs_.size(); ++i)
    if (limbs_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
  return npos;
}

std::size_t Vec::popcount() const {
  std::size_t c = 0;
  for (auto w : limbs_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> Vec::support() const {
  std::vector<std::size_t> out;
  out.reserve(popcount());
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t w = limbs_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool Basis::insert(Vec v) {
  if (v.size() != dim_) throw dimension_error("Basis::insert: length mismatch");
  v = reduce(std::move(v));
  std::size_t p = v.lowest_set();
  if (p == Vec::npos) return false;
  // Clear the new pivot column in existing rows, then splice the row in
  // at its sorted position.
  for (auto& r : rows_)
    if (r.get(p)) r ^= v;
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

Vec Basis::reduce(Vec v) const {
  if (v.size() != dim_) throw dimension_error("Basis::reduce: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (v.get(pivots_[i])) v ^= rows_[i];
  return v;
}

std::vector<std::size_t> Basis::free_columns() const {
  std::vector<std::size_t> out;
  out.reserve(dim_ - rows_.size());
  std::size_t pi = 0;
  for (std::size_t c = 0; c < dim_; ++c) {
    if (pi < pivots_.size() && pivots_[pi] == c)
      ++pi;
    else
      out.push_back(c);
  }
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<int>>& entries) {
  std::size_t r = entries.size();
  std::size_t c = r ? entries[0].size() : 0;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (entries[i].size() != c)
      throw dimension_error("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j)
      if (entries[i][j]) m.set(i, j);
  }
  return m;
}

std::size_t Matrix::rank() const {
  Basis b(n_cols_);
  for (const auto& r : rows_) b.insert(r);
  return b.rank();
}

Matrix Matrix::transposed() const {
  Matrix t(n_cols_, n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i)
    for (std::size_t j = 0; j < n_cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (b.size() != n_rows_) throw dimension_error("Matrix::solve: rhs length mismatch");
  // Gaussian elimination on the augmented system [M | b].
  std::vector<Vec> aug;
  aug.reserve(n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i) {
    Vec r(n_cols_ + 1);
    for (std::size_t j = 0; j < n_cols_; ++j)
      if (get(i, j)) r.set(j);
    if (b.get(i)) r.set(n_cols_);
    aug.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_cols_ && rank < aug.size(); ++c) {
    std::size_t piv = Vec::npos;
    for (std::size_t i = rank; i < aug.size(); ++i)
      if (aug[i].get(c)) {
        piv = i;
        break;
      }
    if (piv == Vec::npos) continue;
    std::swap(aug[rank], aug[piv]);
    for (std::size_t i = 0; i < aug.size(); ++i)
      if (i != rank && aug[i].get(c)) aug[i] ^= aug[rank];
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < aug.size(); ++i)
    if (aug[i].get(n_cols_)) return std::nullopt;  // 0 = 1 row
  Vec x(n_cols_);
  for (std::size_t i = 0; i < rank; ++i)
    if (aug[i].get(n_cols_)) x.set(pivot_col[i]);
  return x;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != n_cols_) throw dimension_error("Matrix::apply: length mismatch");
  Vec y(n_rows_);
  for (std::size_t i = 0; i < n_rows_; ++i) {
    // dot product over F2
    std::uint64_t acc = 0;
    const auto& rl = rows_[i].limbs();
    const auto& xl = x.limbs();
    for (std::size_t k = 0; k < rl.size(); ++k) acc ^= rl[k] & xl[k];
    if (std::popcount(acc) & 1) y.set(i);
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.n_rows_ != b.n_rows_ || a.n_cols_ != b.n_cols_)
    throw dimension_error("Matrix add: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.n_rows_; ++i) out.rows_[i] ^= b.rows_[i];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_cols_ != b.n_rows_)
    throw dimension_error("Matrix mul: shape mismatch");
  Matrix out(a.n_rows_, b.n_cols_);
  for (std::size_t i = 0; i < a.n_rows_; ++i)
    for (std::size_t k = 0; k < a.n_cols_; ++k)
      if (a.get(i, k)) out.rows_[i] ^= b.rows_[k];
  return out;
}

}  // namespace fuchs::gf2
