#include "koszul/field_matrix.hpp"

#include <algorithm>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

bool is_prime(std::uint32_t p) noexcept {
  if (p < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a == 0) throw InvariantError("inverse of zero in F_p");
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
  }
  return static_cast<FieldElement>(result);
}

FieldElement PrimeField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FieldElement>(r);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), field_(p), data_(rows) {}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, std::uint32_t p,
                                   std::span<const Entry> entries)
    : PrimeFieldMatrix(rows, cols, p) {
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> raw(rows);
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) throw DimensionError("matrix entry out of range");
    raw[e.row].emplace_back(e.col, e.value);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    auto& src = raw[r];
    std::sort(src.begin(), src.end());
    for (std::size_t k = 0; k < src.size();) {
      std::size_t col = src[k].first;
      FieldElement acc = 0;
      for (; k < src.size() && src[k].first == col; ++k) acc = field_.add(acc, field_.from_int(src[k].second));
      if (acc != 0) data_[r].emplace_back(col, acc);
    }
  }
}

PrimeFieldMatrix PrimeFieldMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows,
                                              std::uint32_t p, std::size_t cols_if_empty) {
  std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  std::vector<Entry> entries;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] != 0) entries.push_back({r, c, rows[r][c]});
    }
  }
  return PrimeFieldMatrix(rows.size(), cols, p, entries);
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::size_t k, std::uint32_t p) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < k; ++i) entries.push_back({i, i, 1});
  return PrimeFieldMatrix(k, k, p, entries);
}

FieldElement PrimeFieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw DimensionError("matrix index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(c, FieldElement{0}));
  return it != row.end() && it->first == c ? it->second : 0;
}

std::size_t PrimeFieldMatrix::nonzeros() const noexcept {
  std::size_t total = 0;
  for (const auto& row : data_) total += row.size();
  return total;
}

double PrimeFieldMatrix::density() const noexcept {
  if (rows_ == 0 || cols_ == 0) return 0.0;
  return static_cast<double>(nonzeros()) / (static_cast<double>(rows_) * static_cast<double>(cols_));
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix out(cols_, rows_, field_.characteristic());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto [c, v] : data_[r]) out.data_[c].emplace_back(r, v);
  }
  return out;
}

std::vector<FieldElement> PrimeFieldMatrix::apply(std::span<const FieldElement> v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  std::vector<FieldElement> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    FieldElement acc = 0;
    for (auto [c, x] : data_[r]) acc = field_.add(acc, field_.mul(x, v[c]));
    out[r] = acc;
  }
  return out;
}

bool operator==(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.characteristic() == b.characteristic() && a.data_ == b.data_;
}

PrimeFieldMatrix multiply(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.characteristic() != b.characteristic()) throw DimensionError("characteristic mismatch");
  const auto& f = a.field();
  std::vector<PrimeFieldMatrix::Entry> entries;
  std::vector<FieldElement> acc(b.cols(), 0);
  std::vector<std::size_t> touched;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    touched.clear();
    for (auto [k, x] : a.row(r)) {
      for (auto [c, y] : b.row(k)) {
        if (acc[c] == 0) touched.push_back(c);
        acc[c] = f.add(acc[c], f.mul(x, y));
      }
    }
    for (auto c : touched) {
      if (acc[c] != 0) entries.push_back({r, c, acc[c]});
      acc[c] = 0;
    }
  }
  return PrimeFieldMatrix(a.rows(), b.cols(), a.characteristic(), entries);
}

bool SparseEchelon::insert(SparseVector v) {
  SparseVector scratch;
  while (!v.empty()) {
    const std::size_t lead = v.front().first;
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), lead,
                               [](const auto& piv, std::size_t col) { return piv.first < col; });
    if (it == pivots_.end() || it->first != lead) {
      FieldElement scale = field_.inv(v.front().second);
      for (auto& e : v) e.second = field_.mul(e.second, scale);
      pivots_.insert(it, {lead, std::move(v)});
      return true;
    }
    // v -= v[lead] * pivot_row, pivot row has leading coefficient 1
    const FieldElement factor = v.front().second;
    const SparseVector& piv = it->second;
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < piv.size()) {
      if (j == piv.size() || (i < v.size() && v[i].first < piv[j].first)) {
        scratch.push_back(v[i++]);
      } else {
        FieldElement sub = field_.mul(factor, piv[j].second);
        if (i < v.size() && v[i].first == piv[j].first) {
          FieldElement x = field_.sub(v[i].second, sub);
          if (x != 0) scratch.emplace_back(v[i].first, x);
          ++i;
        } else {
          scratch.emplace_back(piv[j].first, field_.neg(sub));
        }
        ++j;
      }
    }
    v.swap(scratch);
  }
  return false;
}

std::size_t rank_sparse(const PrimeFieldMatrix& m) {
  SparseEchelon echelon(m.characteristic());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    echelon.insert(m.row(r));
    if (echelon.rank() == m.cols()) break;
  }
  return echelon.rank();
}

namespace {

using DenseRows = std::vector<std::vector<FieldElement>>;

DenseRows to_dense(const PrimeFieldMatrix& m) {
  DenseRows out(m.rows(), std::vector<FieldElement>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (auto [c, v] : m.row(r)) out[r][c] = v;
  }
  return out;
}

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(DenseRows& a, std::size_t cols, const PrimeField& f) {
  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < a.size(); ++c) {
    std::size_t piv = next;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[next]);
    FieldElement scale = f.inv(a[next][c]);
    for (auto& x : a[next]) x = f.mul(x, scale);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == next || a[r][c] == 0) continue;
      FieldElement factor = a[r][c];
      for (std::size_t k = c; k < cols; ++k) {
        if (a[next][k] != 0) a[r][k] = f.sub(a[r][k], f.mul(factor, a[next][k]));
      }
    }
    pivot_cols.push_back(c);
    ++next;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank_dense(const PrimeFieldMatrix& m) {
  auto a = to_dense(m);
  const auto& f = m.field();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    FieldElement scale = f.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      FieldElement factor = f.mul(a[r][c], scale);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (a[rank][k] != 0) a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const PrimeFieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.density() > 0.25 ? rank_dense(m) : rank_sparse(m);
}

std::vector<std::vector<FieldElement>> kernel_basis(const PrimeFieldMatrix& m) {
  auto a = to_dense(m);
  const auto& f = m.field();
  auto pivot_cols = rref(a, m.cols(), f);

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = f.neg(a[k][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t homology_dim(const PrimeFieldMatrix& d_in, const PrimeFieldMatrix& d_out) {
  if (d_in.cols() != d_out.rows()) {
    throw DimensionError("chain window mismatch: d_in has " + std::to_string(d_in.cols()) +
                         " columns, d_out has " + std::to_string(d_out.rows()) + " rows");
  }
  if (!multiply(d_in, d_out).is_zero()) throw InvariantError("differential does not square to zero");
  std::size_t r_in = rank(d_in);
  std::size_t r_out = rank(d_out);
  return d_in.cols() - r_in - r_out;
}

}  // namespace koszul
