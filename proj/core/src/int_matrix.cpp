#include "pglsym/int_matrix.hpp"

#include "pglsym/error.hpp"

namespace pglsym {

namespace {

void require_same_size(const IntVector &a, const IntVector &b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch,
                "vector sizes " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

} // namespace

IntVector zero_vector(std::size_t size) { return IntVector(size, Integer(0)); }

bool is_zero(const IntVector &v) {
  for (const auto &x : v)
    if (x != 0)
      return false;
  return true;
}

IntVector add(const IntVector &a, const IntVector &b) {
  require_same_size(a, b);
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

IntVector subtract(const IntVector &a, const IntVector &b) {
  require_same_size(a, b);
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

IntVector scale(const IntVector &a, const Integer &factor) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] * factor;
  return out;
}

Integer dot(const IntVector &a, const IntVector &b) {
  require_same_size(a, b);
  Integer sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0)
      sum += a[i] * b[i];
  return sum;
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    m.set(i, i, 1);
  return m;
}

IntMatrix IntMatrix::from_dense(const std::vector<IntVector> &rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(ErrorKind::DimensionMismatch, "ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector> &columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows)
      throw Error(ErrorKind::DimensionMismatch, "column of wrong length");
    for (std::size_t r = 0; r < rows; ++r)
      m.set(r, c, columns[c][r]);
  }
  return m;
}

Integer IntMatrix::at(std::size_t row, std::size_t col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Integer(0) : it->second;
}

void IntMatrix::set(std::size_t row, std::size_t col, const Integer &value) {
  if (row >= rows_ || col >= cols_)
    throw Error(ErrorKind::OutOfRange, "matrix index (" + std::to_string(row) + "," +
                                           std::to_string(col) + ") outside " +
                                           std::to_string(rows_) + "x" + std::to_string(cols_));
  if (value == 0)
    entries_.erase({row, col});
  else
    entries_[{row, col}] = value;
}

void IntMatrix::add(std::size_t row, std::size_t col, const Integer &value) {
  if (value == 0)
    return;
  if (row >= rows_ || col >= cols_)
    throw Error(ErrorKind::OutOfRange, "matrix index (" + std::to_string(row) + "," +
                                           std::to_string(col) + ") outside " +
                                           std::to_string(rows_) + "x" + std::to_string(cols_));
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0)
      entries_.erase(it);
  }
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector out = zero_vector(cols_);
  for (auto it = entries_.lower_bound({r, 0}); it != entries_.end() && it->first.first == r; ++it)
    out[it->first.second] = it->second;
  return out;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out = zero_vector(rows_);
  for (const auto &[key, value] : entries_)
    if (key.second == c)
      out[key.first] = value;
  return out;
}

std::vector<IntVector> IntMatrix::to_dense() const {
  std::vector<IntVector> out(rows_, zero_vector(cols_));
  for (const auto &[key, value] : entries_)
    out[key.first][key.second] = value;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (const auto &[key, value] : entries_)
    t.entries_.emplace(Key{key.second, key.first}, value);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch,
                "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " and " +
                    std::to_string(rhs.rows_) + "x" + std::to_string(rhs.cols_));
  IntMatrix out(rows_, rhs.cols_);
  for (const auto &[key, value] : entries_) {
    const auto k = key.second;
    for (auto it = rhs.entries_.lower_bound({k, 0});
         it != rhs.entries_.end() && it->first.first == k; ++it)
      out.add(key.first, it->first.second, value * it->second);
  }
  return out;
}

IntVector IntMatrix::operator*(const IntVector &v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  IntVector out = zero_vector(rows_);
  for (const auto &[key, value] : entries_)
    if (v[key.second] != 0)
      out[key.first] += value * v[key.second];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto &entry : out.entries_)
    entry.second = -entry.second;
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
  IntMatrix out = *this;
  for (const auto &[key, value] : rhs.entries_)
    out.add(key.first, key.second, value);
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix &rhs) const { return *this + (-rhs); }

bool IntMatrix::operator==(const IntMatrix &rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

IntMatrix IntMatrix::hconcat(const IntMatrix &rhs) const {
  if (rows_ != rhs.rows_)
    throw Error(ErrorKind::DimensionMismatch, "hconcat with different row counts");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  out.entries_ = entries_;
  for (const auto &[key, value] : rhs.entries_)
    out.entries_.emplace(Key{key.first, key.second + cols_}, value);
  return out;
}

IntMatrix IntMatrix::vconcat(const IntMatrix &rhs) const {
  if (cols_ != rhs.cols_)
    throw Error(ErrorKind::DimensionMismatch, "vconcat with different column counts");
  IntMatrix out(rows_ + rhs.rows_, cols_);
  out.entries_ = entries_;
  for (const auto &[key, value] : rhs.entries_)
    out.entries_.emplace(Key{key.first + rows_, key.second}, value);
  return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t> &rows) const {
  IntMatrix out(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto it = entries_.lower_bound({rows[i], 0});
         it != entries_.end() && it->first.first == rows[i]; ++it)
      out.entries_.emplace(Key{i, it->first.second}, it->second);
  return out;
}

} // namespace pglsym
