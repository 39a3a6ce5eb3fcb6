#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pglsym {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector zero_vector(std::size_t size);
bool is_zero(const IntVector &v);
IntVector add(const IntVector &a, const IntVector &b);
IntVector subtract(const IntVector &a, const IntVector &b);
IntVector scale(const IntVector &a, const Integer &factor);
Integer dot(const IntVector &a, const IntVector &b);

/// Sparse integer matrix. Entries are kept in a row-major ordered map so that
/// iteration (and therefore every export) is deterministic. Zero entries are
/// never stored.
class IntMatrix {
public:
  using Key = std::pair<std::size_t, std::size_t>;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static IntMatrix identity(std::size_t size);
  static IntMatrix from_dense(const std::vector<IntVector> &rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector> &columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nonzeros() const noexcept { return entries_.size(); }

  Integer at(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, const Integer &value);
  void add(std::size_t row, std::size_t col, const Integer &value);

  const std::map<Key, Integer> &entries() const noexcept { return entries_; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> to_dense() const;

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix &rhs) const;
  IntVector operator*(const IntVector &v) const;
  IntMatrix operator-() const;
  IntMatrix operator+(const IntMatrix &rhs) const;
  IntMatrix operator-(const IntMatrix &rhs) const;
  bool operator==(const IntMatrix &rhs) const;

  bool is_zero() const noexcept { return entries_.empty(); }

  /// Horizontal concatenation [this | rhs].
  IntMatrix hconcat(const IntMatrix &rhs) const;
  /// Vertical concatenation [this ; rhs].
  IntMatrix vconcat(const IntMatrix &rhs) const;
  IntMatrix select_rows(const std::vector<std::size_t> &rows) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Integer> entries_;
};

} // namespace pglsym
