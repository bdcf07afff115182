#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "liftpir/field.hpp"

namespace liftpir {

/// Dense row-major matrix over a prime field. Small sizes only; everything in
/// this library fits in a few hundred rows.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
      : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0, f)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_column(const std::vector<Scalar>& col) {
    if (col.size() != rows_) throw std::invalid_argument("FieldMatrix: column length mismatch");
    std::vector<Scalar> next;
    next.reserve(rows_ * (cols_ + 1));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) next.push_back(at(r, c));
      next.push_back(col[r]);
    }
    data_ = std::move(next);
    ++cols_;
  }

  void append_columns(const FieldMatrix& other) {
    if (other.rows_ != rows_) throw std::invalid_argument("FieldMatrix: row count mismatch");
    std::vector<Scalar> next;
    next.reserve(rows_ * (cols_ + other.cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) next.push_back(at(r, c));
      for (std::size_t c = 0; c < other.cols_; ++c) next.push_back(other.at(r, c));
    }
    data_ = std::move(next);
    cols_ += other.cols_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

inline std::size_t rank(FieldMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t c = col; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(r, c));
    const Scalar inv = m.at(r, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m.at(r, c) *= inv;
    for (std::size_t row = 0; row < m.rows(); ++row) {
      if (row == r || m.at(row, col).is_zero()) continue;
      const Scalar f = m.at(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) -= f * m.at(r, c);
    }
    ++r;
  }
  return r;
}

/// Solve A x = b for square A; nullopt when singular.
inline std::optional<std::vector<Scalar>> solve(const FieldMatrix& a, const std::vector<Scalar>& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  std::vector<std::vector<Scalar>> rows(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    rows[r].reserve(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) rows[r].push_back(a.at(r, c));
  }
  try {
    return detail::solve_square(std::move(rows), b);
  } catch (const std::runtime_error&) {
    return std::nullopt;
  }
}

/// column_space(a) == column_space(b)?
inline bool colspace_equal(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("colspace_equal: row count mismatch");
  const std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  FieldMatrix joint = a;
  joint.append_columns(b);
  return rank(joint) == ra;
}

inline bool in_colspace(const FieldMatrix& a, const std::vector<Scalar>& v) {
  const std::size_t ra = rank(a);
  FieldMatrix ext = a;
  ext.append_column(v);
  return rank(ext) == ra;
}

}  // namespace liftpir
