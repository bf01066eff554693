#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcep {

using Complex = std::complex<double>;

/// Shape mismatch between operands (e.g. product of non-conformable matrices).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid argument values: bad tolerances, infeasible requests, malformed input.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical breakdown: non-convergence, singular inner systems, overflow.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Dense row-major complex matrix. Immutable size, finite entries enforced on
/// construction from data. The single carrier type for every operation in the
/// library; all functions treat it as a value.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Complex>& entries() const { return data_; }
  std::vector<Complex>& entries() { return data_; }

  /// Throws NumericalError if any entry is NaN or infinite.
  void check_finite(const char* context) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

Matrix conj_transpose(const Matrix& a);

/// Standard product; OpenMP-parallel over output rows for large operands,
/// entrywise identical to ref::matmul for any thread count.
Matrix matmul(const Matrix& a, const Matrix& b);

/// a^l by repeated squaring; a^0 = I. Requires a square.
Matrix power(const Matrix& a, std::size_t l);

Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(Complex c, const Matrix& a);

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);

/// Copy of the block a[r0:r1, c0:c1) (half-open ranges).
Matrix block(const Matrix& a, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace wcep
