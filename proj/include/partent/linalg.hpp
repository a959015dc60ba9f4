#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace partent {

using Complex = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Complex>& data() const { return data_; }

  Complex trace() const;
  CMatrix adjoint() const;
  // M * M^H, Hermitian by construction.
  CMatrix gram() const;
  // max |M - M^H| over all entries.
  double hermiticity_defect() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);

struct EigenSystem {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k pairs with values[k]; empty unless requested
};

inline constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi diagonalization of a Hermitian matrix. Each rotation first
// removes the phase of the pivot so the remaining 2x2 problem is real
// symmetric. Only the lower triangle is read. Throws NumericalFailure when
// the off-diagonal mass has not vanished after kJacobiMaxSweeps sweeps.
EigenSystem hermitian_eigensystem(const CMatrix& m, bool want_vectors = false);

std::vector<double> hermitian_eigenvalues(const CMatrix& m);

}  // namespace partent
