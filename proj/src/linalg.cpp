#include "partent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "partent/errors.hpp"

namespace partent {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Complex CMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::gram() const {
  CMatrix out(rows_, rows_);
  for (std::size_t x = 0; x < rows_; ++x) {
    const Complex* row_x = &data_[x * cols_];
    for (std::size_t y = 0; y <= x; ++y) {
      const Complex* row_y = &data_[y * cols_];
      Complex s{};
      for (std::size_t z = 0; z < cols_; ++z) s += row_x[z] * std::conj(row_y[z]);
      out(x, y) = s;
      out(y, x) = std::conj(s);
    }
    out(x, x) = out(x, x).real();
  }
  return out;
}

double CMatrix::hermiticity_defect() const {
  if (rows_ != cols_) return INFINITY;
  double worst = 0.0;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c <= r; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

EigenSystem hermitian_eigensystem(const CMatrix& m, bool want_vectors) {
  if (m.rows() != m.cols()) throw DimensionMismatch("eigensolver needs a square matrix");
  const std::size_t n = m.rows();

  // Work on a Hermitian copy assembled from the lower triangle.
  CMatrix a(n, n);
  double scale = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      a(r, c) = m(r, c);
      a(c, r) = std::conj(m(r, c));
    }
    a(r, r) = m(r, r).real();
  }
  for (const auto& z : a.data()) scale += std::norm(z);
  scale = std::sqrt(scale);

  CMatrix v = want_vectors ? CMatrix::identity(n) : CMatrix{};
  const double target =
      std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<std::size_t>(n, 1)) * scale;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < r; ++c) s += std::norm(a(r, c));
    return std::sqrt(2.0 * s);
  };

  bool converged = off_norm() <= target;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double h = std::abs(g);
        if (h == 0.0) continue;

        // The rotation acts on columns (p, q) as
        //   col_p <- c col_p - s conj(e) col_q,   col_q <- s col_p + c conj(e) col_q
        // with e the pivot phase, so the 2x2 block becomes real symmetric
        // before the usual Jacobi angle is applied.
        const Complex e = g / h;
        const Complex ce = std::conj(e);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * h);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex arp = a(r, p);
          const Complex arq = ce * a(r, q);
          const Complex new_rp = c * arp - s * arq;
          const Complex new_rq = s * arp + c * arq;
          a(r, p) = new_rp;
          a(r, q) = new_rq;
          a(p, r) = std::conj(new_rp);
          a(q, r) = std::conj(new_rq);
        }
        a(p, p) = app - t * h;
        a(q, q) = aqq + t * h;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        if (want_vectors) {
          for (std::size_t r = 0; r < n; ++r) {
            const Complex vrp = v(r, p);
            const Complex vrq = ce * v(r, q);
            v(r, p) = c * vrp - s * vrq;
            v(r, q) = s * vrp + c * vrq;
          }
        }
      }
    }
    converged = off_norm() <= target;
  }
  if (!converged) {
    throw NumericalFailure("Jacobi eigensolver did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.values.reserve(n);
  for (auto i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  return hermitian_eigensystem(m, false).values;
}

}  // namespace partent
