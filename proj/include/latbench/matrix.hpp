#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <vector>

namespace latbench {

using Cplx = std::complex<double>;

/// Small dense complex matrix, row-major. Sized at runtime; used for group
/// elements (up to 6x6) and represented links (up to 35x35), never in kernel
/// inner loops.
class Mat {
public:
  Mat() = default;
  explicit Mat(int n) : rows_(n), cols_(n), e_(static_cast<size_t>(n) * n) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Cplx& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Cplx& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Cplx a = at(i, k);
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  Mat dagger() const {
    Mat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
  }

  void scale(Cplx s) {
    for (auto& v : e_) v *= s;
  }

  Cplx trace() const {
    Cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : e_) m = std::max(m, std::abs(v));
    return m;
  }

  /// Determinant by LU with partial pivoting.
  Cplx det() const {
    assert(rows_ == cols_);
    Mat a = *this;
    const int n = rows_;
    Cplx d = 1.0;
    for (int k = 0; k < n; ++k) {
      int piv = k;
      double best = std::abs(a.at(k, k));
      for (int i = k + 1; i < n; ++i) {
        const double m = std::abs(a.at(i, k));
        if (m > best) {
          best = m;
          piv = i;
        }
      }
      if (best == 0.0) return 0.0;
      if (piv != k) {
        for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
        d = -d;
      }
      d *= a.at(k, k);
      for (int i = k + 1; i < n; ++i) {
        const Cplx f = a.at(i, k) / a.at(k, k);
        for (int j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      }
    }
    return d;
  }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cplx> e_;
};

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).max_abs(); }

/// max-norm of U†U - 1.
inline double deviation_from_unitary(const Mat& u) {
  return max_abs_diff(u.dagger() * u, Mat::identity(u.cols()));
}

/// Largest |imag| over all entries.
inline double max_imag(const Mat& m) {
  double x = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) x = std::max(x, std::abs(m.at(i, j).imag()));
  return x;
}

}  // namespace latbench
