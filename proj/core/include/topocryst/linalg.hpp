#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "topocryst/rational.hpp"

namespace topocryst {

template <class S>
using Vec = std::vector<S>;

namespace scalar {

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

/// |x| <= tol. With tol = Rational(0) this is an exact zero test.
template <class S>
bool within(const S& x, const S& tol) {
  return abs_value(x) <= tol;
}

}  // namespace scalar

/// Small dense row-major matrix. Sized at construction, never resized.
template <class S>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Mat from_rows(std::initializer_list<std::initializer_list<S>> rows) {
    Mat m(static_cast<int>(rows.size()),
          rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (const auto& x : row) m(r, c++) = x;
      ++r;
    }
    return m;
  }

  static Mat from_columns(const std::vector<Vec<S>>& cols) {
    Mat m(cols.empty() ? 0 : static_cast<int>(cols.front().size()),
          static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c)
      for (int r = 0; r < m.rows(); ++r) m(r, c) = cols[c][r];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }

  Vec<S> column(int c) const {
    Vec<S> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  Vec<S> row(int r) const {
    Vec<S> v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Mat<S> operator*(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik == S(0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class S>
Vec<S> operator*(const Mat<S>& a, const Vec<S>& x) {
  Vec<S> y(a.rows(), S(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

template <class S>
Mat<S> operator+(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class S>
Mat<S> operator-(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class S>
Mat<S> operator*(const S& s, const Mat<S>& a) {
  Mat<S> c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <class S>
Mat<S> transpose(const Mat<S>& a) {
  Mat<S> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

// -- vector helpers ---------------------------------------------------------

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
  S s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class S>
S norm_sq(const Vec<S>& a) {
  return dot(a, a);
}

template <class S>
Vec<S> add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

template <class S>
Vec<S> sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

template <class S>
Vec<S> negated(const Vec<S>& a) {
  Vec<S> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return c;
}

template <class S>
Vec<S> scaled(const Vec<S>& a, const S& s) {
  Vec<S> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

template <class S>
bool vec_within(const Vec<S>& a, const Vec<S>& b, const S& tol) {
  for (size_t i = 0; i < a.size(); ++i)
    if (!scalar::within(a[i] - b[i], tol)) return false;
  return true;
}

template <class S>
bool lex_less(const Vec<S>& a, const Vec<S>& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

// -- Gaussian elimination family --------------------------------------------

namespace detail {

/// Row-echelon elimination in place. Returns pivot column per pivot row.
template <class S>
std::vector<int> eliminate(Mat<S>& a, const S& tol) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int best = -1;
    for (int i = r; i < a.rows(); ++i) {
      if (scalar::within(a(i, c), tol)) continue;
      if (best < 0 || scalar::abs_value(a(best, c)) < scalar::abs_value(a(i, c)))
        best = i;
    }
    if (best < 0) continue;
    if (best != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(best, j), a(r, j));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || scalar::within(a(i, c), tol)) continue;
      S f = a(i, c) / a(r, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      a(i, c) = S(0);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

template <class S>
int rank(Mat<S> a, const S& tol) {
  return static_cast<int>(detail::eliminate(a, tol).size());
}

template <class S>
S determinant(Mat<S> a, const S& tol) {
  const int n = a.rows();
  S det(1);
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int i = c; i < n; ++i) {
      if (scalar::within(a(i, c), tol)) continue;
      if (best < 0 || scalar::abs_value(a(best, c)) < scalar::abs_value(a(i, c)))
        best = i;
    }
    if (best < 0) return S(0);
    if (best != c) {
      for (int j = 0; j < n; ++j) std::swap(a(best, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (scalar::within(a(i, c), tol)) continue;
      S f = a(i, c) / a(c, c);
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Solves a x = b for square a; nullopt when a is singular at tolerance tol.
template <class S>
std::optional<Mat<S>> solve(const Mat<S>& a, const Mat<S>& b, const S& tol) {
  const int n = a.rows();
  Mat<S> aug(n, n + b.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  for (int c = 0; c < n; ++c) {
    int best = -1;
    for (int i = c; i < n; ++i) {
      if (scalar::within(aug(i, c), tol)) continue;
      if (best < 0 ||
          scalar::abs_value(aug(best, c)) < scalar::abs_value(aug(i, c)))
        best = i;
    }
    if (best < 0) return std::nullopt;
    if (best != c)
      for (int j = 0; j < aug.cols(); ++j) std::swap(aug(best, j), aug(c, j));
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      if (scalar::within(aug(i, c), tol)) {
        aug(i, c) = S(0);
        continue;
      }
      S f = aug(i, c) / aug(c, c);
      for (int j = c; j < aug.cols(); ++j) aug(i, j) -= f * aug(c, j);
      aug(i, c) = S(0);
    }
  }
  Mat<S> x(n, b.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j) / aug(i, i);
  return x;
}

template <class S>
std::optional<Vec<S>> solve(const Mat<S>& a, const Vec<S>& b, const S& tol) {
  Mat<S> rhs(static_cast<int>(b.size()), 1);
  for (size_t i = 0; i < b.size(); ++i) rhs(static_cast<int>(i), 0) = b[i];
  auto x = solve(a, rhs, tol);
  if (!x) return std::nullopt;
  return x->column(0);
}

template <class S>
std::optional<Mat<S>> inverse(const Mat<S>& a, const S& tol) {
  return solve(a, Mat<S>::identity(a.rows()), tol);
}

/// Basis of the solution space of a x = 0.
template <class S>
std::vector<Vec<S>> nullspace(Mat<S> a, const S& tol) {
  std::vector<int> pivots = detail::eliminate(a, tol);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec<S>> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<S> v(a.cols(), S(0));
    v[free] = S(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      // row r has pivot at pivots[r]
      v[pivots[r]] = -a(static_cast<int>(r), free) / a(static_cast<int>(r), pivots[r]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// G = L D L^T with L unit lower triangular. Requires G symmetric positive
/// definite; returns nullopt otherwise.
template <class S>
std::optional<std::pair<Mat<S>, Vec<S>>> ldlt(const Mat<S>& g, const S& tol) {
  const int n = g.rows();
  Mat<S> l = Mat<S>::identity(n);
  Vec<S> d(n, S(0));
  for (int j = 0; j < n; ++j) {
    S dj = g(j, j);
    for (int k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
    if (scalar::within(dj, tol) || dj < S(0)) return std::nullopt;
    d[j] = dj;
    for (int i = j + 1; i < n; ++i) {
      S x = g(i, j);
      for (int k = 0; k < j; ++k) x -= l(i, k) * l(j, k) * d[k];
      l(i, j) = x / dj;
    }
  }
  return std::make_pair(std::move(l), std::move(d));
}

inline Vec<double> to_double(const Vec<Rational>& v) {
  Vec<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
  return r;
}

inline Mat<double> to_double(const Mat<Rational>& m) {
  Mat<double> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).to_double();
  return r;
}

}  // namespace topocryst
