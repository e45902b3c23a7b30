// Small dense matrices and vectors over Rat. Sizes here are tiny
// ((n+1) x (n+1) with n <= 16), so plain Gauss-Jordan is all we need.

#ifndef WEYL_LINALG_HPP_
#define WEYL_LINALG_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "weyl/rational.hpp"

namespace weyl {

using Vec = std::vector<Rat>;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rat& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
      }
    return c;
  }

  Vec apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    Mat work(*this), inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!work.at(r, col).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::domain_error("singular matrix");
      work.swap_rows(col, piv);
      inv.swap_rows(col, piv);
      Rat p = work.at(col, col);
      work.scale_row(col, p);
      inv.scale_row(col, p);
      for (int r = 0; r < n; ++r) {
        if (r == col || work.at(r, col).is_zero()) continue;
        Rat f = work.at(r, col);
        work.sub_scaled_row(r, col, f);
        inv.sub_scaled_row(r, col, f);
      }
    }
    return inv;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void scale_row(int i, const Rat& pivot) {
    for (int c = 0; c < cols_; ++c) at(i, c) /= pivot;
  }
  void sub_scaled_row(int dst, int src, const Rat& f) {
    for (int c = 0; c < cols_; ++c) at(dst, c) -= f * at(src, c);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline Rat dot(const Vec& u, const Mat& form, const Vec& v) {
  Rat s;
  Vec fv = form.apply(v);
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * fv[i];
  return s;
}

// One-dimensional kernel of a square matrix, scaled to coprime positive
// integers. Throws if the kernel is not exactly one-dimensional.
Vec kernel_vector(const Mat& m);

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = v.size();
    RatHash rh;
    for (const Rat& x : v) h = h * 1099511628211ULL + rh(x);
    return h;
  }
};

std::string vec_str(const Vec& v);

}  // namespace weyl

#endif
