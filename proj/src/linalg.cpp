#include "weyl/linalg.hpp"

#include <numeric>

namespace weyl {

Vec kernel_vector(const Mat& m) {
  int n = m.rows();
  Mat work(m);
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (!work.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(work.at(r, c), work.at(piv, c));
    Rat p = work.at(r, col);
    for (int c = 0; c < n; ++c) work.at(r, c) /= p;
    for (int i = 0; i < n; ++i) {
      if (i == r || work.at(i, col).is_zero()) continue;
      Rat f = work.at(i, col);
      for (int c = 0; c < n; ++c) work.at(i, c) -= f * work.at(r, c);
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
      free_cols.push_back(c);
  if (free_cols.size() != 1) throw std::domain_error("kernel is not one-dimensional");
  int fc = free_cols[0];
  Vec v(n);
  v[fc] = Rat(1);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -work.at(int(i), fc);
  // scale to coprime positive integers
  std::int64_t l = 1;
  for (const Rat& x : v) l = std::lcm(l, x.den());
  std::int64_t g = 0;
  for (Rat& x : v) {
    x *= Rat(l);
    g = std::gcd(g, x.num());
  }
  for (Rat& x : v) x /= Rat(g);
  if (v.back().sign() < 0)
    for (Rat& x : v) x = -x;
  for (const Rat& x : v)
    if (x.sign() <= 0 || !x.is_integer()) throw std::domain_error("kernel vector not positive integral");
  return v;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace weyl
