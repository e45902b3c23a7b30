#include "weyl/datum.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace weyl {

RootDatum::RootDatum(const DynkinDiagram& d) : diagram_(d) {
  const int N = d.num_nodes();
  const int n = d.rank;
  cartan_ = cartan_matrix(d);
  lengths_ = root_lengths(d);

  cartan_finite_ = Mat(n, n);
  DynkinDiagram fin = d.affine ? build_diagram(d.family, d.rank, false) : d;
  cartan_finite_ = cartan_matrix(fin);
  cartan_finite_inv_ = cartan_finite_.inverse();
  cartan_finite_tinv_ = cartan_finite_.transposed().inverse();

  bilinear_ = Mat(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) bilinear_.at(i, j) = lengths_[j] * cartan_.at(i, j) / Rat(2);

  if (d.affine) {
    marks_ = weyl::marks(d);
    delta_ = Vec(N);
    for (int i = 0; i < N; ++i) delta_[i] = Rat(marks_[i]);
    // pairing of (alpha_1..alpha_n, alpha_0) against (h_1..h_n, h_delta):
    // <alpha_i,h_j> = delta_ij, <alpha_0,h_j> = -c_j, <alpha_i,h_delta> = 0,
    // <alpha_0,h_delta> = 1.
    pairing_ = Mat(N, N);
    for (int i = 0; i < n; ++i) pairing_.at(i, i) = 1;
    for (int j = 0; j < n; ++j) pairing_.at(n, j) = Rat(-marks_[j]);
    pairing_.at(n, n) = 1;
    pairing_inv_ = pairing_.inverse();
  }

  // (h_i,h_j) = (C^T)^{-1} diag(2/|alpha_k|^2)
  gram_ = Mat(n, n);
  {
    Mat diag(n, n);
    Vec fin_len = root_lengths(fin);
    for (int k = 0; k < n; ++k) diag.at(k, k) = Rat(2) / fin_len[k];
    gram_ = cartan_finite_tinv_ * diag;
  }

  refl_.reserve(N);
  refl_dual_.reserve(N);
  for (int j = 0; j < N; ++j) {
    Mat m = Mat::identity(N);
    for (int i = 0; i < N; ++i) m.at(j, i) -= cartan_.at(i, j);
    refl_.push_back(m);
    if (d.affine) {
      refl_dual_.push_back(pairing_inv_ * m.transposed() * pairing_);
    } else {
      refl_dual_.push_back(m.transposed());
    }
  }
}

const std::vector<std::int64_t>& RootDatum::marks() const {
  if (!is_affine()) throw NotAffine("marks: " + type() + " is not affine");
  return marks_;
}
const Vec& RootDatum::delta() const {
  if (!is_affine()) throw NotAffine("delta: " + type() + " is not affine");
  return delta_;
}
const Mat& RootDatum::pairing() const {
  if (!is_affine()) throw NotAffine("pairing: " + type() + " is not affine");
  return pairing_;
}
const Mat& RootDatum::pairing_inv() const {
  if (!is_affine()) throw NotAffine("pairing: " + type() + " is not affine");
  return pairing_inv_;
}

const Mat& RootDatum::reflection(int label) const { return refl_[index_of(label)]; }
const Mat& RootDatum::reflection_dual(int label) const { return refl_dual_[index_of(label)]; }

Mat RootDatum::dual_matrix(const Mat& primal) const {
  Mat mt = primal.inverse().transposed();
  if (!is_affine()) return mt;
  return pairing_inv_ * mt * pairing_;
}

const RootDatum& RootDatum::get(Family family, int rank, bool affine) {
  static std::mutex mu;
  static std::map<std::tuple<char, int, bool>, std::unique_ptr<RootDatum>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(char(family), rank, affine);
  auto it = registry.find(key);
  if (it == registry.end()) {
    auto datum = std::unique_ptr<RootDatum>(new RootDatum(build_diagram(family, rank, affine)));
    it = registry.emplace(key, std::move(datum)).first;
  }
  return *it->second;
}

const RootDatum& RootDatum::get(const DynkinDiagram& d) {
  return get(d.family, d.rank, d.affine);
}

const RootDatum& RootDatum::finite_datum() const {
  if (!is_affine()) return *this;
  return get(family(), rank(), false);
}
const RootDatum& RootDatum::affine_datum() const {
  if (is_affine()) return *this;
  return get(family(), rank(), true);
}

}  // namespace weyl
