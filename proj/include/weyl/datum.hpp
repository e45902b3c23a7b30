// Shared per-type context: the Cartan data of one diagram together with
// every matrix the algorithms keep reusing (bilinear form, dual pairing,
// simple-reflection actions on both sides, weight Gram matrix). Instances
// are interned per (family, rank, affine) and immutable after
// construction, so vectors and words can hold plain pointers and all
// operations are safe to run concurrently.

#ifndef WEYL_DATUM_HPP_
#define WEYL_DATUM_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "weyl/dynkin.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

class RootDatum {
 public:
  static const RootDatum& get(Family family, int rank, bool affine);
  static const RootDatum& get(const DynkinDiagram& d);
  static const RootDatum& get(const std::string& type) { return get(parse_type(type)); }

  const DynkinDiagram& diagram() const { return diagram_; }
  Family family() const { return diagram_.family; }
  int rank() const { return diagram_.rank; }
  bool is_affine() const { return diagram_.affine; }
  int num_nodes() const { return diagram_.num_nodes(); }
  std::string type() const { return type_string(diagram_); }

  int index_of(int label) const { return diagram_.index_of(label); }
  int label_of(int index) const { return diagram_.nodes[index]; }
  // Node labels in storage order: 1..n, then 0 when affine.
  const std::vector<int>& labels() const { return diagram_.nodes; }

  const Mat& cartan() const { return cartan_; }
  const Mat& cartan_finite() const { return cartan_finite_; }
  const Mat& cartan_finite_inv() const { return cartan_finite_inv_; }
  const Mat& cartan_finite_tinv() const { return cartan_finite_tinv_; }
  const Vec& lengths() const { return lengths_; }
  const Mat& bilinear() const { return bilinear_; }

  // Affine-only data; throw NotAffine otherwise.
  const std::vector<std::int64_t>& marks() const;
  const Vec& delta() const;  // delta over (alpha_1..alpha_n, alpha_0)
  const Mat& pairing() const;
  const Mat& pairing_inv() const;

  // Gram matrix (h_i, h_j) of the fundamental weights on X0.
  const Mat& gram() const { return gram_; }

  const Mat& reflection(int label) const;       // action on V coords
  const Mat& reflection_dual(int label) const;  // contragredient action

  // Contragredient transport of an arbitrary invertible action matrix.
  Mat dual_matrix(const Mat& primal) const;

  const RootDatum& finite_datum() const;
  const RootDatum& affine_datum() const;

 private:
  explicit RootDatum(const DynkinDiagram& d);
  RootDatum(const RootDatum&) = delete;
  RootDatum& operator=(const RootDatum&) = delete;

  DynkinDiagram diagram_;
  Mat cartan_, cartan_finite_, cartan_finite_inv_, cartan_finite_tinv_;
  Vec lengths_;
  Mat bilinear_;
  std::vector<std::int64_t> marks_;
  Vec delta_;
  Mat pairing_, pairing_inv_;
  Mat gram_;
  std::vector<Mat> refl_, refl_dual_;  // indexed by storage index
};

}  // namespace weyl

#endif
