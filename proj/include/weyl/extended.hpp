// Extended affine Weyl group: diagram automorphisms, weight-translation
// generators u_j, the a*w normal form, weight orbits and basic
// translations.

#ifndef WEYL_EXTENDED_HPP_
#define WEYL_EXTENDED_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/words.hpp"

namespace weyl {

constexpr std::uint64_t kDefaultOrbitCap = 1000000;

struct DiagramAutomorphism {
  const RootDatum* ctx = nullptr;
  std::vector<int> perm;  // storage-index permutation: node i |-> perm[i]
  Mat mat;                // permutation action on V^(1)

  bool is_identity() const;
  // Image of a node label under the automorphism.
  int image_of(int label) const;
  std::string cycles() const;  // e.g. "(0 1)", "id"
};

DiagramAutomorphism identity_automorphism(const RootDatum& d);
DiagramAutomorphism automorphism_from_label_map(const RootDatum& d,
                                                const std::vector<std::pair<int, int>>& map);

// All node permutations preserving the (generalized) Cartan matrix;
// identity first, rest ordered lexicographically. Cached per datum.
const std::vector<DiagramAutomorphism>& automorphism_group(const RootDatum& d);

// Element in the unique normal form a * w with a in A and w reduced.
struct ExtElement {
  const RootDatum* ctx = nullptr;
  DiagramAutomorphism auto_part;
  WeylWord word;
  Mat mat;  // auto * word action on V^(1)

  bool same_element(const ExtElement& o) const { return ctx == o.ctx && mat == o.mat; }
  bool in_affine_weyl_group() const { return auto_part.is_identity(); }
};

ExtElement ext_identity(const RootDatum& d);
ExtElement ext_from_word(const WeylWord& w);

// Normalize an arbitrary extended-group action matrix: run the descent
// loop until no simple root is sent negative; the residual must permute
// the simple system.
ExtElement normal_form(const RootDatum& d, const Mat& action);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);
ExtElement ext_inverse(const ExtElement& a);
ExtElement ext_pow(const ExtElement& a, int e);

// u_j, the translation by h_j on X_1, in normal form. Cached per datum.
const ExtElement& weight_translation(const RootDatum& d, int j);

// Orbit of a weight under the finite Weyl group (contragredient action).
std::vector<DualVec> orbit(const DualVec& f, std::uint64_t cap = kDefaultOrbitCap);
std::uint64_t orbit_size(const DualVec& f, std::uint64_t cap = kDefaultOrbitCap);

// |W| from the factored per-family formulas.
std::uint64_t weyl_group_order(const RootDatum& d);

std::uint64_t stabilizer_order(const DualVec& f, std::uint64_t cap = kDefaultOrbitCap);

// Indices j whose fundamental weight has minimal squared length.
std::vector<int> shortest_weight_indices(const RootDatum& d);

// True iff the element translates X_1 by a vector in the W-orbit of a
// shortest fundamental weight.
bool is_basic(const ExtElement& e, std::uint64_t cap = kDefaultOrbitCap);

std::optional<DualVec> translation_vector(const ExtElement& e);

}  // namespace weyl

#endif
