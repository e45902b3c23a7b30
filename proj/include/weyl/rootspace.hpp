// The representation space V (finite) / V^(1) (affine) over the simple
// basis, its bilinear form, root enumeration with long/short tags and
// witness words, and reflection words for arbitrary (affine) roots.

#ifndef WEYL_ROOTSPACE_HPP_
#define WEYL_ROOTSPACE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/datum.hpp"

namespace weyl {

constexpr int kDefaultLevelBound = 8;

// Coordinate vector over the simple basis (alpha_1..alpha_n[, alpha_0]).
// Rational coordinates are allowed; roots have integer coordinates.
struct RootVec {
  const RootDatum* ctx = nullptr;
  Vec coords;

  bool operator==(const RootVec& o) const { return ctx == o.ctx && coords == o.coords; }
};

RootVec simple_root(const RootDatum& d, int label);
RootVec zero_vec(const RootDatum& d);
RootVec null_root(const RootDatum& d);  // delta (affine only)

// Compressed digit notation: "123" = alpha_1+alpha_2+alpha_3,
// repeated digits add up ("12233" = alpha_1+2alpha_2+2alpha_3).
RootVec root_from_digits(const RootDatum& d, const std::string& digits);

RootVec add(const RootVec& a, const RootVec& b);
RootVec sub(const RootVec& a, const RootVec& b);
RootVec scale(const Rat& c, const RootVec& a);

// Symmetric bilinear form matrix (alpha_i.alpha_j) of the context.
const Mat& bilinear_form(const RootDatum& d);
Rat inner(const RootVec& a, const RootVec& b);
Rat norm2(const RootVec& a);

// Action of the simple reflection s_label on a coordinate vector.
RootVec simple_reflection(const RootDatum& d, int label, const RootVec& v);

bool is_positive(const RootVec& v);  // nonzero, all coordinates >= 0
bool is_negative(const RootVec& v);

struct PositiveRoot {
  std::vector<std::int64_t> coords;  // over alpha_1..alpha_n
  Rat norm;
  bool long_root = true;
  int height = 0;
  std::vector<int> witness;  // word taking the matching highest root here
};

struct RootSystemTable {
  std::vector<PositiveRoot> positive;
  int num_long = 0, num_short = 0;
  int highest_long = -1;            // index into positive
  int highest_short = -1;           // -1 when simply laced
  bool contains(const std::vector<std::int64_t>& coords) const;
  const PositiveRoot* find(const std::vector<std::int64_t>& coords) const;
};

// Breadth-first closure of Delta under the simple reflections; cached per
// datum. Requires a finite diagram.
const RootSystemTable& enumerate_roots(const RootDatum& d);

RootVec highest_root(const RootDatum& d);
RootVec highest_short_root(const RootDatum& d);  // throws NoShortRoots for ADE

// Split an affine-context vector as finite_part + level * delta.
struct AffineComponents {
  RootVec finite_part;  // finite context, n coordinates
  Rat level;
};
AffineComponents affine_components(const RootVec& v);

// Root membership: integer vector whose finite part lies in Phi (affine
// context: any integer level; finite context: level absent).
bool is_root(const RootVec& v);

// Word w i w^{-1} with w(alpha_i) = beta, found by BFS over the positive
// roots from the simple system. Throws NotARoot / LevelBoundExceeded.
std::vector<int> reflection_word(const RootVec& beta, int level_bound = kDefaultLevelBound);

void check_context(const RootDatum& d, const RootVec& v, const char* where);

}  // namespace weyl

#endif
