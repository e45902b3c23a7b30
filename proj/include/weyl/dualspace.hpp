// The dual space V^(1)* with basis (h_1..h_n, h_delta), the pairing with
// V^(1), the pi map onto X0, coroots, and the positive definite form on X0.

#ifndef WEYL_DUALSPACE_HPP_
#define WEYL_DUALSPACE_HPP_

#include <string>
#include <vector>

#include "weyl/rootspace.hpp"

namespace weyl {

// Coordinates over (h_1..h_n, h_delta). The context is always the affine
// datum of the type; operations on finite input lift to it.
struct DualVec {
  const RootDatum* ctx = nullptr;
  Vec coords;

  bool operator==(const DualVec& o) const { return ctx == o.ctx && coords == o.coords; }
};

DualVec zero_dual(const RootDatum& d);
DualVec fundamental_weight(const RootDatum& d, int j);  // h_j, 1 <= j <= n
DualVec h_delta(const RootDatum& d);
DualVec dual_from_weight_coords(const RootDatum& d, const Vec& h_part);

// <v, f> for v in the affine simple basis and f over (h_1..h_n, h_delta).
Rat pair(const RootVec& v, const DualVec& f);

// X_k membership: <delta, f> = k.
Rat x_level(const DualVec& f);

// pi(u): the unique dual vector with <v, pi(u)> = v.u; kernel = Rad(V^(1)).
DualVec pi_map(const RootVec& v);

// pi of the coroot 2*beta/|beta|^2; requires beta to be a root.
DualVec coroot(const RootVec& beta);

// Coefficients k_i with pi(beta-check) = sum k_i pi(alpha_i-check).
Vec coroot_coefficients(const RootVec& beta);

// h_i over the simple coroots: row i of (C^T)^{-1}.
Vec weight_in_coroots(const RootDatum& d, int i);

// Lattice conversions on X0: weight coordinates h vs coroot coordinates k
// with h = C k (columns of C are the coroots' weight coordinates).
Vec weight_coords_to_coroot_coords(const RootDatum& d, const Vec& h_part);
Vec coroot_coords_to_weight_coords(const RootDatum& d, const Vec& k);

// Positive definite form on X0; both arguments must lie in the same X_k
// (computed on the differences from k*h_delta).
Rat x0_form(const DualVec& f, const DualVec& g);
Rat weight_norm2(const DualVec& f);

// |pi(alpha_i-check)|^2 = 4/|alpha_i|^2 over the finite nodes.
Vec coroot_norms(const RootDatum& d);

void check_context(const RootDatum& d, const DualVec& f, const char* where);

}  // namespace weyl

#endif
