#include "weyl/dualspace.hpp"

namespace weyl {

void check_context(const RootDatum& d, const DualVec& f, const char* where) {
  if (f.ctx != &d.affine_datum())
    throw ContextMismatch(std::string(where) + ": dual vector belongs to " +
                          (f.ctx ? f.ctx->type() : std::string("<null>")) + ", expected " +
                          d.affine_datum().type());
}

DualVec zero_dual(const RootDatum& d) {
  const RootDatum& a = d.affine_datum();
  return DualVec{&a, Vec(a.num_nodes())};
}

DualVec fundamental_weight(const RootDatum& d, int j) {
  if (j < 1 || j > d.rank())
    throw InvalidNode("fundamental_weight: index " + std::to_string(j));
  DualVec f = zero_dual(d);
  f.coords[j - 1] = Rat(1);
  return f;
}

DualVec h_delta(const RootDatum& d) {
  DualVec f = zero_dual(d);
  f.coords[d.rank()] = Rat(1);
  return f;
}

DualVec dual_from_weight_coords(const RootDatum& d, const Vec& h_part) {
  if (int(h_part.size()) != d.rank()) throw Error("dual_from_weight_coords: bad length");
  DualVec f = zero_dual(d);
  for (int i = 0; i < d.rank(); ++i) f.coords[i] = h_part[i];
  return f;
}

namespace {

// Lift a finite-context vector to the affine datum (level-0 coordinates).
RootVec lift(const RootVec& v) {
  const RootDatum& d = *v.ctx;
  if (d.is_affine()) return v;
  const RootDatum& a = d.affine_datum();
  RootVec out = zero_vec(a);
  for (int i = 0; i < d.rank(); ++i) out.coords[i] = v.coords[i];
  return out;
}

}  // namespace

Rat pair(const RootVec& v, const DualVec& f) {
  RootVec va = lift(v);
  const RootDatum& a = *va.ctx;
  check_context(a, f, "pair");
  return dot(va.coords, a.pairing(), f.coords);
}

Rat x_level(const DualVec& f) { return f.coords[f.ctx->rank()]; }

DualVec pi_map(const RootVec& v) {
  RootVec va = lift(v);
  const RootDatum& a = *va.ctx;
  return DualVec{&a, a.pairing_inv().apply(a.bilinear().apply(va.coords))};
}

DualVec coroot(const RootVec& beta) {
  if (!is_root(beta)) throw NotARoot("coroot: not a root: " + vec_str(beta.coords));
  Rat n2 = norm2(beta);
  DualVec f = pi_map(beta);
  for (Rat& x : f.coords) x = x * Rat(2) / n2;
  return f;
}

Vec coroot_coefficients(const RootVec& beta) {
  DualVec f = coroot(beta);
  Vec h(f.coords.begin(), f.coords.begin() + beta.ctx->rank());
  return weight_coords_to_coroot_coords(*beta.ctx, h);
}

Vec weight_in_coroots(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank()) throw InvalidNode("weight_in_coroots: index " + std::to_string(i));
  const Mat& m = d.cartan_finite_tinv();
  Vec row(d.rank());
  for (int k = 0; k < d.rank(); ++k) row[k] = m.at(i - 1, k);
  return row;
}

Vec weight_coords_to_coroot_coords(const RootDatum& d, const Vec& h_part) {
  return d.cartan_finite_inv().apply(h_part);
}

Vec coroot_coords_to_weight_coords(const RootDatum& d, const Vec& k) {
  return d.cartan_finite().apply(k);
}

Rat x0_form(const DualVec& f, const DualVec& g) {
  if (f.ctx != g.ctx) throw ContextMismatch("x0_form: mixed contexts");
  if (x_level(f) != x_level(g))
    throw NotInSameXk("x0_form: levels " + x_level(f).str() + " and " + x_level(g).str());
  const RootDatum& d = *f.ctx;
  Vec a(f.coords.begin(), f.coords.begin() + d.rank());
  Vec b(g.coords.begin(), g.coords.begin() + d.rank());
  return dot(a, d.gram(), b);
}

Rat weight_norm2(const DualVec& f) { return x0_form(f, f); }

Vec coroot_norms(const RootDatum& d) {
  Vec fin_len = root_lengths(build_diagram(d.family(), d.rank(), false));
  Vec out(d.rank());
  for (int i = 0; i < d.rank(); ++i) out[i] = Rat(4) / fin_len[i];
  return out;
}

}  // namespace weyl
