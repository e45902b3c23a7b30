#include "weyl/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace weyl {

WeylWord::WeylWord(const RootDatum& d, std::vector<int> letters)
    : ctx_(&d), letters_(std::move(letters)) {
  mat_ = Mat::identity(d.num_nodes());
  for (int l : letters_) mat_ = mat_ * d.reflection(l);
}

WeylWord WeylWord::inverse() const {
  std::vector<int> rev(letters_.rbegin(), letters_.rend());
  return WeylWord(*ctx_, std::move(rev));
}

WeylWord operator*(const WeylWord& a, const WeylWord& b) {
  if (&a.ctx() != &b.ctx()) throw ContextMismatch("word product: mixed contexts");
  std::vector<int> letters = a.letters_;
  letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
  return WeylWord(a.ctx(), std::move(letters));
}

std::string WeylWord::str() const {
  if (letters_.empty()) return "e";
  bool compact = std::all_of(letters_.begin(), letters_.end(), [](int l) { return l <= 9; });
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i) s += " ";
    if (!compact) s += "s";
    s += std::to_string(letters_[i]);
  }
  return s;
}

RootVec act(const WeylWord& w, const RootVec& v) {
  check_context(w.ctx(), v, "act");
  return RootVec{&w.ctx(), w.matrix().apply(v.coords)};
}

DualVec act_dual(const RootDatum& d, const Mat& primal, const DualVec& f) {
  if (!d.is_affine()) throw NotAffine("act_dual: matrix overload needs an affine context");
  check_context(d, f, "act_dual");
  return DualVec{&d, d.dual_matrix(primal).apply(f.coords)};
}

DualVec act_dual(const WeylWord& w, const DualVec& f) {
  const RootDatum& d = w.ctx();
  if (d.is_affine()) return act_dual(d, w.matrix(), f);
  WeylWord lifted(d.affine_datum(), w.letters());
  return act_dual(d.affine_datum(), lifted.matrix(), f);
}

Mat descend_to_residual(const RootDatum& d, Mat action, std::vector<int>& record) {
  const int N = d.num_nodes();
  for (;;) {
    int descent = -1;
    for (int label = 0; label <= d.rank() && descent < 0; ++label) {
      if (label == 0 && !d.is_affine()) continue;
      int j = d.index_of(label);
      bool nonpos = true, nonzero = false;
      for (int i = 0; i < N; ++i) {
        int s = action.at(i, j).sign();
        if (s > 0) {
          nonpos = false;
          break;
        }
        if (s < 0) nonzero = true;
      }
      if (nonpos && nonzero) descent = label;
    }
    if (descent < 0) return action;
    action = action * d.reflection(descent);
    record.push_back(descent);
  }
}

ReducedWord reduce_action(const RootDatum& d, const Mat& action) {
  std::vector<int> record;
  Mat residual = descend_to_residual(d, action, record);
  if (!residual.is_identity())
    throw Error("reduce_action: residual is not the identity (element not in W^(1))");
  std::vector<int> letters(record.rbegin(), record.rend());
  return ReducedWord{int(letters.size()), WeylWord(d, std::move(letters))};
}

ReducedWord length_and_reduced(const WeylWord& w) { return reduce_action(w.ctx(), w.matrix()); }

WeylWord make_translation(const RootVec& beta, int level_bound) {
  const RootDatum& d = *beta.ctx;
  if (!d.is_affine()) throw NotAffine("make_translation: finite context");
  if (!is_root(beta)) throw NotARoot("make_translation: " + vec_str(beta.coords));
  AffineComponents ac = affine_components(beta);
  if (ac.level.is_zero())
    throw ZeroLevel("make_translation: beta has level 0 (s_alpha s_alpha = identity)");
  RootVec alpha = zero_vec(d);
  for (int i = 0; i < d.rank(); ++i) alpha.coords[i] = ac.finite_part.coords[i];
  std::vector<int> letters = reflection_word(alpha, level_bound);
  std::vector<int> sb = reflection_word(beta, level_bound);
  letters.insert(letters.end(), sb.begin(), sb.end());
  return WeylWord(d, std::move(letters));
}

const WeylWord& simple_translation(const RootDatum& d, int j) {
  if (!d.is_affine()) throw NotAffine("simple_translation: finite context");
  if (!d.diagram().has_node(j)) throw InvalidNode("simple_translation: node " + std::to_string(j));
  static std::mutex mu;
  static std::map<std::pair<const RootDatum*, int>, std::unique_ptr<WeylWord>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(&d, j);
  auto it = cache.find(key);
  if (it == cache.end()) {
    RootVec beta = simple_root(d, j);
    if (j != 0) beta = add(beta, null_root(d));
    it = cache.emplace(key, std::make_unique<WeylWord>(make_translation(beta))).first;
  }
  return *it->second;
}

WeylWord translation_for_coroot_coeffs(const RootDatum& d, const Vec& k) {
  if (int(k.size()) != d.rank()) throw Error("translation_for_coroot_coeffs: bad length");
  std::vector<int> letters;
  for (int j = 1; j <= d.rank(); ++j) {
    const Rat& kj = k[j - 1];
    if (!kj.is_integer()) throw Error("translation_for_coroot_coeffs: non-integer coefficient");
    const WeylWord& tj = simple_translation(d, j);
    std::vector<int> unit = tj.letters();
    if (kj.sign() < 0) std::reverse(unit.begin(), unit.end());
    for (std::int64_t c = 0; c < std::abs(kj.num()); ++c)
      letters.insert(letters.end(), unit.begin(), unit.end());
  }
  return WeylWord(d, std::move(letters));
}

Mat weight_translation_matrix(const RootDatum& d, const Vec& h_part) {
  if (!d.is_affine()) throw NotAffine("weight_translation_matrix: finite context");
  const int N = d.num_nodes();
  if (int(h_part.size()) != d.rank()) throw Error("weight_translation_matrix: bad length");
  Vec hfull(h_part);
  hfull.push_back(Rat(0));
  Vec ph = d.pairing().apply(hfull);  // <alpha_i, h> per storage index
  Mat m = Mat::identity(N);
  for (int col = 0; col < N; ++col)
    for (int row = 0; row < N; ++row) m.at(row, col) -= ph[col] * d.delta()[row];
  return m;
}

std::optional<DualVec> translation_vector(const RootDatum& d, const Mat& primal) {
  if (!d.is_affine()) throw NotAffine("translation_vector: finite context");
  const int n = d.rank();
  Mat nd = d.dual_matrix(primal);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= n; ++i)
      if (nd.at(i, j) != Rat(i == j ? 1 : 0)) return std::nullopt;
  if (nd.at(n, n) != Rat(1)) return std::nullopt;
  DualVec h = zero_dual(d);
  for (int i = 0; i < n; ++i) h.coords[i] = nd.at(i, n);
  return h;
}

std::optional<DualVec> translation_vector(const WeylWord& w) {
  return translation_vector(w.ctx(), w.matrix());
}

WeylWord conjugate_translation(const WeylWord& w, const WeylWord& t) {
  if (&w.ctx() != &t.ctx()) throw ContextMismatch("conjugate_translation: mixed contexts");
  if (!translation_vector(t))
    throw NotATranslation("conjugate_translation: second argument is not a translation");
  return w * t * w.inverse();
}

TranslationDecomp decompose(const WeylWord& w) {
  const RootDatum& d = w.ctx();
  if (!d.is_affine()) throw NotAffine("decompose: finite context");
  const int n = d.rank();
  Mat nd = d.dual_matrix(w.matrix());
  if (nd.at(n, n) != Rat(1)) throw Error("decompose: element does not preserve X_1");
  Vec h(n);
  for (int i = 0; i < n; ++i) h[i] = nd.at(i, n);
  Vec k = weight_coords_to_coroot_coords(d, h);
  for (const Rat& x : k)
    if (!x.is_integer())
      throw Error("decompose: lattice vector not in Q (element not in W^(1))");
  Mat th = weight_translation_matrix(d, h);
  ReducedWord fin = reduce_action(d, th.inverse() * w.matrix());
  for (int l : fin.reduced.letters())
    if (l == 0) throw Error("decompose: finite part touched node 0");
  TranslationDecomp out;
  out.finite_part = fin.reduced;
  out.coroot_coeffs = k;
  out.lattice_vector = dual_from_weight_coords(d, h);
  // recombination guard: t_h * finite must reproduce the action
  if (th * fin.reduced.matrix() != w.matrix())
    throw Error("decompose: recombination mismatch");
  return out;
}

}  // namespace weyl
