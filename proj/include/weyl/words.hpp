// Group elements of W and W^(1) as words in the simple reflections.
// Equality is decided by the exact action matrix on V^(1) (the reflection
// representation is faithful). Composition is right-to-left: the word
// "s2 s3" applied to v is s2(s3(v)).

#ifndef WEYL_WORDS_HPP_
#define WEYL_WORDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "weyl/dualspace.hpp"
#include "weyl/rootspace.hpp"

namespace weyl {

class WeylWord {
 public:
  WeylWord() = default;
  WeylWord(const RootDatum& d, std::vector<int> letters);

  const RootDatum& ctx() const { return *ctx_; }
  const std::vector<int>& letters() const { return letters_; }
  const Mat& matrix() const { return mat_; }
  Mat dual_matrix() const { return ctx_->dual_matrix(mat_); }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  WeylWord inverse() const;
  friend WeylWord operator*(const WeylWord& a, const WeylWord& b);

  // Group-element equality: identical action on V^(1).
  bool same_element(const WeylWord& o) const { return ctx_ == o.ctx_ && mat_ == o.mat_; }

  std::string str() const;  // compressed digits when all labels are <= 9

 private:
  const RootDatum* ctx_ = nullptr;
  std::vector<int> letters_;
  Mat mat_;
};

RootVec act(const WeylWord& w, const RootVec& v);
DualVec act_dual(const WeylWord& w, const DualVec& f);
DualVec act_dual(const RootDatum& d, const Mat& primal, const DualVec& f);

struct ReducedWord {
  int length = 0;
  WeylWord reduced;
};

// Greedy descent: while some alpha_i is sent negative, multiply by s_i
// (smallest node label first). Returns the residual matrix; `record`
// collects the letters in descent order.
Mat descend_to_residual(const RootDatum& d, Mat action, std::vector<int>& record);

// Descent on a word; the residual must be the identity.
ReducedWord length_and_reduced(const WeylWord& w);
ReducedWord reduce_action(const RootDatum& d, const Mat& action);

// t_beta = s_alpha s_beta for beta = alpha + m*delta, m != 0.
WeylWord make_translation(const RootVec& beta, int level_bound = kDefaultLevelBound);

// t_j = t_{alpha_j + delta} for j >= 1; t_0 = t_{alpha_0}. Cached.
const WeylWord& simple_translation(const RootDatum& d, int j);

// Word for the product of t_j^{k_j} over the coroot coordinates k.
WeylWord translation_for_coroot_coeffs(const RootDatum& d, const Vec& k);

// Primal action matrix of the translation by a lattice vector given in
// weight coordinates: v |-> v - <v,h> delta.
Mat weight_translation_matrix(const RootDatum& d, const Vec& h_part);

// If the dual action is f |-> f + <delta,f> h for a constant h in X0,
// return h; otherwise nullopt.
std::optional<DualVec> translation_vector(const RootDatum& d, const Mat& primal);
std::optional<DualVec> translation_vector(const WeylWord& w);

// w t w^{-1}; requires t to be a translation.
WeylWord conjugate_translation(const WeylWord& w, const WeylWord& t);

struct TranslationDecomp {
  WeylWord finite_part;    // reduced word over the finite parabolic (no 0)
  Vec coroot_coeffs;       // integer coordinates over the simple coroots
  DualVec lattice_vector;  // the same lattice point in weight coordinates
};

// Semidirect decomposition w = t_h * finite_part in W^(1) = W x| Q.
TranslationDecomp decompose(const WeylWord& w);

}  // namespace weyl

#endif
