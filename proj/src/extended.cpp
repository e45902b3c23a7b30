#include "weyl/extended.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace weyl {

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != int(i)) return false;
  return true;
}

int DiagramAutomorphism::image_of(int label) const {
  return ctx->label_of(perm[ctx->index_of(label)]);
}

std::string DiagramAutomorphism::cycles() const {
  if (is_identity()) return "id";
  // cycles sorted by and started at their smallest node label
  std::vector<std::vector<int>> cyc;
  std::vector<bool> used(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (used[i] || perm[i] == int(i)) continue;
    std::vector<int> labels;
    std::size_t j = i;
    while (!used[j]) {
      used[j] = true;
      labels.push_back(ctx->label_of(int(j)));
      j = std::size_t(perm[j]);
    }
    auto min_it = std::min_element(labels.begin(), labels.end());
    std::rotate(labels.begin(), min_it, labels.end());
    cyc.push_back(std::move(labels));
  }
  std::sort(cyc.begin(), cyc.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  std::string s;
  for (const auto& labels : cyc) {
    s += "(";
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (k) s += " ";
      s += std::to_string(labels[k]);
    }
    s += ")";
  }
  return s;
}

namespace {

Mat perm_matrix(const RootDatum& d, const std::vector<int>& perm) {
  Mat m(d.num_nodes(), d.num_nodes());
  for (int i = 0; i < d.num_nodes(); ++i) m.at(perm[i], i) = Rat(1);
  return m;
}

}  // namespace

DiagramAutomorphism identity_automorphism(const RootDatum& d) {
  std::vector<int> perm(d.num_nodes());
  for (int i = 0; i < d.num_nodes(); ++i) perm[i] = i;
  return DiagramAutomorphism{&d, perm, Mat::identity(d.num_nodes())};
}

DiagramAutomorphism automorphism_from_label_map(const RootDatum& d,
                                                const std::vector<std::pair<int, int>>& map) {
  DiagramAutomorphism a = identity_automorphism(d);
  for (auto& [from, to] : map) a.perm[d.index_of(from)] = d.index_of(to);
  a.mat = perm_matrix(d, a.perm);
  return a;
}

namespace {

std::vector<DiagramAutomorphism> find_automorphisms(const RootDatum& d) {
  const int N = d.num_nodes();
  const Mat& a = d.cartan();

  // node invariant: sorted multiset of off-diagonal entry pairs
  auto signature = [&](int i) {
    std::vector<std::pair<std::int64_t, std::int64_t>> sig;
    for (int j = 0; j < N; ++j)
      if (j != i && !(a.at(i, j).is_zero() && a.at(j, i).is_zero()))
        sig.emplace_back(a.at(i, j).num(), a.at(j, i).num());
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> sigs(N);
  for (int i = 0; i < N; ++i) sigs[i] = signature(i);

  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(N, -1);
  std::vector<bool> taken(N, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == N) {
      out.push_back({&d, perm, perm_matrix(d, perm)});
      return;
    }
    for (int img = 0; img < N; ++img) {
      if (taken[img] || sigs[img] != sigs[i]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a.at(img, perm[j]) == a.at(i, j) && a.at(perm[j], img) == a.at(j, i);
      if (!ok) continue;
      perm[i] = img;
      taken[img] = true;
      self(self, i + 1);
      taken[img] = false;
      perm[i] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const DiagramAutomorphism& x, const DiagramAutomorphism& y) {
    if (x.is_identity() != y.is_identity()) return x.is_identity();
    return x.perm < y.perm;
  });
  return out;
}

struct ExtCache {
  std::vector<DiagramAutomorphism> autos;
  std::map<int, ExtElement> u;                 // weight translations by node
  std::map<int, std::vector<DualVec>> orbits;  // orbits of shortest weights
  std::vector<int> shortest;
};

ExtCache& cache_for(const RootDatum& d) {
  static std::mutex mu;
  static std::map<const RootDatum*, std::unique_ptr<ExtCache>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&d);
  if (it == cache.end()) it = cache.emplace(&d, std::make_unique<ExtCache>()).first;
  return *it->second;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const std::vector<DiagramAutomorphism>& automorphism_group(const RootDatum& d) {
  ExtCache& c = cache_for(d);
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (c.autos.empty()) c.autos = find_automorphisms(d);
  return c.autos;
}

ExtElement ext_identity(const RootDatum& d) {
  ExtElement e;
  e.ctx = &d;
  e.auto_part = identity_automorphism(d);
  e.word = WeylWord(d, {});
  e.mat = Mat::identity(d.num_nodes());
  return e;
}

ExtElement ext_from_word(const WeylWord& w) {
  ExtElement e;
  e.ctx = &w.ctx();
  e.auto_part = identity_automorphism(w.ctx());
  e.word = w;
  e.mat = w.matrix();
  return e;
}

ExtElement normal_form(const RootDatum& d, const Mat& action) {
  const int N = d.num_nodes();
  std::vector<int> record;
  Mat m = descend_to_residual(d, action, record);
  // residual must be a Cartan-preserving permutation of the simple system
  std::vector<int> perm(N, -1);
  for (int j = 0; j < N; ++j) {
    int one = -1;
    for (int i = 0; i < N; ++i) {
      if (m.at(i, j).is_zero()) continue;
      if (m.at(i, j) != Rat(1) || one >= 0) throw Error("normal_form: residual not a permutation");
      one = i;
    }
    if (one < 0) throw Error("normal_form: residual not a permutation");
    perm[j] = one;
  }
  const Mat& a = d.cartan();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (a.at(perm[i], perm[j]) != a.at(i, j))
        throw Error("normal_form: residual does not preserve the Cartan matrix");

  ExtElement e;
  e.ctx = &d;
  e.auto_part = DiagramAutomorphism{&d, perm, m};
  std::vector<int> letters(record.rbegin(), record.rend());
  e.word = WeylWord(d, std::move(letters));
  e.mat = action;
  return e;
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("ext_mul: mixed contexts");
  return normal_form(*a.ctx, a.mat * b.mat);
}

ExtElement ext_inverse(const ExtElement& a) { return normal_form(*a.ctx, a.mat.inverse()); }

ExtElement ext_pow(const ExtElement& a, int e) {
  Mat m = Mat::identity(a.ctx->num_nodes());
  Mat base = e >= 0 ? a.mat : a.mat.inverse();
  for (int i = 0; i < std::abs(e); ++i) m = m * base;
  return normal_form(*a.ctx, m);
}

const ExtElement& weight_translation(const RootDatum& d, int j) {
  if (!d.is_affine()) throw NotAffine("weight_translation: finite context");
  if (j < 1 || j > d.rank()) throw InvalidNode("weight_translation: index " + std::to_string(j));
  ExtCache& c = cache_for(d);
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = c.u.find(j);
  if (it == c.u.end()) {
    Vec h(d.rank());
    h[j - 1] = Rat(1);
    it = c.u.emplace(j, normal_form(d, weight_translation_matrix(d, h))).first;
  }
  return it->second;
}

std::vector<DualVec> orbit(const DualVec& f, std::uint64_t cap) {
  const RootDatum& d = *f.ctx;
  std::unordered_map<Vec, int, VecHash> seen;
  std::vector<Vec> states{f.coords};
  seen.emplace(f.coords, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    Vec cur = states[queue.front()];
    queue.pop_front();
    for (int j = 1; j <= d.rank(); ++j) {
      Vec img = d.reflection_dual(j).apply(cur);
      if (seen.emplace(img, int(states.size())).second) {
        if (states.size() >= cap)
          throw OrbitBoundExceeded("orbit: exceeded cap " + std::to_string(cap));
        states.push_back(img);
        queue.push_back(int(states.size()) - 1);
      }
    }
  }
  std::vector<DualVec> out;
  out.reserve(states.size());
  for (Vec& v : states) out.push_back(DualVec{&d, std::move(v)});
  return out;
}

std::uint64_t orbit_size(const DualVec& f, std::uint64_t cap) { return orbit(f, cap).size(); }

std::uint64_t weyl_group_order(const RootDatum& d) {
  const int n = d.rank();
  auto fact = [](int k) {
    std::uint64_t r = 1;
    for (int i = 2; i <= k; ++i) r *= std::uint64_t(i);
    return r;
  };
  switch (d.family()) {
    case Family::A:
      return fact(n + 1);
    case Family::B:
    case Family::C:
      return (std::uint64_t(1) << n) * fact(n);
    case Family::D:
      return (std::uint64_t(1) << (n - 1)) * fact(n);
    case Family::E:
      if (n == 6) return 51840;          // 2^7 3^4 5
      if (n == 7) return 2903040;        // 2^10 3^4 5 7
      return 696729600;                  // 2^14 3^5 5^2 7
    case Family::F:
      return 1152;  // 2^7 3^2
    case Family::G:
      return 12;
  }
  throw Error("weyl_group_order: unreachable");
}

std::uint64_t stabilizer_order(const DualVec& f, std::uint64_t cap) {
  std::uint64_t w = weyl_group_order(*f.ctx);
  std::uint64_t o = orbit_size(f, cap);
  if (o == 0 || w % o != 0) throw Error("stabilizer_order: orbit size does not divide |W|");
  return w / o;
}

std::vector<int> shortest_weight_indices(const RootDatum& d) {
  ExtCache& c = cache_for(d.affine_datum());
  std::lock_guard<std::mutex> lock(cache_mutex());
  if (c.shortest.empty()) {
    const Mat& g = d.gram();
    Rat best = g.at(0, 0);
    for (int i = 1; i < d.rank(); ++i)
      if (g.at(i, i) < best) best = g.at(i, i);
    for (int i = 0; i < d.rank(); ++i)
      if (g.at(i, i) == best) c.shortest.push_back(i + 1);
  }
  return c.shortest;
}

bool is_basic(const ExtElement& e, std::uint64_t cap) {
  const RootDatum& d = *e.ctx;
  std::optional<DualVec> h = translation_vector(d, e.mat);
  if (!h) return false;
  bool zero = true;
  for (const Rat& x : h->coords) zero = zero && x.is_zero();
  if (zero) return false;
  ExtCache& c = cache_for(d);
  for (int j : shortest_weight_indices(d)) {
    std::lock_guard<std::mutex> lock(cache_mutex());
    if (!c.orbits.count(j)) c.orbits.emplace(j, orbit(fundamental_weight(d, j), cap));
    for (const DualVec& v : c.orbits[j])
      if (v.coords == h->coords) return true;
  }
  return false;
}

std::optional<DualVec> translation_vector(const ExtElement& e) {
  return translation_vector(*e.ctx, e.mat);
}

}  // namespace weyl
