#include "weyl/rootspace.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_map>

namespace weyl {

namespace {

struct IVecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1099511628211ULL + std::hash<std::int64_t>()(x);
    return h;
  }
};

}  // namespace

void check_context(const RootDatum& d, const RootVec& v, const char* where) {
  if (v.ctx != &d)
    throw ContextMismatch(std::string(where) + ": vector belongs to " +
                          (v.ctx ? v.ctx->type() : std::string("<null>")) + ", expected " +
                          d.type());
}

RootVec simple_root(const RootDatum& d, int label) {
  RootVec v{&d, Vec(d.num_nodes())};
  v.coords[d.index_of(label)] = Rat(1);
  return v;
}

RootVec zero_vec(const RootDatum& d) { return RootVec{&d, Vec(d.num_nodes())}; }

RootVec null_root(const RootDatum& d) { return RootVec{&d, d.delta()}; }

RootVec root_from_digits(const RootDatum& d, const std::string& digits) {
  RootVec v = zero_vec(d);
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("bad digit '" + std::string(1, c) + "' in root");
    v.coords[d.index_of(c - '0')] += Rat(1);
  }
  return v;
}

RootVec add(const RootVec& a, const RootVec& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("add: mixed contexts");
  RootVec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}
RootVec sub(const RootVec& a, const RootVec& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("sub: mixed contexts");
  RootVec r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}
RootVec scale(const Rat& c, const RootVec& a) {
  RootVec r = a;
  for (Rat& x : r.coords) x *= c;
  return r;
}

const Mat& bilinear_form(const RootDatum& d) { return d.bilinear(); }

Rat inner(const RootVec& a, const RootVec& b) {
  if (a.ctx != b.ctx) throw ContextMismatch("inner: mixed contexts");
  return dot(a.coords, a.ctx->bilinear(), b.coords);
}

Rat norm2(const RootVec& a) { return inner(a, a); }

RootVec simple_reflection(const RootDatum& d, int label, const RootVec& v) {
  check_context(d, v, "simple_reflection");
  return RootVec{&d, d.reflection(label).apply(v.coords)};
}

bool is_positive(const RootVec& v) {
  bool nonzero = false;
  for (const Rat& x : v.coords) {
    if (x.sign() < 0) return false;
    if (x.sign() > 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative(const RootVec& v) {
  bool nonzero = false;
  for (const Rat& x : v.coords) {
    if (x.sign() > 0) return false;
    if (x.sign() < 0) nonzero = true;
  }
  return nonzero;
}

bool RootSystemTable::contains(const std::vector<std::int64_t>& coords) const {
  return find(coords) != nullptr;
}

const PositiveRoot* RootSystemTable::find(const std::vector<std::int64_t>& coords) const {
  for (const PositiveRoot& r : positive)
    if (r.coords == coords) return &r;
  return nullptr;
}

namespace {

// s_label acting on an integer coordinate vector, in place.
void reflect_int(const RootDatum& d, int idx, std::vector<std::int64_t>& v) {
  const Mat& a = d.cartan();
  std::int64_t s = 0;
  for (int i = 0; i < d.num_nodes(); ++i) s += a.at(i, idx).num() * v[i];
  v[idx] -= s;
}

RootSystemTable build_table(const RootDatum& d) {
  if (d.is_affine()) throw Error("enumerate_roots: " + d.type() + " is affine");
  const int n = d.rank();
  using IVec = std::vector<std::int64_t>;

  std::unordered_map<IVec, int, IVecHash> seen;
  std::vector<IVec> all;
  std::deque<int> queue;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    seen.emplace(e, int(all.size()));
    all.push_back(e);
    queue.push_back(int(all.size()) - 1);
  }
  while (!queue.empty()) {
    IVec cur = all[queue.front()];
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      IVec img = cur;
      reflect_int(d, j, img);
      if (seen.emplace(img, int(all.size())).second) {
        all.push_back(img);
        queue.push_back(int(all.size()) - 1);
      }
    }
  }

  RootSystemTable table;
  Rat max_norm(0);
  for (const IVec& r : all) {
    if (!std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) continue;
    PositiveRoot pr;
    pr.coords = r;
    Vec rc(n);
    for (int i = 0; i < n; ++i) rc[i] = Rat(r[i]);
    pr.norm = dot(rc, d.bilinear(), rc);
    pr.height = 0;
    for (auto x : r) pr.height += int(x);
    if (pr.norm > max_norm) max_norm = pr.norm;
    table.positive.push_back(std::move(pr));
  }
  std::sort(table.positive.begin(), table.positive.end(),
            [](const PositiveRoot& a, const PositiveRoot& b) {
              if (a.height != b.height) return a.height > b.height;
              return a.coords > b.coords;
            });

  int best_long = -1, best_short = -1;
  for (std::size_t i = 0; i < table.positive.size(); ++i) {
    PositiveRoot& r = table.positive[i];
    r.long_root = (r.norm == max_norm);
    if (r.long_root) {
      ++table.num_long;
      if (best_long < 0) best_long = int(i);
    } else {
      ++table.num_short;
      if (best_short < 0) best_short = int(i);
    }
  }
  table.highest_long = best_long;
  table.highest_short = best_short;

  // Witness words by BFS downward from each highest root within its
  // length class; generators expand in ascending index, first find wins.
  auto fill_witnesses = [&](int start) {
    std::unordered_map<IVec, int, IVecHash> pos_index;
    for (std::size_t i = 0; i < table.positive.size(); ++i)
      pos_index.emplace(table.positive[i].coords, int(i));
    std::deque<int> bfs{start};
    std::vector<bool> done(table.positive.size(), false);
    done[start] = true;
    bool want_long = table.positive[start].long_root;
    while (!bfs.empty()) {
      int cur = bfs.front();
      bfs.pop_front();
      for (int j = 0; j < n; ++j) {
        IVec img = table.positive[cur].coords;
        reflect_int(d, j, img);
        auto it = pos_index.find(img);
        if (it == pos_index.end()) continue;  // went negative
        int k = it->second;
        if (done[k] || table.positive[k].long_root != want_long) continue;
        done[k] = true;
        table.positive[k].witness.reserve(table.positive[cur].witness.size() + 1);
        table.positive[k].witness.push_back(d.label_of(j));
        table.positive[k].witness.insert(table.positive[k].witness.end(),
                                         table.positive[cur].witness.begin(),
                                         table.positive[cur].witness.end());
        bfs.push_back(k);
      }
    }
  };
  fill_witnesses(best_long);
  if (best_short >= 0) fill_witnesses(best_short);
  return table;
}

}  // namespace

const RootSystemTable& enumerate_roots(const RootDatum& d) {
  static std::mutex mu;
  static std::map<const RootDatum*, std::unique_ptr<RootSystemTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(&d);
  if (it == cache.end())
    it = cache.emplace(&d, std::make_unique<RootSystemTable>(build_table(d))).first;
  return *it->second;
}

namespace {

RootVec from_int_coords(const RootDatum& d, const std::vector<std::int64_t>& c) {
  RootVec v = zero_vec(d);
  for (std::size_t i = 0; i < c.size(); ++i) v.coords[i] = Rat(c[i]);
  return v;
}

}  // namespace

RootVec highest_root(const RootDatum& d) {
  const RootSystemTable& t = enumerate_roots(d.finite_datum());
  return from_int_coords(d.finite_datum(), t.positive[t.highest_long].coords);
}

RootVec highest_short_root(const RootDatum& d) {
  const RootSystemTable& t = enumerate_roots(d.finite_datum());
  if (t.highest_short < 0)
    throw NoShortRoots(d.type() + " is simply laced; no short roots");
  return from_int_coords(d.finite_datum(), t.positive[t.highest_short].coords);
}

AffineComponents affine_components(const RootVec& v) {
  const RootDatum& d = *v.ctx;
  if (!d.is_affine()) throw NotAffine("affine_components: finite context");
  const RootDatum& fin = d.finite_datum();
  Rat level = v.coords[d.rank()];
  RootVec finite_part = zero_vec(fin);
  for (int i = 0; i < d.rank(); ++i)
    finite_part.coords[i] = v.coords[i] - level * d.delta()[i];
  return {finite_part, level};
}

bool is_root(const RootVec& v) {
  const RootDatum& d = *v.ctx;
  for (const Rat& x : v.coords)
    if (!x.is_integer()) return false;
  std::vector<std::int64_t> finite;
  if (d.is_affine()) {
    AffineComponents ac = affine_components(v);
    for (const Rat& x : ac.finite_part.coords) {
      if (!x.is_integer()) return false;
      finite.push_back(x.num());
    }
  } else {
    for (const Rat& x : v.coords) finite.push_back(x.num());
  }
  bool neg = std::all_of(finite.begin(), finite.end(), [](std::int64_t x) { return x <= 0; });
  if (neg)
    for (auto& x : finite) x = -x;
  return enumerate_roots(d.finite_datum()).contains(finite);
}

std::vector<int> reflection_word(const RootVec& beta, int level_bound) {
  const RootDatum& d = *beta.ctx;
  if (!is_root(beta)) throw NotARoot("reflection_word: not a root: " + vec_str(beta.coords));
  if (d.is_affine()) {
    Rat level = affine_components(beta).level;
    if (level > Rat(level_bound) || level < Rat(-level_bound))
      throw LevelBoundExceeded("reflection_word: level " + level.str() + " exceeds bound " +
                               std::to_string(level_bound));
  }

  // s_beta = s_{-beta}: normalize to the positive root.
  using IVec = std::vector<std::int64_t>;
  IVec target;
  for (const Rat& x : beta.coords) target.push_back(x.num());
  if (std::all_of(target.begin(), target.end(), [](std::int64_t x) { return x <= 0; }))
    for (auto& x : target) x = -x;
  std::int64_t target_height = 0;
  for (auto x : target) target_height += x;

  const int N = d.num_nodes();
  struct Entry {
    int parent;
    int letter_idx;
  };
  std::unordered_map<IVec, int, IVecHash> seen;
  std::vector<IVec> states;
  std::vector<Entry> info;
  std::deque<int> queue;
  int found = -1;
  for (int i = 0; i < N && found < 0; ++i) {
    IVec e(N, 0);
    e[i] = 1;
    seen.emplace(e, int(states.size()));
    states.push_back(e);
    info.push_back({-1, i});
    if (e == target) found = int(states.size()) - 1;
    queue.push_back(int(states.size()) - 1);
  }
  while (found < 0 && !queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int j = 0; j < N && found < 0; ++j) {
      IVec img = states[cur];
      reflect_int(d, j, img);
      if (std::any_of(img.begin(), img.end(), [](std::int64_t x) { return x < 0; })) continue;
      std::int64_t h = 0;
      for (auto x : img) h += x;
      if (h > target_height) continue;
      if (!seen.emplace(img, int(states.size())).second) continue;
      states.push_back(img);
      info.push_back({cur, j});
      if (img == target) found = int(states.size()) - 1;
      queue.push_back(int(states.size()) - 1);
    }
  }
  if (found < 0) throw NotARoot("reflection_word: BFS did not reach target");

  // walk back to the starting simple root; letters come out child-first,
  // which is exactly the left-to-right word with s applied right-to-left
  std::vector<int> w;
  int cur = found;
  while (info[cur].parent >= 0) {
    w.push_back(d.label_of(info[cur].letter_idx));
    cur = info[cur].parent;
  }
  int simple_label = d.label_of(info[cur].letter_idx);
  std::vector<int> out = w;
  out.push_back(simple_label);
  out.insert(out.end(), w.rbegin(), w.rend());
  return out;
}

}  // namespace weyl
