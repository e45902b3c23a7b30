#include "weyl/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace weyl {

bool is_simply_laced(Family f) {
  return f == Family::A || f == Family::D || f == Family::E;
}

int DynkinDiagram::index_of(int label) const {
  if (!has_node(label))
    throw InvalidNode("no node " + std::to_string(label) + " in " + type_string(*this));
  return label == 0 ? rank : label - 1;
}

namespace {

void validate(Family family, int rank) {
  auto bad = [&] {
    std::string name(1, char(family));
    throw InvalidType("unsupported type " + name + std::to_string(rank));
  };
  switch (family) {
    case Family::A:
      if (rank < 1 || rank > kMaxClassicalRank) bad();
      break;
    case Family::B:
    case Family::C:
      if (rank < 2 || rank > kMaxClassicalRank) bad();
      break;
    case Family::D:
      if (rank < 4 || rank > kMaxClassicalRank) bad();
      break;
    case Family::E:
      if (rank < 6 || rank > 8) bad();
      break;
    case Family::F:
      if (rank != 4) bad();
      break;
    case Family::G:
      if (rank != 2) bad();
      break;
  }
}

void single(DynkinDiagram& d, int a, int b) { d.edges.push_back({a, b, 1, false}); }
void arrow(DynkinDiagram& d, int from_long, int to_short, int mult) {
  d.edges.push_back({from_long, to_short, mult, true});
}

}  // namespace

DynkinDiagram build_diagram(Family family, int rank, bool affine) {
  validate(family, rank);
  DynkinDiagram d;
  d.family = family;
  d.rank = rank;
  d.affine = affine;
  for (int i = 1; i <= rank; ++i) d.nodes.push_back(i);
  if (affine) d.nodes.push_back(0);

  const int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 1; i < n; ++i) single(d, i, i + 1);
      if (affine) {
        if (n == 1)
          d.edges.push_back({0, 1, 4, false});  // a_01 = a_10 = -2
        else {
          single(d, 0, 1);
          single(d, 0, n);
        }
      }
      break;
    case Family::B:
      for (int i = 1; i + 1 < n; ++i) single(d, i, i + 1);
      arrow(d, n - 1, n, 2);
      if (affine) {
        // Fig. 1 attaches node 0 to node 2; at n = 2 the kernel condition
        // forces the double edge 0 => 2 (B2~ is the C2~ diagram).
        if (n == 2)
          arrow(d, 0, 2, 2);
        else
          single(d, 0, 2);
      }
      break;
    case Family::C:
      for (int i = 1; i + 1 < n; ++i) single(d, i, i + 1);
      arrow(d, n, n - 1, 2);
      if (affine) arrow(d, 0, 1, 2);
      break;
    case Family::D:
      for (int i = 1; i + 2 < n; ++i) single(d, i, i + 1);
      single(d, n - 2, n - 1);
      single(d, n - 2, n);
      if (affine) single(d, 0, 2);
      break;
    case Family::E: {
      // chains 2-3-4-5-6 (E6), 1-3-4-5-6-7 (E7), 1-3-4-5-6-7-8 (E8);
      // the branch node sits above node 4.
      std::vector<int> chain;
      int branch_root = 4, branch_leaf, affine_at;
      if (n == 6) {
        chain = {2, 3, 4, 5, 6};
        branch_leaf = 1;
        affine_at = 1;
      } else if (n == 7) {
        chain = {1, 3, 4, 5, 6, 7};
        branch_leaf = 2;
        affine_at = 1;
      } else {
        chain = {1, 3, 4, 5, 6, 7, 8};
        branch_leaf = 2;
        affine_at = 8;
      }
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) single(d, chain[i], chain[i + 1]);
      single(d, branch_leaf, branch_root);
      if (affine) single(d, 0, affine_at);
      break;
    }
    case Family::F:
      single(d, 1, 2);
      arrow(d, 2, 3, 2);
      single(d, 3, 4);
      if (affine) single(d, 0, 1);
      break;
    case Family::G:
      arrow(d, 2, 1, 3);
      if (affine) single(d, 0, 2);
      break;
  }
  return d;
}

DynkinDiagram parse_type(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InvalidType("empty type string");
  char f = char(std::toupper(static_cast<unsigned char>(t[0])));
  if (f < 'A' || f > 'G') throw InvalidType("unknown family in '" + s + "'");
  std::size_t i = 1, start = 1;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == start) throw InvalidType("missing rank in '" + s + "'");
  int rank = std::stoi(t.substr(start, i - start));
  bool affine = false;
  std::string rest = t.substr(i);
  if (rest == "~" || rest == "^(1)")
    affine = true;
  else if (!rest.empty())
    throw InvalidType("trailing junk in '" + s + "'");
  return build_diagram(Family(f), rank, affine);
}

std::string type_string(const DynkinDiagram& d) {
  std::string s(1, char(d.family));
  s += std::to_string(d.rank);
  if (d.affine) s += "~";
  return s;
}

Mat cartan_matrix(const DynkinDiagram& d) {
  int N = d.num_nodes();
  Mat a(N, N);
  for (int i = 0; i < N; ++i) a.at(i, i) = 2;
  for (const DynkinEdge& e : d.edges) {
    int i = d.index_of(e.from), j = d.index_of(e.to);
    if (e.multiplicity == 1) {
      a.at(i, j) = -1;
      a.at(j, i) = -1;
    } else if (!e.has_arrow) {
      a.at(i, j) = -2;  // A1~ bond
      a.at(j, i) = -2;
    } else {
      // arrow from the long root: a_{long,short} = -multiplicity
      a.at(i, j) = -e.multiplicity;
      a.at(j, i) = -1;
    }
  }
  return a;
}

Vec root_lengths(const DynkinDiagram& d) {
  int N = d.num_nodes();
  Vec len(N, Rat(2));
  switch (d.family) {
    case Family::B:
      len[d.index_of(d.rank)] = Rat(1);
      break;
    case Family::C:
      len[d.index_of(d.rank)] = Rat(4);
      break;
    case Family::F:
      len[d.index_of(3)] = Rat(1);
      len[d.index_of(4)] = Rat(1);
      break;
    case Family::G:
      len[d.index_of(2)] = Rat(6);
      break;
    default:
      break;
  }
  if (d.affine) {
    // alpha_0 is always long: |alpha_0|^2 = |highest root|^2
    Rat longest(2);
    if (d.family == Family::C) longest = Rat(4);
    if (d.family == Family::G) longest = Rat(6);
    len[d.index_of(0)] = longest;
  }
  return len;
}

std::vector<std::int64_t> marks(const DynkinDiagram& d) {
  if (!d.affine) throw NotAffine("marks are defined for affine diagrams only");
  Vec k = kernel_vector(cartan_matrix(d).transposed());
  std::vector<std::int64_t> c;
  c.reserve(k.size());
  for (const Rat& x : k) c.push_back(x.num());
  return c;
}

int bond_order(const DynkinDiagram& d, int label_i, int label_j) {
  if (label_i == label_j) return 1;
  Mat a = cartan_matrix(d);
  int i = d.index_of(label_i), j = d.index_of(label_j);
  Rat prod = a.at(i, j) * a.at(j, i);
  if (prod == Rat(0)) return 2;
  if (prod == Rat(1)) return 3;
  if (prod == Rat(2)) return 4;
  if (prod == Rat(3)) return 6;
  return 0;  // infinite bond (A1~)
}

}  // namespace weyl
