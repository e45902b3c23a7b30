// Catalog of Dynkin diagrams (finite A..G and untwisted affine X~),
// their generalized Cartan matrices, root-length normalizations and
// marks. Node storage order is 1..n with the affine node 0 last.

#ifndef WEYL_DYNKIN_HPP_
#define WEYL_DYNKIN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyl/errors.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Supported ranks: A 1..16, B/C 2..16, D 4..16, E 6..8, F 4, G 2.
constexpr int kMaxClassicalRank = 16;

struct DynkinEdge {
  int from = 0;          // node label; for multiplicity >= 2 this is the long end
  int to = 0;            // node label; the short end when there is an arrow
  int multiplicity = 1;  // 1, 2 or 3; 4 only for the A1~ double bond (no arrow)
  bool has_arrow = false;
};

struct DynkinDiagram {
  Family family;
  int rank = 0;
  bool affine = false;
  std::vector<int> nodes;        // labels: 1..n, then 0 when affine
  std::vector<DynkinEdge> edges;

  int num_nodes() const { return int(nodes.size()); }
  // Storage index of a node label (1..n map to 0..n-1, label 0 maps to n).
  int index_of(int label) const;
  bool has_node(int label) const { return label >= 0 && label <= rank && (label != 0 || affine); }
};

DynkinDiagram build_diagram(Family family, int rank, bool affine);

// Accepts "B3", "b3", "E8~", "E8^(1)"; the suffix marks the affine diagram.
DynkinDiagram parse_type(const std::string& s);
std::string type_string(const DynkinDiagram& d);

// Generalized Cartan matrix in storage order (1..n, then 0 when affine).
Mat cartan_matrix(const DynkinDiagram& d);

// Squared lengths |alpha_i|^2 in storage order. Long roots are normalized
// to 2 for B and F, short roots to 2 for C and G; |alpha_0|^2 = |highest root|^2.
Vec root_lengths(const DynkinDiagram& d);

// Coefficients of delta over the affine simple basis, storage order
// (c_1..c_n, c_0); computed as the coprime positive integer kernel vector
// of the transposed generalized Cartan matrix. Throws NotAffine for
// finite diagrams.
std::vector<std::int64_t> marks(const DynkinDiagram& d);

// Order of the product s_i s_j read off the diagram: 2, 3, 4 or 6;
// returns 0 for the infinite bond of A1~.
int bond_order(const DynkinDiagram& d, int label_i, int label_j);

bool is_simply_laced(Family f);

}  // namespace weyl

#endif
