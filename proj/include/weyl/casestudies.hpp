// Executable replication of the two discrete-integrable-system case
// studies: the pair of elliptic E8~ translations, and the F4~ subsystem
// sitting inside E8~. Every check is an exact equality.

#ifndef WEYL_CASESTUDIES_HPP_
#define WEYL_CASESTUDIES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "weyl/extended.hpp"

namespace weyl {

struct CaseCheck {
  std::string description;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct CaseReport {
  std::string case_id;
  std::vector<CaseCheck> checks;
  bool passed() const;
};

CaseReport verify_e8_elliptic();
CaseReport verify_f4_in_e8();

// One row of the summary table, regenerated from first principles:
// root counts by enumeration, |W| from the exponents (the height
// partition of the positive roots is conjugate to the partition of
// exponents), coroot data via the k_i = m_i |alpha_i|^2/|alpha|^2 rule.
struct Table3Row {
  std::string type;
  std::uint64_t num_positive = 0;
  std::uint64_t num_long = 0, num_short = 0;
  std::vector<std::int64_t> c;  // highest-root coefficients
  std::uint64_t order_w = 0;
  std::vector<int> exponents;
  Vec k_highest_long;   // pi(highest-root-check) over simple coroots
  Vec k_highest_short;  // empty when simply laced
  Vec weight_norms;     // |h_i|^2
  Vec coroot_of_highest_long;   // h-coordinates of pi(highest-check)
  Vec coroot_of_highest_short;  // empty when simply laced
};

Table3Row table3(const RootDatum& d);

// Regenerates every row the summary table pins (A,B,C at ranks 2..8,
// D at 4..8, E6..E8, F4, G2) and compares it against the closed-form
// reference values. The reference lives only here, in verification code;
// table3() itself never reads it.
CaseReport verify_table3();

}  // namespace weyl

#endif
