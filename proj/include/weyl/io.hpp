// Text grammars shared by the CLI and the tests: words ("232", "s2 s3 0",
// "u1 s1", "u3^-1"), roots ("a123", "a0+2d", "[0,1,2,-1]"), weights
// ("h2", "2h1-h6"), and JSON emission for every public value.

#ifndef WEYL_IO_HPP_
#define WEYL_IO_HPP_

#include <string>

#include "json.hpp"

#include "weyl/casestudies.hpp"

namespace weyl {

using nlohmann::json;

std::vector<int> parse_letters(const RootDatum& d, const std::string& text);
WeylWord parse_word(const RootDatum& d, const std::string& text);

// Words over {s_i} and {u_j, u_j^-1}; result in a*w normal form.
ExtElement parse_ext_word(const RootDatum& d, const std::string& text);

// "a123" digit form, optional delta shifts "a3+d", "-a3+2d", or a bare
// coordinate list "[1,2,2,0]" / "1,2,2".
RootVec parse_root(const RootDatum& d, const std::string& text);

// Integer combinations of fundamental weights: "h1", "2h1-h6", "h1+3h2".
DualVec parse_weight(const RootDatum& d, const std::string& text);

std::string rat_to_string(const Rat& r);
Rat parse_rat(const std::string& s);

json to_json(const Rat& r);
json to_json(const Vec& v);
json to_json(const RootVec& v);
json to_json(const DualVec& f);
json to_json(const WeylWord& w);
json to_json(const DiagramAutomorphism& a);
json to_json(const ExtElement& e);
json to_json(const TranslationDecomp& t);
json to_json(const CaseReport& rep);
json to_json(const Table3Row& row);
json to_json(const Mat& m);

Vec vec_from_json(const json& j);

}  // namespace weyl

#endif
