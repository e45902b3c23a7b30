#include "weyl/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace weyl {

namespace {

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(unsigned(c)); });
}

}  // namespace

std::vector<int> parse_letters(const RootDatum& d, const std::string& text) {
  // Digit runs are compressed products ("232" = s2 s3 s2) as
  // long as the node labels fit in one digit; for rank >= 10 each token
  // must be a single node number.
  std::vector<int> letters;
  for (const std::string& tok : tokens(text)) {
    if (tok == "e" || tok == "E") continue;  // identity
    std::string num = tok;
    if (num[0] == 's' || num[0] == 'S') num = num.substr(1);
    if (!num.empty() && num[0] == '_') num = num.substr(1);
    if (!all_digits(num)) throw ParseError("bad word token '" + tok + "'");
    if (d.rank() <= 9)
      for (char c : num) letters.push_back(c - '0');
    else
      letters.push_back(std::stoi(num));
  }
  for (int l : letters)
    if (!d.diagram().has_node(l)) throw InvalidNode("word uses node " + std::to_string(l));
  return letters;
}

WeylWord parse_word(const RootDatum& d, const std::string& text) {
  return WeylWord(d, parse_letters(d, text));
}

ExtElement parse_ext_word(const RootDatum& d, const std::string& text) {
  if (!d.is_affine()) throw NotAffine("extended words need an affine context");
  ExtElement acc = ext_identity(d);
  Mat m = acc.mat;
  for (const std::string& tok : tokens(text)) {
    if (tok[0] == 'u' || tok[0] == 'U') {
      bool inverse = false;
      std::string num = tok.substr(1);
      auto caret = num.find('^');
      if (caret != std::string::npos) {
        std::string exp = num.substr(caret + 1);
        num = num.substr(0, caret);
        if (exp == "-1" || exp == "{-1}")
          inverse = true;
        else
          throw ParseError("bad exponent in '" + tok + "'");
      }
      if (!all_digits(num)) throw ParseError("bad token '" + tok + "'");
      const ExtElement& u = weight_translation(d, std::stoi(num));
      m = m * (inverse ? u.mat.inverse() : u.mat);
    } else {
      for (int l : parse_letters(d, tok)) m = m * d.reflection(l);
    }
  }
  return normal_form(d, m);
}

RootVec parse_root(const RootDatum& d, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(unsigned(c))) s += c;
  if (s.empty()) throw ParseError("empty root");

  if (s.find(',') != std::string::npos || s[0] == '[') {
    std::string body = s;
    if (!body.empty() && body.front() == '[') body = body.substr(1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    RootVec v = zero_vec(d);
    std::istringstream in(body);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',')) {
      if (i >= v.coords.size()) throw ParseError("too many coordinates in '" + text + "'");
      v.coords[i++] = parse_rat(part);
    }
    if (i != v.coords.size()) throw ParseError("expected " + std::to_string(v.coords.size()) +
                                               " coordinates in '" + text + "'");
    return v;
  }

  // [-]a<digits>[(+|-)[m]d]
  bool negate = false;
  std::size_t pos = 0;
  if (s[pos] == '-') {
    negate = true;
    ++pos;
  } else if (s[pos] == '+') {
    ++pos;
  }
  if (pos >= s.size() || (s[pos] != 'a' && s[pos] != 'A'))
    throw ParseError("expected root like 'a123' in '" + text + "'");
  ++pos;
  std::string digits;
  while (pos < s.size() && std::isdigit(unsigned(s[pos]))) digits += s[pos++];
  if (digits.empty()) throw ParseError("missing digits in '" + text + "'");
  RootVec v = root_from_digits(d, digits);
  if (negate) v = scale(Rat(-1), v);
  if (pos < s.size()) {
    int sign = s[pos] == '-' ? -1 : s[pos] == '+' ? 1 : 0;
    if (sign == 0) throw ParseError("bad suffix in '" + text + "'");
    ++pos;
    std::string mult;
    while (pos < s.size() && std::isdigit(unsigned(s[pos]))) mult += s[pos++];
    if (pos + 1 != s.size() || s[pos] != 'd') throw ParseError("bad delta term in '" + text + "'");
    Rat m = Rat(sign) * (mult.empty() ? Rat(1) : parse_rat(mult));
    v = add(v, scale(m, null_root(d)));
  }
  return v;
}

DualVec parse_weight(const RootDatum& d, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(unsigned(c))) s += c;
  if (s.empty()) throw ParseError("empty weight");
  DualVec f = zero_dual(d);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = -1;
      ++pos;
    }
    std::string coef;
    while (pos < s.size() && (std::isdigit(unsigned(s[pos])) || s[pos] == '/')) coef += s[pos++];
    if (pos >= s.size() || s[pos] != 'h') throw ParseError("expected hJ term in '" + text + "'");
    ++pos;
    std::string idx;
    while (pos < s.size() && std::isdigit(unsigned(s[pos]))) idx += s[pos++];
    if (idx.empty()) throw ParseError("missing weight index in '" + text + "'");
    int j = std::stoi(idx);
    if (j < 1 || j > d.rank()) throw InvalidNode("no fundamental weight h" + idx);
    Rat c = coef.empty() ? Rat(1) : parse_rat(coef);
    f.coords[j - 1] += Rat(sign) * c;
  }
  return f;
}

std::string rat_to_string(const Rat& r) { return r.str(); }

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(unsigned(c))) t += c;
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(t));
    return Rat(std::stoll(t.substr(0, slash)), std::stoll(t.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

json to_json(const Rat& r) {
  if (r.is_integer()) return json(r.num());
  return json(r.str());
}

json to_json(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  Vec v;
  for (const auto& x : j) {
    if (x.is_number_integer())
      v.push_back(Rat(x.get<std::int64_t>()));
    else
      v.push_back(parse_rat(x.get<std::string>()));
  }
  return v;
}

json to_json(const RootVec& v) {
  return json{{"type", v.ctx->type()}, {"basis", "simple"}, {"coords", to_json(v.coords)}};
}

json to_json(const DualVec& f) {
  return json{{"type", f.ctx->type()}, {"basis", "weight"}, {"coords", to_json(f.coords)}};
}

json to_json(const WeylWord& w) {
  return json{{"type", w.ctx().type()}, {"word", w.str()}};
}

json to_json(const DiagramAutomorphism& a) { return json(a.cycles()); }

json to_json(const ExtElement& e) {
  return json{{"type", e.ctx->type()}, {"auto", e.auto_part.cycles()}, {"word", e.word.str()}};
}

json to_json(const TranslationDecomp& t) {
  return json{{"finite", t.finite_part.str()},
              {"lattice", json{{"coroot_coeffs", to_json(t.coroot_coeffs)},
                               {"weight_coords", to_json(t.lattice_vector.coords)}}}};
}

json to_json(const CaseReport& rep) {
  json checks = json::array();
  for (const CaseCheck& c : rep.checks)
    checks.push_back(json{{"description", c.description},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
  return json{{"case", rep.case_id}, {"pass", rep.passed()}, {"checks", checks}};
}

json to_json(const Table3Row& row) {
  json j{{"type", row.type},
         {"num_positive", row.num_positive},
         {"num_long", row.num_long},
         {"num_short", row.num_short},
         {"c", row.c},
         {"order_W", row.order_w},
         {"exponents", row.exponents},
         {"k_highest_long", to_json(row.k_highest_long)},
         {"weight_norms", to_json(row.weight_norms)},
         {"coroot_of_highest_long", to_json(row.coroot_of_highest_long)}};
  if (!row.k_highest_short.empty()) {
    j["k_highest_short"] = to_json(row.k_highest_short);
    j["coroot_of_highest_short"] = to_json(row.coroot_of_highest_short);
  }
  return j;
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace weyl
