// Command-line front end. Subcommands: cartan, roots, coroot, act,
// translate, normalform, decompose, orbit, verify, table3.
// Exit codes: 0 success, 1 verification failure, 2 argument/parse error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "weyl/io.hpp"

namespace {

using namespace weyl;

struct Options {
  bool as_json = false;
  int level_bound = kDefaultLevelBound;
  std::uint64_t orbit_cap = kDefaultOrbitCap;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(const Mat& m) {
  std::vector<std::vector<std::string>> cells(m.rows());
  std::size_t width = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      cells[i].push_back(m.at(i, j).str());
      width = std::max(width, cells[i].back().size());
    }
  for (int i = 0; i < m.rows(); ++i) {
    std::string line = "[";
    for (int j = 0; j < m.cols(); ++j) {
      std::string c = cells[i][j];
      line += std::string(width - c.size() + (j ? 1 : 0), ' ') + c;
    }
    std::cout << line << "]\n";
  }
}

std::string word_str(const std::vector<int>& letters) {
  std::string s;
  for (int l : letters) s += std::to_string(l);
  return s;
}

int cmd_cartan(const Options& opt, const std::string& type) {
  const RootDatum& d = RootDatum::get(type);
  if (opt.as_json)
    print_json(json{{"type", d.type()}, {"cartan", to_json(d.cartan())}});
  else
    print_matrix(d.cartan());
  return 0;
}

int cmd_roots(const Options& opt, const std::string& type, bool count_only) {
  const RootDatum& d = RootDatum::get(type).finite_datum();
  const RootSystemTable& t = enumerate_roots(d);
  if (count_only) {
    if (opt.as_json)
      print_json(json{{"type", d.type()},
                      {"num_positive", t.positive.size()},
                      {"num_long", t.num_long},
                      {"num_short", t.num_short}});
    else
      std::cout << t.positive.size() << " positive (" << t.num_long << " long, " << t.num_short
                << " short)\n";
    return 0;
  }
  if (opt.as_json) {
    json roots = json::array();
    for (const PositiveRoot& r : t.positive)
      roots.push_back(json{{"coords", r.coords},
                           {"tag", r.long_root ? "long" : "short"},
                           {"height", r.height},
                           {"norm2", to_json(r.norm)},
                           {"witness", word_str(r.witness)}});
    print_json(json{{"type", d.type()}, {"positive_roots", roots}});
    return 0;
  }
  for (const PositiveRoot& r : t.positive) {
    std::string coords = "(";
    for (std::size_t i = 0; i < r.coords.size(); ++i)
      coords += (i ? "," : "") + std::to_string(r.coords[i]);
    coords += ")";
    std::cout << (r.long_root ? "long " : "short") << "  " << coords << "  height " << r.height
              << "  witness " << (r.witness.empty() ? "e" : word_str(r.witness)) << "\n";
  }
  return 0;
}

int cmd_coroot(const Options& opt, const std::string& type, const std::string& root) {
  const RootDatum& d = RootDatum::get(type).affine_datum();
  RootVec beta = parse_root(d, root);
  DualVec c = coroot(beta);
  Vec k = coroot_coefficients(beta);
  if (opt.as_json)
    print_json(json{{"type", d.type()},
                    {"root", to_json(beta.coords)},
                    {"coroot_weight_coords", to_json(c.coords)},
                    {"coroot_coeffs", to_json(k)}});
  else
    std::cout << "pi(coroot) = " << vec_str(c.coords) << " over (h_1..h_n, h_delta)\n"
              << "over simple coroots: " << vec_str(k) << "\n";
  return 0;
}

int cmd_act(const Options& opt, const std::string& type, const std::string& word,
            const std::string& target, bool dual) {
  const RootDatum& d = RootDatum::get(type);
  WeylWord w = parse_word(d, word);
  if (dual) {
    DualVec f = parse_weight(d, target);
    DualVec r = act_dual(w, f);
    if (opt.as_json)
      print_json(to_json(r));
    else
      std::cout << vec_str(r.coords) << "\n";
  } else {
    RootVec v = parse_root(d, target);
    RootVec r = act(w, v);
    if (opt.as_json)
      print_json(to_json(r));
    else
      std::cout << vec_str(r.coords) << "\n";
  }
  return 0;
}

int cmd_translate(const Options& opt, const std::string& type, const std::string& weight) {
  const RootDatum& d = RootDatum::get(type).affine_datum();

  // a root argument beta = alpha + m*delta names the translation t_beta
  if (weight.find('h') == std::string::npos) {
    RootVec beta = parse_root(d, weight);
    WeylWord t = length_and_reduced(make_translation(beta, opt.level_bound)).reduced;
    auto v = translation_vector(t);
    if (opt.as_json) {
      json j = to_json(t);
      j["lattice"] = json{{"weight_coords", to_json(v->coords)}};
      print_json(j);
    } else {
      std::cout << "word: " << t.str() << "\nshifts X1 by " << vec_str(v->coords) << "\n";
    }
    return 0;
  }

  DualVec h = parse_weight(d, weight);
  Vec hpart(h.coords.begin(), h.coords.begin() + d.rank());
  Vec k = weight_coords_to_coroot_coords(d, hpart);
  bool in_q = std::all_of(k.begin(), k.end(), [](const Rat& x) { return x.is_integer(); });
  ExtElement e;
  if (in_q) {
    e = ext_from_word(translation_for_coroot_coeffs(d, k));
  } else {
    Mat m = Mat::identity(d.num_nodes());
    for (int j = 1; j <= d.rank(); ++j) {
      const Rat& c = h.coords[j - 1];
      if (!c.is_integer()) throw ParseError("translate: weight must be integral");
      Mat base = c.sign() >= 0 ? weight_translation(d, j).mat : weight_translation(d, j).mat.inverse();
      for (std::int64_t i = 0; i < std::abs(c.num()); ++i) m = m * base;
    }
    e = normal_form(d, m);
  }
  e = normal_form(d, e.mat);
  if (opt.as_json) {
    json j = to_json(e);
    j["lattice"] = json{{"weight_coords", to_json(hpart)}, {"in_root_lattice", in_q}};
    print_json(j);
  } else {
    std::cout << "auto: " << e.auto_part.cycles() << "\nword: " << e.word.str() << "\n"
              << (in_q ? "lies in W^(1) (root-lattice translation)\n"
                       : "needs the extended group (weight-lattice translation)\n");
  }
  return 0;
}

int cmd_normalform(const Options& opt, const std::string& type, const std::string& word) {
  const RootDatum& d = RootDatum::get(type).affine_datum();
  ExtElement e = parse_ext_word(d, word);
  if (opt.as_json)
    print_json(to_json(e));
  else
    std::cout << "auto: " << e.auto_part.cycles() << "\nword: " << e.word.str() << "\n";
  return 0;
}

int cmd_decompose(const Options& opt, const std::string& type, const std::string& word) {
  const RootDatum& d = RootDatum::get(type).affine_datum();
  TranslationDecomp t = decompose(parse_word(d, word));
  if (opt.as_json) {
    print_json(to_json(t));
  } else {
    std::cout << "finite: " << t.finite_part.str() << "\n"
              << "lattice (coroot coeffs): " << vec_str(t.coroot_coeffs) << "\n"
              << "lattice (weight coords): " << vec_str(t.lattice_vector.coords) << "\n";
  }
  return 0;
}

int cmd_orbit(const Options& opt, const std::string& type, const std::string& weight,
              bool count_only) {
  const RootDatum& d = RootDatum::get(type);
  DualVec f = parse_weight(d, weight);
  std::vector<DualVec> orb = orbit(f, opt.orbit_cap);
  if (count_only) {
    if (opt.as_json)
      print_json(json{{"type", d.type()}, {"weight", weight}, {"orbit_size", orb.size()}});
    else
      std::cout << orb.size() << "\n";
    return 0;
  }
  std::vector<Vec> pts;
  pts.reserve(orb.size());
  for (DualVec& v : orb) pts.push_back(std::move(v.coords));
  std::sort(pts.begin(), pts.end());
  if (opt.as_json) {
    json arr = json::array();
    for (const Vec& p : pts) arr.push_back(to_json(p));
    print_json(json{{"type", d.type()},
                    {"weight", weight},
                    {"orbit_size", pts.size()},
                    {"stabilizer_order", weyl_group_order(d) / pts.size()},
                    {"orbit", arr}});
  } else {
    for (const Vec& p : pts) std::cout << vec_str(p) << "\n";
    std::cout << "size " << pts.size() << ", stabilizer order "
              << weyl_group_order(d) / pts.size() << "\n";
  }
  return 0;
}

int report_result(const Options& opt, const std::vector<CaseReport>& reports) {
  bool all_pass = true;
  if (opt.as_json) {
    json arr = json::array();
    for (const CaseReport& r : reports) {
      arr.push_back(to_json(r));
      all_pass = all_pass && r.passed();
    }
    print_json(arr.size() == 1 ? arr[0] : arr);
  } else {
    for (const CaseReport& r : reports) {
      for (const CaseCheck& c : r.checks) {
        std::cout << (c.pass ? "  ok   " : "  FAIL ") << r.case_id << " " << c.description << "\n";
        if (!c.pass)
          std::cout << "         expected: " << c.expected << "\n         computed: " << c.computed
                    << "\n";
      }
      all_pass = all_pass && r.passed();
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.case_id << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& which) {
  std::vector<CaseReport> reports;
  if (which == "e8" || which == "all") reports.push_back(verify_e8_elliptic());
  if (which == "f4" || which == "all") reports.push_back(verify_f4_in_e8());
  if (which == "table3" || which == "all") reports.push_back(verify_table3());
  if (reports.empty()) throw ParseError("unknown case '" + which + "' (e8, f4, table3, all)");
  return report_result(opt, reports);
}

int cmd_table3(const Options& opt, const std::string& type) {
  Table3Row row = table3(RootDatum::get(type));
  if (opt.as_json) {
    print_json(to_json(row));
    return 0;
  }
  auto line = [](const std::string& k, const std::string& v) {
    std::cout << k << std::string(k.size() < 24 ? 24 - k.size() : 1, ' ') << v << "\n";
  };
  std::string cs;
  for (std::size_t i = 0; i < row.c.size(); ++i) cs += (i ? "," : "") + std::to_string(row.c[i]);
  line("type", row.type);
  line("positive roots", std::to_string(row.num_positive) + " (" + std::to_string(row.num_long) +
                             " long, " + std::to_string(row.num_short) + " short)");
  line("highest root c_j", "(" + cs + ")");
  line("|W|", std::to_string(row.order_w));
  line("k (highest long)", vec_str(row.k_highest_long));
  if (!row.k_highest_short.empty()) line("k (highest short)", vec_str(row.k_highest_short));
  line("|h_i|^2", vec_str(row.weight_norms));
  line("pi(highest-check)", vec_str(row.coroot_of_highest_long));
  if (!row.coroot_of_highest_short.empty())
    line("pi(highest-short-check)", vec_str(row.coroot_of_highest_short));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic engine for finite and affine Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --json etc. after the subcommand
  Options opt;
  if (const char* cap = std::getenv("AFFINE_WEYL_ORBIT_CAP")) opt.orbit_cap = std::strtoull(cap, nullptr, 10);
  app.add_flag("--json", opt.as_json, "emit JSON");
  app.add_option("--level-bound", opt.level_bound, "affine root level bound");
  app.add_option("--orbit-cap", opt.orbit_cap, "orbit size safety cap");

  std::string type, word, target, weight, which;
  bool dual = false, count_only = false;

  CLI::App* cartan = app.add_subcommand("cartan", "print the (generalized) Cartan matrix");
  cartan->add_option("type", type)->required();

  CLI::App* roots = app.add_subcommand("roots", "positive roots with long/short tags");
  roots->add_option("type", type)->required();
  roots->add_flag("--count", count_only);

  CLI::App* coroot = app.add_subcommand("coroot", "coroot of a root in the dual space");
  coroot->add_option("type", type)->required();
  coroot->add_option("root", target)->required();

  CLI::App* act = app.add_subcommand("act", "apply a word to a root or weight");
  act->add_option("type", type)->required();
  act->add_option("word", word)->required();
  act->add_option("target", target)->required();
  act->add_flag("--dual", dual, "act on the dual space");

  CLI::App* translate = app.add_subcommand("translate", "element translating X_1 by a lattice vector");
  translate->add_option("type", type)->required();
  translate->add_option("weight", weight)->required();

  CLI::App* normalform = app.add_subcommand("normalform", "a*w normal form of an extended word");
  normalform->add_option("type", type)->required();
  normalform->add_option("word", word)->required();

  CLI::App* decompose = app.add_subcommand("decompose", "W x| Q decomposition of a word");
  decompose->add_option("type", type)->required();
  decompose->add_option("word", word)->required();

  CLI::App* orbit = app.add_subcommand("orbit", "finite Weyl orbit of a weight");
  orbit->add_option("type", type)->required();
  orbit->add_option("weight", weight)->required();
  orbit->add_flag("--count", count_only);

  CLI::App* verify = app.add_subcommand("verify", "run the case-study verifications");
  verify->add_option("case", which)->required();

  CLI::App* table3cmd = app.add_subcommand("table3", "regenerate the summary-table row");
  table3cmd->add_option("type", type)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cartan)) return cmd_cartan(opt, type);
    if (app.got_subcommand(roots)) return cmd_roots(opt, type, count_only);
    if (app.got_subcommand(coroot)) return cmd_coroot(opt, type, target);
    if (app.got_subcommand(act)) return cmd_act(opt, type, word, target, dual);
    if (app.got_subcommand(translate)) return cmd_translate(opt, type, weight);
    if (app.got_subcommand(normalform)) return cmd_normalform(opt, type, word);
    if (app.got_subcommand(decompose)) return cmd_decompose(opt, type, word);
    if (app.got_subcommand(orbit)) return cmd_orbit(opt, type, weight, count_only);
    if (app.got_subcommand(verify)) return cmd_verify(opt, which);
    if (app.got_subcommand(table3cmd)) return cmd_table3(opt, type);
  } catch (const weyl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
