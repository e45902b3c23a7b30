#include "weyl/casestudies.hpp"

#include <algorithm>
#include <map>

namespace weyl {

bool CaseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CaseCheck& c) { return c.pass; });
}

namespace {

std::vector<int> digits(const std::string& s) {
  std::vector<int> out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

std::string mat_str(const Mat& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
  }
  return s + "]";
}

void check_eq(CaseReport& rep, const std::string& what, const Mat& expected, const Mat& got) {
  rep.checks.push_back({what, mat_str(expected), mat_str(got), expected == got});
}
void check_eq(CaseReport& rep, const std::string& what, const Vec& expected, const Vec& got) {
  rep.checks.push_back({what, vec_str(expected), vec_str(got), expected == got});
}
void check_eq(CaseReport& rep, const std::string& what, const Rat& expected, const Rat& got) {
  rep.checks.push_back({what, expected.str(), got.str(), expected == got});
}
void check_eq(CaseReport& rep, const std::string& what, std::uint64_t expected, std::uint64_t got) {
  rep.checks.push_back({what, std::to_string(expected), std::to_string(got), expected == got});
}
void check_true(CaseReport& rep, const std::string& what, bool ok, const std::string& detail = "") {
  rep.checks.push_back({what, "true", ok ? "true" : ("false " + detail), ok});
}

Vec weight(const RootDatum& d, std::initializer_list<std::pair<int, int>> terms) {
  Vec h(d.rank());
  for (auto& [coef, j] : terms) h[j - 1] += Rat(coef);
  return h;
}

// Compare the action of `m` on a list of named basis vectors against
// expected images; on mismatch the failing basis vector is named.
struct ActionTable {
  std::vector<std::string> names;
  std::vector<Vec> basis;
  std::vector<Vec> expected;
};

void check_action_table(CaseReport& rep, const std::string& what, const Mat& m,
                        const ActionTable& t) {
  for (std::size_t i = 0; i < t.basis.size(); ++i) {
    Vec got = m.apply(t.basis[i]);
    if (got != t.expected[i]) {
      rep.checks.push_back({what, "image of " + t.names[i] + " = " + vec_str(t.expected[i]),
                            "mismatch at " + t.names[i] + ": " + vec_str(got), false});
      return;
    }
  }
  rep.checks.push_back({what, "table reproduced", "table reproduced", true});
}

}  // namespace

CaseReport verify_e8_elliptic() {
  const RootDatum& d = RootDatum::get(Family::E, 8, true);
  CaseReport rep;
  rep.case_id = "e8-elliptic";

  // T_{J,2} translates X_1 by 2h_1-h_3, T_{J,1} by 2h_1-h_6.
  Vec v13 = weight(d, {{2, 1}, {-1, 3}});
  Vec v16 = weight(d, {{2, 1}, {-1, 6}});
  Mat tj2 = weight_translation_matrix(d, v13);
  Mat tj1 = weight_translation_matrix(d, v16);

  // (a) |2h_1-h_3|^2 = 2, 2h_1-h_3 = alpha_1, hence T_{J,2} = t_1
  check_eq(rep, "(a) |2h1-h3|^2", Rat(2), weight_norm2(dual_from_weight_coords(d, v13)));
  Vec pa1(d.rank());
  for (int k = 0; k < d.rank(); ++k) pa1[k] = d.cartan_finite().at(k, 0);
  check_eq(rep, "(a) 2h1-h3 equals alpha_1 as weight vector", pa1, v13);
  check_eq(rep, "(a) T_J2 = t_1", simple_translation(d, 1).matrix(), tj2);

  // (b) |2h_1-h_6|^2 = 4
  check_eq(rep, "(b) |2h1-h6|^2", Rat(4), weight_norm2(dual_from_weight_coords(d, v16)));

  // (c) 2h_1-h_6 = alpha_1 + alpha_1233445, orthogonal roots
  RootVec a1 = simple_root(d, 1);
  RootVec r2 = root_from_digits(d, "1233445");
  RootVec sum = add(a1, r2);
  DualVec pi_sum = pi_map(sum);
  check_eq(rep, "(c) pi(alpha_11233445) = 2h1-h6 on X0",
           dual_from_weight_coords(d, v16).coords, pi_sum.coords);
  check_eq(rep, "(c) alpha_1 . alpha_1233445", Rat(0), inner(a1, r2));
  check_true(rep, "(c) both summands are roots", is_root(a1) && is_root(r2));

  // (d) w = s_345243 takes alpha_1 to alpha_1233445
  WeylWord w(d, digits("345243"));
  check_eq(rep, "(d) s_345243(alpha_1) = alpha_1233445", r2.coords, act(w, a1).coords);

  // (e) T_{J,1} = t_1 w t_1 w^{-1}, with commuting translation factors
  const WeylWord& t1 = simple_translation(d, 1);
  WeylWord conj = conjugate_translation(w, t1);
  Mat composed = t1.matrix() * conj.matrix();
  check_eq(rep, "(e) t_1 w t_1 w^{-1} = T_J1", tj1, composed);
  check_eq(rep, "(e) translation factors commute", composed, conj.matrix() * t1.matrix());

  // (f) orbit sizes of the shortest and next-shortest weights
  check_eq(rep, "(f) |W(E8) h_8|", std::uint64_t(240), orbit_size(fundamental_weight(d, 8)));
  check_eq(rep, "(f) |W(E8) h_1|", std::uint64_t(2160), orbit_size(fundamental_weight(d, 1)));
  check_eq(rep, "(f) stabilizer of h_8 has order |W(E7)|", std::uint64_t(2903040),
           stabilizer_order(fundamental_weight(d, 8)));
  return rep;
}

namespace {

struct F4Embedding {
  const RootDatum* d;
  std::map<int, std::vector<int>> b_letters;  // b_i as E8~ letter sequences
  std::map<int, RootVec> beta;

  explicit F4Embedding(const RootDatum& e8) : d(&e8) {
    b_letters[0] = digits("8708");
    b_letters[1] = digits("6576");
    b_letters[2] = digits("4254");
    b_letters[3] = {3};
    b_letters[4] = {1};
    beta.emplace(0, root_from_digits(e8, "7880"));
    beta.emplace(1, root_from_digits(e8, "5667"));
    beta.emplace(2, root_from_digits(e8, "2445"));
    beta.emplace(3, root_from_digits(e8, "3"));
    beta.emplace(4, root_from_digits(e8, "1"));
  }

  WeylWord b(int i) const { return WeylWord(*d, b_letters.at(i)); }

  // Word over the b alphabet, e.g. "1232143", expanded to E8~ letters.
  WeylWord b_word(const std::string& bdigits) const {
    std::vector<int> letters;
    for (int bi : digits(bdigits)) {
      const std::vector<int>& unit = b_letters.at(bi);
      letters.insert(letters.end(), unit.begin(), unit.end());
    }
    return WeylWord(*d, letters);
  }
};

}  // namespace

CaseReport verify_f4_in_e8() {
  const RootDatum& d = RootDatum::get(Family::E, 8, true);
  const RootDatum& f4a = RootDatum::get(Family::F, 4, true);
  CaseReport rep;
  rep.case_id = "f4-in-e8";
  F4Embedding emb(d);
  const std::vector<int> border{1, 2, 3, 4, 0};  // F4~ storage order

  // (a) the b-words satisfy every defining relation of W(F4~)
  {
    bool ok = true;
    std::string detail;
    for (std::size_t x = 0; x < border.size() && ok; ++x) {
      for (std::size_t y = x; y < border.size() && ok; ++y) {
        int i = border[x], j = border[y];
        int m = i == j ? 2 : bond_order(f4a.diagram(), i, j);
        Mat prod = emb.b(i).matrix() * emb.b(j).matrix();
        Mat acc = Mat::identity(d.num_nodes());
        for (int rep_i = 0; rep_i < m; ++rep_i) acc = acc * prod;
        if (!acc.is_identity()) {
          ok = false;
          detail = "(b" + std::to_string(i) + " b" + std::to_string(j) + ")^" + std::to_string(m);
        }
      }
    }
    check_true(rep, "(a) b-words satisfy the F4~ relations", ok, detail);
  }

  // (b) |beta_i|^2 = 4,4,4,2,2 for i = 0..4
  {
    Vec got, expect{Rat(4), Rat(4), Rat(4), Rat(2), Rat(2)};
    for (int i = 0; i <= 4; ++i) got.push_back(norm2(emb.beta.at(i)));
    check_eq(rep, "(b) beta norms (i=0..4)", expect, got);
  }

  // (c) beta-system Cartan matrix is C(F4~); beta is orthogonal to span(J)
  {
    Mat got(5, 5);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        const RootVec& bi = emb.beta.at(border[x]);
        const RootVec& bj = emb.beta.at(border[y]);
        got.at(x, y) = Rat(2) * inner(bi, bj) / inner(bj, bj);
      }
    check_eq(rep, "(c) beta Cartan matrix = C(F4~)", f4a.cartan(), got);
    bool perp = true;
    for (int i = 0; i <= 4; ++i)
      for (int j : {2, 5, 7, 0})
        perp = perp && inner(emb.beta.at(i), simple_root(d, j)).is_zero();
    check_true(rep, "(c) beta orthogonal to span(J)", perp);
  }

  // (d) the published action table on the mixed basis
  {
    ActionTable t;
    auto base = [&](int i) { return emb.beta.at(i).coords; };
    auto al = [&](int j) { return simple_root(d, j).coords; };
    t.names = {"beta1", "beta2", "beta3", "beta4", "beta0", "alpha2", "alpha5", "alpha7", "alpha0"};
    t.basis = {base(1), base(2), base(3), base(4), base(0), al(2), al(5), al(7), al(0)};
    auto lin = [&](std::initializer_list<std::pair<int, Vec>> terms) {
      Vec v(d.num_nodes());
      for (auto& [coef, vec] : terms)
        for (int i = 0; i < d.num_nodes(); ++i) v[i] += Rat(coef) * vec[i];
      return v;
    };
    struct Row {
      int b;
      std::vector<Vec> images;
    };
    std::vector<Row> rows;
    rows.push_back({1, {lin({{-1, base(1)}}), lin({{1, base(2)}, {1, base(1)}}), base(3), base(4),
                        lin({{1, base(0)}, {1, base(1)}}), al(2), al(7), al(5), al(0)}});
    rows.push_back({2, {lin({{1, base(1)}, {1, base(2)}}), lin({{-1, base(2)}}),
                        lin({{1, base(3)}, {1, base(2)}}), base(4), base(0), al(5), al(2), al(7),
                        al(0)}});
    rows.push_back({3, {base(1), lin({{1, base(2)}, {2, base(3)}}), lin({{-1, base(3)}}),
                        lin({{1, base(4)}, {1, base(3)}}), base(0), al(2), al(5), al(7), al(0)}});
    rows.push_back({4, {base(1), base(2), lin({{1, base(3)}, {1, base(4)}}), lin({{-1, base(4)}}),
                        base(0), al(2), al(5), al(7), al(0)}});
    rows.push_back({0, {lin({{1, base(1)}, {1, base(0)}}), base(2), base(3), base(4),
                        lin({{-1, base(0)}}), al(2), al(5), al(0), al(7)}});
    for (const Row& row : rows) {
      t.expected = row.images;
      check_action_table(rep, "(d) action of b" + std::to_string(row.b) + " on the mixed basis",
                         emb.b(row.b).matrix(), t);
    }
  }

  // (e) delta_F4 = beta_0 + 2beta_1 + 3beta_2 + 4beta_3 + 2beta_4 = delta
  {
    Vec got(d.num_nodes());
    const int coef[5] = {1, 2, 3, 4, 2};
    for (int i = 0; i <= 4; ++i)
      for (int k = 0; k < d.num_nodes(); ++k)
        got[k] += Rat(coef[i]) * emb.beta.at(i).coords[k];
    check_eq(rep, "(e) delta_F4 equals the E8~ null root", d.delta(), got);
  }

  // (f) coroot dictionary and the weight H_1 of the subsystem. The long
  // betas have squared length 4 and are not E8 roots, so their coroots
  // come straight from pi(2 beta / |beta|^2).
  DualVec H1 = zero_dual(d);
  {
    auto coroot_of = [&](const RootVec& v) {
      DualVec p = pi_map(v);
      Rat s = Rat(2) / norm2(v);
      for (Rat& x : p.coords) x *= s;
      return p;
    };
    auto pia = [&](int j) { return pi_map(simple_root(d, j)); };
    auto half_sum = [&](int x, int y, int z) {
      DualVec v = zero_dual(d);
      for (int i = 0; i < d.num_nodes(); ++i)
        v.coords[i] = (pia(x).coords[i] + pia(y).coords[i]) / Rat(2) + pia(z).coords[i];
      return v;
    };
    bool ok = coroot_of(emb.beta.at(0)) == half_sum(7, 0, 8) &&
              coroot_of(emb.beta.at(1)) == half_sum(5, 7, 6) &&
              coroot_of(emb.beta.at(2)) == half_sum(2, 5, 4) &&
              coroot_of(emb.beta.at(3)) == pia(3) && coroot_of(emb.beta.at(4)) == pia(1);
    check_true(rep, "(f) coroot dictionary pi(beta_i-check) over E8 roots", ok);

    const int coef[4] = {2, 3, 2, 1};  // H_1 over the subsystem's simple coroots
    for (int i = 1; i <= 4; ++i) {
      DualVec c = coroot_of(emb.beta.at(i));
      for (int k = 0; k < d.num_nodes(); ++k) H1.coords[k] += Rat(coef[i - 1]) * c.coords[k];
    }
    Vec twoH1(H1.coords);
    for (Rat& x : twoH1) x *= Rat(2);
    Vec h68 = weight(d, {{1, 6}, {-2, 8}});
    h68.push_back(Rat(0));
    check_eq(rep, "(f) 2 H_1 = h_6 - 2h_8", h68, twoH1);
    bool nonintegral = false;
    for (int i = 0; i < d.rank(); ++i) nonintegral = nonintegral || !H1.coords[i].is_integer();
    check_true(rep, "(f) H_1 is not a weight of E8~ (non-integer coordinate)", nonintegral);
  }

  // (g) U_1 = b_0 b_1232143 b_2 b_3412321 and its published actions
  WeylWord U1 = emb.b(0) * emb.b_word("1232143") * emb.b(2) * emb.b_word("3412321");
  {
    ActionTable t;
    t.names = {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5",
               "alpha6", "alpha7", "alpha8", "alpha0"};
    for (int j : {1, 2, 3, 4, 5, 6, 7, 8, 0}) t.basis.push_back(simple_root(d, j).coords);
    auto shifted = [&](const RootVec& r, int mult) {
      Vec v = r.coords;
      for (int i = 0; i < d.num_nodes(); ++i) v[i] += Rat(mult) * d.delta()[i];
      return v;
    };
    RootVec long_root = root_from_digits(d, "1233444555666778");
    rep.checks.push_back({"(g) digit string 1233444555666778 denotes a root of Phi(E8)",
                          "root with coords (1,1,2,3,3,3,2,1)", vec_str(long_root.coords),
                          is_root(long_root) &&
                              long_root.coords == Vec{Rat(1), Rat(1), Rat(2), Rat(3), Rat(3),
                                                      Rat(3), Rat(2), Rat(1), Rat(0)}});
    t.expected = {simple_root(d, 1).coords,
                  simple_root(d, 5).coords,
                  simple_root(d, 3).coords,
                  simple_root(d, 4).coords,
                  simple_root(d, 2).coords,
                  shifted(long_root, -1),
                  simple_root(d, 0).coords,
                  shifted(simple_root(d, 8), 1),
                  simple_root(d, 7).coords};
    check_action_table(rep, "(g) U_1 action on the simple basis", U1.matrix(), t);

    ActionTable tm;
    tm.names = {"beta1", "beta2", "beta3", "beta4", "beta0", "alpha2", "alpha5", "alpha7", "alpha0"};
    for (int i : {1, 2, 3, 4, 0}) tm.basis.push_back(emb.beta.at(i).coords);
    for (int j : {2, 5, 7, 0}) tm.basis.push_back(simple_root(d, j).coords);
    tm.expected = {shifted(emb.beta.at(1), -1),
                   emb.beta.at(2).coords,
                   emb.beta.at(3).coords,
                   emb.beta.at(4).coords,
                   shifted(emb.beta.at(0), 2),
                   simple_root(d, 5).coords,
                   simple_root(d, 2).coords,
                   simple_root(d, 0).coords,
                   simple_root(d, 7).coords};
    check_action_table(rep, "(g) U_1 action on the mixed basis", U1.matrix(), tm);

    Mat U1sq = U1.matrix() * U1.matrix();
    Vec h68 = weight(d, {{1, 6}, {-2, 8}});
    check_eq(rep, "(g) U_1^2 is the E8~ translation by h_6-2h_8",
             weight_translation_matrix(d, h68), U1sq);
    check_eq(rep, "(g) |h_6-2h_8|^2", Rat(4), weight_norm2(dual_from_weight_coords(d, h68)));
  }

  // (h) phi_a from its published action table
  {
    Mat phi = Mat::identity(d.num_nodes());
    auto set_col = [&](int label, const Vec& image) {
      int j = d.index_of(label);
      for (int i = 0; i < d.num_nodes(); ++i) phi.at(i, j) = image[i];
    };
    auto minus = [&](const RootVec& r, int delta_mult) {
      Vec v(d.num_nodes());
      for (int i = 0; i < d.num_nodes(); ++i)
        v[i] = -r.coords[i] + Rat(delta_mult) * d.delta()[i];
      return v;
    };
    auto plus = [&](const RootVec& r, int delta_mult) {
      Vec v(d.num_nodes());
      for (int i = 0; i < d.num_nodes(); ++i)
        v[i] = r.coords[i] + Rat(delta_mult) * d.delta()[i];
      return v;
    };
    set_col(1, plus(simple_root(d, 1), 1));
    set_col(2, minus(simple_root(d, 2), 0));
    set_col(3, plus(root_from_digits(d, "23445"), -1));
    set_col(4, minus(simple_root(d, 4), 0));
    set_col(5, minus(simple_root(d, 5), 0));
    set_col(6, minus(root_from_digits(d, "12334456"), 1));
    set_col(7, minus(simple_root(d, 7), 0));
    set_col(8, minus(simple_root(d, 8), 0));
    set_col(0, minus(simple_root(d, 0), 0));

    check_eq(rep, "(h) phi_a fixes delta", d.delta(), phi.apply(d.delta()));
    Vec hphi = weight(d, {{-2, 1}, {2, 3}, {-1, 6}});
    check_eq(rep, "(h) phi_a^2 is the translation by -2h_1+2h_3-h_6",
             weight_translation_matrix(d, hphi), phi * phi);
    check_eq(rep, "(h) |-2h_1+2h_3-h_6|^2", Rat(4),
             weight_norm2(dual_from_weight_coords(d, hphi)));

    WeylWord X = emb.b_word("412321");
    Vec h68 = weight(d, {{1, 6}, {-2, 8}});
    DualVec img = act_dual(X, dual_from_weight_coords(d, h68));
    check_eq(rep, "(h) X = b_412321 takes h_6-2h_8 to -2h_1+2h_3-h_6",
             dual_from_weight_coords(d, hphi).coords, img.coords);

    Mat XU12X = X.matrix() * (U1.matrix() * U1.matrix()) * X.matrix().inverse();
    check_eq(rep, "(h) X U_1^2 X^{-1} = phi_a^2", phi * phi, XU12X);

    // closing identity; the remaining factor works out to b_0
    Mat lhs = WeylWord(d, digits("0752")).matrix() * emb.b(0).matrix() * emb.b(2).matrix() *
              (X.matrix() * U1.matrix() * X.matrix().inverse());
    check_eq(rep, "(h) s_0752 b_0 b_2 X U_1 X^{-1} = phi_a", phi, lhs);
  }
  return rep;
}

Table3Row table3(const RootDatum& d) {
  const RootDatum& fin = d.finite_datum();
  const RootSystemTable& t = enumerate_roots(fin);
  Table3Row row;
  row.type = fin.type();
  row.num_positive = t.positive.size();
  row.num_long = t.num_long;
  row.num_short = t.num_short;

  const PositiveRoot& hl = t.positive[t.highest_long];
  row.c = hl.coords;

  // exponents: the height partition of Phi+ is conjugate to the partition
  // of exponents; |W| is the product of the degrees m_i + 1.
  {
    std::map<int, int> at_height;
    for (const PositiveRoot& r : t.positive) at_height[r.height] += 1;
    for (int k = 1;; ++k) {
      int count = 0;
      for (auto& [h, c] : at_height)
        if (c >= k) ++count;
      if (count == 0) break;
      row.exponents.push_back(count);
    }
    std::sort(row.exponents.begin(), row.exponents.end());
    row.order_w = 1;
    for (int m : row.exponents) row.order_w *= std::uint64_t(m) + 1;
  }

  RootVec hlv = highest_root(fin);
  row.k_highest_long = coroot_coefficients(hlv);
  DualVec cl = coroot(hlv);
  row.coroot_of_highest_long = Vec(cl.coords.begin(), cl.coords.begin() + fin.rank());
  if (t.highest_short >= 0) {
    RootVec hsv = highest_short_root(fin);
    row.k_highest_short = coroot_coefficients(hsv);
    DualVec cs = coroot(hsv);
    row.coroot_of_highest_short = Vec(cs.coords.begin(), cs.coords.begin() + fin.rank());
  }
  for (int i = 0; i < fin.rank(); ++i) row.weight_norms.push_back(fin.gram().at(i, i));
  return row;
}

namespace {

struct Table3Reference {
  std::uint64_t num_positive;
  std::vector<std::int64_t> c;
  std::uint64_t order_w;
  Vec k_long, k_short;  // k_short empty when simply laced
  Vec weight_norms;
  Vec pi_long, pi_short;  // h-coordinates; pi_short empty when simply laced
};

Vec weight_units(int n, std::initializer_list<std::pair<int, int>> terms) {
  Vec h(n);
  for (auto& [coef, j] : terms) h[j - 1] += Rat(coef);
  return h;
}

Table3Reference reference_row(Family fam, int n) {
  Table3Reference r;
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= std::uint64_t(i);
    return f;
  };
  switch (fam) {
    case Family::A:
      r.num_positive = std::uint64_t(n) * (n + 1) / 2;
      r.c.assign(n, 1);
      r.order_w = fact(n + 1);
      r.k_long.assign(n, Rat(1));
      for (int i = 1; i <= n; ++i) r.weight_norms.push_back(Rat(std::int64_t(i) * (n + 1 - i), n + 1));
      r.pi_long = weight_units(n, {{1, 1}, {1, n}});
      break;
    case Family::B:
      r.num_positive = std::uint64_t(n) * n;
      r.c.assign(n, 2);
      r.c[0] = 1;
      r.order_w = (std::uint64_t(1) << n) * fact(n);
      r.k_long.assign(n, Rat(2));
      r.k_long[0] = Rat(1);
      r.k_long[n - 1] = Rat(1);
      r.k_short.assign(n, Rat(2));
      r.k_short[n - 1] = Rat(1);
      for (int i = 1; i <= n; ++i) r.weight_norms.push_back(Rat(i));
      r.pi_long = weight_units(n, {{1, 2}});
      r.pi_short = weight_units(n, {{2, 1}});
      break;
    case Family::C:
      r.num_positive = std::uint64_t(n) * n;
      r.c.assign(n, 2);
      r.c[n - 1] = 1;
      r.order_w = (std::uint64_t(1) << n) * fact(n);
      r.k_long.assign(n, Rat(1));
      r.k_short.assign(n, Rat(2));
      r.k_short[0] = Rat(1);
      for (int i = 1; i < n; ++i) r.weight_norms.push_back(Rat(i));
      r.weight_norms.push_back(Rat(n, 4));
      // pi of the highest root is h_1 (the table's 2h_1 disagrees with the
      // worked C3 example and with |pi|^2 = 1)
      r.pi_long = weight_units(n, {{1, 1}});
      // the h_2 formula degenerates at n = 2, where the highest short root
      // is alpha_1 + alpha_2 and its coroot is 2h_2
      r.pi_short = n == 2 ? weight_units(n, {{2, 2}}) : weight_units(n, {{1, 2}});
      break;
    case Family::D:
      r.num_positive = std::uint64_t(n) * (n - 1);
      r.c.assign(n, 2);
      r.c[0] = r.c[n - 2] = r.c[n - 1] = 1;
      r.order_w = (std::uint64_t(1) << (n - 1)) * fact(n);
      for (auto x : r.c) r.k_long.push_back(Rat(x));
      for (int i = 1; i <= n - 2; ++i) r.weight_norms.push_back(Rat(i));
      r.weight_norms.push_back(Rat(n, 4));
      r.weight_norms.push_back(Rat(n, 4));
      r.pi_long = weight_units(n, {{1, 2}});
      break;
    case Family::E: {
      std::vector<std::int64_t> cs[3] = {{2, 1, 2, 3, 2, 1},
                                         {2, 2, 3, 4, 3, 2, 1},
                                         {2, 3, 4, 6, 5, 4, 3, 2}};
      r.c = cs[n - 6];
      r.num_positive = n == 6 ? 36 : n == 7 ? 63 : 120;
      r.order_w = n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
      for (auto x : r.c) r.k_long.push_back(Rat(x));
      if (n == 6)
        r.weight_norms = {Rat(2), Rat(4, 3), Rat(10, 3), Rat(6), Rat(10, 3), Rat(4, 3)};
      else if (n == 7)
        r.weight_norms = {Rat(2), Rat(7, 2), Rat(6), Rat(12), Rat(15, 2), Rat(4), Rat(3, 2)};
      else
        r.weight_norms = {Rat(4), Rat(8), Rat(14), Rat(30), Rat(20), Rat(12), Rat(6), Rat(2)};
      r.pi_long = weight_units(n, {{1, n == 8 ? 8 : 1}});
      break;
    }
    case Family::F:
      r.num_positive = 24;
      r.c = {2, 3, 4, 2};
      r.order_w = 1152;
      r.k_long = {Rat(2), Rat(3), Rat(2), Rat(1)};
      r.k_short = {Rat(2), Rat(4), Rat(3), Rat(2)};
      r.weight_norms = {Rat(2), Rat(6), Rat(12), Rat(4)};
      r.pi_long = weight_units(4, {{1, 1}});
      r.pi_short = weight_units(4, {{1, 4}});
      break;
    case Family::G:
      r.num_positive = 6;
      r.c = {3, 2};
      r.order_w = 12;
      r.k_long = {Rat(1), Rat(2)};
      r.k_short = {Rat(2), Rat(3)};
      r.weight_norms = {Rat(2), Rat(2, 3)};
      r.pi_long = weight_units(2, {{1, 2}});
      r.pi_short = weight_units(2, {{1, 1}});
      break;
  }
  return r;
}

}  // namespace

CaseReport verify_table3() {
  CaseReport rep;
  rep.case_id = "table3";
  std::vector<std::pair<Family, int>> types;
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::A, n);
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::B, n);
  for (int n = 2; n <= 8; ++n) types.emplace_back(Family::C, n);
  for (int n = 4; n <= 8; ++n) types.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) types.emplace_back(Family::E, n);
  types.emplace_back(Family::F, 4);
  types.emplace_back(Family::G, 2);

  for (auto [fam, n] : types) {
    const RootDatum& d = RootDatum::get(fam, n, false);
    Table3Row got = table3(d);
    Table3Reference want = reference_row(fam, n);
    bool ok = got.num_positive == want.num_positive && got.c == want.c &&
              got.order_w == want.order_w && got.k_highest_long == want.k_long &&
              got.k_highest_short == want.k_short && got.weight_norms == want.weight_norms &&
              got.coroot_of_highest_long == want.pi_long &&
              got.coroot_of_highest_short == want.pi_short;
    std::string detail;
    if (!ok) {
      detail = "num=" + std::to_string(got.num_positive) + " |W|=" + std::to_string(got.order_w) +
               " k_long=" + vec_str(got.k_highest_long) + " wn=" + vec_str(got.weight_norms) +
               " pi_long=" + vec_str(got.coroot_of_highest_long);
    }
    rep.checks.push_back({"row " + d.type(), "reference values", ok ? "reference values" : detail, ok});
  }
  return rep;
}

}  // namespace weyl
