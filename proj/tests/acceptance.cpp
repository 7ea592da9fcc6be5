// One PASS/FAIL line per acceptance criterion. Every comparison is exact; the
// runtime budgets below are part of each criterion.
#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "jzero/hconst_table.hpp"
#include "jzero/j0.hpp"
#include "jzero/phi0.hpp"
#include "jzero/steinberg.hpp"

using namespace jzero;

namespace {

constexpr double kBudget1 = 10, kBudget2 = 300, kBudget3 = 1800, kBudget5 = 60, kBudget6 = 120, kBudget7 = 60;
constexpr std::uint64_t kSeed = 20240611;
constexpr int kGammaBallA1 = 12, kGammaBallA2 = 8, kGammaChiA2 = 3;
constexpr int kJ0Chi = 4, kJ0Triples = 200, kJ0Pairs = 100;

std::string g_cache_dir;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::shared_ptr<const LowestCell> cell_for(const HeckeAlgebra& H) {
  auto rep = std::make_shared<const RepresentationRing>(H.group().root_system());
  return std::make_shared<const LowestCell>(H.table().group_ptr(), rep);
}

std::string join(const std::vector<std::string>& v, const char* sep = "; ") {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
  return r;
}

Outcome criterion1() {
  std::vector<std::string> d;
  bool ok = true;
  for (const char* tag : {"A1", "A2"}) {
    SteinbergBasis sb(std::make_shared<const RepresentationRing>(RootSystem::from_tag(tag)));
    bool id = sb.pairing_matrix() == identity_rmatrix(sb.size(), sb.rep().rank());
    ok = ok && id;
    d.push_back(std::string(tag) + " " + std::to_string(sb.size()) + "x" + std::to_string(sb.size()) + (id ? " identity" : " not identity"));
  }
  return {ok, join(d)};
}

Outcome criterion2() {
  auto R = std::make_shared<const RepresentationRing>(RootSystem::from_tag("A3"));
  SteinbergBasis sb(R);
  DualCorrectionReport r = sb.verify_dual_correction();
  const auto& W = R->root_system().enumerate_weyl();
  std::vector<std::string> col;
  for (int w = 0; w < sb.size(); ++w) {
    const VirtualCharacter& c = sb.pairing(w, 0);
    if (!c.is_zero()) col.push_back("<F_" + W[static_cast<std::size_t>(w)].word_string() + ",G_e>=" + to_string(c));
  }
  std::string one_line;
  for (int k : r.sigma_one_line) one_line += std::to_string(k);
  int per_w = static_cast<int>(std::count(r.per_w_pass.begin(), r.per_w_pass.end(), true));
  std::ostringstream os;
  os << "clause a (triv for exactly two w): " << (r.exactly_two_triv ? "PASS" : "FAIL") << " [" << join(col) << "]"
     << "; clause b (<F_w,G_e+G_sigma> = delta): " << (r.correction_holds ? "PASS" : "FAIL") << " " << per_w << "/24"
     << "; sigma=" << r.sigma_word << " one-line " << one_line;
  return {r.exactly_two_triv && r.correction_holds, os.str()};
}

struct GammaRun {
  std::shared_ptr<const HeckeAlgebra> H;
  HConstantTable table;
  GammaReport report;
};

std::map<std::string, GammaRun>& gamma_runs() {
  static std::map<std::string, GammaRun> runs;
  return runs;
}

const GammaRun& gamma_run(const std::string& tag, int ball, int chi_bound) {
  auto& runs = gamma_runs();
  auto it = runs.find(tag);
  if (it != runs.end()) return it->second;
  auto H = HeckeAlgebra::build(tag, 2 * ball);
  std::string dir = g_cache_dir.empty() ? default_cache_dir() : g_cache_dir;
  HConstantTable tab = dir.empty() ? HConstantTable::compute(*H, ball, 0) : HConstantTable::load_or_compute(*H, ball, 0, dir);
  GammaReport rep = gamma_oracle_check(tab, H->table(), *cell_for(*H), chi_bound);
  return runs.emplace(tag, GammaRun{H, std::move(tab), std::move(rep)}).first->second;
}

Outcome criterion3() {
  std::vector<std::string> d;
  bool ok = true;
  // All of c0 in the rank-one ball (chi <= 2 * ball covers it).
  for (auto [tag, ball, chi] : {std::tuple{"A1~", kGammaBallA1, 2 * kGammaBallA1}, std::tuple{"A2~", kGammaBallA2, kGammaChiA2}}) {
    const GammaReport& r = gamma_run(tag, ball, chi).report;
    ok = ok && r.pass;
    std::ostringstream os;
    os << tag << " ball " << ball << ": " << r.c0_in_ball << " c0 elements, " << r.pairs << " pairs, " << r.compared
       << " nonzero triples, " << r.mismatches.size() << " mismatches, sign " << r.sign;
    if (!r.mismatches.empty()) {
      const GammaTriple& m = r.mismatches.front();
      os << " (first: " << m.ix.to_string() << " " << m.iy.to_string() << " -> " << m.z.to_string() << " hecke " << m.hecke
         << " xi " << m.xi << ")";
    }
    d.push_back(os.str());
  }
  return {ok, join(d)};
}

Outcome criterion4() {
  std::vector<std::string> d;
  bool ok = true;
  for (auto [tag, ball, chi] : {std::tuple{"A1~", kGammaBallA1, 2 * kGammaBallA1}, std::tuple{"A2~", kGammaBallA2, kGammaChiA2}}) {
    const GammaRun& run = gamma_run(tag, ball, chi);
    const ElementTable& t = run.H->table();
    const LowestCell cell(t.group_ptr(), std::make_shared<const RepresentationRing>(t.group().root_system()));
    int a0 = cell.root_system().longest_element().length();
    int c0 = 0, c0_ok = 0, bound_ok = 0, tested = 0;
    for (int w = 0; w < run.table.ball_size(); ++w) {
      auto a = run.table.a_function(w);
      ++tested;
      if (a && *a <= t.length(w)) ++bound_ok;
      if (cell.c0_parameterize(t.element(w), 4 * ball)) {
        ++c0;
        if (a && *a == a0) ++c0_ok;
      }
    }
    bool pass = c0 > 0 && c0 == c0_ok && bound_ok == tested;
    ok = ok && pass;
    d.push_back(std::string(tag) + ": a = " + std::to_string(a0) + " on " + std::to_string(c0_ok) + "/" + std::to_string(c0) +
                " c0 elements, a(w) <= l(w) on " + std::to_string(bound_ok) + "/" + std::to_string(tested));
  }
  return {ok, join(d)};
}

Outcome criterion5() {
  auto H = HeckeAlgebra::build("A1~", 13);
  Phi0 phi(H, cell_for(*H));
  SteinbergBasis sb(std::make_shared<const RepresentationRing>(RootSystem::from_tag("A1")));
  Sl2Report r = sl2_check(phi, sb, 6);
  std::vector<std::string> d;
  for (const auto& c : r.checks) d.push_back(c.name + (c.pass ? " ok" : " FAILED: " + c.detail));
  if (r.conjugator_found) d.push_back("conjugator diag(1, " + r.conjugator.to_string() + ")");
  return {r.pass(), join(d)};
}

Outcome criterion6() {
  std::mt19937_64 rng(kSeed);
  std::vector<std::string> d;
  bool ok = true;
  for (const char* tag : {"A1~", "A2~"}) {
    auto cell = LowestCell::from_tag(tag);
    const RepresentationRing& R = cell->rep();
    auto grid = cell->grid(kJ0Chi, false);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), nterms(1, 3);

    int assoc = 0;
    for (int k = 0; k < kJ0Triples; ++k) {
      J0Elt a = J0Elt::basis(grid[pick(rng)]), b = J0Elt::basis(grid[pick(rng)]), c = J0Elt::basis(grid[pick(rng)]);
      if (cell->multiply(cell->multiply(a, b), c) == cell->multiply(a, cell->multiply(b, c))) ++assoc;
    }
    auto D = cell->distinguished_involutions();
    bool idem = true;
    for (const auto& x : D)
      for (const auto& y : D) {
        J0Elt p = cell->multiply(J0Elt::basis(x), J0Elt::basis(y));
        idem = idem && (x == y ? p == J0Elt::basis(x) : p.is_zero());
      }
    J0Elt e = cell->unit();
    int unit_ok = 0;
    for (const auto& i : grid) {
      J0Elt t = J0Elt::basis(i);
      if (cell->multiply(e, t) == t && cell->multiply(t, e) == t) ++unit_ok;
    }
    auto random_elt = [&] {
      J0Elt x;
      for (int n = nterms(rng); n > 0; --n) x.add(grid[pick(rng)], coeff(rng));
      return x;
    };
    int hom = 0;
    for (int k = 0; k < kJ0Pairs; ++k) {
      J0Elt a = random_elt(), b = random_elt();
      if (cell->matrix_realization(cell->multiply(a, b)) == mat_mul(R, cell->matrix_realization(a), cell->matrix_realization(b))) ++hom;
    }
    bool pass = assoc == kJ0Triples && idem && unit_ok == static_cast<int>(grid.size()) && hom == kJ0Pairs;
    ok = ok && pass;
    d.push_back(std::string(tag) + ": assoc " + std::to_string(assoc) + "/" + std::to_string(kJ0Triples) + ", idempotents " +
                (idem ? "orthogonal" : "BROKEN") + ", unit " + std::to_string(unit_ok) + "/" + std::to_string(grid.size()) +
                ", matrix hom " + std::to_string(hom) + "/" + std::to_string(kJ0Pairs));
  }
  return {ok, join(d)};
}

bool contains_pattern(const std::vector<int>& p, const std::vector<int>& pat) {
  int n = static_cast<int>(p.size()), k = static_cast<int>(pat.size());
  std::vector<int> pos(static_cast<std::size_t>(k));
  std::function<bool(int, int)> rec = [&](int i, int from) {
    if (i == k) {
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          if ((p[static_cast<std::size_t>(pos[a])] < p[static_cast<std::size_t>(pos[b])]) != (pat[a] < pat[b])) return false;
      return true;
    }
    for (int j = from; j < n; ++j) {
      pos[static_cast<std::size_t>(i)] = j;
      if (rec(i + 1, j + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

Outcome criterion7() {
  std::vector<std::string> d;
  bool ok = true;
  for (auto [tag, ball] : {std::pair{"A1~", 12}, std::pair{"A2~", 8}, std::pair{"A3", 6}}) {
    auto H = HeckeAlgebra::build(tag, ball);
    const ElementTable& t = H->table();
    long checked = 0, bad = 0;
    for (int w = 0; w < t.size(); ++w)
      for (int y = 0; y < t.size(); ++y) {
        if (t.length(y) > t.length(w)) continue;
        ++checked;
        const LaurentPoly& p = H->kl().P(y, w);
        bool good;
        if (y == w) good = p == LaurentPoly(1);
        else if (!t.leq(y, w)) good = p.is_zero();
        else
          good = p.coefficient_of(0) == 1 && p.min_exponent() >= 0 && 2 * p.max_exponent() <= t.length(w) - t.length(y) - 1 &&
                 H->kl().P(t.inverse(y), t.inverse(w)) == p;
        if (!good) ++bad;
      }
    ok = ok && bad == 0;
    d.push_back(std::string(tag) + " " + std::to_string(checked) + " pairs, " + std::to_string(bad) + " bad");
  }
  // A3: discover the singular set from palindromicity of Bruhat intervals, extract
  // minimal patterns, and compare with P_{e,w} = 1.
  auto H = HeckeAlgebra::build("A3", 6);
  const ElementTable& t = H->table();
  const RootSystem& rs = H->group().root_system();
  std::vector<std::vector<int>> singular;
  for (int w = 0; w < t.size(); ++w) {
    std::vector<int> rankgen(static_cast<std::size_t>(t.length(w) + 1), 0);
    for (int y = 0; y < t.size(); ++y)
      if (t.leq(y, w)) ++rankgen[static_cast<std::size_t>(t.length(y))];
    if (!std::equal(rankgen.begin(), rankgen.end(), rankgen.rbegin())) singular.push_back(rs.one_line(t.element(w).finite));
  }
  std::vector<std::vector<int>> patterns;
  for (const auto& s : singular) {
    bool minimal = true;
    for (const auto& o : singular)
      if (o != s && o.size() <= s.size() && contains_pattern(s, o)) minimal = false;
    if (minimal) patterns.push_back(s);
  }
  int agree = 0;
  for (int w = 0; w < t.size(); ++w) {
    auto perm = rs.one_line(t.element(w).finite);
    bool avoids = std::none_of(patterns.begin(), patterns.end(), [&](const auto& p) { return contains_pattern(perm, p); });
    if (avoids == (H->kl().P(0, w) == LaurentPoly(1))) ++agree;
  }
  std::vector<std::string> pats;
  for (const auto& p : patterns) {
    std::string s;
    for (int k : p) s += std::to_string(k);
    pats.push_back(s);
  }
  ok = ok && agree == t.size() && !patterns.empty();
  d.push_back("A3 patterns {" + join(pats, ",") + "}, P_{e,w}=1 iff avoiding on " + std::to_string(agree) + "/" + std::to_string(t.size()));
  return {ok, join(d)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  Outcome (*run)();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  std::vector<int> only;
  app.add_option("--criterion", only, "run only these criteria (1-7)")->check(CLI::Range(1, 7));
  app.add_option("--cache-dir", g_cache_dir, "h-table cache directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> all = {
      {1, "Steinberg pairing is the identity for A1 and A2", kBudget1, criterion1},
      {2, "A3 dual of F_e is G_e + G_sigma", kBudget2, criterion2},
      {3, "gamma constants match the J0 product", kBudget3, criterion3},
      {4, "a-function on c0 and a(w) <= l(w)", kBudget3, criterion4},
      {5, "phi0 for SL2", kBudget5, criterion5},
      {6, "J0 ring axioms", kBudget6, criterion6},
      {7, "KL sanity and A3 smoothness", kBudget7, criterion7},
  };
  bool all_pass = true;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs < c.budget_s;
    bool pass = o.pass && in_budget;
    all_pass = all_pass && pass;
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " | " << o.detail << " | " << secs << "s (budget "
       << c.budget_s << "s" << (in_budget ? "" : ", EXCEEDED") << ")";
    std::cout << os.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
