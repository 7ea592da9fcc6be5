#include "jzero/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "jzero/hconst_table.hpp"
#include "jzero/j0.hpp"
#include "jzero/phi0.hpp"
#include "jzero/steinberg.hpp"

namespace jzero::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string type = "A1~";
  int ball = 4;
  int chi_bound = 3;
  std::string cache_dir;
  std::string out;
  std::string format = "json";
  int jobs = 1;
  std::string x, y, w, lambda, mu;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Result {
  json doc;
  Table csv;
  bool verified = true;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const Result& r, const std::string& format) {
  if (format == "json") return r.doc.dump(2) + "\n";
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_field(f[i]);
    os << "\n";
  };
  line(r.csv.header);
  for (const auto& row : r.csv.rows) line(row);
  return os.str();
}

json header(const std::string& command, const Options& o) {
  return json{{"schema", 1}, {"command", command}, {"type", o.type}};
}

std::string affine_tag(const std::string& t) { return !t.empty() && t.back() == '~' ? t : t + "~"; }
std::string finite_tag(const std::string& t) { return !t.empty() && t.back() == '~' ? t.substr(0, t.size() - 1) : t; }

std::string q_string(const LaurentPoly& p) { return p.to_string('q'); }

std::shared_ptr<const LowestCell> cell_for(const HeckeAlgebra& H) {
  auto rep = std::make_shared<const RepresentationRing>(H.group().root_system());
  return std::make_shared<const LowestCell>(H.table().group_ptr(), rep);
}

HConstantTable hconst_table(const HeckeAlgebra& H, const Options& o) {
  std::string dir = o.cache_dir.empty() ? default_cache_dir() : o.cache_dir;
  return dir.empty() ? HConstantTable::compute(H, o.ball, o.jobs) : HConstantTable::load_or_compute(H, o.ball, o.jobs, dir);
}

Result hecke_kl(const Options& o) {
  auto H = HeckeAlgebra::build(o.type, o.ball);
  const ElementTable& t = H->table();
  Result r{header("hecke kl", o), {{"y", "w", "P"}, {}}, true};
  r.doc["ball"] = o.ball;
  json entries = json::array();
  auto emit = [&](int y, int w) {
    std::string p = q_string(H->kl().P(y, w));
    entries.push_back({{"y", t.element(y).to_string()}, {"w", t.element(w).to_string()}, {"P", p}});
    r.csv.rows.push_back({t.element(y).to_string(), t.element(w).to_string(), p});
  };
  if (!o.y.empty() || !o.w.empty()) {
    if (o.y.empty() || o.w.empty()) throw CLI::ValidationError("--y and --w go together");
    int y = t.require(H->group().parse(o.y)), w = t.require(H->group().parse(o.w));
    if (t.leq(y, w)) emit(y, w);
    else entries.push_back({{"y", t.element(y).to_string()}, {"w", t.element(w).to_string()}, {"P", "0"}}),
         r.csv.rows.push_back({t.element(y).to_string(), t.element(w).to_string(), "0"});
  } else {
    for (int w = 0; w < t.size(); ++w)
      for (int y = 0; y < t.count_up_to(t.length(w)); ++y)
        if (t.leq(y, w)) emit(y, w);
  }
  r.doc["entries"] = std::move(entries);
  return r;
}

Result hecke_hconst(const Options& o) {
  auto H = HeckeAlgebra::build(o.type, 2 * o.ball);
  const ElementTable& t = H->table();
  HConstantTable tab = hconst_table(*H, o);
  Result r{header("hecke hconst", o), {{"x", "y", "z", "h"}, {}}, true};
  r.doc["ball"] = o.ball;
  r.doc["convention"] = to_string(H->convention());
  json entries = json::array();
  auto emit_row = [&](int x, int y) {
    auto [b, e] = tab.row(x, y);
    for (auto it = b; it != e; ++it) {
      std::string h = tab.poly(*it).to_string();
      std::string xs = t.element(x).to_string(), ys = t.element(y).to_string(), zs = t.element(it->z).to_string();
      entries.push_back({{"x", xs}, {"y", ys}, {"z", zs}, {"h", h}});
      r.csv.rows.push_back({xs, ys, zs, h});
    }
  };
  if (!o.x.empty() || !o.y.empty()) {
    if (o.x.empty() || o.y.empty()) throw CLI::ValidationError("--x and --y go together");
    int x = t.require(H->group().parse(o.x)), y = t.require(H->group().parse(o.y));
    if (x >= tab.ball_size() || y >= tab.ball_size()) throw CLI::ValidationError("--x and --y must lie in the ball");
    emit_row(x, y);
  } else {
    for (int x = 0; x < tab.ball_size(); ++x)
      for (int y = 0; y < tab.ball_size(); ++y) emit_row(x, y);
  }
  r.doc["entries"] = std::move(entries);
  return r;
}

Result hecke_afn(const Options& o) {
  auto H = HeckeAlgebra::build(o.type, 2 * o.ball);
  const ElementTable& t = H->table();
  HConstantTable tab = hconst_table(*H, o);
  Result r{header("hecke afn", o), {{"w", "length", "a"}, {}}, true};
  r.doc["ball"] = o.ball;
  json entries = json::array();
  for (int w = 0; w < tab.ball_size(); ++w) {
    auto a = tab.a_function(w);
    json e{{"w", t.element(w).to_string()}, {"length", t.length(w)}};
    e["a"] = a ? json(*a) : json(nullptr);
    entries.push_back(e);
    r.csv.rows.push_back({t.element(w).to_string(), std::to_string(t.length(w)), a ? std::to_string(*a) : ""});
  }
  r.doc["entries"] = std::move(entries);
  return r;
}

Result rep_tensor(const Options& o) {
  RepresentationRing R(RootSystem::from_tag(finite_tag(o.type)));
  Weight l = Weight::parse(o.lambda), m = Weight::parse(o.mu);
  if (l.rank() != R.rank() || m.rank() != R.rank()) throw CLI::ValidationError("weight rank does not match --type");
  const VirtualCharacter& v = R.tensor_decompose(l, m);
  Result r{header("rep tensor", o), {{"highest_weight", "multiplicity", "dim"}, {}}, true};
  r.doc["lambda"] = l.to_string();
  r.doc["mu"] = m.to_string();
  json terms = json::array();
  for (const auto& [w, c] : v.terms) {
    terms.push_back({{"highest_weight", w.to_string()}, {"multiplicity", c}, {"dim", R.dim(w)}});
    r.csv.rows.push_back({w.to_string(), std::to_string(c), std::to_string(R.dim(w))});
  }
  r.doc["terms"] = std::move(terms);
  r.doc["dim"] = R.dim(v);
  return r;
}

Result steinberg_pairing(const Options& o) {
  auto R = std::make_shared<const RepresentationRing>(RootSystem::from_tag(finite_tag(o.type)));
  SteinbergBasis sb(R);
  const auto& W = R->root_system().enumerate_weyl();
  const PairingMatrix& m = sb.pairing_matrix();
  Result r{header("steinberg pairing", o), {{"w", "v", "pairing"}, {}}, true};
  json rows = json::array();
  for (int i = 0; i < sb.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < sb.size(); ++j) {
      row.push_back(to_string(m(i, j)));
      r.csv.rows.push_back({W[i].word_string(), W[j].word_string(), to_string(m(i, j))});
    }
    rows.push_back(std::move(row));
  }
  json order = json::array();
  for (const auto& w : W) order.push_back(w.word_string());
  NondegeneracyReport nd = sb.nondegeneracy_check();
  r.doc["order"] = std::move(order);
  r.doc["matrix"] = std::move(rows);
  r.doc["is_identity"] = nd.is_identity;
  r.doc["unit_pivots"] = nd.unit_pivots;
  r.doc["det"] = to_string(nd.det);
  r.doc["det_is_unit"] = nd.det_is_unit;
  return r;
}

Result j0_mult(const Options& o) {
  auto cell = LowestCell::from_tag(affine_tag(o.type));
  C0Index x = cell->parse_index(o.x), y = cell->parse_index(o.y);
  J0Elt p = cell->multiply(J0Elt::basis(x), J0Elt::basis(y));
  Result r{header("j0 mult", o), {{"index", "coeff"}, {}}, true};
  r.doc["type"] = affine_tag(o.type);
  r.doc["x"] = x.to_string();
  r.doc["y"] = y.to_string();
  json terms = json::array();
  for (const auto& [idx, c] : p.terms) {
    terms.push_back({{"index", idx.to_string()}, {"coeff", c}, {"element", cell->c0_element(idx).to_string()}});
    r.csv.rows.push_back({idx.to_string(), std::to_string(c)});
  }
  r.doc["terms"] = std::move(terms);
  return r;
}

json triple_json(const GammaTriple& t) {
  return json{{"x", t.x.to_string()}, {"y", t.y.to_string()}, {"z", t.z.to_string()},      {"ix", t.ix.to_string()},
              {"iy", t.iy.to_string()}, {"iz", t.iz ? t.iz->to_string() : std::string()}, {"hecke", t.hecke},
              {"xi", t.xi},             {"pass", t.pass}};
}

Result j0_check_gamma(const Options& o) {
  std::string tag = affine_tag(o.type);
  auto H = HeckeAlgebra::build(tag, 2 * o.ball);
  HConstantTable tab = hconst_table(*H, o);
  GammaReport g = gamma_oracle_check(tab, H->table(), *cell_for(*H), o.chi_bound);
  Result r{header("j0 check-gamma", o), {{"x", "y", "z", "hecke", "xi", "pass"}, {}}, g.pass};
  r.doc["type"] = tag;
  r.doc["ball"] = g.ball;
  r.doc["chi_bound"] = g.chi_bound;
  r.doc["a"] = g.a;
  r.doc["sign"] = g.sign;
  r.doc["c0_in_ball"] = g.c0_in_ball;
  r.doc["pairs"] = g.pairs;
  r.doc["compared"] = g.compared;
  r.doc["nonzero"] = g.triples.size();
  r.doc["literal_td_square"] = g.literal_td_square;
  json mism = json::array();
  for (const auto& t : g.mismatches) mism.push_back(triple_json(t));
  r.doc["mismatches"] = std::move(mism);
  r.doc["pass"] = g.pass;
  for (const auto& t : g.triples)
    r.csv.rows.push_back({t.x.to_string(), t.y.to_string(), t.z.to_string(), std::to_string(t.hecke), std::to_string(t.xi),
                          t.pass ? "true" : "false"});
  return r;
}

Result j0_phi0(const Options& o) {
  std::string tag = affine_tag(o.type);
  auto H = HeckeAlgebra::build(tag, o.ball);
  Phi0 phi(H, cell_for(*H));
  if (o.w.empty()) throw CLI::ValidationError("--w is required");
  int w = H->table().require(H->group().parse(o.w));
  const J0AElt& img = phi.of_c_basis(w);
  Result r{header("j0 phi0", o), {{"index", "coeff"}, {}}, true};
  r.doc["type"] = tag;
  r.doc["ball"] = o.ball;
  r.doc["w"] = H->table().element(w).to_string();
  json terms = json::array();
  for (const auto& [idx, c] : img.terms) {
    terms.push_back({{"index", idx.to_string()}, {"coeff", c.to_string()}});
    r.csv.rows.push_back({idx.to_string(), c.to_string()});
  }
  r.doc["terms"] = std::move(terms);
  r.doc["matrix"] = to_string(phi.cell().matrix_realization(img));
  return r;
}

Result verify_all(const Options& o) {
  Result r{header("verify-all", o), {{"check", "pass", "detail"}, {}}, true};
  r.doc.erase("type");
  json checks = json::array();
  auto record = [&](const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    r.csv.rows.push_back({name, pass ? "true" : "false", detail});
    r.verified = r.verified && pass;
  };
  for (const char* t : {"A1", "A2"}) {
    SteinbergBasis sb(std::make_shared<const RepresentationRing>(RootSystem::from_tag(t)));
    record(std::string("steinberg-identity-") + t, sb.nondegeneracy_check().is_identity, "");
  }
  {
    SteinbergBasis sb(std::make_shared<const RepresentationRing>(RootSystem::from_tag("A3")));
    NondegeneracyReport nd = sb.nondegeneracy_check();
    DualCorrectionReport dc = sb.verify_dual_correction();
    record("steinberg-A3-invertible", !nd.is_identity && nd.det_is_unit, "det " + to_string(nd.det));
    record("steinberg-A3-correction", dc.correction_holds, "sigma " + dc.sigma_word);
  }
  for (auto [tag, ball] : {std::pair{"A1~", 8}, std::pair{"A2~", 6}}) {
    auto H = HeckeAlgebra::build(tag, 2 * ball);
    Options local = o;
    local.ball = ball;
    HConstantTable tab = hconst_table(*H, local);
    GammaReport g = gamma_oracle_check(tab, H->table(), *cell_for(*H), 3);
    record(std::string("gamma-") + tag, g.pass, std::to_string(g.compared) + " compared, " + std::to_string(g.mismatches.size()) + " mismatches");
  }
  {
    auto H = HeckeAlgebra::build("A1~", 13);
    Phi0 phi(H, cell_for(*H));
    SteinbergBasis sb(std::make_shared<const RepresentationRing>(RootSystem::from_tag("A1")));
    Sl2Report s = sl2_check(phi, sb, 6);
    for (const auto& c : s.checks) record("phi0-sl2-" + c.name, c.pass, "");
  }
  {
    auto cell = LowestCell::from_tag("A2~");
    auto idem = cell->idempotent_scan(1);
    auto d = cell->distinguished_involutions();
    std::sort(idem.begin(), idem.end());
    std::sort(d.begin(), d.end());
    record("j0-idempotents-A2", idem == d, std::to_string(idem.size()) + " found");
  }
  r.doc["checks"] = std::move(checks);
  r.doc["pass"] = r.verified;
  return r;
}

void emit(const Result& r, const Options& o) {
  std::string text = render(r, o.format);
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + o.out + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write to " + o.out + " failed");
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Lusztig's lowest two-sided cell, Xi's ring J0 and the map phi0"};
  app.require_subcommand(1);
  Options o;
  std::function<Result(const Options&)> action;

  auto common = [&](CLI::App* sub, std::function<Result(const Options&)> f) {
    sub->add_option("--type", o.type, "type tag, e.g. A1~ A2~ A3")->capture_default_str();
    sub->add_option("--out", o.out, "write output here instead of stdout");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->callback([&action, f] { action = f; });
    return sub;
  };
  auto ball_opts = [&](CLI::App* sub) {
    sub->add_option("--ball", o.ball, "length bound")->check(CLI::Range(0, 40))->capture_default_str();
    sub->add_option("--cache-dir", o.cache_dir, "h-table cache directory (default $JZERO_CACHE_DIR)");
    sub->add_option("--jobs", o.jobs, "worker threads, 0 = all cores")->check(CLI::Range(0, 256))->capture_default_str();
  };

  auto* hecke = app.add_subcommand("hecke", "affine Hecke algebra tables");
  hecke->require_subcommand(1);
  auto* kl = common(hecke->add_subcommand("kl", "Kazhdan-Lusztig polynomials on a ball"), hecke_kl);
  ball_opts(kl);
  kl->add_option("--y", o.y, "single pair: lower element");
  kl->add_option("--w", o.w, "single pair: upper element");
  auto* hc = common(hecke->add_subcommand("hconst", "structure constants h_{x,y,z} of the C basis"), hecke_hconst);
  ball_opts(hc);
  hc->add_option("--x", o.x, "single row: left factor");
  hc->add_option("--y", o.y, "single row: right factor");
  ball_opts(common(hecke->add_subcommand("afn", "a-function searched over the ball"), hecke_afn));

  auto* rep = app.add_subcommand("rep", "representation ring");
  rep->require_subcommand(1);
  auto* tensor = common(rep->add_subcommand("tensor", "decompose V(lambda) ⊗ V(mu)"), rep_tensor);
  tensor->add_option("--lambda", o.lambda, "highest weight, e.g. [1,0]")->required();
  tensor->add_option("--mu", o.mu, "highest weight")->required();

  auto* st = app.add_subcommand("steinberg", "Steinberg basis");
  st->require_subcommand(1);
  common(st->add_subcommand("pairing", "pairing matrix <F_w, G_v>"), steinberg_pairing);

  auto* j0 = app.add_subcommand("j0", "the ring J0 and the map phi0");
  j0->require_subcommand(1);
  auto* mult = common(j0->add_subcommand("mult", "product t_x t_y of lowest-cell basis elements"), j0_mult);
  mult->add_option("--x", o.x, "index (u,[chi],v)")->required();
  mult->add_option("--y", o.y, "index (u,[chi],v)")->required();
  auto* cg = common(j0->add_subcommand("check-gamma", "compare Hecke gamma constants with the J0 product"), j0_check_gamma);
  ball_opts(cg);
  cg->add_option("--chi-bound", o.chi_bound, "bound on chi coordinates")->check(CLI::Range(0, 20))->capture_default_str();
  auto* ph = common(j0->add_subcommand("phi0", "phi0(C_w) in J0 ⊗ A"), j0_phi0);
  ball_opts(ph);
  ph->add_option("--w", o.w, "element, e.g. s0s1 or t[2]·w[0]")->required();

  auto* va = common(app.add_subcommand("verify-all", "run the built-in consistency checks"), verify_all);
  va->add_option("--cache-dir", o.cache_dir, "h-table cache directory");
  va->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(0, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    Result r = action(o);
    emit(r, o);
    return r.verified ? 0 : 1;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace jzero::cli
