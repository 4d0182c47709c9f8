// wsa_cli: construct, verify and report minimal W-superalgebras.

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "wsa/errors.hpp"
#include "wsa/highest.hpp"

using namespace wsa;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kSuiteVersion = "relations-1";

enum Exit { kPass = 0, kIdentityFailure = 1, kUnsupported = 2, kPrecondition = 3 };

struct RunConfig {
  std::string command;
  std::string algebra;
  int theta = -1;
  std::string flavor = "finite";
  int truncate = 3;
  std::string lambda;  // comma separated; blocks takes ';' separated lists
  std::string c;
  std::string format = "json";
  unsigned seed = 1;

  std::string canonical() const {
    std::ostringstream os;
    os << command << "|" << algebra << "|" << theta << "|" << flavor << "|" << truncate << "|" << lambda << "|" << c
       << "|" << seed;
    return os.str();
  }
};

std::string hex_hash(const std::string& s) {
  std::ostringstream os;
  os << std::hex << std::hash<std::string>{}(s);
  return os.str();
}

Vec parse_vec(const std::string& text) {
  Vec out;
  std::string t = text;
  if (t == "[]" || t.empty()) return out;
  if (t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar(parse_rational(item)));
  return out;
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

Json poly_json(const Poly& p, const std::vector<std::string>& labels) {
  Json terms = Json::array();
  for (const auto& [m, c] : p) {
    Json mono = Json::array();
    for (auto l : m) mono.push_back(labels[l]);
    terms.push_back(Json{{"coeff", c.str()}, {"mono", mono}});
  }
  return terms;
}

Json checks_json(const std::vector<RelationCheck>& checks, bool& all) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json r{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) r["residual"] = c.residual;
    all = all && c.pass;
    a.push_back(r);
  }
  return a;
}

Json dims_json(const std::vector<WeightDim>& dims) {
  Json a = Json::array();
  for (const auto& d : dims) {
    Json r{{"weight", vec_json(d.weight)}, {"dim", d.dim}};
    if (d.h0) r["h0"] = d.h0->str();
    a.push_back(r);
  }
  return a;
}

/// Everything a subcommand needs, built lazily in dependency order.
struct Session {
  RunConfig cfg;
  FamilySpec spec;
  LieSuperalgebra g;
  std::unique_ptr<MinimalGrading> gr;
  std::unique_ptr<WAlgebra> W;
  std::unique_ptr<CartanW> cw;

  explicit Session(const RunConfig& c) : cfg(c) {
    spec = parse_family(cfg.algebra);
    g = build_algebra(spec);
  }
  MinimalGrading& grading() {
    if (!gr) {
      GradingOptions opt;
      if (cfg.theta >= 0) opt.theta_hint = cfg.theta;
      gr = std::make_unique<MinimalGrading>(build_grading(g, opt));
    }
    return *gr;
  }
  WAlgebra& walg() {
    if (!W) W = std::make_unique<WAlgebra>(grading(), cfg.flavor == "refined" ? Flavor::Refined : Flavor::Finite);
    return *W;
  }
  CartanW& cartan() {
    if (!cw) cw = std::make_unique<CartanW>(walg());
    return *cw;
  }
  Vec lambda() {
    Vec l = parse_vec(cfg.lambda);
    if (cfg.lambda.empty()) l.assign(grading().he.size(), Scalar());
    if (l.size() != grading().he.size())
      throw DomainError("lambda needs " + std::to_string(grading().he.size()) + " coordinates");
    return l;
  }
};

Json cmd_algebra(Session& s, int&) {
  const auto& g = s.g;
  Json out;
  out["dim"] = {g.dim_even(), g.dim_odd()};
  Json labels = Json::array();
  for (int i = 0; i < g.dim; ++i) labels.push_back(Json{{"label", g.labels[i]}, {"parity", g.parity[i]}});
  out["basis"] = labels;
  Json issues = Json::array();
  for (const auto& v : validate(g)) issues.push_back(v.str());
  out["validation"] = issues;
  auto rd = root_decomposition(g);
  Json roots = Json::array();
  for (const auto& r : rd.roots) roots.push_back(Json{{"value", vec_json(r.value)}, {"parity", r.parity}});
  out["roots"] = roots;
  out["minimal_roots"] = minimal_roots(rd);
  int th = select_minimal_root(rd, s.cfg.theta >= 0 ? std::optional<int>(s.cfg.theta) : std::nullopt);
  auto mc = classify_minimal_case(g, rd, th);
  out["theta"] = th;
  out["parity_type"] = mc.parity_type == ParityType::Odd ? "odd" : "even";
  out["ge0"] = mc.ge0_label;
  out["completely_reducible"] = mc.completely_reducible;
  return out;
}

Json cmd_grade(Session& s, int&) {
  auto& gr = s.grading();
  Json out;
  out["type"] = gr.type == ParityType::Odd ? "odd" : "even";
  out["s"] = gr.s;
  out["r"] = gr.r;
  out["adapted_basis"] = gr.g.labels;
  Json deg = Json::object();
  for (int d = -2; d <= 2; ++d) {
    int n = 0;
    for (int x : gr.deg) n += x == d;
    deg[std::to_string(d)] = n;
  }
  out["degree_dims"] = deg;
  Json he = Json::array();
  for (int i : gr.he) he.push_back(gr.g.labels[i]);
  out["he"] = he;
  out["delta"] = vec_json(gr.delta_bar);
  out["rho"] = vec_json(gr.rho_bar);
  out["rho_e0"] = vec_json(gr.rho_e0_bar);
  if (gr.h0) out["h0"] = vec_json(*gr.h0);
  out["dims"] = Json{{"m", gr.m.size()}, {"m_ext", gr.m_ext.size()}, {"n", gr.n.size()}, {"n_zero", gr.n_zero.size()}, {"n_prime", gr.n_prime.size()}};
  return out;
}

Json cmd_wgen(Session& s, int&) {
  auto& W = s.walg();
  Json out;
  Json gens = Json::array();
  for (const auto& g : W.gens())
    gens.push_back(Json{{"label", g.label}, {"kind", std::string(1, g.kind)}, {"parity", g.parity}, {"kdeg", g.kdeg}, {"value", poly_json(g.value, W.U().labels())}});
  out["generators"] = gens;
  out["c0"] = W.c0().str();
  if (W.grading().type == ParityType::Odd) out["epsilon"] = W.epsilon().str();
  const PbwAlgebra& A = W.abstract();
  Json br = Json::array();
  for (int i = 0; i < A.size(); ++i)
    for (int j = 0; j <= i; ++j)
      if (!A.comm(i, j).empty())
        br.push_back(Json{{"left", A.labels()[i]}, {"right", A.labels()[j]}, {"value", poly_json(A.comm(i, j), A.labels())}});
  out["brackets"] = br;
  return out;
}

Json cmd_verify(Session& s, int& code) {
  auto& W = s.walg();
  bool all = true;
  Json out;
  out["c0"] = W.c0().str();
  if (W.grading().type == ParityType::Odd) out["epsilon"] = W.epsilon().str();
  out["relations"] = checks_json(verify_relations(W), all);

  // sampled straightening round trip
  std::mt19937 rng(s.cfg.seed);
  const PbwAlgebra& A = W.abstract();
  std::uniform_int_distribution<int> letter(0, A.size() - 1), len(0, 3);
  std::vector<RelationCheck> sampled;
  for (int it = 0; it < 20; ++it) {
    std::vector<int> w(len(rng));
    for (int& x : w) x = letter(rng);
    Poly x = A.word(w);
    Poly back = W.pbw_coordinates(W.eval(x));
    sampled.push_back({"round trip " + std::to_string(it), back == x, back == x ? "" : poly_str(poly_sub(back, x), A.labels())});
  }
  out["sampled"] = checks_json(sampled, all);

  if (s.cfg.flavor == "finite") {
    auto& cw = s.cartan();
    std::vector<RelationCheck> cart;
    const PbwAlgebra& P = cw.presentation();
    bool same = true;
    for (int i = 0; i < P.size(); ++i)
      for (int j = 0; j <= i; ++j) same = same && P.comm(i, j) == cw.tabulated()[i][j];
    cart.push_back({"U(g0,e) presentation", same, same ? "" : "derived brackets differ from the table"});
    out["cartan"] = checks_json(cart, all);

    if (s.cfg.truncate >= 2) {
      WhittakerModel M(W, s.lambda(), s.cfg.truncate, s.cfg.c.empty() ? Scalar() : Scalar::parse(s.cfg.c));
      auto bat = M.battery();
      bat.push_back({"C scalar on Wh", M.casimir_scalar_on_wh(), ""});
      out["whittaker"] = checks_json(bat, all);
      out["whittaker_dims"] = dims_json(M.whittaker_dims());
    }
  }
  out["pass"] = all;
  code = all ? kPass : kIdentityFailure;
  return out;
}

Json cmd_module(Session& s, int&) {
  auto& W = s.walg();
  auto& gr = s.grading();
  Vec lam = s.lambda();
  bool odd = gr.type == ParityType::Odd;
  Scalar c;
  if (odd) {
    if (!s.cfg.c.empty()) {
      MatchablePair p{lam, Scalar::parse(s.cfg.c)};
      if (!matchability_defect(W, p).is_zero())
        throw MatchabilityError("(lambda, c) violates the matchability condition c = c0 + (l,l) + 2(l, rho_e0 + delta); expected c = " +
                                matchable_c(W, lam).str());
    }
  } else {
    c = s.cfg.c.empty() ? Scalar() : Scalar::parse(s.cfg.c);
  }
  auto& cw = s.cartan();
  auto t = highest_weight_module(cw, lam, s.cfg.truncate, c);
  Json out;
  out["lambda"] = vec_json(lam);
  out["dim"] = t.dim();
  out["dims"] = dims_json(t.weight_dims);
  out["type_q"] = t.odd_endomorphism.has_value();
  Scalar psi = t.action[W.casimir_index()](0, 0);
  out["psi_C"] = psi.str();
  auto sv = maximal_vector_scan(W, t, std::max(0, s.cfg.truncate - 1));
  Json svs = Json::array();
  for (const auto& v : sv) {
    Json terms = Json::array();
    for (int j = 0; j < t.dim(); ++j)
      if (!v[j].is_zero()) {
        Json mono = Json::array();
        for (auto l : t.basis[j]) mono.push_back(W.gens()[l].label);
        terms.push_back(Json{{"coeff", v[j].str()}, {"mono", mono}});
      }
    svs.push_back(terms);
  }
  out["singular_vectors"] = svs;
  out["block"] = psi.str();
  return out;
}

Json cmd_blocks(Session& s, int&) {
  auto& W = s.walg();
  std::vector<Vec> lams;
  std::stringstream ss(s.cfg.lambda);
  std::string item;
  while (std::getline(ss, item, ';')) lams.push_back(parse_vec(item));
  for (const auto& l : lams)
    if (l.size() != s.grading().he.size()) throw DomainError("every lambda needs " + std::to_string(s.grading().he.size()) + " coordinates");
  Json out;
  Json blocks = Json::array();
  for (const auto& b : block_partition(W, lams)) {
    Json members = Json::array();
    for (int i : b) members.push_back(vec_json(lams[i]));
    blocks.push_back(Json{{"psi_C", central_character(W, lams[b.front()]).str()}, {"members", members}});
  }
  out["blocks"] = blocks;
  return out;
}

void print_table(const Json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_table(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) print_table(j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    std::cout << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact minimal finite W-superalgebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::map<std::string, std::function<Json(Session&, int&)>> handlers{
      {"algebra", cmd_algebra}, {"grade", cmd_grade}, {"wgen", cmd_wgen},
      {"verify", cmd_verify},   {"module", cmd_module}, {"blocks", cmd_blocks}};
  for (const auto& [name, fn] : handlers) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--algebra", cfg.algebra, "family:m|n, e.g. spo:2|3")->required();
    sub->add_option("--theta", cfg.theta, "root index of the minimal root");
    sub->add_option("--flavor", cfg.flavor)->check(CLI::IsMember({"finite", "refined"}));
    sub->add_option("--truncate", cfg.truncate)->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", cfg.lambda, "rationals over the h^e basis, comma separated");
    sub->add_option("--c", cfg.c, "value of C_theta (type even) or of C (type odd)");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", cfg.seed);
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUnsupported;
  }

  Json report;
  report["command"] = cfg.command;
  report["config_hash"] = hex_hash(cfg.canonical());
  report["suite_version"] = kSuiteVersion;
  report["algebra"] = cfg.algebra;
  int code = kPass;
  try {
    Session s(cfg);
    report["result"] = handlers.at(cfg.command)(s, code);
  } catch (const UnsupportedFamily& e) {
    std::cerr << "unsupported family: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const SelectionError& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ConsistencyError& e) {
    std::cerr << "identity failure: " << e.what() << "\n";
    return kIdentityFailure;
  } catch (const Error& e) {
    std::cerr << "precondition failure: " << e.what() << "\n";
    return kPrecondition;
  }
  if (cfg.format == "table")
    print_table(report);
  else
    std::cout << report.dump(2) << "\n";
  return code;
}
