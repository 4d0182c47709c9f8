// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "wsa/errors.hpp"
#include "wsa/highest.hpp"

using namespace wsa;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Setup {
  MinimalGrading gr;
  WAlgebra W;
  explicit Setup(const char* fam, Flavor fl = Flavor::Finite, const GradingOptions& opt = {})
      : gr(build_grading(parse_family(fam), opt)), W(gr, fl) {}
};

Poly gen(int k) { return Poly{{Mono{static_cast<uint8_t>(k)}, Scalar(1)}}; }

std::string vstr(const Vec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

using DimMap = std::map<std::string, int>;

// Z(lambda, c) weight dims relative to its top, over basis vectors of Kazhdan degree <= N
DimMap verma_dims_by_kdeg(const WAlgebra& W, const VermaTruncation& t, int N) {
  DimMap out;
  for (int j = 0; j < t.dim(); ++j) {
    int k = 0;
    for (auto l : t.basis[j]) k += W.gens()[l].kdeg;
    if (k <= N) out[vstr(vec_sub(t.weights[j], t.pair.lambda))]++;
  }
  return out;
}

DimMap to_map(const std::vector<WeightDim>& dims) {
  DimMap out;
  for (const auto& d : dims) out[vstr(d.weight)] += d.dim;
  return out;
}

std::string map_str(const DimMap& m) {
  std::string s;
  for (const auto& [k, v] : m) s += k + ":" + std::to_string(v) + " ";
  return s;
}

std::vector<std::string> failed_checks(const std::vector<RelationCheck>& checks) {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c.name + " residual " + c.residual);
  return out;
}

// ------------------------------------------------------------------ criteria

Outcome criterion1() {
  Outcome o;
  auto t0 = Clock::now();
  Setup s("osp:1|2");
  Scalar c0 = s.W.c0(), eps = s.W.epsilon();
  double dt = seconds_since(t0);
  o.expect(c0 == Scalar(-1, 16), "c0 = " + c0.str() + ", expected -1/16");
  o.expect(eps == Scalar(1, 16), "epsilon = " + eps.str() + ", expected 1/16");
  o.expect(dt < 1.0, "took " + std::to_string(dt) + " s");
  o.note("c0=" + c0.str() + " epsilon=" + eps.str() + " in " + std::to_string(dt) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (auto fam : {"osp:1|2", "spo:2|3"}) {
    auto t0 = Clock::now();
    Setup s(fam);
    auto checks = verify_relations(s.W);
    double dt = seconds_since(t0);
    auto bad = failed_checks(checks);
    for (const auto& b : bad) o.fail(std::string(fam) + ": " + b);
    o.note(std::string(fam) + ": " + std::to_string(checks.size() - bad.size()) + "/" + std::to_string(checks.size()) +
           " identities in " + std::to_string(dt) + " s");
    if (std::string(fam) == "spo:2|3") o.expect(dt < 60, "spo(2|3) took " + std::to_string(dt) + " s");
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (auto fam : {"osp:1|2", "spo:2|3"}) {
    Setup s(fam);
    auto checks = verify_relations(s.W);
    int seen = 0;
    for (const auto& c : checks) {
      bool relevant = c.name == "[[v,e],[v,e]] = -e" || c.name == "[[v,e],v] = -h/2" || c.name == "Th_[v,e]^2 expansion" ||
                      c.name.find("= t_beta") != std::string::npos;
      if (!relevant) continue;
      ++seen;
      if (!c.pass) o.fail(std::string(fam) + ": " + c.name + " residual " + c.residual);
    }
    o.expect(seen >= 3, std::string(fam) + ": identities missing from the suite");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (auto fam : {"osp:1|2", "spo:2|3", "sl:2|1"}) {
    Setup s(fam);
    CartanW cw(s.W);  // throws ConsistencyError if the derived brackets differ from the table
    const PbwAlgebra& P = cw.presentation();
    for (int i = 0; i < P.size(); ++i)
      for (int j = 0; j <= i; ++j)
        o.expect(P.comm(i, j) == cw.tabulated()[i][j],
                 std::string(fam) + ": [" + P.labels()[i] + "," + P.labels()[j] + "] = " + poly_str(P.comm(i, j), P.labels()));
    if (cw.type() == ParityType::Odd) {
      Poly ff = P.supercommutator(gen(cw.idx_F()), gen(cw.idx_F()));
      o.expect(ff == poly_const(-2), std::string(fam) + ": [F',F'] = " + poly_str(ff, P.labels()));
      Poly ee = P.supercommutator(gen(cw.idx_E()), gen(cw.idx_E()));
      Poly want = gen(cw.idx_C());
      poly_add(want, Mono{}, Scalar(1, 8));
      o.expect(ee == want, std::string(fam) + ": [E',E'] = " + poly_str(ee, P.labels()));
    }
    auto center = cw.center_basis();
    for (int z : center)
      for (int k = 0; k < P.size(); ++k)
        o.expect(P.supercommutator(gen(z), gen(k)).empty(),
                 std::string(fam) + ": center element " + P.labels()[z] + " fails against " + P.labels()[k]);
    // no other generator is central
    for (int k = 0; k < P.size(); ++k) {
      if (std::find(center.begin(), center.end(), k) != center.end()) continue;
      bool central = true;
      for (int j = 0; j < P.size(); ++j) central = central && P.supercommutator(gen(k), gen(j)).empty();
      o.expect(!central, std::string(fam) + ": " + P.labels()[k] + " is central but not listed");
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937 rng(5);
  int tested = 0, failed = 0;
  std::string first;
  for (auto fam : {"osp:1|2", "spo:2|3"}) {
    Setup s(fam);
    CartanW cw(s.W);
    const PbwAlgebra& A = s.W.abstract();
    std::vector<Poly> pool;
    for (int i = 0; i < A.size(); ++i)
      for (int j = i; j < A.size(); ++j) {
        Poly p = A.mul(A.gen(i), A.gen(j));
        auto sp = restricted_weight(s.W, p);
        if (sp.homogeneous && !sp.parts.empty() && vec_is_zero(sp.parts[0].first)) pool.push_back(p);
      }
    for (int i = 0; i < A.size(); ++i)
      if (vec_is_zero(s.W.gen_weight(i))) pool.push_back(A.gen(i));
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (int it = 0; it < 60; ++it) {
      Poly a = poly_add(poly_scale(pool[pick(rng)], coeff(rng)), pool[pick(rng)]);
      Poly b = poly_add(poly_scale(pool[pick(rng)], coeff(rng)), pool[pick(rng)]);
      Poly lhs = project_pi_eps(cw, A.mul(a, b));
      Poly rhs = cw.presentation().mul(project_pi_eps(cw, a), project_pi_eps(cw, b));
      ++tested;
      if (lhs != rhs) {
        ++failed;
        if (first.empty()) first = std::string(fam) + " residual " + poly_str(poly_sub(lhs, rhs), cw.labels());
      }
    }
  }
  o.note(std::to_string(tested) + " products tested");
  o.expect(failed == 0, std::to_string(failed) + " of " + std::to_string(tested) + " products not preserved, first: " + first);

  Setup s("osp:1|2");
  CartanW cw(s.W);
  int e = s.W.gen_of_letter(s.gr.ve);
  Poly br = s.W.abstract().supercommutator(gen(e), gen(e));
  Poly got = project_pi_eps(cw, br);
  Poly want = poly_scale(gen(cw.idx_C()), Scalar(-1, 2));
  poly_add(want, Mono{}, Scalar(-1, 16));
  o.expect(got == want, "pi_eps([Th_ve,Th_ve]) = " + poly_str(got, cw.labels()) + ", expected -1/2 C' - 1/16");
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto t0 = Clock::now();
  const int N = 5;
  {
    Setup s("spo:2|3");
    const auto& gr = s.gr;
    std::vector<Scalar> pts{Scalar(0),     Scalar(1),    Scalar(-1),   Scalar(1, 3), Scalar(-2, 5),
                            Scalar(7, 2),  Scalar(-9, 4), Scalar(3),   Scalar(5, 7), Scalar(-11, 3)};
    for (const auto& x : pts) {
      Vec lam{x};
      std::string tag = "spo(2|3) lambda=" + x.str() + ": ";
      WhittakerModel M(s.W, lam, N);
      for (const auto& b : failed_checks(M.battery())) o.fail(tag + b);
      o.expect(M.casimir_scalar_on_wh(), tag + "C is not scalar on Wh");
      Scalar cz = Scalar(-1, 8) + gr.inner(lam, vec_add(lam, vec_scale(gr.rho_bar, 2))) + s.W.epsilon();
      Vec lz = vec_add(lam, gr.delta_bar);
      try {
        auto Z = verma_truncate(s.W, {lz, cz}, N);
        DimMap zd = verma_dims_by_kdeg(s.W, Z, N), wd = to_map(M.whittaker_dims());
        o.expect(zd == wd, tag + "Wh dims " + map_str(wd) + "vs Z dims " + map_str(zd));
        // twisted action: C - epsilon on Z equals C on Wh
        o.expect(cz - s.W.epsilon() == M.casimir_value(), tag + "twisted C value differs");
      } catch (const MatchabilityError& e) {
        o.fail(tag + "Z(lambda+delta, c) not constructible: " + e.what());
      }
    }
  }
  {
    Setup s("sl:2|1");
    const auto& gr = s.gr;
    std::vector<std::pair<Scalar, Scalar>> pts{{Scalar(0), Scalar(1)},
                                               {Scalar(1, 2), Scalar(-3)},
                                               {Scalar(-4, 3), Scalar(2, 7)},
                                               {Scalar(5), Scalar(0)},
                                               {Scalar(-1, 6), Scalar(9, 2)}};
    for (const auto& [x, c] : pts) {
      Vec lam{x};
      std::string tag = "sl(2|1) lambda=" + x.str() + " c=" + c.str() + ": ";
      WhittakerModel M(s.W, lam, N, c);
      for (const auto& b : failed_checks(M.battery())) o.fail(tag + b);
      o.expect(M.casimir_scalar_on_wh(), tag + "C is not scalar on Wh");
      Scalar cz = c + gr.inner(lam, vec_add(lam, vec_scale(gr.rho_bar, 2)));
      auto Z = verma_truncate(s.W, {vec_add(lam, gr.delta_bar), cz}, N);
      DimMap zd = verma_dims_by_kdeg(s.W, Z, N), wd = to_map(M.whittaker_dims());
      o.expect(zd == wd, tag + "Wh dims " + map_str(wd) + "vs Z dims " + map_str(zd));
      o.expect(cz == M.casimir_value(), tag + "C value differs");
    }
  }
  double dt = seconds_since(t0);
  o.expect(dt < 300, "took " + std::to_string(dt) + " s");
  o.note("15 points in " + std::to_string(dt) + " s");
  return o;
}

// brute-force count of L * Th_F^iota by weight, |L| <= N
DimMap oracle_dims(const WAlgebra& W, const Vec& top, int N) {
  auto low = lowering_generators(W);
  DimMap out;
  std::vector<int> ex(low.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int used) {
    if (i == low.size()) {
      Vec w = top;
      for (size_t a = 0; a < low.size(); ++a) w = vec_add(w, vec_scale(W.gen_weight(low[a]), ex[a]));
      out[vstr(w)] += W.has_theta_F() ? 2 : 1;
      return;
    }
    int cap = W.gens()[low[i]].parity ? 1 : N;
    for (int e = 0; e <= cap && used + e <= N; ++e) {
      ex[i] = e;
      rec(i + 1, used + e);
    }
    ex[i] = 0;
  };
  rec(0, 0);
  return out;
}

Outcome criterion7() {
  Outcome o;
  Setup s("spo:2|3");
  CartanW cw(s.W);
  for (const Scalar& x : {Scalar(1, 3), Scalar(-2), Scalar(5, 4)}) {
    Vec lam{x};
    std::string tag = "lambda=" + x.str() + ": ";
    MatchablePair mp{lam, matchable_c(s.W, lam)};
    for (int N = 0; N <= 6; ++N) {
      auto Z = verma_truncate(s.W, mp, N);
      DimMap got;
      for (const auto& wd : Z.weight_dims) got[vstr(wd.weight)] += wd.dim;
      DimMap want = oracle_dims(s.W, lam, N);
      o.expect(got == want, tag + "N=" + std::to_string(N) + " dims " + map_str(got) + "vs " + map_str(want));
    }
    auto Z = verma_truncate(s.W, mp, 4);
    std::vector<int> top;
    for (int j = 0; j < Z.dim(); ++j)
      if (Z.weights[j] == lam) top.push_back(j);
    o.expect(top.size() == 2 && Z.basis[top[0]].empty() &&
                 Z.basis[top[1]] == Mono{static_cast<uint8_t>(s.W.theta_F_index())},
             tag + "top weight space is not span(v0, Th_F v0)");
    Scalar h0top = dot(lam, *s.gr.h0);
    for (const auto& wd : Z.weight_dims) {
      Scalar d = h0top - *wd.h0;
      bool ok = d.is_rational() && d.rational_part().get_den() == 1 && d.rational_part() >= 0;
      o.expect(ok, tag + "h0 eigenvalue " + wd.h0->str() + " outside lambda(h0) - Z+");
    }
    const Matrix& J = *Z.odd_endomorphism;
    o.expect(J * J == Matrix::identity(Z.dim()).scaled(Scalar(1, 2)), tag + "J^2 != 1/2");
    for (int k = 0; k < s.W.num_gens(); ++k) {
      const Matrix& a = Z.action[k];
      Matrix sc = J * a - a * J;
      for (int j = 0; j < Z.dim(); ++j)
        if (Z.lowering_degree[j] < Z.N && !Z.truncated[k][j] && !vec_is_zero(sc.col(j)))
          o.fail(tag + "J does not commute with " + s.W.gens()[k].label);
    }
    auto me = highest_weight_module(cw, lam, 3);
    o.expect(me.odd_endomorphism.has_value(), tag + "M_e(lambda) lacks the type Q certificate");
  }
  {
    Setup ev("sl:2|1");
    CartanW cwe(ev.W);
    auto me = highest_weight_module(cwe, {Scalar(1, 2)}, 3, Scalar(2));
    o.expect(!me.odd_endomorphism && !simple_module(cwe, {Scalar(1, 2)}, Scalar(2)).type_q, "type even module is type Q");
  }
  {
    Setup rf("spo:2|3", Flavor::Refined);
    CartanW cwr(rf.W);
    auto me = highest_weight_module(cwr, {Scalar(1, 3)}, 3);
    o.expect(!me.odd_endomorphism && !rf.W.has_theta_F(), "refined odd module is type Q");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  Setup s("spo:2|3");
  for (const auto& [x, c] : std::vector<std::pair<Scalar, Scalar>>{{Scalar(1, 3), Scalar(0)}, {Scalar(-1), Scalar(2)}, {Scalar(2, 5), Scalar(-7, 3)}}) {
    MatchablePair p{{x}, c};
    Scalar defect = matchability_defect(s.W, p);
    for (const Mono& L : {Mono{}, Mono{static_cast<uint8_t>(lowering_generators(s.W)[0])}}) {
      Scalar r = appendix_remainder(s.W, p, L);
      std::string tag = "lambda=" + x.str() + " c=" + c.str() + " L=" + mono_str(L, s.W.abstract().labels()) + ": ";
      o.expect(!defect.is_zero() && !r.is_zero(), tag + "no obstruction");
      o.expect(r == Scalar(1, 4) * defect,
               tag + "remainder " + r.str() + " vs defect/4 " + (Scalar(1, 4) * defect).str() + ", offset " +
                   (r - Scalar(1, 4) * defect).str());
    }
  }
  Setup osp("osp:1|2");
  Scalar r0 = appendix_remainder(osp.W, {{}, osp.W.c0()}, {});
  o.expect(r0.is_zero(), "osp(1|2) matchable pair leaves remainder " + r0.str());
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937 rng(9);
  {
    Setup s("spo:2|3");
    const PbwAlgebra& A = s.W.abstract();
    std::uniform_int_distribution<int> letter(0, A.size() - 1), len(0, 3), terms(1, 3);
    std::uniform_int_distribution<long> coeff(-4, 4);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
      Poly x;
      for (int t = terms(rng); t > 0; --t) {
        std::vector<int> w(len(rng));
        for (int& l : w) l = letter(rng);
        poly_axpy(x, A.word(w), Scalar(coeff(rng)));
      }
      if (s.W.pbw_coordinates(s.W.eval(x)) != x) ++bad;
    }
    o.expect(bad == 0, std::to_string(bad) + "/200 straightening round trips failed");
  }
  {
    Setup s("spo:2|3");
    std::vector<int> kw;
    for (int d : s.gr.deg) kw.push_back(d + 2);
    PbwAlgebra U = enveloping_algebra(s.gr.g, kw);
    std::uniform_int_distribution<int> letter(0, U.size() - 1), len(0, 3);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
      std::vector<int> w(len(rng));
      for (int& l : w) l = letter(rng);
      if (U.word(w) != U.normal_form_reference(w)) ++bad;
    }
    o.expect(bad == 0, std::to_string(bad) + "/500 words disagree with the oracle");
  }
  {
    const char* fam = "spo:2|5";
    Setup base(fam);
    CartanW cwb(base.W);
    const int k = static_cast<int>(base.gr.he.size());
    Vec lam{Scalar(1, 3), Scalar(-2)};
    Scalar psi = central_character(base.W, lam);
    auto zdims = to_map(verma_kazhdan_dims(base.W, 4));
    auto me = highest_weight_module(cwb, lam, 2);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int it = 0; it < 5; ++it) {
      Matrix M(k, k);
      do {
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) M(i, j) = Scalar(c(rng), 1 + it % 3);
      } while (!inverse(M));
      GradingOptions opt;
      opt.he_change = M;
      Setup s(fam, Flavor::Finite, opt);
      CartanW cw(s.W);
      Vec lam2 = M * lam;
      std::string tag = "change " + std::to_string(it) + ": ";
      o.expect(s.W.c0() == base.W.c0(), tag + "c0 " + s.W.c0().str());
      o.expect(s.W.epsilon() == base.W.epsilon(), tag + "epsilon " + s.W.epsilon().str());
      o.expect(central_character(s.W, lam2) == psi, tag + "psi_C " + central_character(s.W, lam2).str());
      DimMap moved;
      for (const auto& wd : verma_kazhdan_dims(s.W, 4)) {
        auto inv = inverse(M);
        moved[vstr(*inv * wd.weight)] += wd.dim;
      }
      o.expect(moved == zdims, tag + "Verma weight dims differ");
      auto me2 = highest_weight_module(cw, lam2, 2);
      DimMap a, b;
      for (const auto& wd : me.weight_dims) a[vstr(wd.weight)] += wd.dim;
      for (const auto& wd : me2.weight_dims) b[vstr(*inverse(M) * wd.weight)] += wd.dim;
      o.expect(a == b, tag + "M_e weight dims differ");
    }
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> crits{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}};
  int failures = 0;
  for (auto& [n, fn] : crits) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL");
    for (const auto& s : o.notes) std::cout << " | " << s;
    std::cout << std::endl;
  }
  std::cout << (9 - failures) << "/9 criteria pass" << std::endl;
  return failures ? 1 : 0;
}
