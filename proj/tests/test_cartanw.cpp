#include "doctest.h"

#include <algorithm>

#include "wsa/cartanw.hpp"
#include "wsa/errors.hpp"

using namespace wsa;

namespace {

Poly gen(int k) { return Poly{{Mono{static_cast<uint8_t>(k)}, Scalar(1)}}; }

struct Fixture {
  MinimalGrading gr;
  WAlgebra W;
  CartanW cw;
  explicit Fixture(const char* fam) : gr(build_grading(parse_family(fam))), W(gr), cw(W) {}
};

}  // namespace

TEST_CASE("derived presentation equals the table") {
  for (auto fam : {"osp:1|2", "spo:2|3", "sl:2|1", "sl:3|1", "spo:2|5"}) {
    CAPTURE(fam);
    Fixture fx(fam);
    const PbwAlgebra& P = fx.cw.presentation();
    const auto& tab = fx.cw.tabulated();
    for (int i = 0; i < P.size(); ++i)
      for (int j = 0; j <= i; ++j) CHECK(P.comm(i, j) == tab[i][j]);
    if (fx.cw.type() == ParityType::Odd) {
      const int F = fx.cw.idx_F(), E = fx.cw.idx_E(), C = fx.cw.idx_C();
      CHECK(P.supercommutator(gen(F), gen(F)) == poly_const(-2));
      Poly ee = gen(C);
      poly_add(ee, Mono{}, Scalar(1, 8));
      CHECK(P.supercommutator(gen(E), gen(E)) == ee);
    } else {
      for (int i = 0; i < P.size(); ++i)
        for (int j = 0; j <= i; ++j) CHECK(P.comm(i, j).empty());
    }
  }
}

TEST_CASE("center by exhaustive bracketing") {
  for (auto fam : {"osp:1|2", "spo:2|3", "sl:2|1"}) {
    CAPTURE(fam);
    Fixture fx(fam);
    const PbwAlgebra& P = fx.cw.presentation();
    auto center = fx.cw.center_basis();
    for (int z : center)
      for (int k = 0; k < P.size(); ++k) CHECK(P.supercommutator(gen(z), gen(k)).empty());
    if (fx.cw.type() == ParityType::Odd) {
      // Th'_F is excluded: it does not supercommute with itself
      CHECK(std::find(center.begin(), center.end(), fx.cw.idx_F()) == center.end());
      CHECK(!P.supercommutator(gen(fx.cw.idx_F()), gen(fx.cw.idx_F())).empty());
      CHECK(!P.supercommutator(gen(fx.cw.idx_E()), gen(fx.cw.idx_E())).empty());
    }
    // Pr0 of the U(g0) Casimir lies in the polynomial algebra on the center
    Poly pr = fx.cw.pr0_casimir();
    CHECK(!pr.empty());
    for (const auto& [m, c] : pr)
      for (auto l : m) CHECK(std::find(center.begin(), center.end(), l) != center.end());
  }
  Fixture osp("osp:1|2");
  CHECK(osp.cw.center_basis() == std::vector<int>{osp.cw.idx_C()});
}

TEST_CASE("simple modules") {
  Fixture fx("spo:2|3");
  auto V = simple_module(fx.cw, {Scalar(2, 5)});
  CHECK(V.dim_even == 1);
  CHECK(V.dim_odd == 1);
  CHECK(V.type_q);
  REQUIRE(V.odd_endomorphism);
  CHECK(V.action[fx.cw.idx_C()] == Matrix::identity(2).scaled(Scalar(-1, 8)));
  CHECK(V.action[fx.cw.idx_E()].is_zero());
  const Matrix& F = V.action[fx.cw.idx_F()];
  CHECK(F * F == Matrix::identity(2).scaled(-1));
  CHECK(V.action[fx.cw.idx_h()[0]] == Matrix::identity(2).scaled(Scalar(2, 5)));
  std::string why;
  CHECK(module_respects_relations(fx.cw, V, &why));
  const Matrix& J = *V.odd_endomorphism;
  for (int k = 0; k < fx.cw.num_gens(); ++k) {
    const Matrix& A = V.action[k];
    int par = fx.cw.presentation().parity(k);
    Matrix sc = par ? J * A + A * J : J * A - A * J;
    CHECK(sc.is_zero());
  }
  // distinct weights give distinct modules
  auto W2 = simple_module(fx.cw, {Scalar(3, 5)});
  CHECK(!(W2.action[fx.cw.idx_h()[0]] == V.action[fx.cw.idx_h()[0]]));

  Fixture ev("sl:2|1");
  auto Ve = simple_module(ev.cw, {Scalar(1)}, Scalar(7, 3));
  CHECK(Ve.dim_even + Ve.dim_odd == 1);
  CHECK(!Ve.type_q);
  CHECK(Ve.action[ev.cw.idx_C()] == Matrix::identity(1).scaled(Scalar(7, 3)));
  CHECK(module_respects_relations(ev.cw, Ve));
}

TEST_CASE("restricted weights") {
  Fixture fx("spo:2|3");
  const auto& W = fx.W;
  auto zero = [&](int k) {
    auto sp = restricted_weight(W, gen(k));
    return sp.homogeneous && vec_is_zero(sp.parts[0].first);
  };
  CHECK(zero(W.casimir_index()));
  CHECK(zero(W.theta_F_index()));
  int xs = W.gen_of_letter(fx.gr.xstar[0]);
  auto sp = restricted_weight(W, gen(xs));
  REQUIRE(sp.homogeneous);
  CHECK(sp.parts[0].first == fx.gr.rweight[fx.gr.xstar[0]]);
  CHECK(!vec_is_zero(sp.parts[0].first));
  Poly mixed = poly_add(gen(xs), gen(W.casimir_index()));
  CHECK(!restricted_weight(W, mixed).homogeneous);
  CHECK_THROWS_AS(project_pi(fx.cw, gen(xs)), DomainError);
}

TEST_CASE("pi on generators") {
  Fixture fx("spo:2|3");
  const auto& W = fx.W;
  const auto& pg = fx.cw.pi_generators();
  int t = W.gen_of_letter(fx.gr.he[0]);
  REQUIRE(pg[t]);
  Poly expect = gen(fx.cw.idx_h()[0]);
  poly_add(expect, Mono{}, fx.gr.delta_bar[0]);
  CHECK(*pg[t] == expect);

  Fixture osp("osp:1|2");
  Scalar r = Scalar::sqrt(-2);
  int e = osp.W.gen_of_letter(osp.gr.ve);
  CHECK(poly_scale(*osp.cw.pi_generators()[e], r) == gen(osp.cw.idx_E()));
  CHECK(poly_scale(*osp.cw.pi_generators()[osp.W.theta_F_index()], r) == gen(osp.cw.idx_F()));
  CHECK(*osp.cw.pi_generators()[osp.W.casimir_index()] == gen(osp.cw.idx_C()));
}

TEST_CASE("critical bracket under pi and pi_eps") {
  Fixture fx("osp:1|2");
  const PbwAlgebra& A = fx.W.abstract();
  int e = fx.W.gen_of_letter(fx.gr.ve);
  Poly br = A.supercommutator(gen(e), gen(e));
  // oracle: [Th_ve, Th_ve] = -C/2 - 1/16 computed in Q^fin
  Poly q = fx.W.bracket(fx.W.gens()[e].value, fx.W.gens()[e].value);
  CHECK(fx.W.eval(br) == q);
  Poly expect = poly_scale(gen(fx.cw.idx_C()), Scalar(-1, 2));
  poly_add(expect, Mono{}, Scalar(-1, 16));
  CHECK(project_pi(fx.cw, br) == expect);
  // the shift moves the constant by -epsilon/2
  poly_add(expect, Mono{}, Scalar(-1, 2) * fx.W.epsilon());
  CHECK(project_pi_eps(fx.cw, br) == expect);
}

TEST_CASE("pi is multiplicative on weight-zero products") {
  for (auto fam : {"osp:1|2", "spo:2|3", "sl:2|1"}) {
    CAPTURE(fam);
    Fixture fx(fam);
    const PbwAlgebra& A = fx.W.abstract();
    std::vector<Poly> pool;
    for (int i = 0; i < A.size(); ++i)
      for (int j = i; j < A.size(); ++j) {
        Poly p = A.mul(A.gen(i), A.gen(j));
        auto sp = restricted_weight(fx.W, p);
        if (sp.homogeneous && !sp.parts.empty() && vec_is_zero(sp.parts[0].first)) pool.push_back(p);
      }
    for (const Poly& a : pool)
      for (const Poly& b : pool)
        CHECK(project_pi(fx.cw, A.mul(a, b)) ==
              fx.cw.presentation().mul(project_pi(fx.cw, a), project_pi(fx.cw, b)));
  }
}
