#include "doctest.h"

#include <random>

#include "wsa/envelope.hpp"
#include "wsa/grading.hpp"

using namespace wsa;

namespace {

PbwAlgebra envelope_of(const MinimalGrading& gr) {
  std::vector<int> kw;
  for (int d : gr.deg) kw.push_back(d + 2);
  return enveloping_algebra(gr.g, kw);
}

std::vector<int> random_word(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, n - 1);
  std::vector<int> w(len(rng));
  for (int& x : w) x = letter(rng);
  return w;
}

Poly random_poly(std::mt19937& rng, const PbwAlgebra& U, int terms) {
  Poly p;
  std::uniform_int_distribution<long> c(-3, 3);
  for (int t = 0; t < terms; ++t) poly_axpy(p, U.word(random_word(rng, U.size(), 3)), Scalar(c(rng)));
  return p;
}

}  // namespace

TEST_CASE("normal form agrees with the free-algebra oracle") {
  std::mt19937 rng(2024);
  for (auto fam : {"osp:1|2", "spo:2|3"}) {
    auto gr = build_grading(parse_family(fam));
    auto U = envelope_of(gr);
    for (int it = 0; it < 250; ++it) {
      auto w = random_word(rng, U.size(), 3);
      CAPTURE(it);
      CHECK(U.word(w) == U.normal_form_reference(w));
    }
  }
}

TEST_CASE("single rewriting steps") {
  auto gr = build_grading(parse_family("spo:2|3"));
  auto U = envelope_of(gr);
  for (int x = 0; x < U.size(); ++x)
    for (int y = x + 1; y < U.size(); ++y) {
      // (y, x) -> sign x y + [y, x]
      Poly expect;
      int sign = (U.parity(x) && U.parity(y)) ? -1 : 1;
      poly_add(expect, Mono{static_cast<uint8_t>(x), static_cast<uint8_t>(y)}, sign);
      poly_axpy(expect, U.comm(y, x), 1);
      CHECK(U.word({y, x}) == expect);
    }
  for (int z = 0; z < U.size(); ++z)
    if (U.parity(z)) CHECK(U.word({z, z}) == poly_scale(U.comm(z, z), Scalar(1, 2)));
}

TEST_CASE("parallel and serial products agree and associate") {
  std::mt19937 rng(5);
  auto gr = build_grading(parse_family("spo:2|3"));
  auto U = envelope_of(gr);
  for (int it = 0; it < 20; ++it) {
    Poly a = random_poly(rng, U, 4), b = random_poly(rng, U, 4), c = random_poly(rng, U, 2);
    Poly ab = U.mul(a, b);
    CHECK(ab == U.mul_serial(a, b));
    CHECK(U.mul(ab, c) == U.mul(a, U.mul(b, c)));
  }
}

TEST_CASE("qfin projection and ad action") {
  auto gr = build_grading(parse_family("osp:1|2"));
  auto U = envelope_of(gr);
  const int f = gr.f;
  CHECK(project_qfin(U.gen(f), f) == poly_const(1));
  CHECK(project_qfin(U.gen(gr.e), f) == U.gen(gr.e));
  CHECK(project_qfin(U.word({gr.v_mid, f}), f) == U.gen(gr.v_mid));
  Poly adf = ad_action(U, f, unit_vec(gr.g.dim, f), U.gen(gr.e));
  CHECK(adf == poly_scale(U.gen(gr.h), -1));
  // v (x) 1 is invariant under n0, e is not invariant under n = C f
  CHECK(is_invariant(U, f, U.gen(gr.v_mid), gr.n_zero).invariant);
  auto r = is_invariant(U, f, U.gen(gr.e), gr.n);
  CHECK(!r.invariant);
  CHECK(r.witness == f);
  CHECK(r.residual == poly_scale(U.gen(gr.h), -1));
}

TEST_CASE("kazhdan degree") {
  auto gr = build_grading(parse_family("spo:2|3"));
  auto U = envelope_of(gr);
  CHECK(U.degree(U.gen(gr.e)) == 4);
  CHECK(U.degree(U.gen(gr.he[0])) == 2);
  CHECK(U.degree(U.gen(gr.f)) == 0);
  CHECK(U.degree(U.word({gr.e, gr.v_mid})) == 5);
  CHECK(U.degree(Poly{}) == -1);
}
