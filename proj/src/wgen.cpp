#include "wsa/wgen.hpp"

#include <algorithm>

#include "wsa/errors.hpp"

namespace wsa {

namespace {

std::vector<int> kazhdan_weights(const MinimalGrading& gr) {
  std::vector<int> k(gr.g.dim);
  for (int i = 0; i < gr.g.dim; ++i) k[i] = gr.deg[i] + 2;
  return k;
}

Vec he_vector(const MinimalGrading& gr, const Vec& coords) {
  Vec t(gr.g.dim);
  for (size_t j = 0; j < gr.he.size(); ++j) t[gr.he[j]] = coords[j];
  return t;
}

}  // namespace

Straightener::Straightener(const PbwAlgebra& U, int f_index, std::vector<Poly> values, std::vector<int> leads)
    : U_(U), f_(f_index), values_(std::move(values)), letter_gen_(U.size(), -1) {
  for (size_t k = 0; k < leads.size(); ++k) letter_gen_.at(leads[k]) = static_cast<int>(k);
}

Poly Straightener::product(const Poly& a, const Poly& b) const { return project_qfin(U_.mul(a, b), f_); }

Poly Straightener::eval_mono(const Mono& m) const {
  if (m.empty()) return poly_const(1);
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  Poly r = product(values_[m[0]], eval_mono(Mono(m.begin() + 1, m.end())));
  std::lock_guard lk(mu_);
  cache_.emplace(m, r);
  return r;
}

Poly Straightener::eval(const Poly& coords) const {
  Poly r;
  for (const auto& [m, c] : coords) poly_axpy(r, eval_mono(m), c);
  return r;
}

Poly Straightener::coordinates(const Poly& x) const {
  Poly rem = x, coords;
  while (!rem.empty()) {
    const int d = U_.degree(rem);
    // fewest factors first: other terms of a generator's top component have more
    const Mono* best = nullptr;
    for (const auto& [m, c] : rem) {
      if (U_.mono_degree(m) != d) continue;
      if (!std::all_of(m.begin(), m.end(), [&](uint8_t i) { return letter_gen_[i] >= 0; })) continue;
      if (!best || m.size() < best->size() || (m.size() == best->size() && m < *best)) best = &m;
    }
    if (!best) throw StraighteningFailure("element is not in the subalgebra: " + poly_str(rem, U_.labels()));
    Mono tm;
    for (uint8_t i : *best) tm.push_back(static_cast<uint8_t>(letter_gen_[i]));
    std::sort(tm.begin(), tm.end());
    Poly ev = eval_mono(tm);
    auto it = ev.find(*best);
    if (it == ev.end()) throw InternalError("generator monomial lost its leading term");
    Scalar k = rem.at(*best) / it->second;
    poly_add(coords, tm, k);
    poly_axpy(rem, ev, -k);
  }
  return coords;
}

Scalar weight_inner(const MinimalGrading& gr, const Vec& a, const Vec& b) { return gr.inner(a, b); }

Vec dual_vector(const MinimalGrading& gr, const Vec& a) { return he_vector(gr, gr.dual_element(a)); }

WAlgebra::WAlgebra(MinimalGrading gr, Flavor flavor)
    : gr_(std::move(gr)), flavor_(flavor), U_(enveloping_algebra(gr_.g, kazhdan_weights(gr_))) {
  const int n = gr_.g.dim;
  letter_gen_.assign(n, -1);
  auto unit = [&](int i) { return unit_vec(n, i); };

  for (int i : gr_.x) add_gen("Th_" + gr_.g.labels[i], 'x', i, 1, 2, theta_v(unit(i)));
  for (int i : gr_.y) add_gen("Th_" + gr_.g.labels[i], 'y', i, 1, 2, theta_v(unit(i)));
  for (int i : gr_.fl) add_gen("Th_" + gr_.g.labels[i], 'f', i, 1, 3, theta_w(unit(i)));
  for (int i : gr_.gl) add_gen("Th_" + gr_.g.labels[i], 'g', i, 1, 3, theta_w(unit(i)));
  if (gr_.type == ParityType::Odd && flavor_ == Flavor::Finite) {
    theta_F_ = num_gens();
    add_gen("Th_F", 'F', gr_.v_mid, 1, 1, U_.gen(gr_.v_mid));
  }
  for (int i : gr_.he) add_gen("Th_" + gr_.g.labels[i], 't', i, 1, 2, theta_v(unit(i)));

  // C
  {
    Poly c;
    poly_add(c, Mono{static_cast<uint8_t>(gr_.e)}, 2);
    Poly hh = U_.mul(U_.gen(gr_.h), U_.gen(gr_.h));
    poly_axpy(c, hh, Scalar(1, 2));
    poly_axpy(c, U_.gen(gr_.h), -(Scalar(1) + Scalar(gr_.s - gr_.r, 2)));
    const int k = static_cast<int>(gr_.he.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        poly_axpy(c, U_.mul(U_.gen(gr_.he[i]), U_.gen(gr_.he[j])), gr_.gram_inv(i, j));
    for (size_t i = 0; i < gr_.x.size(); ++i) {
      poly_axpy(c, U_.mul(U_.gen(gr_.x[i]), U_.gen(gr_.xstar[i])), 1);
      poly_axpy(c, U_.mul(U_.gen(gr_.xstar[i]), U_.gen(gr_.x[i])), 1);
    }
    for (size_t i = 0; i < gr_.y.size(); ++i) {
      poly_axpy(c, U_.mul(U_.gen(gr_.y[i]), U_.gen(gr_.ystar[i])), 1);
      poly_axpy(c, U_.mul(U_.gen(gr_.ystar[i]), U_.gen(gr_.y[i])), -1);
    }
    for (size_t a = 0; a < gr_.z.size(); ++a) {
      Vec ez = gr_.g.bracket(unit(gr_.e), gr_.zstar[a]);
      Scalar sg = gr_.g.parity[gr_.z[a]] ? Scalar(-2) : Scalar(2);
      poly_axpy(c, U_.mul(lie_element(ez), U_.gen(gr_.z[a])), sg);
    }
    casimir_ = num_gens();
    add_gen("C", 'C', gr_.e, 2, 4, project_qfin(c, gr_.f));
  }

  if (gr_.ve >= 0) add_gen("Th_" + gr_.g.labels[gr_.ve], 'E', gr_.ve, 1, 3, theta_w(unit(gr_.ve)));
  for (int i : gr_.fstar) add_gen("Th_" + gr_.g.labels[i], 'p', i, 1, 3, theta_w(unit(i)));
  for (int i : gr_.gstar) add_gen("Th_" + gr_.g.labels[i], 'q', i, 1, 3, theta_w(unit(i)));
  for (int i : gr_.xstar) add_gen("Th_" + gr_.g.labels[i], 'X', i, 1, 2, theta_v(unit(i)));
  for (int i : gr_.ystar) add_gen("Th_" + gr_.g.labels[i], 'Y', i, 1, 2, theta_v(unit(i)));

  std::vector<Poly> vals;
  std::vector<int> leads;
  for (const auto& g : gens_) {
    vals.push_back(g.value);
    leads.push_back(g.lead);
  }
  st_ = std::make_unique<Straightener>(U_, gr_.f, std::move(vals), std::move(leads));

  auto pairs = c0_pairs();
  if (pairs.empty()) throw InternalError("g(1) pairing is degenerate");
  c0_ = c0_from_pair(pairs.front().first, pairs.front().second);
}

void WAlgebra::add_gen(const std::string& label, char kind, int lead, const Scalar& lead_coeff, int kdeg,
                       Poly value) {
  WGenerator g;
  g.label = label;
  g.kind = kind;
  g.lead = lead;
  g.lead_coeff = lead_coeff;
  g.parity = gr_.g.parity[lead];
  g.kdeg = kdeg;
  g.value = std::move(value);
  letter_gen_[lead] = num_gens();
  gens_.push_back(std::move(g));
}

int WAlgebra::gen_of_letter(int g_index) const { return letter_gen_.at(g_index); }

int WAlgebra::gen_index(const std::string& label) const {
  for (int k = 0; k < num_gens(); ++k)
    if (gens_[k].label == label) return k;
  throw DomainError("no generator " + label);
}

const std::vector<int>& WAlgebra::invariance_span() const {
  if (gr_.type == ParityType::Odd && flavor_ == Flavor::Finite) return gr_.n_zero;
  return gr_.n_prime;
}

Poly WAlgebra::theta_v(const Vec& v) const {
  const int n = gr_.g.dim;
  for (int i = 0; i < n; ++i)
    if (!v[i].is_zero() && gr_.deg[i] != 0) throw DomainError("Theta_v needs v in g^e(0)");
  if (!vec_is_zero(gr_.g.bracket(v, unit_vec(n, gr_.e))) || !gr_.g.pair(v, unit_vec(n, gr_.h)).is_zero())
    throw DomainError("Theta_v needs v in g^e(0)");
  Poly r = lie_element(v);
  for (size_t a = 0; a < gr_.z.size(); ++a) {
    Vec b = gr_.g.bracket(gr_.zstar[a], v);
    if (vec_is_zero(b)) continue;
    poly_axpy(r, U_.mul(U_.gen(gr_.z[a]), lie_element(b)), Scalar(-1, 2));
  }
  return project_qfin(r, gr_.f);
}

Poly WAlgebra::theta_w(const Vec& w) const {
  const int n = gr_.g.dim;
  for (int i = 0; i < n; ++i)
    if (!w[i].is_zero() && gr_.deg[i] != 1) throw DomainError("Theta_w needs w in g(1)");
  Poly r = lie_element(w);
  const size_t nz = gr_.z.size();
  std::vector<Vec> zw(nz);
  for (size_t a = 0; a < nz; ++a) {
    zw[a] = gr_.g.bracket(gr_.zstar[a], w);
    if (!vec_is_zero(zw[a])) poly_axpy(r, U_.mul(U_.gen(gr_.z[a]), lie_element(zw[a])), -1);
  }
  for (size_t a = 0; a < nz; ++a) {
    if (vec_is_zero(zw[a])) continue;
    for (size_t b = 0; b < nz; ++b) {
      Vec t = gr_.g.bracket(gr_.zstar[b], zw[a]);
      if (vec_is_zero(t)) continue;
      Poly zz = U_.mul(U_.gen(gr_.z[a]), U_.gen(gr_.z[b]));
      poly_axpy(r, U_.mul(zz, lie_element(t)), Scalar(1, 3));
    }
  }
  poly_axpy(r, lie_element(gr_.g.bracket(w, unit_vec(n, gr_.f))), Scalar(-2, 3));
  return project_qfin(r, gr_.f);
}

Poly WAlgebra::theta_F() const {
  if (theta_F_ < 0) throw NotApplicable("Theta_F exists only for type odd, finite flavor");
  return gens_[theta_F_].value;
}

Poly WAlgebra::theta_t(const Vec& he_coords) const { return theta_v(he_vector(gr_, he_coords)); }

Poly WAlgebra::theta_cas() const {
  std::call_once(cas_once_, [&] {
    Poly c;
    const int k = static_cast<int>(gr_.he.size());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (gr_.gram_inv(i, j).is_zero()) continue;
        poly_axpy(c, product(gens_[letter_gen_[gr_.he[i]]].value, gens_[letter_gen_[gr_.he[j]]].value),
                  gr_.gram_inv(i, j));
      }
    for (size_t i = 0; i < gr_.x.size(); ++i) {
      const Poly& a = gens_[letter_gen_[gr_.x[i]]].value;
      const Poly& b = gens_[letter_gen_[gr_.xstar[i]]].value;
      poly_axpy(c, product(a, b), 1);
      poly_axpy(c, product(b, a), 1);
    }
    for (size_t i = 0; i < gr_.y.size(); ++i) {
      const Poly& a = gens_[letter_gen_[gr_.y[i]]].value;
      const Poly& b = gens_[letter_gen_[gr_.ystar[i]]].value;
      poly_axpy(c, product(a, b), 1);
      poly_axpy(c, product(b, a), -1);
    }
    cas_ = std::move(c);
  });
  return cas_;
}

Poly WAlgebra::product(const Poly& a, const Poly& b) const { return project_qfin(U_.mul(a, b), gr_.f); }

Poly WAlgebra::bracket(const Poly& a, const Poly& b) const {
  return project_qfin(U_.supercommutator(a, b), gr_.f);
}

Poly WAlgebra::eval_mono(const Mono& m) const { return st_->eval_mono(m); }

Poly WAlgebra::eval(const Poly& coords) const { return st_->eval(coords); }

Poly WAlgebra::pbw_coordinates(const Poly& x) const { return st_->coordinates(x); }

const PbwAlgebra& WAlgebra::abstract() const {
  std::call_once(abstract_once_, [&] {
    const int ng = num_gens();
    std::vector<std::vector<Poly>> comm(ng, std::vector<Poly>(ng));
    std::vector<std::pair<int, int>> todo;
    for (int i = 0; i < ng; ++i)
      for (int j = 0; j <= i; ++j)
        if (i != j || gens_[i].parity) todo.emplace_back(i, j);
    for (const auto& [i, j] : todo) comm[i][j] = pbw_coordinates(bracket(gens_[i].value, gens_[j].value));
    std::vector<int> par, kw;
    std::vector<std::string> lab;
    for (const auto& g : gens_) {
      par.push_back(g.parity);
      kw.push_back(g.kdeg);
      lab.push_back(g.label);
    }
    abstract_ = std::make_unique<PbwAlgebra>(par, std::move(comm), kw, lab);
  });
  return *abstract_;
}

std::vector<std::pair<int, int>> WAlgebra::c0_pairs() const {
  const int n = gr_.g.dim;
  std::vector<std::pair<int, int>> out;
  auto g1 = gr_.g1();
  for (int a : g1)
    for (int b : g1)
      if (!gr_.g.pair(gr_.g.bracket_basis(a, b), unit_vec(n, gr_.f)).is_zero()) out.emplace_back(a, b);
  return out;
}

Scalar WAlgebra::c0_from_pair(int w1, int w2) const {
  const int n = gr_.g.dim;
  const LieSuperalgebra& g = gr_.g;
  Scalar p = g.pair(g.bracket_basis(w1, w2), unit_vec(n, gr_.f));
  if (p.is_zero()) throw DomainError("([w1,w2], f) vanishes");
  const size_t nz = gr_.z.size();
  Scalar sum;
  for (size_t a = 0; a < nz; ++a) {
    Vec l1 = g.bracket(unit_vec(n, w1), unit_vec(n, gr_.z[a]));
    Vec r1 = g.bracket(gr_.zstar[a], unit_vec(n, w2));
    if (vec_is_zero(l1) || vec_is_zero(r1)) continue;
    for (size_t b = 0; b < nz; ++b) {
      Vec l2 = g.bracket(l1, unit_vec(n, gr_.z[b]));
      Vec r2 = g.bracket(gr_.zstar[b], r1);
      if (vec_is_zero(l2) || vec_is_zero(r2)) continue;
      sum += chi(gr_, g.bracket(l2, r2));
    }
  }
  Scalar rhs = sum * Scalar(1, 12) - Scalar(3 * (gr_.s - gr_.r) + 4, 12) * p;
  return rhs / p;
}

Scalar WAlgebra::relation_constant() const {
  const int n = gr_.g.dim;
  auto [w1, w2] = c0_pairs().front();
  Scalar p = gr_.g.pair(gr_.g.bracket_basis(w1, w2), unit_vec(n, gr_.f));
  Poly r = bracket(gens_[letter_gen_[w1]].value, gens_[letter_gen_[w2]].value);
  poly_axpy(r, w_bracket_rhs(*this, unit_vec(n, w1), unit_vec(n, w2)), -1);
  if (r.size() > 1 || (r.size() == 1 && !r.begin()->first.empty()))
    throw ConsistencyError("[Theta_w1, Theta_w2] differs from relation (3) by a non-constant");
  return c0_ - Scalar(2) * constant_term(r) / p;
}

Scalar WAlgebra::epsilon() const {
  if (gr_.type != ParityType::Odd) throw NotApplicable("epsilon is defined for type odd");
  return c0_ + Scalar(1, 8) + Scalar(2) * gr_.inner(gr_.rho_e0_bar, gr_.delta_bar) +
         Scalar(3) * gr_.inner(gr_.delta_bar, gr_.delta_bar);
}

Vec WAlgebra::gen_weight(int k) const { return gr_.rweight[gens_[k].lead]; }

namespace {

Poly theta_sharp(const WAlgebra& W, const Vec& x) {
  Vec s = sharp(W.grading(), x);
  if (vec_is_zero(s)) return {};
  return W.theta_v(s);
}

}  // namespace

Poly w_bracket_rhs(const WAlgebra& W, const Vec& w1, const Vec& w2) {
  const MinimalGrading& gr = W.grading();
  const LieSuperalgebra& g = gr.g;
  const int n = g.dim;
  Scalar p = g.pair(g.bracket(w1, w2), unit_vec(n, gr.f));
  Poly r;
  if (!p.is_zero()) {
    Poly t = W.casimir();
    poly_axpy(t, W.theta_cas(), -1);
    poly_add(t, Mono{}, -W.c0());
    poly_axpy(r, t, p * Scalar(1, 2));
  }
  int p1 = g.parity_of(w1), p2 = g.parity_of(w2);
  Scalar sg = (p1 == 1 && p2 == 1) ? Scalar(-1) : Scalar(1);
  for (size_t a = 0; a < gr.z.size(); ++a) {
    Vec za = unit_vec(n, gr.z[a]);
    Poly a1 = theta_sharp(W, g.bracket(w1, za)), b1 = theta_sharp(W, g.bracket(gr.zstar[a], w2));
    if (!a1.empty() && !b1.empty()) poly_axpy(r, W.product(a1, b1), Scalar(-1, 2));
    Poly a2 = theta_sharp(W, g.bracket(w2, za)), b2 = theta_sharp(W, g.bracket(gr.zstar[a], w1));
    if (!a2.empty() && !b2.empty()) poly_axpy(r, W.product(a2, b2), sg * Scalar(1, 2));
  }
  return r;
}

Poly ve_square_rhs(const WAlgebra& W) {
  const MinimalGrading& gr = W.grading();
  if (gr.type != ParityType::Odd) throw NotApplicable("[v,e] exists only for type odd");
  const LieSuperalgebra& g = gr.g;
  const int n = g.dim;
  const size_t k = gr.he.size();
  Poly r = poly_scale(W.casimir(), Scalar(-1, 4));
  poly_add(r, Mono{}, W.c0() * Scalar(1, 4));
  auto th = [&](int idx) -> const Poly& { return W.gens()[W.gen_of_letter(idx)].value; };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (!gr.gram_inv(i, j).is_zero())
        poly_axpy(r, W.product(th(gr.he[i]), th(gr.he[j])), gr.gram_inv(i, j) * Scalar(1, 4));
  Vec wsum(k);
  for (size_t i = 0; i < gr.x.size(); ++i) {
    poly_axpy(r, W.product(th(gr.x[i]), th(gr.xstar[i])), Scalar(1, 2));
    wsum = vec_add(wsum, vec_scale(gr.rweight[gr.xstar[i]], Scalar(1, 4)));
  }
  for (size_t i = 0; i < gr.y.size(); ++i) {
    poly_axpy(r, W.product(th(gr.y[i]), th(gr.ystar[i])), Scalar(1, 2));
    wsum = vec_sub(wsum, vec_scale(gr.rweight[gr.ystar[i]], Scalar(1, 4)));
  }
  Vec ve = unit_vec(n, gr.ve);
  for (int i = 0; i < gr.s / 2; ++i) {
    Poly a = theta_sharp(W, g.bracket(ve, unit_vec(n, gr.u[i])));
    Poly b = theta_sharp(W, g.bracket(gr.zstar[i], ve));
    if (!a.empty() && !b.empty()) poly_axpy(r, W.product(a, b), -1);
    wsum = vec_sub(wsum, vec_scale(gr.rweight[gr.u[i]], Scalar(1, 4)));
  }
  for (int i = 0; i < (gr.r - 1) / 2; ++i) {
    Poly a = theta_sharp(W, g.bracket(ve, unit_vec(n, gr.v[i])));
    Poly b = theta_sharp(W, g.bracket(gr.zstar[gr.s + i], ve));
    if (!a.empty() && !b.empty()) poly_axpy(r, W.product(a, b), -1);
    wsum = vec_add(wsum, vec_scale(gr.rweight[gr.v[i]], Scalar(1, 4)));
  }
  if (k > 0 && !vec_is_zero(wsum)) poly_axpy(r, W.theta_v(dual_vector(gr, wsum)), 1);
  return r;
}

namespace {

struct Suite {
  std::vector<RelationCheck> out;
  const WAlgebra& W;
  void check(const std::string& name, const Poly& residual) {
    RelationCheck c;
    c.name = name;
    c.pass = residual.empty();
    if (!c.pass) c.residual = poly_str(residual, W.U().labels());
    out.push_back(std::move(c));
  }
  void check_abstract(const std::string& name, const Poly& residual) {
    RelationCheck c;
    c.name = name;
    c.pass = residual.empty();
    if (!c.pass) c.residual = poly_str(residual, W.abstract().labels());
    out.push_back(std::move(c));
  }
};

}  // namespace

std::vector<RelationCheck> verify_relations(const WAlgebra& W) {
  const MinimalGrading& gr = W.grading();
  const LieSuperalgebra& g = gr.g;
  const int n = g.dim;
  const auto& gens = W.gens();
  Suite S{{}, W};
  auto lab = [&](int i) { return g.labels[i]; };
  auto th = [&](int idx) -> const Poly& { return gens[W.gen_of_letter(idx)].value; };

  for (int k = 0; k < W.num_gens(); ++k) {
    auto inv = is_invariant(W.U(), gr.f, gens[k].value, W.invariance_span());
    S.check("invariant " + gens[k].label, inv.residual);
  }

  auto ge0 = gr.ge0();
  auto g1 = gr.g1();
  for (size_t a = 0; a < ge0.size(); ++a)
    for (size_t b = a; b < ge0.size(); ++b) {
      Vec ab = g.bracket_basis(ge0[a], ge0[b]);
      Poly res = W.bracket(th(ge0[a]), th(ge0[b]));
      if (!vec_is_zero(ab)) poly_axpy(res, W.theta_v(ab), -1);
      S.check("[Th_" + lab(ge0[a]) + ",Th_" + lab(ge0[b]) + "]", res);
    }
  for (int v : ge0)
    for (int w : g1) {
      Vec vw = g.bracket_basis(v, w);
      Poly res = W.bracket(th(v), th(w));
      if (!vec_is_zero(vw)) poly_axpy(res, W.theta_w(vw), -1);
      S.check("[Th_" + lab(v) + ",Th_" + lab(w) + "]", res);
    }
  for (size_t a = 0; a < g1.size(); ++a)
    for (size_t b = a; b < g1.size(); ++b) {
      Poly res = W.bracket(th(g1[a]), th(g1[b]));
      poly_axpy(res, w_bracket_rhs(W, unit_vec(n, g1[a]), unit_vec(n, g1[b])), -1);
      S.check("[Th_" + lab(g1[a]) + ",Th_" + lab(g1[b]) + "]", res);
    }
  for (int k = 0; k < W.num_gens(); ++k)
    S.check("[C," + gens[k].label + "]", W.bracket(W.casimir(), gens[k].value));

  auto pairs = W.c0_pairs();
  {
    Poly res;
    for (const auto& [a, b] : pairs) {
      Scalar d = W.c0_from_pair(a, b) - W.c0();
      if (!d.is_zero()) poly_add(res, Mono{}, d);
    }
    S.check("c0 independent of the pair", res);
  }

  if (W.has_theta_F()) {
    const int F = W.theta_F_index();
    for (int k = 0; k < W.num_gens(); ++k) {
      Poly res = W.bracket(W.theta_F(), gens[k].value);
      if (k == F) poly_add(res, Mono{}, -1);
      S.check("[Th_F," + gens[k].label + "]", res);
    }
  }

  // brackets of the abstract presentation
  const PbwAlgebra& A = W.abstract();
  for (int i = 0; i < W.num_gens(); ++i)
    for (int j = 0; j <= i; ++j) {
      if (i == j && !gens[i].parity) continue;
      if (i == W.theta_F_index() || j == W.theta_F_index()) continue;  // v_mid is not in g^e
      // linear part in Kazhdan degree m_i + m_j - 2 matches [Y_i, Y_j]
      Vec yi = vec_scale(unit_vec(n, gens[i].lead), gens[i].lead_coeff);
      Vec yj = vec_scale(unit_vec(n, gens[j].lead), gens[j].lead_coeff);
      Vec yy = g.bracket(yi, yj);
      const int d = gens[i].kdeg + gens[j].kdeg - 2;
      Poly res;
      for (const auto& [m, c] : A.comm(i, j))
        if (m.size() == 1 && A.mono_degree(m) == d) poly_add(res, m, c);
      for (int t = 0; t < n; ++t) {
        if (yy[t].is_zero()) continue;
        int k = W.gen_of_letter(t);
        if (k < 0) {
          poly_add(res, Mono{}, yy[t]);  // flags a bracket outside g^e
          continue;
        }
        poly_add(res, Mono{static_cast<uint8_t>(k)}, -yy[t] / gens[k].lead_coeff);
      }
      S.check_abstract("linear part of [" + gens[i].label + "," + gens[j].label + "]", res);
    }

  if (gr.type == ParityType::Odd) {
    Vec v = unit_vec(n, gr.v_mid), e = unit_vec(n, gr.e), h = unit_vec(n, gr.h);
    Vec ve = g.bracket(v, e);
    auto lie_res = [&](const Vec& a, const Vec& b) {
      Poly p = lie_element(vec_sub(a, b));
      return p;
    };
    S.check("[[v,e],[v,e]] = -e", lie_res(g.bracket(ve, ve), vec_scale(e, -1)));
    S.check("[[v,e],v] = -h/2", lie_res(g.bracket(ve, v), vec_scale(h, Scalar(-1, 2))));
    Poly lhs = W.pbw_coordinates(W.product(th(gr.ve), th(gr.ve)));
    Poly rhs = W.pbw_coordinates(ve_square_rhs(W));
    S.check_abstract("Th_[v,e]^2 expansion", poly_sub(lhs, rhs));
  }
  for (size_t i = 0; i < gr.x.size(); ++i) {
    Vec t = dual_vector(gr, gr.rweight[gr.xstar[i]]);
    S.check("[" + lab(gr.xstar[i]) + "," + lab(gr.x[i]) + "] = t_beta",
            lie_element(vec_sub(g.bracket_basis(gr.xstar[i], gr.x[i]), t)));
  }
  for (size_t i = 0; i < gr.y.size(); ++i) {
    Vec t = dual_vector(gr, gr.rweight[gr.ystar[i]]);
    S.check("[" + lab(gr.ystar[i]) + "," + lab(gr.y[i]) + "] = t_beta",
            lie_element(vec_sub(g.bracket_basis(gr.ystar[i], gr.y[i]), t)));
  }
  return std::move(S.out);
}

}  // namespace wsa
