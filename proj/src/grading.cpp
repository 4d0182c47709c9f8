#include "wsa/grading.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wsa/errors.hpp"

namespace wsa {

namespace {

bool lex_greater(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const Rational& x = a[i].rational_part();
    const Rational& y = b[i].rational_part();
    if (x != y) return x > y;
  }
  return false;
}

bool lex_less(const Vec& a, const Vec& b) { return lex_greater(b, a); }

int sgn(const Scalar& s) {
  if (!s.is_rational()) throw InternalError("expected a rational quantity");
  return s.rational_part() > 0 ? 1 : (s.rational_part() < 0 ? -1 : 0);
}

std::string join_roots(const RootDatum& rd, const std::vector<int>& idx) {
  std::string out;
  for (int r : idx) {
    if (!out.empty()) out += "; ";
    out += std::to_string(r) + ":(";
    for (size_t i = 0; i < rd.roots[r].value.size(); ++i)
      out += (i ? "," : "") + rd.roots[r].value[i].str();
    out += ")";
  }
  return out;
}

}  // namespace

int select_minimal_root(const RootDatum& rd, std::optional<int> hint) {
  std::vector<int> mins = minimal_roots(rd);
  if (mins.empty()) throw SelectionError("algebra has no minimal root");
  if (hint) {
    if (std::find(mins.begin(), mins.end(), *hint) == mins.end())
      throw SelectionError("root " + std::to_string(*hint) + " is not minimal; minimal roots: " + join_roots(rd, mins));
    return *hint;
  }
  return *std::min_element(mins.begin(), mins.end(), [&](int a, int b) {
    return lex_greater(rd.roots[a].value, rd.roots[b].value);
  });
}

std::vector<int> MinimalGrading::ge0() const {
  std::vector<int> out = he;
  for (const auto* l : {&x, &y, &xstar, &ystar}) out.insert(out.end(), l->begin(), l->end());
  return out;
}

std::vector<int> MinimalGrading::g1() const {
  std::vector<int> out;
  for (int i = 0; i < g.dim; ++i)
    if (deg[i] == 1) out.push_back(i);
  return out;
}

Scalar MinimalGrading::inner(const Vec& a, const Vec& b) const {
  if (a.empty()) return Scalar();
  return dot(a, gram_inv * b);
}

Vec MinimalGrading::dual_element(const Vec& a) const {
  if (a.empty()) return {};
  return gram_inv * a;
}

Scalar neg_one_pairing(const MinimalGrading& gr, const Vec& a, const Vec& b) {
  return gr.g.pair(unit_vec(gr.g.dim, gr.e), gr.g.bracket(a, b));
}

Scalar chi(const MinimalGrading& gr, const Vec& x) { return gr.g.pair(unit_vec(gr.g.dim, gr.e), x); }

Vec sharp(const MinimalGrading& gr, const Vec& x) {
  Vec hv = unit_vec(gr.g.dim, gr.h);
  return vec_sub(x, vec_scale(hv, gr.g.pair(hv, x) * Scalar(1, 2)));
}

std::vector<Vec> span_of(const MinimalGrading& gr, const std::vector<int>& idx) {
  std::vector<Vec> out;
  for (int i : idx) out.push_back(unit_vec(gr.g.dim, i));
  return out;
}

MinimalGrading build_grading(const FamilySpec& spec, const GradingOptions& opt) {
  return build_grading(build_algebra(spec), opt);
}

MinimalGrading build_grading(const LieSuperalgebra& g0, const GradingOptions& opt) {
  RootDatum rd0 = root_decomposition(g0);
  int th = select_minimal_root(rd0, opt.theta_hint);
  const Root& theta = rd0.roots[th];
  Vec neg_theta = vec_scale(theta.value, -1);
  int th_neg = rd0.find(neg_theta);
  if (theta.vectors.size() != 1 || th_neg < 0 || rd0.roots[th_neg].vectors.size() != 1)
    throw GradingError("root space of theta is not one-dimensional");
  int n = g0.dim;
  int rank = rd0.rank;

  // sl(2)-triple
  Vec E = unit_vec(n, theta.vectors[0]);
  Vec F = unit_vec(n, rd0.roots[th_neg].vectors[0]);
  Vec H = g0.bracket(E, F);
  Scalar th_h = g0.bracket(H, E)[theta.vectors[0]];
  if (th_h.is_zero()) throw GradingError("theta vanishes on its coroot");
  F = vec_scale(F, Scalar(2) / th_h);
  H = g0.bracket(E, F);
  Scalar form_scale = g0.pair(E, F).inv();

  std::vector<Scalar> hc(rank);  // h on the Cartan basis of g0
  for (int c = 0; c < rank; ++c) hc[c] = H[g0.cartan[c]];
  auto root_at_h = [&](const Vec& val) { return dot(val, hc); };

  int r = 0, s = 0;
  for (const Root& a : rd0.roots) {
    Scalar d = root_at_h(a.value);
    if (!d.is_rational() || d.rational_part().get_den() != 1)
      throw GradingError("non-integral ad h eigenvalue");
    if (d.rational_part() > 2 || d.rational_part() < -2) throw GradingError("grading is not short");
    if (d == Scalar(-1)) (a.parity ? r : s) += static_cast<int>(a.vectors.size());
  }
  ParityType type = (r % 2) ? ParityType::Odd : ParityType::Even;

  int vm_root = -1;
  if (type == ParityType::Odd) {
    vm_root = rd0.find(vec_scale(theta.value, Scalar(-1, 2)));
    if (vm_root < 0 || rd0.roots[vm_root].vectors.size() != 1)
      throw GradingError("type odd without a one-dimensional -theta/2 root space");
    Vec vv = unit_vec(n, rd0.roots[vm_root].vectors[0]);
    Vec sq = g0.bracket(vv, vv);
    int fi = rd0.roots[th_neg].vectors[0];
    Scalar c = sq[fi] / F[fi];
    // <v,v> = c after the form rescale; move c into e and f.
    E = vec_scale(E, c.inv());
    F = vec_scale(F, c);
  }

  // h^e = ker theta inside h
  Matrix trow(1, rank);
  for (int c = 0; c < rank; ++c) trow(0, c) = theta.value[c];
  std::vector<Vec> he_default = nullspace(trow);  // Cartan coordinates
  std::vector<Vec> he_basis = he_default;
  if (opt.he_change) {
    const Matrix& R = *opt.he_change;
    if (R.rows() != static_cast<int>(he_default.size()) || R.cols() != R.rows() || !inverse(R))
      throw DomainError("h^e basis change must be an invertible square matrix of size dim h^e");
    for (int k = 0; k < R.rows(); ++k) {
      Vec t(rank);
      for (int j = 0; j < R.cols(); ++j) t = vec_add(t, vec_scale(he_default[j], R(k, j)));
      he_basis[k] = t;
    }
  }
  auto cartan_vec = [&](const Vec& coords) {
    Vec x(n);
    for (int c = 0; c < rank; ++c) x[g0.cartan[c]] = coords[c];
    return x;
  };

  // positive system: a generic element of h^e, ties broken by (theta, .)
  Vec generic;
  for (long q = 2;; ++q) {
    Vec t(rank);
    Scalar w = 1;
    for (const auto& b : he_default) {
      t = vec_add(t, vec_scale(b, w));
      w *= Scalar(q);
    }
    bool ok = true;
    for (const Root& a : rd0.roots) {
      bool prop = vec_is_zero(vec_sub(vec_scale(theta.value, root_at_h(a.value) * Scalar(1, 2)), a.value));
      if (!prop && dot(a.value, t).is_zero()) ok = false;
    }
    if (ok) {
      generic = t;
      break;
    }
    if (q > 1000) throw InternalError("no generic element of h^e found");
  }
  auto root_sign = [&](int root) {
    int s1 = generic.empty() ? 0 : sgn(dot(rd0.roots[root].value, generic));
    return s1 ? s1 : sgn(root_at_h(rd0.roots[root].value));
  };

  // roots sorted lexicographically for deterministic processing
  std::vector<int> order(rd0.roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lex_less(rd0.roots[a].value, rd0.roots[b].value); });

  auto pair_e = [&](const Vec& a, const Vec& b) { return form_scale * g0.pair(E, g0.bracket(a, b)); };
  auto form = [&](const Vec& a, const Vec& b) { return form_scale * g0.pair(a, b); };

  // Partner vectors in the root space of `target` such that P(b_a, partner_a) = k.
  auto partners = [&](const std::vector<Vec>& bs, int target,
                      const std::function<Scalar(const Vec&, const Vec&)>& P, const Scalar& k) {
    const auto& cv = rd0.roots[target].vectors;
    int d = static_cast<int>(bs.size());
    if (static_cast<int>(cv.size()) != d) throw GradingError("paired root spaces differ in dimension");
    Matrix M(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) M(a, b) = P(bs[a], unit_vec(n, cv[b]));
    auto Mi = inverse(M);
    if (!Mi) throw GradingError("degenerate pairing between root spaces");
    std::vector<Vec> out;
    for (int a = 0; a < d; ++a) {
      Vec p(n);
      for (int b = 0; b < d; ++b) p[cv[b]] = k * (*Mi)(b, a);
      out.push_back(p);
    }
    return out;
  };

  std::vector<Vec> xs, xss, ys, yss, us_neg, us_pos, vs_neg, vs_pos;
  std::vector<int> us_root, vs_root;
  Vec vmid_vec;
  for (int ri : order) {
    const Root& a = rd0.roots[ri];
    int d = static_cast<int>(root_at_h(a.value).rational_part().get_num().get_si());
    if (root_sign(ri) >= 0) continue;
    std::vector<Vec> bs;
    for (int i : a.vectors) bs.push_back(unit_vec(n, i));
    if (d == 0) {
      int partner = rd0.find(vec_scale(a.value, -1));
      auto ps = partners(bs, partner, [&](const Vec& p, const Vec& q) { return form(q, p); }, 1);
      auto& lo = a.parity ? ys : xs;
      auto& hi = a.parity ? yss : xss;
      lo.insert(lo.end(), bs.begin(), bs.end());
      hi.insert(hi.end(), ps.begin(), ps.end());
    } else if (d == -1 && ri != vm_root) {
      int partner = rd0.find(vec_sub(neg_theta, a.value));
      if (partner < 0) throw GradingError("g(-1) root without a partner");
      auto ps = partners(bs, partner, pair_e, a.parity ? Scalar(1) : Scalar(-1));
      auto& lo = a.parity ? vs_neg : us_neg;
      auto& hi = a.parity ? vs_pos : us_pos;
      lo.insert(lo.end(), bs.begin(), bs.end());
      hi.insert(hi.end(), ps.begin(), ps.end());
    }
  }
  if (vm_root >= 0) vmid_vec = unit_vec(n, rd0.roots[vm_root].vectors[0]);

  std::vector<Vec> zvecs;  // u_1..u_s, v_1..v_r
  for (const auto& x : us_neg) zvecs.push_back(x);
  for (auto it = us_pos.rbegin(); it != us_pos.rend(); ++it) zvecs.push_back(*it);
  for (const auto& x : vs_neg) zvecs.push_back(x);
  if (vm_root >= 0) zvecs.push_back(vmid_vec);
  for (auto it = vs_pos.rbegin(); it != vs_pos.rend(); ++it) zvecs.push_back(*it);
  if (static_cast<int>(zvecs.size()) != s + r) throw GradingError("g(-1) basis has the wrong size");

  // g(1) through ad e
  std::vector<Vec> fls, fss, gls, gss;
  int hs = s / 2, hr = r / 2;
  for (int i = 0; i < hs; ++i) {
    fls.push_back(g0.bracket(E, zvecs[i]));
    fss.push_back(g0.bracket(E, zvecs[s - 1 - i]));
  }
  for (int i = 0; i < hr; ++i) {
    gls.push_back(g0.bracket(E, zvecs[s + i]));
    gss.push_back(g0.bracket(E, zvecs[s + r - 1 - i]));
  }
  Vec ve_vec;
  if (vm_root >= 0) ve_vec = g0.bracket(vmid_vec, E);

  // adapted basis
  std::vector<Vec> basis;
  std::vector<std::string> labels;
  MinimalGrading gr;
  auto push = [&](const Vec& b, const std::string& l) {
    basis.push_back(b);
    labels.push_back(l);
    return static_cast<int>(basis.size()) - 1;
  };
  auto push_list = [&](const std::vector<Vec>& bs, const std::string& stem, std::vector<int>& idx) {
    for (size_t i = 0; i < bs.size(); ++i) idx.push_back(push(bs[i], stem + std::to_string(i + 1)));
  };
  gr.e = push(E, "e");
  push_list(fls, "f", gr.fl);
  push_list(gls, "g", gr.gl);
  if (vm_root >= 0) gr.ve = push(ve_vec, "ve");
  push_list(fss, "f*", gr.fstar);
  push_list(gss, "g*", gr.gstar);
  std::vector<Vec> he_vecs;
  for (const auto& t : he_basis) he_vecs.push_back(cartan_vec(t));
  push_list(he_vecs, "t", gr.he);
  push_list(xs, "x", gr.x);
  push_list(ys, "y", gr.y);
  push_list(xss, "x*", gr.xstar);
  push_list(yss, "y*", gr.ystar);
  gr.h = push(H, "h");
  for (int i = 0; i < s; ++i) gr.u.push_back(push(zvecs[i], "u" + std::to_string(i + 1)));
  for (int i = 0; i < r; ++i) {
    int idx = push(zvecs[s + i], "v" + std::to_string(i + 1));
    gr.v.push_back(idx);
    if (vm_root >= 0 && i == hr) gr.v_mid = idx;
  }
  gr.f = push(F, "f");
  gr.z = gr.u;
  gr.z.insert(gr.z.end(), gr.v.begin(), gr.v.end());
  if (static_cast<int>(basis.size()) != n) throw GradingError("adapted basis has the wrong size");

  std::vector<int> cartan = gr.he;
  cartan.push_back(gr.h);
  gr.g = change_basis(g0, basis, labels, cartan);
  gr.g.form = gr.g.form.scaled(form_scale);
  gr.g.spec = g0.spec;
  gr.rd = root_decomposition(gr.g);
  gr.type = type;
  gr.s = s;
  gr.r = r;
  int k1 = static_cast<int>(gr.he.size());
  Vec theta_new(k1 + 1);
  theta_new[k1] = 2;
  gr.theta = gr.rd.find(theta_new);
  if (gr.theta < 0) throw InternalError("theta lost in the adapted basis");

  gr.deg.assign(n, 0);
  gr.rweight.assign(n, Vec(k1));
  gr.sign.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int ri = gr.rd.root_of_basis[i];
    if (ri < 0) continue;
    const Vec& val = gr.rd.roots[ri].value;
    gr.deg[i] = static_cast<int>(val[k1].rational_part().get_num().get_si());
    gr.rweight[i] = Vec(val.begin(), val.begin() + k1);
    Vec orig_t = basis[i];  // sign from the original positive system
    int ri0 = -1;
    for (size_t a = 0; a < rd0.roots.size() && ri0 < 0; ++a)
      for (int vi : rd0.roots[a].vectors)
        if (!orig_t[vi].is_zero()) {
          ri0 = static_cast<int>(a);
          break;
        }
    gr.sign[i] = root_sign(ri0);
  }

  // duals in g(-1)
  int zs = static_cast<int>(gr.z.size());
  Matrix M(zs, zs);
  for (int a = 0; a < zs; ++a)
    for (int b = 0; b < zs; ++b)
      M(a, b) = neg_one_pairing(gr, unit_vec(n, gr.z[a]), unit_vec(n, gr.z[b]));
  auto Mi = inverse(M);
  if (zs && !Mi) throw InternalError("pairing on g(-1) is degenerate");
  for (int a = 0; a < zs; ++a) {
    Vec zsv(n);
    for (int k = 0; k < zs; ++k) zsv[gr.z[k]] = (*Mi)(a, k);
    gr.zstar.push_back(zsv);
  }

  gr.gram = Matrix(k1, k1);
  for (int a = 0; a < k1; ++a)
    for (int b = 0; b < k1; ++b) gr.gram(a, b) = gr.g.form(gr.he[a], gr.he[b]);
  if (k1) {
    auto gi = inverse(gr.gram);
    if (!gi) throw GradingError("form is degenerate on h^e");
    gr.gram_inv = *gi;
  }

  // weights
  gr.delta_bar = Vec(k1);
  gr.rho_bar = Vec(k1);
  gr.rho_e0_bar = Vec(k1);
  for (int i = 0; i < hs; ++i) gr.delta_bar = vec_sub(gr.delta_bar, vec_scale(gr.rweight[gr.u[i]], Scalar(1, 2)));
  for (int i = 0; i < hr; ++i) gr.delta_bar = vec_add(gr.delta_bar, vec_scale(gr.rweight[gr.v[i]], Scalar(1, 2)));
  for (int i = 0; i < n; ++i) {
    if (gr.sign[i] <= 0) continue;
    Scalar c = gr.g.parity[i] ? Scalar(-1, 2) : Scalar(1, 2);
    gr.rho_bar = vec_add(gr.rho_bar, vec_scale(gr.rweight[i], c));
  }
  for (int i : gr.xstar) gr.rho_e0_bar = vec_add(gr.rho_e0_bar, vec_scale(gr.rweight[i], Scalar(1, 2)));
  for (int i : gr.ystar) gr.rho_e0_bar = vec_sub(gr.rho_e0_bar, vec_scale(gr.rweight[i], Scalar(1, 2)));

  // positive and simple roots on the adapted root datum
  for (size_t a = 0; a < gr.rd.roots.size(); ++a)
    if (gr.sign[gr.rd.roots[a].vectors[0]] > 0) gr.rd.positive.push_back(static_cast<int>(a));
  std::vector<int> simple;
  for (int a : gr.rd.positive) {
    bool dec = false;
    for (int b : gr.rd.positive) {
      int c = gr.rd.find(vec_sub(gr.rd.roots[a].value, gr.rd.roots[b].value));
      if (c >= 0 && std::find(gr.rd.positive.begin(), gr.rd.positive.end(), c) != gr.rd.positive.end()) dec = true;
    }
    if (!dec) simple.push_back(a);
  }
  int last = type == ParityType::Odd ? gr.rd.find(vec_scale(theta_new, Scalar(1, 2))) : gr.theta;
  auto it = std::find(simple.begin(), simple.end(), last);
  if (it != simple.end()) {
    simple.erase(it);
    simple.push_back(last);
  }
  gr.rd.simple = simple;

  if (type == ParityType::Odd) {
    if (static_cast<int>(simple.size()) != k1 + 1 || simple.back() != last)
      throw GradingError("simple system does not end with theta/2");
    Matrix A(k1 + 1, k1 + 1);
    Vec rhs(k1 + 1);
    for (int i = 0; i <= k1; ++i) {
      for (int j = 0; j <= k1; ++j) A(i, j) = gr.rd.roots[simple[i]].value[j];
      rhs[i] = i < k1 ? 1 : 0;
    }
    auto sol = solve(A, rhs);
    if (!sol || !(*sol)[k1].is_zero()) throw GradingError("no grading element h0 in h^e");
    gr.h0 = Vec(sol->begin(), sol->begin() + k1);
  }

  // subalgebras
  gr.n = {gr.f};
  gr.m = {gr.f};
  for (int i = hs; i < s; ++i) gr.m.push_back(gr.u[i]);
  for (int i = (r + 1) / 2; i < r; ++i) gr.m.push_back(gr.v[i]);
  gr.m_ext = gr.m;
  if (gr.v_mid >= 0) gr.m_ext.push_back(gr.v_mid);
  gr.n_prime = gr.z;
  gr.n_prime.push_back(gr.f);
  gr.n_zero = {gr.f};
  for (int zi : gr.z)
    if (zi != gr.v_mid) gr.n_zero.push_back(zi);
  for (int i = 0; i < n; ++i)
    if (gr.deg[i] >= 0) gr.p.push_back(i);
  return gr;
}

FullWeights full_weights(const MinimalGrading& gr) {
  int k = static_cast<int>(gr.he.size()) + 1;
  FullWeights w;
  w.delta = Vec(k);
  w.rho = Vec(k);
  w.rho_e0 = Vec(k);
  w.theta = gr.rd.roots[gr.theta].value;
  auto val = [&](int i) { return gr.rd.roots[gr.rd.root_of_basis[i]].value; };
  int hs = gr.s / 2, hr = gr.r / 2;
  for (int i = 0; i < hs; ++i) w.delta = vec_sub(w.delta, vec_scale(val(gr.u[i]), Scalar(1, 2)));
  for (int i = 0; i < hr; ++i) w.delta = vec_add(w.delta, vec_scale(val(gr.v[i]), Scalar(1, 2)));
  Scalar shift = gr.type == ParityType::Odd ? Scalar(gr.s - gr.r + 1, 4) : Scalar(gr.s - gr.r, 4);
  w.delta = vec_sub(w.delta, vec_scale(w.theta, shift));
  for (int i = 0; i < gr.g.dim; ++i) {
    if (gr.sign[i] <= 0) continue;
    w.rho = vec_add(w.rho, vec_scale(val(i), gr.g.parity[i] ? Scalar(-1, 2) : Scalar(1, 2)));
  }
  for (int i : gr.xstar) w.rho_e0 = vec_add(w.rho_e0, vec_scale(val(i), Scalar(1, 2)));
  for (int i : gr.ystar) w.rho_e0 = vec_sub(w.rho_e0, vec_scale(val(i), Scalar(1, 2)));
  return w;
}

}  // namespace wsa
