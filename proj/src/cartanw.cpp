#include "wsa/cartanw.hpp"

#include <algorithm>

#include "wsa/errors.hpp"

namespace wsa {

namespace {

Scalar sqrt_m2() { return Scalar::sqrt(Rational(-2)); }

}  // namespace

CartanW::CartanW(const WAlgebra& W) : W_(W), type_(W.grading().type) {
  const MinimalGrading& gr = W.grading();
  const LieSuperalgebra& g = gr.g;
  const int n = g.dim;

  std::vector<int> idx;
  for (int i = 0; i < n; ++i)
    if (vec_is_zero(gr.rweight[i])) idx.push_back(i);
  g0_ = restrict_to(g, idx);
  g0_pos_.assign(n, -1);
  for (size_t k = 0; k < idx.size(); ++k) g0_pos_[idx[k]] = static_cast<int>(k);
  std::vector<int> kw;
  for (int i : idx) kw.push_back(gr.deg[i] + 2);
  U0_ = enveloping_algebra(g0_, kw);
  f0_ = g0_pos_[gr.f];
  if (f0_ != g0_.dim - 1) throw InternalError("f must be the last basis element of g0");

  const int e0 = g0_pos_[gr.e], h0 = g0_pos_[gr.h];
  const int m = g0_.dim;
  std::vector<Poly> vals;
  std::vector<int> leads, par, kd;
  auto add = [&](const std::string& label, Poly value, int lead, int kdeg) {
    labels_.push_back(label);
    vals.push_back(project_qfin(value, f0_));
    leads.push_back(lead);
    par.push_back(g0_.parity[lead]);
    kd.push_back(kdeg);
    return static_cast<int>(labels_.size()) - 1;
  };

  const bool odd = type_ == ParityType::Odd;
  int vm = -1, ve = -1;
  if (odd) {
    vm = g0_pos_[gr.v_mid];
    ve = g0_pos_[gr.ve];
    idx_F_ = add("Th'_F", poly_scale(U0_.gen(vm), sqrt_m2()), vm, 1);
  }
  for (int hi : gr.he) idx_h_.push_back(add("Th'_" + g.labels[hi], U0_.gen(g0_pos_[hi]), g0_pos_[hi], 2));
  {
    Poly c;
    poly_add(c, Mono{static_cast<uint8_t>(e0)}, 2);
    poly_axpy(c, U0_.mul(U0_.gen(h0), U0_.gen(h0)), Scalar(1, 2));
    if (odd) {
      poly_axpy(c, U0_.gen(h0), Scalar(-3, 2));
      poly_axpy(c, U0_.mul(U0_.gen(vm), U0_.gen(ve)), -2);
    } else {
      poly_axpy(c, U0_.gen(h0), -1);
    }
    idx_C_ = add("C'", c, e0, 4);
  }
  if (odd) {
    // Theta_[v,e] of g0: z = {v}, z* = v
    Vec v = unit_vec(m, vm), w = unit_vec(m, ve), f = unit_vec(m, f0_);
    Vec zw = g0_.bracket(v, w);
    Poly t = lie_element(w);
    poly_axpy(t, U0_.mul(U0_.gen(vm), lie_element(zw)), -1);
    Poly vv = U0_.mul(U0_.gen(vm), U0_.gen(vm));
    poly_axpy(t, U0_.mul(vv, lie_element(g0_.bracket(v, zw))), Scalar(1, 3));
    poly_axpy(t, lie_element(g0_.bracket(w, f)), Scalar(-2, 3));
    idx_E_ = add("Th'_E", poly_scale(t, sqrt_m2()), ve, 3);
  }
  st_ = std::make_unique<Straightener>(U0_, f0_, vals, leads);

  const int ng = num_gens();
  std::vector<std::vector<Poly>> comm(ng, std::vector<Poly>(ng));
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j <= i; ++j) {
      if (i == j && !par[i]) continue;
      comm[i][j] = st_->coordinates(project_qfin(U0_.supercommutator(vals[i], vals[j]), f0_));
    }
  tab_.assign(ng, std::vector<Poly>(ng));
  if (odd) {
    poly_add(tab_[idx_E_][idx_E_], Mono{static_cast<uint8_t>(idx_C_)}, 1);
    poly_add(tab_[idx_E_][idx_E_], Mono{}, Scalar(1, 8));
    poly_add(tab_[idx_F_][idx_F_], Mono{}, -2);
  }
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j <= i; ++j)
      if (comm[i][j] != tab_[i][j])
        throw ConsistencyError("U(g0,e): [" + labels_[i] + "," + labels_[j] + "] = " + poly_str(comm[i][j], labels_) +
                               ", expected " + poly_str(tab_[i][j], labels_));
  pres_ = PbwAlgebra(par, std::move(comm), kd, labels_);

  // order g_- | g_0 | g_+ for pi
  std::vector<int> minus, zero, plus;
  for (int i = 0; i < n; ++i) {
    if (vec_is_zero(gr.rweight[i]))
      zero.push_back(i);
    else if (gr.sign[i] < 0)
      minus.push_back(i);
    else
      plus.push_back(i);
  }
  perm_ = minus;
  g0_begin_ = static_cast<int>(perm_.size());
  perm_.insert(perm_.end(), zero.begin(), zero.end());
  g0_end_ = static_cast<int>(perm_.size());
  perm_.insert(perm_.end(), plus.begin(), plus.end());
  perm_pos_.assign(n, -1);
  std::vector<Vec> basis;
  std::vector<std::string> lab;
  std::vector<int> cartan, kperm;
  for (int k = 0; k < n; ++k) {
    perm_pos_[perm_[k]] = k;
    basis.push_back(unit_vec(n, perm_[k]));
    lab.push_back(g.labels[perm_[k]]);
    kperm.push_back(gr.deg[perm_[k]] + 2);
  }
  for (int c : g.cartan) cartan.push_back(perm_pos_[c]);
  Uperm_ = enveloping_algebra(change_basis(g, basis, lab, cartan), kperm);

  for (const auto& gen : W.gens()) {
    if (gen.kind == 'F' || gen.kind == 't' || gen.kind == 'C' || gen.kind == 'E')
      pi_gen_.emplace_back(pi_lift(gen.value));
    else
      pi_gen_.emplace_back(std::nullopt);
  }
}

std::vector<int> CartanW::center_basis() const {
  std::vector<int> out = idx_h_;
  out.push_back(idx_C_);
  return out;
}

Poly CartanW::g0_casimir() const {
  const int m = g0_.dim;
  auto inv = inverse(g0_.form);
  if (!inv) throw InternalError("form on g0 is degenerate");
  // dual basis x^i = sum_j inv(j,i) x_j satisfies (x^i, x_k) = delta
  Poly out;
  for (int i = 0; i < m; ++i) {
    Vec dual(m);
    for (int j = 0; j < m; ++j) dual[j] = (*inv)(j, i);
    poly_axpy(out, U0_.mul(lie_element(dual), U0_.gen(i)), 1);
  }
  return out;
}

Poly CartanW::pr0_casimir() const { return st_->coordinates(project_qfin(g0_casimir(), f0_)); }

Poly CartanW::pi_lift(const Poly& qfin) const {
  Poly y;
  for (const auto& [mono, c] : qfin) {
    std::vector<int> w;
    for (uint8_t i : mono) w.push_back(perm_pos_[i]);
    poly_axpy(y, Uperm_.word(w), c);
  }
  Poly z;
  for (const auto& [mono, c] : y) {
    Mono m0;
    bool keep = true;
    for (uint8_t i : mono) {
      if (i < g0_begin_ || i >= g0_end_) {
        keep = false;
        break;
      }
      m0.push_back(static_cast<uint8_t>(g0_pos_[perm_[i]]));
    }
    if (keep) poly_add(z, m0, c);
  }
  return st_->coordinates(project_qfin(z, f0_));
}

namespace {

Matrix poly_on_matrices(const Poly& p, const std::vector<Matrix>& act, int dim) {
  Matrix r(dim, dim);
  for (const auto& [m, c] : p) {
    Matrix t = Matrix::identity(dim);
    for (uint8_t i : m) t = t * act[i];
    r = r + t.scaled(c);
  }
  return r;
}

}  // namespace

VLambdaModule simple_module(const CartanW& cw, const Vec& lambda, const Scalar& c) {
  const MinimalGrading& gr = cw.parent().grading();
  if (lambda.size() != gr.he.size()) throw DomainError("lambda has the wrong length");
  VLambdaModule v;
  v.lambda = lambda;
  const bool odd = cw.type() == ParityType::Odd;
  const int dim = odd ? 2 : 1;
  v.dim_even = 1;
  v.dim_odd = odd ? 1 : 0;
  v.c = odd ? Scalar(-1, 8) : c;
  v.action.assign(cw.num_gens(), Matrix(dim, dim));
  for (size_t i = 0; i < cw.idx_h().size(); ++i) v.action[cw.idx_h()[i]] = Matrix::identity(dim).scaled(lambda[i]);
  v.action[cw.idx_C()] = Matrix::identity(dim).scaled(v.c);
  if (odd) {
    Matrix F(2, 2);
    F(1, 0) = 1;   // v -> F v
    F(0, 1) = -1;  // F v -> F^2 v = -v
    v.action[cw.idx_F()] = F;
    Matrix J(2, 2);
    J(1, 0) = 1;
    J(0, 1) = 1;
    v.odd_endomorphism = J;
    v.type_q = true;
  }
  return v;
}

bool module_respects_relations(const CartanW& cw, const VLambdaModule& m, std::string* why) {
  const PbwAlgebra& P = cw.presentation();
  const int dim = m.dim_even + m.dim_odd;
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j <= i; ++j) {
      if (i == j && !P.parity(i)) continue;
      const Matrix& a = m.action[i];
      const Matrix& b = m.action[j];
      Matrix lhs = (P.parity(i) && P.parity(j)) ? a * b + b * a : a * b - b * a;
      if (lhs == poly_on_matrices(P.comm(i, j), m.action, dim)) continue;
      if (why) *why = "[" + P.labels()[i] + "," + P.labels()[j] + "]";
      return false;
    }
  return true;
}

WeightSplit restricted_weight(const WAlgebra& W, const Poly& coords) {
  WeightSplit out;
  const size_t k = W.grading().he.size();
  for (const auto& [m, c] : coords) {
    Vec wt(k);
    for (uint8_t g : m) wt = vec_add(wt, W.gen_weight(g));
    auto it = std::find_if(out.parts.begin(), out.parts.end(), [&](const auto& p) { return p.first == wt; });
    if (it == out.parts.end()) {
      out.parts.push_back({wt, {}});
      it = std::prev(out.parts.end());
    }
    poly_add(it->second, m, c);
  }
  out.homogeneous = out.parts.size() <= 1;
  return out;
}

Poly project_pi(const CartanW& cw, const Poly& coords) {
  const WAlgebra& W = cw.parent();
  auto split = restricted_weight(W, coords);
  for (const auto& [wt, p] : split.parts)
    if (!vec_is_zero(wt)) throw DomainError("pi is defined on weight-zero elements");
  const PbwAlgebra& P = cw.presentation();
  const auto& img = cw.pi_generators();
  Poly out;
  for (const auto& [m, c] : coords) {
    if (std::any_of(m.begin(), m.end(), [&](uint8_t g) { return !img[g]; })) continue;
    Poly acc = poly_const(c);
    for (uint8_t g : m) acc = P.mul(acc, *img[g]);
    poly_axpy(out, acc, 1);
  }
  return out;
}

Poly apply_shift(const CartanW& cw, const Poly& pres_coords) {
  const PbwAlgebra& P = cw.presentation();
  const MinimalGrading& gr = cw.parent().grading();
  std::vector<Poly> sub;
  for (int i = 0; i < P.size(); ++i) sub.push_back(P.gen(i));
  if (cw.type() == ParityType::Odd) {
    poly_add(sub[cw.idx_C()], Mono{}, cw.parent().epsilon());
  } else {
    for (size_t i = 0; i < cw.idx_h().size(); ++i) poly_add(sub[cw.idx_h()[i]], Mono{}, -gr.delta_bar[i]);
  }
  Poly out;
  for (const auto& [m, c] : pres_coords) {
    Poly acc = poly_const(c);
    for (uint8_t g : m) acc = P.mul(acc, sub[g]);
    poly_axpy(out, acc, 1);
  }
  return out;
}

}  // namespace wsa
