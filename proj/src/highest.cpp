#include "wsa/highest.hpp"

#include <algorithm>
#include <functional>

#include "wsa/errors.hpp"

namespace wsa {

namespace {

bool is_lowering_kind(char k) { return k == 'x' || k == 'y' || k == 'f' || k == 'g'; }
bool is_raising_kind(char k) { return k == 'p' || k == 'q' || k == 'X' || k == 'Y'; }

int find_kind(const WAlgebra& W, char kind) {
  for (int k = 0; k < W.num_gens(); ++k)
    if (W.gens()[k].kind == kind) return k;
  return -1;
}

std::vector<int> gens_of_kind(const WAlgebra& W, char kind) {
  std::vector<int> out;
  for (int k = 0; k < W.num_gens(); ++k)
    if (W.gens()[k].kind == kind) out.push_back(k);
  return out;
}

/// All sorted monomials in `letters` (odd ones at most once) with total cost <= budget.
std::vector<Mono> enumerate_monos(const std::vector<int>& letters, const std::vector<int>& cost,
                                  const std::vector<int>& parity, int budget) {
  std::vector<Mono> out;
  Mono cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == letters.size()) {
      out.push_back(cur);
      return;
    }
    rec(i + 1, left);
    int n = 0;
    while (left >= cost[i] * (n + 1) && (!parity[i] || n < 1)) {
      ++n;
      cur.push_back(static_cast<uint8_t>(letters[i]));
      rec(i + 1, left - cost[i] * n);
    }
    cur.resize(cur.size() - n);
  };
  rec(0, budget);
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

void add_weight_dim(std::vector<WeightDim>& dims, const Vec& wt, const std::optional<Scalar>& h0) {
  for (auto& d : dims)
    if (d.weight == wt) {
      ++d.dim;
      return;
    }
  dims.push_back({wt, h0, 1});
}

Vec weight_sum(const WAlgebra& W, const Vec& base, const Mono& m) {
  Vec w = base;
  for (uint8_t g : m) w = vec_add(w, W.gen_weight(g));
  return w;
}

std::optional<Scalar> h0_value(const MinimalGrading& gr, const Vec& wt) {
  if (!gr.h0) return std::nullopt;
  return dot(wt, *gr.h0);
}

Matrix eval_on(const Poly& p, const std::vector<Matrix>& act, int dim) {
  Matrix r(dim, dim);
  for (const auto& [m, c] : p) {
    Matrix t = Matrix::identity(dim);
    for (uint8_t i : m) t = t * act[i];
    r = r + t.scaled(c);
  }
  return r;
}

struct VermaEval {
  Mono key;          // lowering letters + F
  int lowering = 0;  // number of lowering letters
  Scalar coeff;
};

/// Evaluates a PBW monomial of W on the highest vector of Z(lambda, c).
std::optional<VermaEval> eval_on_top(const WAlgebra& W, const MatchablePair& pair, const Mono& m) {
  VermaEval out;
  out.coeff = 1;
  int t_first = -1;
  for (int k = 0; k < W.num_gens(); ++k)
    if (W.gens()[k].kind == 't') {
      t_first = k;
      break;
    }
  for (uint8_t g : m) {
    char kind = W.gens()[g].kind;
    if (is_lowering_kind(kind)) {
      out.key.push_back(g);
      ++out.lowering;
    } else if (kind == 'F') {
      out.key.push_back(g);
    } else if (kind == 't') {
      out.coeff *= pair.lambda[g - t_first];
    } else if (kind == 'C') {
      out.coeff *= pair.c;
    } else {
      return std::nullopt;  // E or raising kills the highest vector
    }
  }
  if (out.coeff.is_zero()) return std::nullopt;
  return out;
}

}  // namespace

Scalar matchable_c(const WAlgebra& W, const Vec& lambda) {
  const MinimalGrading& gr = W.grading();
  if (gr.type != ParityType::Odd) throw NotApplicable("matchable pairs are a type odd notion; any c is allowed");
  if (lambda.size() != gr.he.size()) throw DomainError("lambda has the wrong length");
  return W.c0() + gr.inner(lambda, lambda) + Scalar(2) * gr.inner(lambda, vec_add(gr.rho_e0_bar, gr.delta_bar));
}

Scalar matchability_defect(const WAlgebra& W, const MatchablePair& p) { return matchable_c(W, p.lambda) - p.c; }

int VermaTruncation::index_of(const Mono& m) const {
  auto it = std::find(basis.begin(), basis.end(), m);
  return it == basis.end() ? -1 : static_cast<int>(it - basis.begin());
}

std::vector<int> lowering_generators(const WAlgebra& W) {
  std::vector<int> out;
  for (int k = 0; k < W.num_gens(); ++k)
    if (is_lowering_kind(W.gens()[k].kind)) out.push_back(k);
  return out;
}

std::vector<int> raising_generators(const WAlgebra& W) {
  std::vector<int> out;
  for (int k = 0; k < W.num_gens(); ++k)
    if (is_raising_kind(W.gens()[k].kind)) out.push_back(k);
  return out;
}

namespace {

/// Basis L * F^iota with |L| <= N, in order of lowering degree.
void build_basis(const WAlgebra& W, VermaTruncation& t) {
  auto low = lowering_generators(W);
  std::vector<int> cost(low.size(), 1), par;
  for (int g : low) par.push_back(W.gens()[g].parity);
  auto monos = enumerate_monos(low, cost, par, t.N);
  const int F = W.has_theta_F() ? W.theta_F_index() : -1;
  for (const auto& m : monos) {
    for (int iota = 0; iota <= (F >= 0 ? 1 : 0); ++iota) {
      Mono b = m;
      if (iota) b.push_back(static_cast<uint8_t>(F));
      t.basis.push_back(b);
      t.lowering_degree.push_back(static_cast<int>(m.size()));
    }
  }
}

void fill_weights(const WAlgebra& W, VermaTruncation& t, const Vec& top) {
  const MinimalGrading& gr = W.grading();
  for (const auto& b : t.basis) {
    Vec wt = weight_sum(W, top, b);
    t.weights.push_back(wt);
    add_weight_dim(t.weight_dims, wt, h0_value(gr, wt));
  }
}

}  // namespace

VermaTruncation verma_truncate(const WAlgebra& W, const MatchablePair& pair, int N) {
  const MinimalGrading& gr = W.grading();
  if (N < 0) throw DomainError("N must be nonnegative");
  if (pair.lambda.size() != gr.he.size()) throw DomainError("lambda has the wrong length");
  if (gr.type == ParityType::Odd && !matchability_defect(W, pair).is_zero())
    throw MatchabilityError("(lambda, c) is not matchable: c should be " + matchable_c(W, pair.lambda).str());
  VermaTruncation t;
  t.pair = pair;
  t.N = N;
  build_basis(W, t);
  fill_weights(W, t, pair.lambda);

  std::map<Mono, int> index;
  for (int j = 0; j < t.dim(); ++j) index[t.basis[j]] = j;
  const PbwAlgebra& A = W.abstract();
  const int n = t.dim();
  auto apply = [&](const Poly& p, int col, Matrix& M, std::vector<bool>& trunc) {
    for (const auto& [m, c] : p) {
      auto ev = eval_on_top(W, pair, m);
      if (!ev) continue;
      if (ev->lowering > N) {
        trunc[col] = true;
        continue;
      }
      M(index.at(ev->key), col) += c * ev->coeff;
    }
  };
  for (int k = 0; k < W.num_gens(); ++k) {
    Matrix M(n, n);
    std::vector<bool> trunc(n, false);
    for (int j = 0; j < n; ++j) apply(A.mul_left(k, t.basis[j]), j, M, trunc);
    t.action.push_back(std::move(M));
    t.truncated.push_back(std::move(trunc));
  }
  if (W.has_theta_F()) {
    Matrix J(n, n);
    std::vector<bool> trunc(n, false);
    for (int j = 0; j < n; ++j) {
      Poly b;
      poly_add(b, t.basis[j], 1);
      apply(A.mul(b, A.gen(W.theta_F_index())), j, J, trunc);
    }
    t.odd_endomorphism = J;
  }
  return t;
}

std::vector<WeightDim> verma_kazhdan_dims(const WAlgebra& W, int N) {
  auto low = lowering_generators(W);
  std::vector<int> letters = low;
  if (W.has_theta_F()) letters.push_back(W.theta_F_index());
  std::vector<int> cost, par;
  for (int g : letters) {
    cost.push_back(W.gens()[g].kdeg);
    par.push_back(W.gens()[g].parity);
  }
  std::vector<WeightDim> dims;
  Vec zero(W.grading().he.size());
  for (const auto& m : enumerate_monos(letters, cost, par, N)) add_weight_dim(dims, weight_sum(W, zero, m), std::nullopt);
  return dims;
}

std::optional<std::string> verma_relation_failure(const WAlgebra& W, const VermaTruncation& t) {
  const PbwAlgebra& A = W.abstract();
  const int n = t.dim();
  // applies a generator word (right to left) to a vector; false if the window is left
  auto chain = [&](const Mono& word, Vec v, Vec& out) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      for (int r = 0; r < n; ++r)
        if (!v[r].is_zero() && t.truncated[*it][r]) return false;
      v = t.action[*it] * v;
    }
    out = std::move(v);
    return true;
  };
  for (int col = 0; col < n; ++col) {
    Vec e = unit_vec(n, col);
    for (int i = 0; i < A.size(); ++i)
      for (int j = 0; j <= i; ++j) {
        if (i == j && !A.parity(i)) continue;
        Vec ij, ji;
        if (!chain(Mono{static_cast<uint8_t>(i), static_cast<uint8_t>(j)}, e, ij)) continue;
        if (!chain(Mono{static_cast<uint8_t>(j), static_cast<uint8_t>(i)}, e, ji)) continue;
        Vec lhs = (A.parity(i) && A.parity(j)) ? vec_add(ij, ji) : vec_sub(ij, ji);
        Vec rhs(n);
        bool ok = true;
        for (const auto& [m, c] : A.comm(i, j)) {
          Vec r;
          if (!chain(m, e, r)) {
            ok = false;
            break;
          }
          rhs = vec_add(rhs, vec_scale(r, c));
        }
        if (!ok || lhs == rhs) continue;
        return "[" + W.gens()[i].label + "," + W.gens()[j].label + "] on " + mono_str(t.basis[col], A.labels());
      }
  }
  return std::nullopt;
}

VermaTruncation highest_weight_module(const CartanW& cw, const Vec& lambda, int N, const Scalar& c) {
  const WAlgebra& W = cw.parent();
  if (N < 0) throw DomainError("N must be nonnegative");
  VLambdaModule V = simple_module(cw, lambda, c);
  int vdim = V.dim_even + V.dim_odd;
  std::vector<Matrix> act = V.action;
  Matrix phi;
  if (W.has_theta_F()) {
    // basis {v, Th_F v} with Th_F acting through pi_eps
    Matrix f = eval_on(apply_shift(cw, *cw.pi_generators()[W.theta_F_index()]), act, vdim);
    Matrix S = Matrix::from_columns({unit_vec(2, 0), f * unit_vec(2, 0)}, 2);
    Matrix Si = *inverse(S);
    for (auto& a : act) a = Si * a * S;
    phi = Matrix(2, 2);
    phi(1, 0) = 1;
    phi(0, 1) = Scalar(1, 2);
  } else if (vdim == 2) {
    // refined flavor: the span of v is a submodule of type M
    for (auto& a : act) {
      Matrix b(1, 1);
      b(0, 0) = a(0, 0);
      a = b;
    }
    vdim = 1;
  }

  VermaTruncation t;
  t.pair.lambda = lambda;
  t.N = N;
  build_basis(W, t);
  fill_weights(W, t, lambda);
  std::map<Mono, int> index;
  for (int j = 0; j < t.dim(); ++j) index[t.basis[j]] = j;
  const PbwAlgebra& A = W.abstract();
  const int F = W.has_theta_F() ? W.theta_F_index() : -1;
  std::map<Mono, Matrix> rest_cache;
  auto rest_matrix = [&](const Mono& r) -> const Matrix& {
    auto it = rest_cache.find(r);
    if (it != rest_cache.end()) return it->second;
    Poly p;
    poly_add(p, r, 1);
    return rest_cache.emplace(r, eval_on(project_pi_eps(cw, p), act, vdim)).first->second;
  };
  const int n = t.dim();
  for (int k = 0; k < W.num_gens(); ++k) {
    Matrix M(n, n);
    std::vector<bool> trunc(n, false);
    for (int j = 0; j < n; ++j) {
      Mono L = t.basis[j];
      int iota = 0;
      if (!L.empty() && L.back() == F) {
        L.pop_back();
        iota = 1;
      }
      for (const auto& [m, coef] : A.mul_left(k, L)) {
        Mono low, rest;
        for (uint8_t g : m) (is_lowering_kind(W.gens()[g].kind) ? low : rest).push_back(g);
        if (std::any_of(rest.begin(), rest.end(), [&](uint8_t g) { return is_raising_kind(W.gens()[g].kind); })) continue;
        if (static_cast<int>(low.size()) > N) {
          trunc[j] = true;
          continue;
        }
        Vec w = rest_matrix(rest) * unit_vec(vdim, iota);
        for (int i2 = 0; i2 < vdim; ++i2) {
          if (w[i2].is_zero()) continue;
          Mono key = low;
          if (i2) key.push_back(static_cast<uint8_t>(F));
          M(index.at(key), j) += coef * w[i2];
        }
      }
    }
    t.action.push_back(std::move(M));
    t.truncated.push_back(std::move(trunc));
  }
  // C on the top vector
  t.pair.c = t.action[W.casimir_index()](0, 0);
  if (W.has_theta_F()) {
    Matrix J(n, n);
    for (int j = 0; j < n; ++j) {
      Mono L = t.basis[j];
      int iota = 0;
      if (!L.empty() && L.back() == F) {
        L.pop_back();
        iota = 1;
      }
      for (int i2 = 0; i2 < 2; ++i2) {
        if (phi(i2, iota).is_zero()) continue;
        Mono key = L;
        if (i2) key.push_back(static_cast<uint8_t>(F));
        J(index.at(key), j) = phi(i2, iota);
      }
    }
    t.odd_endomorphism = J;
  }
  return t;
}

namespace {

std::vector<int> killers(const WAlgebra& W) {
  auto out = raising_generators(W);
  int E = find_kind(W, 'E');
  if (E >= 0) out.push_back(E);
  return out;
}

}  // namespace

std::vector<Vec> maximal_vector_scan(const WAlgebra& W, const VermaTruncation& t, int depth) {
  std::vector<int> cols;
  for (int j = 0; j < t.dim(); ++j)
    if (t.lowering_degree[j] <= depth) cols.push_back(j);
  auto ks = killers(W);
  const int n = t.dim();
  Matrix M(static_cast<int>(ks.size()) * n, static_cast<int>(cols.size()));
  for (size_t a = 0; a < ks.size(); ++a)
    for (size_t c = 0; c < cols.size(); ++c)
      for (int r = 0; r < n; ++r) M(static_cast<int>(a) * n + r, static_cast<int>(c)) = t.action[ks[a]](r, cols[c]);
  std::vector<Vec> out;
  for (const auto& v : nullspace(M)) {
    Vec full(n);
    for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = v[c];
    out.push_back(full);
  }
  return out;
}

bool is_singular(const WAlgebra& W, const VermaTruncation& t, const Vec& v) {
  for (int k : killers(W))
    if (!vec_is_zero(t.action[k] * v)) return false;
  return true;
}

Scalar central_character(const WAlgebra& W, const Vec& lambda) {
  const MinimalGrading& gr = W.grading();
  if (gr.type != ParityType::Odd) throw NotApplicable("central characters of M_e(lambda) are a type odd notion");
  const Vec& d = gr.delta_bar;
  return W.c0() + gr.inner(lambda, vec_add(lambda, vec_scale(gr.rho_bar, 2))) +
         Scalar(2) * gr.inner(gr.rho_e0_bar, d) + Scalar(3) * gr.inner(d, d);
}

Scalar central_character_expanded(const WAlgebra& W, const Vec& lambda) {
  const MinimalGrading& gr = W.grading();
  if (gr.type != ParityType::Odd) throw NotApplicable("central characters of M_e(lambda) are a type odd notion");
  const Vec& d = gr.delta_bar;
  Vec lin = vec_add(vec_scale(gr.rho_e0_bar, 2), vec_scale(d, 4));
  return W.c0() + gr.inner(lambda, lambda) + gr.inner(lin, lambda) + Scalar(2) * gr.inner(gr.rho_e0_bar, d) +
         Scalar(3) * gr.inner(d, d);
}

std::vector<std::vector<int>> block_partition(const WAlgebra& W, const std::vector<Vec>& lambdas) {
  std::vector<std::vector<int>> blocks;
  std::vector<Scalar> psi;
  for (int i = 0; i < static_cast<int>(lambdas.size()); ++i) {
    Scalar p = central_character(W, lambdas[i]);
    auto it = std::find(psi.begin(), psi.end(), p);
    if (it == psi.end()) {
      psi.push_back(p);
      blocks.push_back({i});
    } else {
      blocks[it - psi.begin()].push_back(i);
    }
  }
  return blocks;
}

Scalar appendix_remainder(const WAlgebra& W, const MatchablePair& pair, const Mono& lowering) {
  int E = find_kind(W, 'E');
  if (E < 0) throw NotApplicable("needs Theta_[v,e] (type odd)");
  const PbwAlgebra& A = W.abstract();
  Poly L;
  poly_add(L, lowering, 1);
  Poly p = A.mul(A.mul(L, A.gen(E)), A.gen(E));
  Scalar out;
  for (const auto& [m, c] : p) {
    auto ev = eval_on_top(W, pair, m);
    if (ev && ev->key == lowering) out += c * ev->coeff;
  }
  return out;
}

// ---------------------------------------------------------------- Whittaker

WhittakerModel::WhittakerModel(const WAlgebra& W, const Vec& lambda, int N, const Scalar& c)
    : W_(W), lambda_(lambda), N_(N) {
  const MinimalGrading& gr = W.grading();
  const LieSuperalgebra& g = gr.g;
  if (N < 2) throw DomainError("N must be at least 2");
  if (lambda.size() != gr.he.size()) throw DomainError("lambda has the wrong length");
  const bool odd = gr.type == ParityType::Odd;
  c_theta_ = odd ? Scalar(-1, 8) : c;
  const int n = g.dim;

  std::vector<Cls> by_index(n);
  for (int i = 0; i < n; ++i) {
    if (i == gr.v_mid)
      by_index[i] = Cls::F;
    else if (i == gr.h)
      by_index[i] = Cls::H;
    else if (std::find(gr.he.begin(), gr.he.end(), i) != gr.he.end())
      by_index[i] = Cls::T;
    else if (i == gr.e)
      by_index[i] = Cls::E;
    else if (i == gr.ve)
      by_index[i] = Cls::VE;
    else if (i == gr.f)
      by_index[i] = Cls::Fneg;
    else if (vec_is_zero(gr.rweight[i]))
      throw InternalError("unexpected weight-zero basis element " + g.labels[i]);
    else
      by_index[i] = gr.sign[i] < 0 ? Cls::Complement : Cls::Pos;
  }
  for (Cls cl : {Cls::Complement, Cls::F, Cls::H, Cls::T, Cls::E, Cls::VE, Cls::Fneg, Cls::Pos})
    for (int i = 0; i < n; ++i)
      if (by_index[i] == cl) {
        perm_.push_back(i);
        cls_.push_back(cl);
      }
  perm_pos_.assign(n, -1);
  std::vector<Vec> basis;
  std::vector<std::string> lab;
  std::vector<int> cartan, kw;
  for (int k = 0; k < n; ++k) {
    perm_pos_[perm_[k]] = k;
    basis.push_back(unit_vec(n, perm_[k]));
    lab.push_back(g.labels[perm_[k]]);
    kw.push_back(gr.deg[perm_[k]] + 2);
  }
  for (int ci : g.cartan) cartan.push_back(perm_pos_[ci]);
  Uw_ = enveloping_algebra(change_basis(g, basis, lab, cartan), kw);

  const uint8_t ph = static_cast<uint8_t>(perm_pos_[gr.h]);
  poly_add(rule_e_, Mono{}, c_theta_ * Scalar(1, 2));
  poly_add(rule_e_, Mono{ph, ph}, Scalar(-1, 4));
  if (odd) {
    const uint8_t pv = static_cast<uint8_t>(perm_pos_[gr.v_mid]);
    const uint8_t pve = static_cast<uint8_t>(perm_pos_[gr.ve]);
    // C_theta = 2ef + h^2/2 - 3h/2 - 2 v [v,e]
    poly_add(rule_e_, Mono{ph}, Scalar(3, 4));
    poly_add(rule_e_, Mono{pv, pve}, 1);
    poly_add(rule_ve_, Mono{pv}, Scalar(3, 4));
    poly_add(rule_ve_, Mono{pv, ph}, Scalar(-1, 2));
  } else {
    // C_theta = 2ef + h^2/2 - h
    poly_add(rule_e_, Mono{ph}, Scalar(1, 2));
  }

  // basis of M^N: complement letters, F, powers of h
  std::vector<int> letters, cost, par;
  for (int k = 0; k < n; ++k)
    if (cls_[k] == Cls::Complement || cls_[k] == Cls::F || cls_[k] == Cls::H) {
      letters.push_back(k);
      cost.push_back(kw[k]);
      par.push_back(Uw_.parity(k));
    }
  basis_ = enumerate_monos(letters, cost, par, N);

  // Whittaker vectors, one weight space at a time
  std::vector<Vec> wts;
  std::vector<std::vector<int>> by_weight;
  for (int j = 0; j < static_cast<int>(basis_.size()); ++j) {
    Vec wt = weight_of(basis_[j]);
    auto it = std::find(wts.begin(), wts.end(), wt);
    if (it == wts.end()) {
      wts.push_back(wt);
      by_weight.push_back({j});
    } else {
      by_weight[it - wts.begin()].push_back(j);
    }
  }
  std::vector<std::pair<Poly, Scalar>> ops;  // a in m and chi(a)
  for (int i : gr.m) {
    Vec a = unit_vec(n, i);
    ops.push_back({to_w(lie_element(a)), chi(gr, a)});
  }
  for (const auto& cols : by_weight) {
    std::vector<std::map<Mono, Scalar>> images;  // per (op, col)
    std::map<Mono, int> rows;
    for (const auto& [a, x] : ops)
      for (int j : cols) {
        Poly b;
        poly_add(b, basis_[j], 1);
        Poly img = reduce(Uw_.mul(a, b));
        poly_axpy(img, b, -x);
        for (const auto& [m, s] : img) rows.emplace(m, 0);
        images.push_back(img);
      }
    int r = 0;
    for (auto& [m, idx] : rows) idx = r++;
    const int nops = static_cast<int>(ops.size());
    const int ncols = static_cast<int>(cols.size());
    Matrix M(nops * r, ncols);
    for (int o = 0; o < nops; ++o)
      for (int c2 = 0; c2 < ncols; ++c2)
        for (const auto& [m, s] : images[o * ncols + c2]) M(o * r + rows.at(m), c2) = s;
    for (const auto& v : nullspace(M)) {
      Poly w;
      for (int c2 = 0; c2 < ncols; ++c2)
        if (!v[c2].is_zero()) poly_add(w, basis_[cols[c2]], v[c2]);
      wh_.push_back(std::move(w));
    }
  }
}

Vec WhittakerModel::weight_of(const Mono& m) const {
  const MinimalGrading& gr = W_.grading();
  Vec w = lambda_;
  for (uint8_t l : m) w = vec_add(w, gr.rweight[perm_[l]]);
  return w;
}

Poly WhittakerModel::to_w(const Poly& x) const {
  Poly y;
  for (const auto& [mono, c] : x) {
    std::vector<int> w;
    for (uint8_t i : mono) w.push_back(perm_pos_[i]);
    poly_axpy(y, Uw_.word(w), c);
  }
  return y;
}

Poly WhittakerModel::reduce_mono(const Mono& m) const {
  if (m.empty()) return poly_const(1);
  if (auto it = memo_.find(m); it != memo_.end()) return it->second;
  const int last = m.back();
  Mono rest(m.begin(), m.end() - 1);
  Poly out;
  switch (cls_[last]) {
    case Cls::Complement:
    case Cls::F:
    case Cls::H:
      poly_add(out, m, 1);
      break;
    case Cls::Pos:
      break;
    case Cls::Fneg:
      out = reduce_mono(rest);
      break;
    case Cls::T: {
      const auto& he = W_.grading().he;
      int i = static_cast<int>(std::find(he.begin(), he.end(), perm_[last]) - he.begin());
      out = poly_scale(reduce_mono(rest), lambda_[i]);
      break;
    }
    case Cls::E:
    case Cls::VE: {
      Poly r;
      poly_add(r, rest, 1);
      out = reduce(Uw_.mul(r, cls_[last] == Cls::E ? rule_e_ : rule_ve_));
      break;
    }
  }
  memo_[m] = out;
  return out;
}

Poly WhittakerModel::reduce(const Poly& x) const {
  Poly out;
  for (const auto& [m, c] : x) poly_axpy(out, reduce_mono(m), c);
  return out;
}

Poly WhittakerModel::act(const Poly& x_adapted, const Poly& m) const { return reduce(Uw_.mul(to_w(x_adapted), m)); }

std::vector<Vec> WhittakerModel::whittaker_weights() const {
  std::vector<Vec> out;
  for (const auto& w : wh_) out.push_back(weight_of(w.begin()->first));
  return out;
}

std::vector<WeightDim> WhittakerModel::whittaker_dims() const {
  std::vector<WeightDim> dims;
  for (const auto& wt : whittaker_weights()) add_weight_dim(dims, vec_sub(wt, lambda_), std::nullopt);
  return dims;
}

Scalar WhittakerModel::casimir_value() const {
  const MinimalGrading& gr = W_.grading();
  return c_theta_ + gr.inner(lambda_, vec_add(lambda_, vec_scale(gr.rho_bar, 2)));
}

std::vector<RelationCheck> WhittakerModel::battery() const {
  const MinimalGrading& gr = W_.grading();
  const PbwAlgebra& U = W_.U();
  const Poly one = poly_const(1);
  std::vector<RelationCheck> out;
  auto check = [&](const std::string& name, const Poly& got, const Poly& want) {
    RelationCheck r{name, got == want, ""};
    if (!r.pass) r.residual = poly_str(poly_sub(got, want), Uw_.labels());
    out.push_back(r);
  };
  const int n = gr.g.dim;
  for (int i : gr.m) {
    Vec a = unit_vec(n, i);
    check("(" + gr.g.labels[i] + " - chi) 1", poly_sub(act(lie_element(a), one), poly_scale(one, chi(gr, a))), {});
  }
  auto ts = gens_of_kind(W_, 't');
  for (size_t i = 0; i < ts.size(); ++i)
    check("Theta_" + gr.g.labels[gr.he[i]] + " 1 = (lambda+delta) 1", act(W_.gens()[ts[i]].value, one),
          poly_scale(one, lambda_[i] + gr.delta_bar[i]));
  for (int k = 0; k < W_.num_gens(); ++k) {
    char kind = W_.gens()[k].kind;
    if (is_raising_kind(kind) || kind == 'E') check(W_.gens()[k].label + " 1 = 0", act(W_.gens()[k].value, one), {});
  }
  Poly ct;
  poly_axpy(ct, U.word({gr.e, gr.f}), 2);
  poly_axpy(ct, U.word({gr.h, gr.h}), Scalar(1, 2));
  if (gr.type == ParityType::Odd) {
    poly_axpy(ct, U.gen(gr.h), Scalar(-3, 2));
    poly_axpy(ct, U.word({gr.v_mid, gr.ve}), -2);
    Poly x = U.gen(gr.ve);
    poly_axpy(x, U.gen(gr.v_mid), Scalar(-3, 4));
    poly_axpy(x, U.word({gr.v_mid, gr.h}), Scalar(1, 2));
    check("([v,e] - 3/4 v + 1/2 v h) 1 = 0", act(x, one), {});
  } else {
    poly_axpy(ct, U.gen(gr.h), -1);
  }
  check("C_theta 1 = c_theta 1", act(ct, one), poly_scale(one, c_theta_));
  check("C 1 = (c_theta + (lambda, lambda + 2 rho)) 1", act(W_.casimir(), one), poly_scale(one, casimir_value()));
  return out;
}

bool WhittakerModel::casimir_scalar_on_wh() const {
  const Poly& C = W_.casimir();
  const Scalar v = casimir_value();
  return std::all_of(wh_.begin(), wh_.end(), [&](const Poly& w) { return act(C, w) == poly_scale(w, v); });
}

bool WhittakerModel::projection_injective() const {
  const MinimalGrading& gr = W_.grading();
  std::map<Mono, int> layer;
  for (const auto& b : basis_) {
    bool in = std::none_of(b.begin(), b.end(), [&](uint8_t l) {
      return cls_[l] == Cls::H || (cls_[l] == Cls::Complement && gr.deg[perm_[l]] == -1);
    });
    if (in) layer.emplace(b, static_cast<int>(layer.size()));
  }
  std::vector<Vec> rows;
  for (const auto& w : wh_) {
    Vec v(layer.size());
    for (const auto& [m, c] : w)
      if (auto it = layer.find(m); it != layer.end()) v[it->second] = c;
    rows.push_back(v);
  }
  if (rows.empty()) return true;
  return rank(Matrix::from_rows(rows, static_cast<int>(layer.size()))) == static_cast<int>(rows.size());
}

}  // namespace wsa
