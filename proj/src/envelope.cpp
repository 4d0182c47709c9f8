#include "wsa/envelope.hpp"

#include <mutex>

#include <omp.h>

#include "wsa/errors.hpp"

namespace wsa {

void poly_add(Poly& p, const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(m, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

void poly_axpy(Poly& p, const Poly& q, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, x] : q) poly_add(p, m, c.is_one() ? x : x * c);
}

Poly poly_scale(const Poly& p, const Scalar& c) {
  Poly r;
  poly_axpy(r, p, c);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r = a;
  poly_axpy(r, b, Scalar(-1));
  return r;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r = a;
  poly_axpy(r, b, Scalar(1));
  return r;
}

Scalar constant_term(const Poly& p) {
  auto it = p.find(Mono{});
  return it == p.end() ? Scalar() : it->second;
}

std::string mono_str(const Mono& m, const std::vector<std::string>& labels) {
  if (m.empty()) return "1";
  std::string out;
  for (size_t k = 0; k < m.size();) {
    size_t j = k;
    while (j < m.size() && m[j] == m[k]) ++j;
    if (!out.empty()) out += "*";
    out += labels.at(m[k]);
    if (j - k > 1) out += "^" + std::to_string(j - k);
    k = j;
  }
  return out;
}

std::string poly_str(const Poly& p, const std::vector<std::string>& labels) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : p) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (!m.empty()) out += "*" + mono_str(m, labels);
  }
  return out;
}

PbwAlgebra::PbwAlgebra(std::vector<int> parity, std::vector<std::vector<Poly>> comm, std::vector<int> kweight,
                       std::vector<std::string> labels)
    : parity_(std::move(parity)), comm_(std::move(comm)), kweight_(std::move(kweight)), labels_(std::move(labels)) {
  if (parity_.size() > 255) throw CapacityError("too many PBW generators");
  if (comm_.size() != parity_.size() || kweight_.size() != parity_.size())
    throw InternalError("PBW algebra tables have inconsistent sizes");
}

Poly PbwAlgebra::gen(int i) const {
  Poly p;
  p[Mono{static_cast<uint8_t>(i)}] = 1;
  return p;
}

Poly PbwAlgebra::mul_left(int i, const Mono& m) const {
  std::string key(1, static_cast<char>(i));
  key.append(m.begin(), m.end());
  {
    std::shared_lock lk(memo_->mu);
    auto it = memo_->table.find(key);
    if (it != memo_->table.end()) return it->second;
  }
  Poly res;
  if (m.empty() || i < m[0] || (i == m[0] && !parity_[i])) {
    Mono r;
    r.reserve(m.size() + 1);
    r.push_back(static_cast<uint8_t>(i));
    r.insert(r.end(), m.begin(), m.end());
    res[r] = 1;
  } else {
    Poly rest;
    rest[Mono(m.begin() + 1, m.end())] = 1;
    int j = m[0];
    if (i == j) {
      // odd square
      for (const auto& [q, c] : comm_[i][i]) poly_axpy(res, mul_mono(q, rest), c * Scalar(1, 2));
    } else {
      Poly p = mul_left(i, rest);
      Scalar sg = (parity_[i] && parity_[j]) ? Scalar(-1) : Scalar(1);
      poly_axpy(res, mul_left(j, p), sg);
      for (const auto& [q, c] : comm_[i][j]) poly_axpy(res, mul_mono(q, rest), c);
    }
  }
  std::unique_lock lk(memo_->mu);
  memo_->table.emplace(std::move(key), res);
  return res;
}

Poly PbwAlgebra::mul_left(int i, const Poly& p) const {
  Poly res;
  for (const auto& [m, c] : p) poly_axpy(res, mul_left(i, m), c);
  return res;
}

Poly PbwAlgebra::mul_mono(const Mono& a, const Poly& b) const {
  Poly r = b;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = mul_left(*it, r);
  return r;
}

Poly PbwAlgebra::mul_serial(const Poly& a, const Poly& b) const {
  Poly res;
  for (const auto& [m, c] : a) poly_axpy(res, mul_mono(m, b), c);
  return res;
}

Poly PbwAlgebra::mul(const Poly& a, const Poly& b) const {
  if (a.size() < 2) return mul_serial(a, b);
  std::vector<const std::pair<const Mono, Scalar>*> terms;
  terms.reserve(a.size());
  for (const auto& t : a) terms.push_back(&t);
  Poly res;
  const long n = static_cast<long>(terms.size());
#pragma omp parallel
  {
    Poly local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long k = 0; k < n; ++k) poly_axpy(local, mul_mono(terms[k]->first, b), terms[k]->second);
#pragma omp critical(wsa_poly_merge)
    poly_axpy(res, local, Scalar(1));
  }
  return res;
}

Poly PbwAlgebra::word(const std::vector<int>& w) const {
  Poly r = poly_const(1);
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = mul_left(*it, r);
  return r;
}

Poly PbwAlgebra::supercommutator(const Poly& a, const Poly& b) const {
  int pa = parity_of(a), pb = parity_of(b);
  Scalar sg = (pa == 1 && pb == 1) ? Scalar(-1) : Scalar(1);
  Poly r = mul(a, b);
  poly_axpy(r, mul(b, a), -sg);
  return r;
}

Poly PbwAlgebra::normal_form_reference(const std::vector<int>& w) const {
  Poly out;
  std::vector<std::pair<std::vector<int>, Scalar>> stack{{w, Scalar(1)}};
  while (!stack.empty()) {
    auto [cur, c] = std::move(stack.back());
    stack.pop_back();
    size_t k = 0;
    while (k + 1 < cur.size() && !(cur[k] > cur[k + 1] || (cur[k] == cur[k + 1] && parity_[cur[k]]))) ++k;
    if (k + 1 >= cur.size()) {
      poly_add(out, Mono(cur.begin(), cur.end()), c);
      continue;
    }
    int i = cur[k], j = cur[k + 1];
    auto splice = [&](const Mono& q, const Scalar& d) {
      std::vector<int> nw(cur.begin(), cur.begin() + k);
      nw.insert(nw.end(), q.begin(), q.end());
      nw.insert(nw.end(), cur.begin() + k + 2, cur.end());
      stack.emplace_back(std::move(nw), d);
    };
    if (i == j) {
      for (const auto& [q, d] : comm_[i][i]) splice(q, c * d * Scalar(1, 2));
    } else {
      std::vector<int> sw = cur;
      std::swap(sw[k], sw[k + 1]);
      stack.emplace_back(sw, (parity_[i] && parity_[j]) ? -c : c);
      for (const auto& [q, d] : comm_[i][j]) splice(q, c * d);
    }
  }
  return out;
}

int PbwAlgebra::mono_degree(const Mono& m) const {
  int d = 0;
  for (uint8_t i : m) d += kweight_[i];
  return d;
}

int PbwAlgebra::degree(const Poly& p) const {
  int d = -1;
  for (const auto& [m, c] : p) d = std::max(d, mono_degree(m));
  return d;
}

Poly PbwAlgebra::top_component(const Poly& p) const {
  int d = degree(p);
  Poly r;
  for (const auto& [m, c] : p)
    if (mono_degree(m) == d) r.emplace(m, c);
  return r;
}

int PbwAlgebra::mono_parity(const Mono& m) const {
  int s = 0;
  for (uint8_t i : m) s ^= parity_[i];
  return s;
}

int PbwAlgebra::parity_of(const Poly& p) const {
  int par = -1;
  for (const auto& [m, c] : p) {
    int q = mono_parity(m);
    if (par >= 0 && q != par) throw InternalError("element is not homogeneous");
    par = q;
  }
  return par;
}

size_t PbwAlgebra::memo_size() const {
  std::shared_lock lk(memo_->mu);
  return memo_->table.size();
}

void PbwAlgebra::clear_memo() const {
  std::unique_lock lk(memo_->mu);
  memo_->table.clear();
}

Poly lie_element(const Vec& x) {
  Poly p;
  for (size_t i = 0; i < x.size(); ++i) poly_add(p, Mono{static_cast<uint8_t>(i)}, x[i]);
  return p;
}

PbwAlgebra enveloping_algebra(const LieSuperalgebra& g, const std::vector<int>& kweight) {
  std::vector<std::vector<Poly>> comm(g.dim, std::vector<Poly>(g.dim));
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j <= i; ++j)
      for (const auto& [k, c] : g.br[i][j]) poly_add(comm[i][j], Mono{static_cast<uint8_t>(k)}, c);
  return PbwAlgebra(g.parity, std::move(comm), kweight, g.labels);
}

Poly project_qfin(const Poly& p, int f_index) {
  Poly r;
  for (const auto& [m, c] : p) {
    Mono q = m;
    while (!q.empty() && q.back() == f_index) q.pop_back();
    poly_add(r, q, c);
  }
  return r;
}

Poly ad_action(const PbwAlgebra& U, int f_index, const Vec& a, const Poly& q) {
  return project_qfin(U.supercommutator(lie_element(a), q), f_index);
}

InvarianceResult is_invariant(const PbwAlgebra& U, int f_index, const Poly& q, const std::vector<int>& span) {
  InvarianceResult res;
  for (int a : span) {
    Poly r = project_qfin(U.supercommutator(U.gen(a), q), f_index);
    if (!r.empty()) {
      res.invariant = false;
      res.witness = a;
      res.residual = std::move(r);
      return res;
    }
  }
  return res;
}

}  // namespace wsa
