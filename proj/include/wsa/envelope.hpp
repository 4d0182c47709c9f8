#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "wsa/superalgebra.hpp"

namespace wsa {

/// Ordered PBW monomial: nondecreasing generator indices, odd ones at most once.
using Mono = std::vector<uint8_t>;
using Poly = std::map<Mono, Scalar>;

void poly_add(Poly& p, const Mono& m, const Scalar& c);
/// p += c * q
void poly_axpy(Poly& p, const Poly& q, const Scalar& c);
Poly poly_scale(const Poly& p, const Scalar& c);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
inline Poly poly_const(const Scalar& c) {
  Poly p;
  poly_add(p, Mono{}, c);
  return p;
}
Scalar constant_term(const Poly& p);
std::string mono_str(const Mono& m, const std::vector<std::string>& labels);
std::string poly_str(const Poly& p, const std::vector<std::string>& labels);

/// Associative superalgebra with a PBW basis: generators x_0 < x_1 < ... with
/// [x_i, x_j] given as polynomials. Odd squares use x^2 = [x,x]/2.
///
/// Products are normal-ordered by a memoized left-multiplication table. The
/// memo is thread safe; mul() splits the left factor across OpenMP threads,
/// mul_serial() is the single-threaded reference.
class PbwAlgebra {
 public:
  PbwAlgebra() = default;
  /// comm[i][j] for j <= i holds [x_i, x_j]; only those entries are read.
  PbwAlgebra(std::vector<int> parity, std::vector<std::vector<Poly>> comm, std::vector<int> kweight,
             std::vector<std::string> labels);

  int size() const { return static_cast<int>(parity_.size()); }
  int parity(int i) const { return parity_[i]; }
  const std::vector<int>& kweight() const { return kweight_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Poly& comm(int i, int j) const { return comm_[i][j]; }

  Poly gen(int i) const;
  Poly mul_left(int i, const Mono& m) const;
  Poly mul_left(int i, const Poly& p) const;
  Poly mul_mono(const Mono& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly mul_serial(const Poly& a, const Poly& b) const;
  Poly word(const std::vector<int>& w) const;
  /// a b - (-1)^{|a||b|} b a for homogeneous a, b.
  Poly supercommutator(const Poly& a, const Poly& b) const;

  /// Rewrites a raw word by repeatedly fixing the leftmost out-of-order pair,
  /// with no memo. Independent of mul_left; used as a test oracle.
  Poly normal_form_reference(const std::vector<int>& w) const;

  int mono_degree(const Mono& m) const;
  /// Maximum weighted degree over terms; -1 for zero.
  int degree(const Poly& p) const;
  Poly top_component(const Poly& p) const;
  /// Parity of a homogeneous element; -1 for zero; throws on mixed parity.
  int parity_of(const Poly& p) const;
  int mono_parity(const Mono& m) const;

  size_t memo_size() const;
  void clear_memo() const;

 private:
  std::vector<int> parity_;
  std::vector<std::vector<Poly>> comm_;
  std::vector<int> kweight_;
  std::vector<std::string> labels_;

  struct Memo {
    std::shared_mutex mu;
    std::unordered_map<std::string, Poly> table;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// U(g) in the basis order of g, Kazhdan weight deg+2 per basis element.
PbwAlgebra enveloping_algebra(const LieSuperalgebra& g, const std::vector<int>& kweight);

/// Element of g as a degree-one polynomial.
Poly lie_element(const Vec& x);

/// Q^fin = U(g)/U(g)(f-1) with f the last PBW generator: drop the f factors.
Poly project_qfin(const Poly& p, int f_index);

/// project([a, q]) for a in g and q in Q^fin (given by its tautological lift).
Poly ad_action(const PbwAlgebra& U, int f_index, const Vec& a, const Poly& q);

struct InvarianceResult {
  bool invariant = true;
  int witness = -1;  // basis index of a failing element
  Poly residual;
};

/// Checks ad a (q) = 0 for every basis element a in the listed indices.
InvarianceResult is_invariant(const PbwAlgebra& U, int f_index, const Poly& q, const std::vector<int>& span);

}  // namespace wsa
