#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wsa/wgen.hpp"

namespace wsa {

/// U(g0,e) for g0 = h^e + s_theta, with s_theta = osp(1|2) (type odd) or
/// sl(2) (type even). Generators are derived inside Q^fin(g0):
///   Th'_F = sqrt(-2) v,  Th'_h = h_i,  C'_theta,  Th'_E = sqrt(-2) Theta_[v,e]
/// in that PBW order (F and E only in type odd).
class CartanW {
 public:
  explicit CartanW(const WAlgebra& W);
  CartanW(const CartanW&) = delete;
  CartanW& operator=(const CartanW&) = delete;

  const WAlgebra& parent() const { return W_; }
  ParityType type() const { return type_; }
  const LieSuperalgebra& g0() const { return g0_; }
  const PbwAlgebra& U0() const { return U0_; }
  int f0() const { return f0_; }
  /// Basis index in g0 of an adapted-basis index, or -1.
  int g0_index(int adapted) const { return g0_pos_[adapted]; }

  int num_gens() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int idx_F() const { return idx_F_; }
  int idx_E() const { return idx_E_; }
  int idx_C() const { return idx_C_; }
  const std::vector<int>& idx_h() const { return idx_h_; }
  /// Generator values in Q^fin(g0).
  const std::vector<Poly>& values() const { return st_->values(); }
  const Straightener& straightener() const { return *st_; }

  /// Presentation read off from brackets computed in Q^fin(g0).
  const PbwAlgebra& presentation() const { return pres_; }
  /// The expected relation table: [E,E] = C' + 1/8, [F,F] = -2, rest zero.
  const std::vector<std::vector<Poly>>& tabulated() const { return tab_; }

  /// Th'_h and C'_theta.
  std::vector<int> center_basis() const;

  /// Casimir of U(g0) (sum of dual-basis products) and its Q^fin(g0) image
  /// in generator coordinates.
  Poly g0_casimir() const;
  Poly pr0_casimir() const;

  /// pi on the lift: reorder U(g) as g_- g_0 g_+ by restricted weight, keep
  /// the terms lying in U(g0), project to Q^fin(g0); returns generator coordinates.
  Poly pi_lift(const Poly& qfin) const;
  /// pi of each W generator of weight zero (F, h^e, C, [v,e]); empty for others.
  const std::vector<std::optional<Poly>>& pi_generators() const { return pi_gen_; }

 private:
  const WAlgebra& W_;
  ParityType type_;
  LieSuperalgebra g0_;
  std::vector<int> g0_pos_;
  PbwAlgebra U0_;
  int f0_ = -1;
  std::vector<std::string> labels_;
  int idx_F_ = -1, idx_E_ = -1, idx_C_ = -1;
  std::vector<int> idx_h_;
  std::unique_ptr<Straightener> st_;
  PbwAlgebra pres_;
  std::vector<std::vector<Poly>> tab_;

  // U(g) in the order g_- | g_0 | g_+
  std::vector<int> perm_pos_;  // adapted index -> position in that order
  std::vector<int> perm_;      // position -> adapted index
  int g0_begin_ = 0, g0_end_ = 0;
  PbwAlgebra Uperm_;
  std::vector<std::optional<Poly>> pi_gen_;
};

/// Simple U(g0,e)-module V_lambda: basis {v, Th'_F v} (type odd) or {v}.
struct VLambdaModule {
  Vec lambda;
  Scalar c;  // value of C'_theta
  int dim_even = 0, dim_odd = 0;
  std::vector<Matrix> action;  // per generator of CartanW
  bool type_q = false;
  std::optional<Matrix> odd_endomorphism;  // supercommutes with the action (type Q)
};

/// c is used only in type even (C'_theta acts as -1/8 in type odd).
VLambdaModule simple_module(const CartanW& cw, const Vec& lambda, const Scalar& c = Scalar());

/// Relation check of a module: every bracket of the presentation holds on matrices.
bool module_respects_relations(const CartanW& cw, const VLambdaModule& m, std::string* why = nullptr);

struct WeightSplit {
  bool homogeneous = true;
  std::vector<std::pair<Vec, Poly>> parts;  // weight -> coordinates
};

/// Splits W coordinates by restricted (h^e) weight.
WeightSplit restricted_weight(const WAlgebra& W, const Poly& coords);

/// pi on weight-zero W coordinates: monomials with a factor of nonzero weight
/// are dropped, the rest are mapped through pi of the generators.
Poly project_pi(const CartanW& cw, const Poly& coords);
/// The shift applied after pi: C' -> C' + epsilon (type odd) or
/// Th'_h -> Th'_h - delta(h) (type even).
Poly apply_shift(const CartanW& cw, const Poly& pres_coords);
inline Poly project_pi_eps(const CartanW& cw, const Poly& coords) { return apply_shift(cw, project_pi(cw, coords)); }

}  // namespace wsa
