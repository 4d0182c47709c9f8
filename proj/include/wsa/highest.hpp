#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsa/cartanw.hpp"

namespace wsa {

struct MatchablePair {
  Vec lambda;  // values on the h^e basis
  Scalar c;
};

/// The c making (lambda, c) matchable: c0 + (lambda,lambda) + 2(lambda, rho_e0 + delta).
/// Throws NotApplicable in type even, where any c is allowed.
Scalar matchable_c(const WAlgebra& W, const Vec& lambda);
/// matchable_c(lambda) - c; zero exactly for matchable pairs.
Scalar matchability_defect(const WAlgebra& W, const MatchablePair& p);

struct WeightDim {
  Vec weight;
  std::optional<Scalar> h0;  // eigenvalue of Theta_{h0} (type odd)
  int dim = 0;
};

/// Truncated Verma module (or M_e(lambda)). Basis vectors are ordered W-generator
/// monomials L * Th_F^iota applied to the highest vector, with L a lowering monomial.
struct VermaTruncation {
  MatchablePair pair;
  int N = 0;
  std::vector<Mono> basis;
  std::vector<int> lowering_degree;
  std::vector<Vec> weights;  // h^e weight of each basis vector
  std::vector<Matrix> action;  // per W generator
  /// truncated[k][j]: generator k applied to basis vector j left the window.
  std::vector<std::vector<bool>> truncated;
  std::vector<WeightDim> weight_dims;
  /// Right multiplication by Th_F: odd, commutes with the action, squares to 1/2.
  std::optional<Matrix> odd_endomorphism;

  int dim() const { return static_cast<int>(basis.size()); }
  int index_of(const Mono& m) const;  // -1 if absent
};

/// Generators of negative h^e weight (x, y, f, g), in PBW order.
std::vector<int> lowering_generators(const WAlgebra& W);
/// Generators of positive h^e weight (f*, g*, x*, y*).
std::vector<int> raising_generators(const WAlgebra& W);

/// Z(lambda, c) with lowering degree at most N, built by straightening in the
/// abstract presentation against I_{lambda,c}. Type odd requires a matchable pair.
VermaTruncation verma_truncate(const WAlgebra& W, const MatchablePair& pair, int N);

/// Dimensions of Verma weight spaces spanned by monomials of Kazhdan degree <= N,
/// keyed by weight relative to the highest one. Counted directly from the basis set.
std::vector<WeightDim> verma_kazhdan_dims(const WAlgebra& W, int N);

/// Checks the module relations [a,b] = F_ab on all basis vectors where both
/// sides stay inside the window. Returns a description of the first failure.
std::optional<std::string> verma_relation_failure(const WAlgebra& W, const VermaTruncation& t);

/// M_e(lambda) = (W / W_#) (x)_{U(g0,e)} V_lambda, via the lowering basis and pi_eps.
/// Basis vectors L * Th_F^iota v_lambda match those of verma_truncate.
/// c is the value of C'_theta (type even only).
VermaTruncation highest_weight_module(const CartanW& cw, const Vec& lambda, int N, const Scalar& c = Scalar());

/// Vectors of lowering degree <= depth killed by every raising generator and by Th_[v,e].
std::vector<Vec> maximal_vector_scan(const WAlgebra& W, const VermaTruncation& t, int depth);
bool is_singular(const WAlgebra& W, const VermaTruncation& t, const Vec& v);

/// Value of C on the highest weight module M_e(lambda):
/// c0 + (lambda, lambda + 2 rho) + 2(rho_e0, delta) + 3(delta, delta). Type odd.
Scalar central_character(const WAlgebra& W, const Vec& lambda);
/// Same value from the expansion in the h_i: c0 + (l,l) + (2 rho_e0 + 4 delta, l) + ...
Scalar central_character_expanded(const WAlgebra& W, const Vec& lambda);

/// Groups the indices of lambdas by equal central character.
std::vector<std::vector<int>> block_partition(const WAlgebra& W, const std::vector<Vec>& lambdas);

/// Obstruction to matchability: L * Th_[v,e]^2 applied to the highest vector of a
/// formal Z(lambda, c), for a lowering monomial L. Returns the coefficient of L.
Scalar appendix_remainder(const WAlgebra& W, const MatchablePair& pair, const Mono& lowering);

/// g-module M(lambda) induced from the Whittaker module Y(lambda) of the parabolic
/// p_theta, truncated by Kazhdan degree, with its Whittaker vectors.
class WhittakerModel {
 public:
  /// c is the value of C_theta on 1 (type even only; type odd uses -1/8).
  WhittakerModel(const WAlgebra& W, const Vec& lambda, int N, const Scalar& c = Scalar());

  const WAlgebra& algebra() const { return W_; }
  const Vec& lambda() const { return lambda_; }
  Scalar c_theta() const { return c_theta_; }
  int N() const { return N_; }
  const PbwAlgebra& U() const { return Uw_; }

  /// Basis monomials of M of Kazhdan degree <= N (in U()'s letters, applied to 1).
  const std::vector<Mono>& basis() const { return basis_; }
  /// Action of an element of U(g) (adapted basis) on an element of M.
  Poly act(const Poly& x_adapted, const Poly& m) const;
  /// Reduces an element of U() applied to 1 to basis monomials.
  Poly reduce(const Poly& x) const;

  /// Whittaker vectors in M^N, each as a combination of basis monomials.
  const std::vector<Poly>& whittaker() const { return wh_; }
  std::vector<Vec> whittaker_weights() const;
  /// Wh weight dims keyed by weight relative to lambda.
  std::vector<WeightDim> whittaker_dims() const;

  /// The identity battery on 1: Theta_t, raising Theta_w, C_theta and C.
  std::vector<RelationCheck> battery() const;
  /// C acts on every computed Whittaker vector by the battery scalar.
  bool casimir_scalar_on_wh() const;
  /// Projection of Wh onto the layer without g(-1) letters and without h is injective.
  bool projection_injective() const;

  /// Expected C value on Wh: C_theta value + (lambda, lambda + 2 rho).
  Scalar casimir_value() const;

 private:
  const WAlgebra& W_;
  Vec lambda_;
  int N_;
  Scalar c_theta_;
  std::vector<int> perm_, perm_pos_;
  enum class Cls { Complement, F, H, T, E, VE, Fneg, Pos };
  std::vector<Cls> cls_;  // per position
  PbwAlgebra Uw_;
  Poly rule_e_, rule_ve_;
  std::vector<Mono> basis_;
  std::vector<Poly> wh_;
  mutable std::map<Mono, Poly> memo_;

  Poly reduce_mono(const Mono& m) const;
  Poly to_w(const Poly& x_adapted) const;
  Vec weight_of(const Mono& m) const;
};

}  // namespace wsa
