#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wsa/envelope.hpp"
#include "wsa/grading.hpp"

namespace wsa {

enum class Flavor { Finite, Refined };

/// Subalgebra of Q^fin given by generators with distinct leading letters.
/// Expresses its elements in ordered generator monomials by triangular
/// elimination on the top Kazhdan component.
class Straightener {
 public:
  /// values[k] has leading letter leads[k] with coefficient lead_coeffs[k].
  Straightener(const PbwAlgebra& U, int f_index, std::vector<Poly> values, std::vector<int> leads);

  Poly product(const Poly& a, const Poly& b) const;
  Poly eval_mono(const Mono& m) const;
  Poly eval(const Poly& coords) const;
  /// Throws StraighteningFailure if x is outside the subalgebra.
  Poly coordinates(const Poly& x) const;
  const std::vector<Poly>& values() const { return values_; }

 private:
  const PbwAlgebra& U_;
  int f_;
  std::vector<Poly> values_;
  std::vector<int> letter_gen_;
  mutable std::mutex mu_;
  mutable std::map<Mono, Poly> cache_;
};

/// One PBW generator of the W-superalgebra. `lead` is the basis index of the
/// leading letter in U(g); `lead_coeff` its coefficient (2 for C, lead e).
struct WGenerator {
  std::string label;
  char kind = 0;  // x y f g F t C E(=[v,e]) p(=f*) q(=g*) X(=x*) Y(=y*)
  int lead = -1;
  Scalar lead_coeff = 1;
  int parity = 0;
  int kdeg = 0;
  Poly value;  // element of Q^fin
};

struct RelationCheck {
  std::string name;
  bool pass = true;
  std::string residual;  // empty when pass
};

/// Minimal finite (or refined) W-superalgebra realized inside Q^fin.
///
/// Generators follow the PBW order
///   x, y, f, g, F, t (h^e), C, [v,e], f*, g*, x*, y*
/// which is also the generator order of the abstract presentation.
class WAlgebra {
 public:
  explicit WAlgebra(MinimalGrading gr, Flavor flavor = Flavor::Finite);

  const MinimalGrading& grading() const { return gr_; }
  Flavor flavor() const { return flavor_; }
  const PbwAlgebra& U() const { return U_; }
  int f_index() const { return gr_.f; }
  const std::vector<WGenerator>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  /// Generator index with the given leading basis letter, or -1.
  int gen_of_letter(int g_index) const;
  int gen_index(const std::string& label) const;  // throws if absent
  bool has_theta_F() const { return theta_F_ >= 0; }
  int theta_F_index() const { return theta_F_; }
  int casimir_index() const { return casimir_; }
  /// Subalgebra whose invariants define this flavor (basis indices of g).
  const std::vector<int>& invariance_span() const;

  Poly theta_v(const Vec& v) const;
  Poly theta_w(const Vec& w) const;
  Poly casimir() const { return gens_[casimir_].value; }
  Poly theta_F() const;
  Poly theta_cas() const;
  Poly theta_t(const Vec& he_coords) const;  // Theta of the h^e element with these coordinates

  Poly product(const Poly& a, const Poly& b) const;
  Poly bracket(const Poly& a, const Poly& b) const;

  /// Value in Q^fin of an ordered generator monomial.
  Poly eval_mono(const Mono& m) const;
  Poly eval(const Poly& coords) const;
  /// Coordinates over ordered generator monomials; throws StraighteningFailure
  /// if x is not in the algebra.
  Poly pbw_coordinates(const Poly& x) const;

  /// Abstract presentation: generators with brackets F_ij in coordinates.
  const PbwAlgebra& abstract() const;

  Scalar c0() const { return c0_; }
  /// c0 from one specific pair of g(1) basis elements.
  Scalar c0_from_pair(int w1, int w2) const;
  /// Pairs (w1, w2) of g(1) basis indices with ([w1,w2], f) != 0.
  std::vector<std::pair<int, int>> c0_pairs() const;
  /// The constant that makes the w1,w2 bracket relation hold exactly, read
  /// off from the computed bracket. Differs from c0() by (s-r)^2/16.
  Scalar relation_constant() const;
  /// Type odd only.
  Scalar epsilon() const;

  /// h^e weight of a generator (values on the h^e basis).
  Vec gen_weight(int k) const;

 private:
  MinimalGrading gr_;
  Flavor flavor_;
  PbwAlgebra U_;
  std::vector<WGenerator> gens_;
  std::vector<int> letter_gen_;
  int theta_F_ = -1, casimir_ = -1;
  Scalar c0_;

  std::unique_ptr<Straightener> st_;
  mutable std::once_flag abstract_once_;
  mutable std::unique_ptr<PbwAlgebra> abstract_;
  mutable std::once_flag cas_once_;
  mutable Poly cas_;

  void add_gen(const std::string& label, char kind, int lead, const Scalar& lead_coeff, int kdeg, Poly value);
};

/// Inner product on restricted weights (values on the h^e basis).
Scalar weight_inner(const MinimalGrading& gr, const Vec& a, const Vec& b);
/// The h^e element (as an algebra vector) dual to the weight a.
Vec dual_vector(const MinimalGrading& gr, const Vec& a);

/// Right-hand side of relation (3) for w1, w2 in g(1).
Poly w_bracket_rhs(const WAlgebra& W, const Vec& w1, const Vec& w2);
/// Expansion of [v,e]^2 (type odd) as a W element.
Poly ve_square_rhs(const WAlgebra& W);

/// Full relation suite: generator invariance, commutator relations among the
/// Theta generators, the Theta_F relations, PBW structure of the brackets,
/// and the [v,e] identities.
std::vector<RelationCheck> verify_relations(const WAlgebra& W);

}  // namespace wsa
