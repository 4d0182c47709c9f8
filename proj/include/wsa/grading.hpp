#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wsa/superalgebra.hpp"

namespace wsa {

/// Picks the minimal root theta. Without a hint, the first minimal root in
/// descending lexicographic order of root coordinates is taken.
int select_minimal_root(const RootDatum& rd, std::optional<int> hint = std::nullopt);

struct GradingOptions {
  std::optional<int> theta_hint;  // root index in root_decomposition(build_algebra(spec))
  /// Rows give the h^e basis in terms of the default one; must be invertible.
  std::optional<Matrix> he_change;
};

/// Everything attached to a minimal root. The algebra is re-expressed in an
/// adapted basis; all index fields below refer to that basis.
///
/// Adapted order: e | g(1) | h^e | g(0) roots | h | g(-1) | f.
struct MinimalGrading {
  LieSuperalgebra g;  // adapted basis, form rescaled so (e,f) = 1
  RootDatum rd;       // roots of the adapted algebra, Cartan = h^e basis then h
  int theta = -1;     // root index in rd
  ParityType type = ParityType::Even;
  int s = 0, r = 0;

  int e = -1, h = -1, f = -1;
  int v_mid = -1;  // root vector for -theta/2 (type odd)
  int ve = -1;     // [v_mid, e] (type odd)

  std::vector<int> deg;  // ad h eigenvalue per basis index

  std::vector<int> he;                 // basis of h^e
  std::vector<int> x, xstar, y, ystar;  // g(0) lowering/raising root vectors
  std::vector<int> fl, fstar, gl, gstar;  // g(1) lowering/raising, [e,u_i], [e,v_i]
  std::vector<int> z;                  // g(-1): u_1..u_s then v_1..v_r
  std::vector<Vec> zstar;              // duals, <z*_a, z_b> = delta
  std::vector<int> u, v;               // subsets of z

  Matrix gram;      // (h_i, h_j) on the h^e basis
  Matrix gram_inv;  // induced form on (h^e)^*

  /// Restricted weight of each basis index on h^e (values on the he basis).
  std::vector<Vec> rweight;
  /// Positive-system membership of each root vector (+1, -1; 0 on Cartan).
  std::vector<int> sign;

  Vec delta_bar, rho_bar, rho_e0_bar;
  std::optional<Vec> h0;  // coordinates on the he basis (type odd)

  // subalgebras, as basis index lists (z-spans use root-vector indices)
  std::vector<int> m, m_ext, n, n_prime, n_zero, p;

  int dim_g1() const { return static_cast<int>(fl.size() + gl.size() + fstar.size() + gstar.size()) + (ve >= 0); }
  /// g^e(0) basis in adapted order: he, x, y, x*, y*.
  std::vector<int> ge0() const;
  /// g(1) basis in adapted order.
  std::vector<int> g1() const;

  Scalar inner(const Vec& a, const Vec& b) const;  // induced form on (h^e)^*
  /// Value of the functional a (on the he basis) at an element t of h^e.
  Scalar eval(const Vec& a, const Vec& t_coords) const { return dot(a, t_coords); }
  /// Element t of h^e (he coordinates) with (t, .) = a.
  Vec dual_element(const Vec& a) const;
};

MinimalGrading build_grading(const FamilySpec& spec, const GradingOptions& opt = {});
MinimalGrading build_grading(const LieSuperalgebra& g0, const GradingOptions& opt = {});

/// Pairing <x,y> = (e,[x,y]) on g(-1).
Scalar neg_one_pairing(const MinimalGrading& gr, const Vec& a, const Vec& b);

/// x - (1/2)(h,x) h on g(0).
Vec sharp(const MinimalGrading& gr, const Vec& x);

/// chi(x) = (e, x).
Scalar chi(const MinimalGrading& gr, const Vec& x);

/// Full (unrestricted) weight data on h, used for the restriction identity.
struct FullWeights {
  Vec delta, rho, rho_e0, theta;  // values on the Cartan basis of gr.g
};
FullWeights full_weights(const MinimalGrading& gr);

/// Span of the given basis indices as vectors.
std::vector<Vec> span_of(const MinimalGrading& gr, const std::vector<int>& idx);

}  // namespace wsa
