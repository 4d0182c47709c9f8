#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsa/linalg.hpp"

namespace wsa {

/// Parsed "family:m|n" descriptor.
struct FamilySpec {
  std::string family;  // "gl", "sl", "psl", "osp", "spo"
  int m = 0, n = 0;
  std::string text() const;
};

/// Throws UnsupportedFamily for G(3), F(4), D(2,1;a) and ParseError otherwise.
FamilySpec parse_family(const std::string& text);

using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Finite-dimensional Lie superalgebra given by structure constants in a
/// homogeneous basis, with an even invariant form.
struct LieSuperalgebra {
  FamilySpec spec;
  int dim = 0;
  std::vector<int> parity;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> br;  // br[i][j] = [x_i, x_j]
  Matrix form;
  std::vector<int> cartan;  // basis indices spanning the Cartan subalgebra
  /// For matrix realizations: 0/1 when the basis element is an even matrix
  /// supported in the first/second diagonal block, -1 otherwise.
  std::vector<int> block;

  int dim_even() const;
  int dim_odd() const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Vec bracket_basis(int i, int j) const;
  Scalar pair(const Vec& x, const Vec& y) const;
  /// Parity of a homogeneous vector; -1 for zero, throws for mixed.
  int parity_of(const Vec& x) const;
};

/// Matrix realization of a family. The supertrace form is kept unnormalized.
LieSuperalgebra build_algebra(const FamilySpec& spec);

/// Re-expresses g in a new basis (columns in old coordinates). cartan lists
/// the new indices spanning h.
LieSuperalgebra change_basis(const LieSuperalgebra& g, const std::vector<Vec>& basis,
                             const std::vector<std::string>& labels, const std::vector<int>& cartan);

/// Subalgebra spanned by a subset of basis indices (must be closed).
LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<int>& indices);

struct ValidationIssue {
  std::string identity;
  int i = -1, j = -1, k = -1;
  std::string str() const;
};

/// Empty result means every identity holds.
std::vector<ValidationIssue> validate(const LieSuperalgebra& g);

/// Simultaneous ad-h eigen-decomposition. Root coordinates are the values on
/// the Cartan basis, in the order of g.cartan.
struct Root {
  Vec value;
  int parity = 0;
  std::vector<int> vectors;  // basis indices
};

struct RootDatum {
  int rank = 0;
  std::vector<Root> roots;
  std::vector<int> root_of_basis;  // -1 on Cartan indices
  Matrix coform;                   // induced form on h^* (inverse of the form on h)
  std::vector<int> positive;       // filled by with_positive_system
  std::vector<int> simple;         // root indices, last = theta or theta/2

  int find(const Vec& value) const;  // -1 if absent
  Scalar inner(const Vec& a, const Vec& b) const;
};

RootDatum root_decomposition(const LieSuperalgebra& g);

enum class Minimality { Minimal, NotMinimal };

/// A root is minimal when it is even and no convex combination of the other
/// roots equals it (equivalently some linear functional is strictly maximal
/// on it). Decided by an exact simplex feasibility test.
Minimality minimality(const RootDatum& rd, int root);
std::vector<int> minimal_roots(const RootDatum& rd);

enum class ParityType { Even, Odd };

struct MinimalCase {
  ParityType parity_type = ParityType::Even;
  std::string ge0_label;
  bool completely_reducible = false;
};

/// Uses the coroot of theta for h; throws ClassificationError if theta is not
/// a minimal root.
MinimalCase classify_minimal_case(const LieSuperalgebra& g, const RootDatum& rd, int theta);

}  // namespace wsa
