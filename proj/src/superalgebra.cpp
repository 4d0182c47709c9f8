#include "wsa/superalgebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wsa/errors.hpp"

namespace wsa {

// ---------------------------------------------------------------- families

std::string FamilySpec::text() const {
  return family + ":" + std::to_string(m) + "|" + std::to_string(n);
}

FamilySpec parse_family(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const char* bad : {"g3", "g(3)", "f4", "f(4)", "d21", "d(2,1"})
    if (t.rfind(bad, 0) == 0)
      throw UnsupportedFamily("unsupported family '" + text +
                              "': exceptional G(3), F(4), D(2,1;alpha) are excluded");
  auto colon = t.find(':');
  auto bar = t.find('|');
  if (colon == std::string::npos || bar == std::string::npos || bar < colon)
    throw ParseError("algebra spec must look like family:m|n, got '" + text + "'");
  FamilySpec s;
  s.family = t.substr(0, colon);
  try {
    s.m = std::stoi(t.substr(colon + 1, bar - colon - 1));
    s.n = std::stoi(t.substr(bar + 1));
  } catch (const std::exception&) {
    throw ParseError("bad parameters in '" + text + "'");
  }
  if (s.m < 0 || s.n < 0) throw ParseError("negative parameter in '" + text + "'");
  if (s.family == "gl") {
    if (s.m + s.n < 2) throw ParseError("gl needs m+n >= 2");
  } else if (s.family == "sl") {
    if (s.m == s.n) throw ParseError("sl(n|n) is not simple; use psl:n|n");
    if (s.m + s.n < 2) throw ParseError("sl needs m+n >= 2");
  } else if (s.family == "psl") {
    if (s.m != s.n || s.m < 2) throw ParseError("psl needs n|n with n >= 2");
  } else if (s.family == "osp") {
    if (s.n % 2 != 0) throw ParseError("osp:m|2n needs an even second parameter");
  } else if (s.family == "spo") {
    if (s.m % 2 != 0) throw ParseError("spo:2n|m needs an even first parameter");
  } else {
    throw UnsupportedFamily("unsupported family '" + s.family + "'");
  }
  if (s.m + s.n > 8) throw ParseError("parameters too large for exact desk-scale computation");
  return s;
}

// ------------------------------------------------------------ algebra core

int LieSuperalgebra::dim_even() const {
  return static_cast<int>(std::count(parity.begin(), parity.end(), 0));
}
int LieSuperalgebra::dim_odd() const { return dim - dim_even(); }

Vec LieSuperalgebra::bracket_basis(int i, int j) const {
  Vec r(dim);
  for (const auto& [k, c] : br[i][j]) r[k] = c;
  return r;
}

Vec LieSuperalgebra::bracket(const Vec& x, const Vec& y) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero() || br[i][j].empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, s] : br[i][j]) r[k] += c * s;
    }
  }
  return r;
}

Scalar LieSuperalgebra::pair(const Vec& x, const Vec& y) const {
  Scalar s;
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      if (!y[j].is_zero() && !form(i, j).is_zero()) s += x[i] * form(i, j) * y[j];
  }
  return s;
}

int LieSuperalgebra::parity_of(const Vec& x) const {
  int p = -1;
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    if (p >= 0 && p != parity[i]) throw DomainError("vector is not parity-homogeneous");
    p = parity[i];
  }
  return p;
}

// --------------------------------------------------- matrix realizations

namespace {

struct Realization {
  int N = 0;
  std::vector<int> vpar;  // parity of each vector-space index
  std::vector<Matrix> mats;
  std::vector<int> parity;
  std::vector<std::string> labels;
  std::vector<int> cartan;
  std::vector<int> block;
};

int mat_parity(const Realization& r, int i, int j) { return r.vpar[i] ^ r.vpar[j]; }

Matrix elementary(int N, int i, int j) {
  Matrix m(N, N);
  m(i, j) = 1;
  return m;
}

Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py) {
  Matrix xy = x * y, yx = y * x;
  return (px & py) ? xy + yx : xy - yx;
}

Scalar supertrace(const Matrix& m, const std::vector<int>& vpar) {
  Scalar s;
  for (int i = 0; i < m.rows(); ++i) s += vpar[i] ? -m(i, i) : m(i, i);
  return s;
}

std::string idx_label(const char* prefix, int i, int j) {
  return std::string(prefix) + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

int block_of(const Realization& r, const Matrix& m, int first_block) {
  int b = -1;
  for (int i = 0; i < r.N; ++i)
    for (int j = 0; j < r.N; ++j) {
      if (m(i, j).is_zero()) continue;
      int bi = i < first_block ? 0 : 1, bj = j < first_block ? 0 : 1;
      if (bi != bj) return -1;
      if (b >= 0 && b != bi) return -1;
      b = bi;
    }
  return b;
}

void add_offdiagonal_gl(Realization& r, int first_block) {
  for (int i = 0; i < r.N; ++i)
    for (int j = 0; j < r.N; ++j) {
      if (i == j) continue;
      r.mats.push_back(elementary(r.N, i, j));
      r.parity.push_back(mat_parity(r, i, j));
      r.labels.push_back(idx_label("E", i, j));
      r.block.push_back(block_of(r, r.mats.back(), first_block));
    }
}

Realization realize_gl_family(const FamilySpec& s) {
  Realization r;
  r.N = s.m + s.n;
  for (int i = 0; i < r.N; ++i) r.vpar.push_back(i < s.m ? 0 : 1);
  auto add_cartan = [&](Matrix m, const std::string& label) {
    r.cartan.push_back(static_cast<int>(r.mats.size()));
    r.mats.push_back(std::move(m));
    r.parity.push_back(0);
    r.labels.push_back(label);
    r.block.push_back(-1);
  };
  if (s.family == "gl") {
    for (int i = 0; i < r.N; ++i) add_cartan(elementary(r.N, i, i), idx_label("E", i, i));
  } else {
    std::vector<Matrix> hs;
    for (int i = 0; i + 1 < r.N; ++i) {
      Matrix h = elementary(r.N, i, i);
      if (i + 1 == s.m)
        h(i + 1, i + 1) = 1;
      else
        h(i + 1, i + 1) = -1;
      hs.push_back(h);
    }
    if (s.family == "psl") {
      // Put the identity first so it can be dropped in the quotient.
      Matrix id = Matrix::identity(r.N);
      std::vector<Matrix> chosen{id};
      for (const auto& h : hs) {
        std::vector<Vec> rows;
        for (const auto& c : chosen) {
          Vec v;
          for (int i = 0; i < r.N; ++i) v.push_back(c(i, i));
          rows.push_back(v);
        }
        Vec v;
        for (int i = 0; i < r.N; ++i) v.push_back(h(i, i));
        rows.push_back(v);
        if (rank(Matrix::from_rows(rows, r.N)) == static_cast<int>(rows.size())) chosen.push_back(h);
      }
      add_cartan(chosen[0], "I");
      for (size_t k = 1; k < chosen.size(); ++k) add_cartan(chosen[k], "h" + std::to_string(k));
    } else {
      for (size_t k = 0; k < hs.size(); ++k) add_cartan(hs[k], "h" + std::to_string(k + 1));
    }
  }
  add_offdiagonal_gl(r, s.m);
  return r;
}

// Bilinear form block: symmetric antidiagonal or skew antidiagonal.
void fill_form_block(Matrix& B, int off, int size, bool skew) {
  for (int i = 0; i < size; ++i) {
    int j = size - 1 - i;
    B(off + i, off + j) = (skew && i >= size / 2) ? -1 : 1;
  }
}

Realization realize_orthosymplectic(const FamilySpec& s) {
  // osp:m|2n -> even space carries the symmetric form; spo:2n|m -> the skew one.
  Realization r;
  bool spo = s.family == "spo";
  int a = s.m, b = s.n;  // block sizes (even space, odd space)
  r.N = a + b;
  for (int i = 0; i < r.N; ++i) r.vpar.push_back(i < a ? 0 : 1);
  Matrix B(r.N, r.N);
  fill_form_block(B, 0, a, spo);
  fill_form_block(B, a, b, !spo);

  std::vector<Matrix> cartan_mats, root_mats;
  std::vector<int> root_par;
  for (int px = 0; px < 2; ++px) {
    std::vector<std::pair<int, int>> vars;
    for (int i = 0; i < r.N; ++i)
      for (int j = 0; j < r.N; ++j)
        if (mat_parity(r, i, j) == px) vars.emplace_back(i, j);
    std::map<std::pair<int, int>, int> var_index;
    for (size_t k = 0; k < vars.size(); ++k) var_index[vars[k]] = static_cast<int>(k);
    // B(X e_a, e_b) + (-1)^{|X| p_a} B(e_a, X e_b) = 0
    std::vector<Vec> rows;
    for (int ia = 0; ia < r.N; ++ia)
      for (int ib = 0; ib < r.N; ++ib) {
        Vec row(vars.size());
        bool any = false;
        for (int c = 0; c < r.N; ++c) {
          auto it = var_index.find({c, ia});
          if (it != var_index.end() && !B(c, ib).is_zero()) {
            row[it->second] += B(c, ib);
            any = true;
          }
          auto jt = var_index.find({c, ib});
          if (jt != var_index.end() && !B(ia, c).is_zero()) {
            Scalar sgn = (px & r.vpar[ia]) ? -1 : 1;
            row[jt->second] += sgn * B(ia, c);
            any = true;
          }
        }
        if (any) rows.push_back(row);
      }
    std::vector<Vec> sols = rows.empty() ? std::vector<Vec>{}
                                         : nullspace(Matrix::from_rows(rows, static_cast<int>(vars.size())));
    if (rows.empty())
      for (size_t k = 0; k < vars.size(); ++k) sols.push_back(unit_vec(static_cast<int>(vars.size()), static_cast<int>(k)));
    for (const auto& v : sols) {
      Matrix m(r.N, r.N);
      bool diag = true;
      for (size_t k = 0; k < vars.size(); ++k) {
        if (v[k].is_zero()) continue;
        m(vars[k].first, vars[k].second) = v[k];
        if (vars[k].first != vars[k].second) diag = false;
      }
      if (diag) {
        cartan_mats.push_back(m);
      } else {
        root_mats.push_back(m);
        root_par.push_back(px);
      }
    }
  }
  auto first_diag = [&](const Matrix& m) {
    for (int i = 0; i < r.N; ++i)
      if (!m(i, i).is_zero()) return i;
    return r.N;
  };
  std::stable_sort(cartan_mats.begin(), cartan_mats.end(),
                   [&](const Matrix& x, const Matrix& y) { return first_diag(x) < first_diag(y); });
  for (size_t k = 0; k < cartan_mats.size(); ++k) {
    r.cartan.push_back(static_cast<int>(r.mats.size()));
    r.mats.push_back(cartan_mats[k]);
    r.parity.push_back(0);
    r.labels.push_back("h" + std::to_string(k + 1));
    r.block.push_back(-1);
  }
  for (size_t k = 0; k < root_mats.size(); ++k) {
    int fi = -1, fj = -1;
    for (int i = 0; i < r.N && fi < 0; ++i)
      for (int j = 0; j < r.N; ++j)
        if (!root_mats[k](i, j).is_zero()) {
          fi = i;
          fj = j;
          break;
        }
    r.mats.push_back(root_mats[k]);
    r.parity.push_back(root_par[k]);
    r.labels.push_back(idx_label("X", fi, fj));
    r.block.push_back(block_of(r, root_mats[k], a));
  }
  return r;
}

// Coordinates of matrices in the span of a basis of matrices.
class CoordinateExtractor {
 public:
  CoordinateExtractor(const std::vector<Matrix>& basis, int N) : N_(N), dim_(static_cast<int>(basis.size())) {
    Matrix aug(dim_, N * N + dim_);
    for (int k = 0; k < dim_; ++k) {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) aug(k, i * N + j) = basis[k](i, j);
      aug(k, N * N + k) = 1;
    }
    pivots_ = rref(aug);
    if (static_cast<int>(pivots_.size()) != dim_ || pivots_.back() >= N * N)
      throw InternalError("matrix basis is linearly dependent");
    T_ = Matrix(dim_, dim_);
    for (int r = 0; r < dim_; ++r)
      for (int k = 0; k < dim_; ++k) T_(r, k) = aug(r, N * N + k);
    R_ = Matrix(dim_, N * N);
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < N * N; ++c) R_(r, c) = aug(r, c);
  }

  Vec coords(const Matrix& x) const {
    Vec c(dim_);
    for (int r = 0; r < dim_; ++r) {
      int p = pivots_[r];
      c[r] = x(p / N_, p % N_);
    }
    // check membership
    for (int col = 0; col < N_ * N_; ++col) {
      Scalar v;
      for (int r = 0; r < dim_; ++r)
        if (!c[r].is_zero() && !R_(r, col).is_zero()) v += c[r] * R_(r, col);
      if (v != x(col / N_, col % N_)) throw InternalError("bracket left the span of the basis");
    }
    Vec out(dim_);
    for (int k = 0; k < dim_; ++k)
      for (int r = 0; r < dim_; ++r)
        if (!c[r].is_zero() && !T_(r, k).is_zero()) out[k] += c[r] * T_(r, k);
    return out;
  }

 private:
  int N_, dim_;
  std::vector<int> pivots_;
  Matrix T_, R_;
};

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

LieSuperalgebra build_algebra(const FamilySpec& spec) {
  Realization r = (spec.family == "osp" || spec.family == "spo") ? realize_orthosymplectic(spec)
                                                                  : realize_gl_family(spec);
  int full = static_cast<int>(r.mats.size());
  CoordinateExtractor ex(r.mats, r.N);
  // psl drops the identity (index 0) after bracketing.
  int drop = spec.family == "psl" ? 0 : -1;
  std::vector<int> keep;
  for (int k = 0; k < full; ++k)
    if (k != drop) keep.push_back(k);
  std::vector<int> new_index(full, -1);
  for (size_t k = 0; k < keep.size(); ++k) new_index[keep[k]] = static_cast<int>(k);

  LieSuperalgebra g;
  g.spec = spec;
  g.dim = static_cast<int>(keep.size());
  for (int k : keep) {
    g.parity.push_back(r.parity[k]);
    g.labels.push_back(r.labels[k]);
    g.block.push_back(r.block[k]);
  }
  for (int c : r.cartan)
    if (c != drop) g.cartan.push_back(new_index[c]);
  g.br.assign(g.dim, std::vector<SparseVec>(g.dim));
  g.form = Matrix(g.dim, g.dim);
  for (int a = 0; a < g.dim; ++a)
    for (int b = 0; b < g.dim; ++b) {
      const Matrix& x = r.mats[keep[a]];
      const Matrix& y = r.mats[keep[b]];
      Vec c = ex.coords(supercommutator(x, g.parity[a], y, g.parity[b]));
      Vec kept(g.dim);
      for (int k = 0; k < full; ++k)
        if (new_index[k] >= 0) kept[new_index[k]] = c[k];
      g.br[a][b] = to_sparse(kept);
      g.form(a, b) = supertrace(x * y, r.vpar);
    }
  return g;
}

LieSuperalgebra change_basis(const LieSuperalgebra& g, const std::vector<Vec>& basis,
                             const std::vector<std::string>& labels, const std::vector<int>& cartan) {
  int n = static_cast<int>(basis.size());
  if (n != g.dim) throw InternalError("change_basis: wrong number of vectors");
  Matrix P = Matrix::from_columns(basis, g.dim);
  auto Pinv = inverse(P);
  if (!Pinv) throw InternalError("change_basis: vectors are not a basis");
  LieSuperalgebra h;
  h.spec = g.spec;
  h.dim = n;
  h.labels = labels;
  h.cartan = cartan;
  for (const auto& v : basis) h.parity.push_back(g.parity_of(v));
  h.br.assign(n, std::vector<SparseVec>(n));
  h.form = Matrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      h.br[a][b] = to_sparse(*Pinv * g.bracket(basis[a], basis[b]));
      h.form(a, b) = g.pair(basis[a], basis[b]);
    }
  h.block.assign(n, -1);
  return h;
}

LieSuperalgebra restrict_to(const LieSuperalgebra& g, const std::vector<int>& indices) {
  int n = static_cast<int>(indices.size());
  std::vector<int> pos(g.dim, -1);
  for (int k = 0; k < n; ++k) pos[indices[k]] = k;
  LieSuperalgebra h;
  h.spec = g.spec;
  h.dim = n;
  h.br.assign(n, std::vector<SparseVec>(n));
  h.form = Matrix(n, n);
  for (int a = 0; a < n; ++a) {
    h.parity.push_back(g.parity[indices[a]]);
    h.labels.push_back(g.labels[indices[a]]);
    h.block.push_back(-1);
    for (int b = 0; b < n; ++b) {
      for (const auto& [k, c] : g.br[indices[a]][indices[b]]) {
        if (pos[k] < 0) throw DomainError("restrict_to: indices do not span a subalgebra");
        h.br[a][b].emplace_back(pos[k], c);
      }
      std::sort(h.br[a][b].begin(), h.br[a][b].end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      h.form(a, b) = g.form(indices[a], indices[b]);
    }
  }
  for (int c : g.cartan)
    if (pos[c] >= 0) h.cartan.push_back(pos[c]);
  return h;
}

// ------------------------------------------------------------- validation

std::string ValidationIssue::str() const {
  std::ostringstream os;
  os << identity << " fails at (" << i << "," << j;
  if (k >= 0) os << "," << k;
  os << ")";
  return os.str();
}

std::vector<ValidationIssue> validate(const LieSuperalgebra& g) {
  std::vector<ValidationIssue> out;
  int n = g.dim;
  auto sgn = [&](int a, int b) { return (g.parity[a] & g.parity[b]) ? Scalar(-1) : Scalar(1); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = g.bracket_basis(i, j);
      Vec rhs = vec_scale(g.bracket_basis(j, i), -sgn(i, j));
      if (lhs != rhs) out.push_back({"super skew-symmetry", i, j, -1});
      for (const auto& [k, c] : g.br[i][j])
        if (g.parity[k] != (g.parity[i] ^ g.parity[j])) out.push_back({"bracket parity", i, j, -1});
      const Scalar& f = g.form(i, j);
      if (!f.is_zero() && g.parity[i] != g.parity[j]) out.push_back({"form evenness", i, j, -1});
      if (f != sgn(i, j) * g.form(j, i)) out.push_back({"form supersymmetry", i, j, -1});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
        Vec yz = g.bracket_basis(j, k);
        Vec lhs = g.bracket(unit_vec(n, i), yz);
        Vec r1 = g.bracket(g.bracket_basis(i, j), unit_vec(n, k));
        Vec r2 = g.bracket(unit_vec(n, j), g.bracket_basis(i, k));
        if (lhs != vec_add(r1, vec_scale(r2, sgn(i, j)))) out.push_back({"Jacobi", i, j, k});
        // ([x,y],z) = (x,[y,z])
        Scalar a = g.pair(g.bracket_basis(i, j), unit_vec(n, k));
        Scalar b = g.pair(unit_vec(n, i), yz);
        if (a != b) out.push_back({"form invariance", i, j, k});
      }
  if (rank(g.form) != n) out.push_back({"form nondegeneracy", -1, -1, -1});
  return out;
}

// ------------------------------------------------------------------ roots

int RootDatum::find(const Vec& value) const {
  for (size_t r = 0; r < roots.size(); ++r)
    if (roots[r].value == value) return static_cast<int>(r);
  return -1;
}

Scalar RootDatum::inner(const Vec& a, const Vec& b) const { return dot(a, coform * b); }

RootDatum root_decomposition(const LieSuperalgebra& g) {
  RootDatum rd;
  rd.rank = static_cast<int>(g.cartan.size());
  rd.root_of_basis.assign(g.dim, -1);
  std::vector<bool> is_cartan(g.dim, false);
  for (int c : g.cartan) is_cartan[c] = true;
  for (int a : g.cartan)
    for (int b : g.cartan)
      if (!g.br[a][b].empty()) throw DecompositionError("Cartan elements do not commute");
  for (int i = 0; i < g.dim; ++i) {
    if (is_cartan[i]) continue;
    Vec val(rd.rank);
    for (int c = 0; c < rd.rank; ++c) {
      const SparseVec& s = g.br[g.cartan[c]][i];
      if (s.empty()) continue;
      if (s.size() != 1 || s[0].first != i)
        throw DecompositionError("basis vector " + g.labels[i] + " is not an ad-h eigenvector");
      val[c] = s[0].second;
    }
    if (vec_is_zero(val)) throw DecompositionError("basis vector " + g.labels[i] + " has weight zero outside h");
    int r = rd.find(val);
    if (r < 0) {
      rd.roots.push_back({val, g.parity[i], {}});
      r = static_cast<int>(rd.roots.size()) - 1;
    } else if (rd.roots[r].parity != g.parity[i]) {
      throw DecompositionError("root space of mixed parity");
    }
    rd.roots[r].vectors.push_back(i);
    rd.root_of_basis[i] = r;
  }
  Matrix gh(rd.rank, rd.rank);
  for (int a = 0; a < rd.rank; ++a)
    for (int b = 0; b < rd.rank; ++b) gh(a, b) = g.form(g.cartan[a], g.cartan[b]);
  auto inv = inverse(gh);
  if (!inv) throw DecompositionError("form is degenerate on the Cartan subalgebra");
  rd.coform = *inv;
  return rd;
}

// -------------------------------------------------------------- minimality

namespace {

// Exact phase-one simplex: is {x >= 0 : A x = b} nonempty?
bool feasible(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  int m = static_cast<int>(A.size());
  int k = m ? static_cast<int>(A[0].size()) : 0;
  for (int i = 0; i < m; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (auto& x : A[i]) x = -x;
    }
  // tableau columns: k originals, m artificials, rhs
  int cols = k + m;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(cols + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) T[i][j] = A[i][j];
    T[i][k + i] = 1;
    T[i][cols] = b[i];
    basis[i] = k + i;
  }
  // objective row: minimize sum of artificials -> reduced costs
  for (int j = 0; j <= cols; ++j) {
    Rational s = 0;
    if (j < k || j == cols)
      for (int i = 0; i < m; ++i) s += T[i][j];
    T[m][j] = s;
  }
  for (int iter = 0; iter < 10000; ++iter) {
    int enter = -1;
    for (int j = 0; j < cols; ++j)
      if (T[m][j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rational ratio = T[i][cols] / T[i][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) break;
    Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rational f = T[i][enter];
      for (int j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }
  return T[m][cols] == 0;
}

}  // namespace

Minimality minimality(const RootDatum& rd, int root) {
  const Root& th = rd.roots.at(root);
  if (th.parity != 0) return Minimality::NotMinimal;
  std::vector<int> others;
  for (size_t r = 0; r < rd.roots.size(); ++r)
    if (static_cast<int>(r) != root) others.push_back(static_cast<int>(r));
  std::vector<std::vector<Rational>> A(rd.rank + 1, std::vector<Rational>(others.size()));
  std::vector<Rational> b(rd.rank + 1);
  for (int c = 0; c < rd.rank; ++c) {
    for (size_t k = 0; k < others.size(); ++k) A[c][k] = rd.roots[others[k]].value[c].rational_part();
    b[c] = th.value[c].rational_part();
  }
  for (size_t k = 0; k < others.size(); ++k) A[rd.rank][k] = 1;
  b[rd.rank] = 1;
  return feasible(A, b) ? Minimality::NotMinimal : Minimality::Minimal;
}

std::vector<int> minimal_roots(const RootDatum& rd) {
  std::vector<int> out;
  for (size_t r = 0; r < rd.roots.size(); ++r)
    if (minimality(rd, static_cast<int>(r)) == Minimality::Minimal) out.push_back(static_cast<int>(r));
  return out;
}

// ---------------------------------------------------------- classification

MinimalCase classify_minimal_case(const LieSuperalgebra& g, const RootDatum& rd, int theta) {
  if (minimality(rd, theta) != Minimality::Minimal)
    throw ClassificationError("root is not minimal; cannot classify");
  const Vec& th = rd.roots[theta].value;
  Scalar tt = rd.inner(th, th);
  int r = 0;
  for (const Root& a : rd.roots)
    if (a.parity == 1 && Scalar(2) * rd.inner(a.value, th) / tt == Scalar(-1))
      r += static_cast<int>(a.vectors.size());
  MinimalCase mc;
  mc.parity_type = (r % 2) ? ParityType::Odd : ParityType::Even;

  const FamilySpec& s = g.spec;
  int side = g.block.empty() ? -1 : g.block[rd.roots[theta].vectors.front()];
  if (side < 0) throw ClassificationError("classification needs the matrix realization basis");
  auto num = [](int x) { return std::to_string(x); };
  if (s.family == "gl" || s.family == "sl" || s.family == "psl") {
    int p = side == 1 ? s.n : s.m, q = side == 1 ? s.m : s.n;
    std::string a = side == 1 ? num(q) + "|" + num(p - 2) : num(p - 2) + "|" + num(q);
    if (s.family == "psl") {
      mc.ge0_label = (p == 2) ? "sl(2)" : "sl(" + a + ")";
      mc.completely_reducible = p == 2;
    } else {
      std::string base = (p == 2) ? "gl(" + num(q) + ")" : "gl(" + a + ")";
      mc.ge0_label = s.family == "gl" ? base + "+gl(1)" : base;
      mc.completely_reducible = false;
    }
  } else {
    bool spo = s.family == "spo";
    int skew_dim = spo ? s.m : s.n, sym_dim = spo ? s.n : s.m;
    bool sp_side = (side == 0) == spo;
    if (sp_side) {
      int nn = skew_dim / 2;
      if (nn == 1) {
        mc.ge0_label = sym_dim <= 1 ? "trivial" : "so(" + num(sym_dim) + ")";
        mc.completely_reducible = sym_dim != 2;
      } else {
        mc.ge0_label = "spo(" + num(skew_dim - 2) + "|" + num(sym_dim) + ")";
        mc.completely_reducible = sym_dim <= 1;
      }
    } else {
      if (sym_dim == 4) {
        mc.ge0_label = skew_dim ? "sl(2)+sp(" + num(skew_dim) + ")" : "sl(2)+sl(2)";
        mc.completely_reducible = true;
      } else {
        mc.ge0_label = "osp(" + num(sym_dim - 4) + "|" + num(skew_dim) + ")+sl(2)";
        mc.completely_reducible = sym_dim == 5 || skew_dim == 0;
      }
    }
  }
  return mc;
}

}  // namespace wsa
