#include "metahecke/hmodules.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "metahecke/errors.hpp"

namespace metahecke {

namespace {

std::vector<Perm> enumerate_sym(int t) {
  std::vector<int> img(t);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Mat mat_zero(int n) { return Mat(n, std::vector<Scalar>(n, Scalar())); }

Mat mat_identity(int n) {
  Mat m = mat_zero(n);
  for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat r = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Mat mat_add_scalar(const Mat& a, const Scalar& c) {
  Mat r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i][i] += c;
  return r;
}

bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool mat_eq(const Mat& a, const Mat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

// ---- generic exact linear solve -----------------------------------------

// Solves A c = b for several right-hand sides at once; returns the solution
// with free variables set to zero, or nothing if the system is inconsistent.
std::optional<std::vector<std::vector<Scalar>>> solve_linear(
    std::vector<std::vector<Scalar>> A, std::vector<std::vector<Scalar>> B) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  size_t m = rows ? B[0].size() : 0;
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t next_row = 0;
  for (size_t col = 0; col < cols && next_row < rows; ++col) {
    size_t piv = SIZE_MAX;
    for (size_t r = next_row; r < rows; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(A[piv], A[next_row]);
    std::swap(B[piv], B[next_row]);
    Scalar inv = A[next_row][col].inverse();
    for (size_t c = col; c < cols; ++c) A[next_row][c] *= inv;
    for (size_t c = 0; c < m; ++c) B[next_row][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == next_row || A[r][col].is_zero()) continue;
      Scalar f = A[r][col];
      for (size_t c = col; c < cols; ++c) A[r][c] -= f * A[next_row][c];
      for (size_t c = 0; c < m; ++c) B[r][c] -= f * B[next_row][c];
    }
    pivot_of_col[col] = next_row;
    ++next_row;
  }
  for (size_t r = next_row; r < rows; ++r)
    for (size_t c = 0; c < m; ++c)
      if (!B[r][c].is_zero()) return std::nullopt;
  std::vector<std::vector<Scalar>> sol(cols, std::vector<Scalar>(m, Scalar()));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] != SIZE_MAX) sol[col] = B[pivot_of_col[col]];
  return sol;
}

// ---- re-expression of Hecke elements in the {[tau] theta_lambda} basis --

struct Reducer {
  const HeckeAlgebra& H;
  const std::vector<Perm>& basis;
  const CharacterPoint& point;
  std::optional<BigRat> spec;

  Scalar sp(const Scalar& s) const {
    return spec ? s.substitute_v(*spec) : s;
  }

  Scalar eval_theta(const std::vector<int64_t>& lam) const {
    Scalar acc = Scalar(1);
    for (size_t i = 0; i < lam.size(); ++i)
      acc *= point.x[i].pow(static_cast<long>(lam[i]));
    return sp(acc);
  }

  // Module coordinates (over the S_t basis) of each target element.
  std::vector<std::vector<Scalar>> reduce(
      const std::vector<HeckeElement>& targets) const {
    int t = H.t();
    long s = H.s();
    // integral translation range across the target supports
    std::vector<int64_t> lo(t, 0), hi(t, 0);
    for (const auto& target : targets)
      for (const auto& [w, c] : target.coeffs())
        for (int j = 0; j < t; ++j) {
          if (w.num[j] % s != 0)
            throw Error("InternalError",
                        "reduce: fractional translation in target");
          int64_t lam = w.num[j] / s;
          lo[j] = std::min(lo[j], lam);
          hi[j] = std::max(hi[j], lam);
        }
    for (int64_t pad = 0;; pad = pad == 0 ? 1 : pad * 2) {
      bool capped = true;
      std::vector<int64_t> blo(t), bhi(t);
      for (int j = 0; j < t; ++j) {
        blo[j] = std::max<int64_t>(lo[j] - pad, -8);
        bhi[j] = std::min<int64_t>(hi[j] + pad, 8);
        if (blo[j] > -8 || bhi[j] < 8) capped = false;
      }
      auto sol = attempt(targets, blo, bhi);
      if (sol) return *sol;
      if (capped)
        throw err_box_overflow(
            "reduce: translation box cap reached without a solution");
    }
  }

  std::optional<std::vector<std::vector<Scalar>>> attempt(
      const std::vector<HeckeElement>& targets, const std::vector<int64_t>& blo,
      const std::vector<int64_t>& bhi) const {
    int t = H.t();
    std::vector<std::vector<int64_t>> lambdas;
    std::vector<int64_t> cur(blo);
    for (;;) {
      lambdas.push_back(cur);
      int j = 0;
      while (j < t && cur[j] == bhi[j]) cur[j] = blo[j], ++j;
      if (j == t) break;
      ++cur[j];
    }
    std::map<TwistedAffineWeylElem, size_t> row_of;
    auto row_index = [&](const TwistedAffineWeylElem& w) {
      auto [it, inserted] = row_of.try_emplace(w, row_of.size());
      (void)inserted;
      return it->second;
    };
    struct Col {
      std::vector<std::pair<size_t, Scalar>> entries;
      size_t tau;
      const std::vector<int64_t>* lam;
    };
    std::vector<Col> cols;
    for (const auto& lam : lambdas) {
      HeckeElement theta = H.bernstein_theta(lam);
      for (size_t ti = 0; ti < basis.size(); ++ti) {
        HeckeElement col = H.multiply(
            H.basis_elem(TwistedAffineWeylElem::from_parts(
                H.s(), std::vector<int64_t>(t, 0), basis[ti])),
            theta);
        Col c{{}, ti, &lam};
        for (const auto& [w, coeff] : col.coeffs())
          c.entries.emplace_back(row_index(w), sp(coeff));
        cols.push_back(std::move(c));
      }
    }
    std::vector<std::vector<std::pair<size_t, Scalar>>> rhs_entries;
    for (const auto& target : targets) {
      std::vector<std::pair<size_t, Scalar>> e;
      bool outside = false;
      for (const auto& [w, coeff] : target.coeffs()) {
        auto it = row_of.find(w);
        if (it == row_of.end()) {
          outside = true;
          break;
        }
        e.emplace_back(it->second, sp(coeff));
      }
      if (outside) return std::nullopt;  // box too small
      rhs_entries.push_back(std::move(e));
    }
    size_t rows = row_of.size();
    std::vector<std::vector<Scalar>> A(rows, std::vector<Scalar>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : cols[c].entries) A[r][c] = v;
    std::vector<std::vector<Scalar>> B(rows,
                                       std::vector<Scalar>(targets.size()));
    for (size_t k = 0; k < rhs_entries.size(); ++k)
      for (const auto& [r, v] : rhs_entries[k]) B[r][k] = v;
    auto sol = solve_linear(std::move(A), std::move(B));
    if (!sol) return std::nullopt;
    // fold in the character: coordinate tau picks up c * x(lambda)
    std::vector<std::vector<Scalar>> out(
        targets.size(), std::vector<Scalar>(basis.size(), Scalar()));
    for (size_t c = 0; c < cols.size(); ++c) {
      Scalar tv = eval_theta(*cols[c].lam);
      for (size_t k = 0; k < targets.size(); ++k) {
        const Scalar& coeff = (*sol)[c][k];
        if (!coeff.is_zero()) out[k][cols[c].tau] += coeff * tv;
      }
    }
    return out;
  }
};

void verify_relations(const InducedModule& M) {
  int t = M.point.t();
  int n = M.dim;
  Scalar zval = M.spec_z ? *M.spec_z : Scalar::z();
  for (const auto& S : M.sigma_action) {
    Mat q = mat_mul(mat_add_scalar(S, -zval), mat_add_scalar(S, Scalar(1)));
    if (!mat_is_zero(q))
      throw Error("InternalError", "induced module: quadratic relation fails");
  }
  for (int i = 0; i + 1 < t - 1; ++i) {
    Mat lhs = mat_mul(mat_mul(M.sigma_action[i], M.sigma_action[i + 1]),
                      M.sigma_action[i]);
    Mat rhs = mat_mul(mat_mul(M.sigma_action[i + 1], M.sigma_action[i]),
                      M.sigma_action[i + 1]);
    if (!mat_eq(lhs, rhs))
      throw Error("InternalError", "induced module: braid relation fails");
  }
  for (int i = 0; i < t - 1; ++i)
    for (int j = i + 2; j < t - 1; ++j)
      if (!mat_eq(mat_mul(M.sigma_action[i], M.sigma_action[j]),
                  mat_mul(M.sigma_action[j], M.sigma_action[i])))
        throw Error("InternalError",
                    "induced module: commuting relation fails");
  for (int i = 2; i < t; ++i)
    if (!mat_eq(mat_mul(M.pi_action, M.sigma_action[i - 1]),
                mat_mul(M.sigma_action[i - 2], M.pi_action)))
      throw Error("InternalError", "induced module: Pi rotation fails");
  if (t >= 2) {
    Mat pi2 = mat_mul(M.pi_action, M.pi_action);
    if (!mat_eq(mat_mul(pi2, M.sigma_action[0]),
                mat_mul(M.sigma_action[t - 2], pi2)))
      throw Error("InternalError", "induced module: Pi^2 relation fails");
  }
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!mat_eq(mat_mul(M.x_action[i], M.x_action[j]),
                  mat_mul(M.x_action[j], M.x_action[i])))
        throw Error("InternalError", "induced module: X_i do not commute");
  // Pi^t = theta_(1,...,1) = X_1 ... X_t
  Mat pit = mat_identity(n);
  for (int i = 0; i < t; ++i) pit = mat_mul(pit, M.pi_action);
  Mat xs = mat_identity(n);
  for (int i = 0; i < t; ++i) xs = mat_mul(xs, M.x_action[i]);
  if (!mat_eq(pit, xs))
    throw Error("InternalError", "induced module: Pi^t != X_1...X_t");
}

}  // namespace

std::vector<const Mat*> InducedModule::generators() const {
  std::vector<const Mat*> g;
  for (const auto& m : sigma_action) g.push_back(&m);
  g.push_back(&pi_action);
  for (const auto& m : x_action) g.push_back(&m);
  return g;
}

InducedModule induce(const CharacterPoint& x, int t, const AlgebraId& id,
                     std::optional<BigRat> specialize_v) {
  if (id.flavor == HeckeFlavor::Finite)
    throw err_flavor_mismatch("induction needs the translation part");
  if (x.t() != t || id.t != t) throw err_rank_mismatch();
  for (const auto& xi : x.x)
    if (xi.is_zero())
      throw Error("BadCharacter", "character values must be nonzero");
  if (id.flavor == HeckeFlavor::Twisted) {
    if (!x.zval)
      throw err_flavor_mismatch("twisted induction needs a value for Z");
    Scalar prod = Scalar(1);
    for (const auto& xi : x.x) prod *= xi;
    if (!(x.zval->pow(id.s) == prod))
      throw Error("BadCharacter", "Z^s != X_1...X_t at the character point");
  }
  HeckeAlgebra H(id);
  InducedModule M;
  M.algebra = id;
  M.point = x;
  M.basis = enumerate_sym(t);
  M.dim = static_cast<int>(M.basis.size());
  if (specialize_v) {
    for (auto& xi : M.point.x) xi = xi.substitute_v(*specialize_v);
    if (M.point.zval) M.point.zval = M.point.zval->substitute_v(*specialize_v);
    M.spec_z = Scalar::z().substitute_v(*specialize_v);
  }
  std::map<std::vector<int>, int> index_of;
  for (int i = 0; i < M.dim; ++i) index_of[M.basis[i].images] = i;
  auto sp = [&](const Scalar& s) {
    return specialize_v ? s.substitute_v(*specialize_v) : s;
  };
  auto perm_elem = [&](const Perm& p) {
    return TwistedAffineWeylElem::from_parts(id.s,
                                             std::vector<int64_t>(t, 0), p);
  };
  // finite generators act within the finite part
  for (int i = 1; i < t; ++i) {
    Mat S = mat_zero(M.dim);
    for (int col = 0; col < M.dim; ++col) {
      HeckeElement h =
          H.multiply(H.simple(i), H.basis_elem(perm_elem(M.basis[col])));
      for (const auto& [w, c] : h.coeffs()) {
        auto it = index_of.find(w.perm.images);
        if (it == index_of.end() ||
            std::any_of(w.num.begin(), w.num.end(),
                        [](int64_t v) { return v != 0; }))
          throw Error("InternalError", "finite product left the finite part");
        S[it->second][col] = sp(c);
      }
    }
    M.sigma_action.push_back(std::move(S));
  }
  // [Pi] and the X_i = theta_{e_i} act through the Bernstein re-expression
  Reducer red{H, M.basis, M.point, specialize_v};
  std::vector<HeckeElement> targets;
  for (int col = 0; col < M.dim; ++col)
    targets.push_back(
        H.multiply(H.pi_elem(), H.basis_elem(perm_elem(M.basis[col]))));
  for (int i = 0; i < t; ++i) {
    std::vector<int64_t> ei(t, 0);
    ei[i] = 1;
    HeckeElement theta = H.bernstein_theta(ei);
    for (int col = 0; col < M.dim; ++col)
      targets.push_back(
          H.multiply(theta, H.basis_elem(perm_elem(M.basis[col]))));
  }
  auto coords = red.reduce(targets);
  M.pi_action = mat_zero(M.dim);
  for (int col = 0; col < M.dim; ++col)
    for (int row = 0; row < M.dim; ++row)
      M.pi_action[row][col] = coords[col][row];
  for (int i = 0; i < t; ++i) {
    Mat X = mat_zero(M.dim);
    for (int col = 0; col < M.dim; ++col)
      for (int row = 0; row < M.dim; ++row)
        X[row][col] = coords[(i + 1) * M.dim + col][row];
    M.x_action.push_back(std::move(X));
  }
  if (id.flavor == HeckeFlavor::Twisted) M.zeta_scalar = M.point.zval;
  verify_relations(M);
  return M;
}

// ---- rational linear algebra for the irreducibility tests ---------------

namespace {

using RVec = std::vector<BigRat>;
using RMat = std::vector<RVec>;

RMat specialize_mat(const Mat& m, const BigRat& v) {
  RMat r(m.size(), RVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) {
      try {
        r[i][j] = m[i][j].substitute_v(v).as_rational();
      } catch (const std::domain_error&) {
        throw err_specialization_pole("matrix entry has a pole at v");
      }
    }
  return r;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
  size_t n = a.size();
  RMat r(n, RVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RMat rmat_transpose(const RMat& a) {
  size_t n = a.size();
  RMat r(n, RVec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

// echelon basis with pivot bookkeeping, used for span growth
struct Span {
  std::vector<RVec> rows;  // echelon, each with leading 1
  std::vector<size_t> pivots;

  bool insert(RVec v) {
    for (size_t i = 0; i < rows.size(); ++i)
      if (v[pivots[i]] != 0) {
        BigRat f = v[pivots[i]];
        for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[i][j];
      }
    size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    BigRat inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
  size_t dim() const { return rows.size(); }
};

RVec flatten(const RMat& m) {
  RVec v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

// nullspace basis of a square rational matrix
std::vector<RVec> nullspace(RMat A) {
  size_t n = A.size();
  std::vector<size_t> pivot_col;
  size_t next_row = 0;
  for (size_t col = 0; col < n && next_row < n; ++col) {
    size_t piv = SIZE_MAX;
    for (size_t r = next_row; r < n; ++r)
      if (A[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv == SIZE_MAX) continue;
    std::swap(A[piv], A[next_row]);
    BigRat inv = 1 / A[next_row][col];
    for (auto& x : A[next_row]) x *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == next_row || A[r][col] == 0) continue;
      BigRat f = A[r][col];
      for (size_t c = 0; c < n; ++c) A[r][c] -= f * A[next_row][c];
    }
    pivot_col.push_back(col);
    ++next_row;
  }
  std::vector<char> is_pivot(n, 0);
  for (size_t c : pivot_col) is_pivot[c] = 1;
  std::vector<RVec> basis;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RVec v(n, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RVec rmat_apply(const RMat& A, const RVec& v) {
  RVec r(A.size(), 0);
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t j = 0; j < A.size(); ++j)
      if (A[i][j] != 0 && v[j] != 0) r[i] += A[i][j] * v[j];
  return r;
}

bool parallel(const RVec& a, const RVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

std::optional<BigRat> rational_sqrt(const BigRat& r) {
  if (r < 0) return std::nullopt;
  BigInt n = boost::multiprecision::numerator(r);
  BigInt d = boost::multiprecision::denominator(r);
  BigInt sn = boost::multiprecision::sqrt(n);
  BigInt sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return BigRat(sn, sd);
}

std::vector<BigRat> quadratic_rational_roots(const BigRat& a, const BigRat& b,
                                             const BigRat& c) {
  std::vector<BigRat> roots;
  if (a == 0) {
    if (b != 0) roots.push_back(-c / b);
    return roots;
  }
  BigRat disc = b * b - 4 * a * c;
  auto sq = rational_sqrt(disc);
  if (!sq) return roots;
  roots.push_back((-b + *sq) / (2 * a));
  if (*sq != 0) roots.push_back((-b - *sq) / (2 * a));
  return roots;
}

// lines u in span{b1, b2} with M u parallel to u, via the 2x2 minors of
// [u | M u], which are quadratics in the span coordinates
std::vector<RVec> parallel_lines_in_plane(const RVec& b1, const RVec& b2,
                                          const RMat& M) {
  RVec m1 = rmat_apply(M, b1), m2 = rmat_apply(M, b2);
  size_t n = b1.size();
  std::vector<std::array<BigRat, 3>> quads;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k + 1; l < n; ++l) {
      BigRat al = b1[k] * m1[l] - b1[l] * m1[k];
      BigRat be = b1[k] * m2[l] + b2[k] * m1[l] - b1[l] * m2[k] - b2[l] * m1[k];
      BigRat ga = b2[k] * m2[l] - b2[l] * m2[k];
      if (al != 0 || be != 0 || ga != 0) quads.push_back({al, be, ga});
    }
  if (quads.empty())
    throw Error("AmbiguousConstituents",
                "a full plane of invariant lines; not supported");
  auto check = [&](const BigRat& a, const BigRat& b) {
    for (const auto& q : quads)
      if (q[0] * a * a + q[1] * a * b + q[2] * b * b != 0) return false;
    return true;
  };
  std::vector<RVec> lines;
  for (const BigRat& a :
       quadratic_rational_roots(quads[0][0], quads[0][1], quads[0][2]))
    if (check(a, 1)) {
      RVec u(n, 0);
      for (size_t i = 0; i < n; ++i) u[i] = a * b1[i] + b2[i];
      lines.push_back(std::move(u));
    }
  if (check(1, 0)) lines.push_back(b1);
  return lines;
}

void normalize_line(RVec& u) {
  for (const auto& x : u)
    if (x != 0) {
      BigRat inv = 1 / x;
      for (auto& y : u) y *= inv;
      return;
    }
}

// intersect the span of V with the kernel of B
std::vector<RVec> intersect_with_kernel(const std::vector<RVec>& V,
                                        const RMat& B) {
  if (V.empty()) return {};
  size_t d = B.size();
  size_t k = V.size();
  size_t n = std::max(d, k);
  RMat Cs(n, RVec(n, 0));
  for (size_t col = 0; col < k; ++col) {
    RVec img = rmat_apply(B, V[col]);
    for (size_t r = 0; r < d; ++r) Cs[r][col] = img[r];
  }
  // padding columns beyond k are pinned to zero by identity entries
  for (size_t c = k; c < n; ++c) Cs[c][c] = 1;
  std::vector<RVec> out;
  for (const auto& cf : nullspace(Cs)) {
    bool in_range = true;
    for (size_t c = k; c < n; ++c)
      if (cf[c] != 0) in_range = false;
    if (!in_range) continue;
    RVec u(d, 0);
    for (size_t c = 0; c < k; ++c)
      for (size_t r = 0; r < d; ++r) u[r] += cf[c] * V[c][r];
    bool nonzero = false;
    for (const auto& x : u)
      if (x != 0) nonzero = true;
    if (nonzero) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

bool is_irreducible_burnside(const InducedModule& M, const BigRat& v_value) {
  size_t d = M.dim;
  std::vector<RMat> gens;
  for (const Mat* g : M.generators())
    gens.push_back(specialize_mat(*g, v_value));
  Span span;
  std::vector<RMat> elems;
  RMat id(d, RVec(d, 0));
  for (size_t i = 0; i < d; ++i) id[i][i] = 1;
  auto push = [&](RMat m) {
    if (span.insert(flatten(m))) elems.push_back(std::move(m));
  };
  push(id);
  for (const auto& g : gens) push(g);
  for (size_t i = 0; i < elems.size() && span.dim() < d * d; ++i)
    for (const auto& g : gens) {
      push(rmat_mul(elems[i], g));
      if (span.dim() == d * d) break;
    }
  return span.dim() == d * d;
}

bool is_irreducible(const InducedModule& M, const BigRat& v_value) {
  if (M.dim == 1) return true;
  if (M.point.t() == 2) {
    // [s_1] has eigenvalues z and -1; a common eigenvector must lie in one
    // of its rational eigenlines (unless [s_1] is scalar, a degenerate case
    // handed to the span test).
    RMat S = specialize_mat(M.sigma_action[0], v_value);
    BigRat z = v_value * v_value;
    std::vector<RMat> others = {specialize_mat(M.pi_action, v_value),
                                specialize_mat(M.x_action[0], v_value),
                                specialize_mat(M.x_action[1], v_value)};
    for (const BigRat& lam : {z, BigRat(-1)}) {
      RMat A = S;
      for (size_t i = 0; i < A.size(); ++i) A[i][i] -= lam;
      auto ker = nullspace(A);
      if (ker.size() >= 2) return is_irreducible_burnside(M, v_value);
      for (const auto& u : ker) {
        bool common = true;
        for (const auto& g : others)
          if (!parallel(u, rmat_apply(g, u))) {
            common = false;
            break;
          }
        if (common) return false;  // invariant line found
      }
    }
    return true;
  }
  return is_irreducible_burnside(M, v_value);
}

std::vector<OneDimConstituent> one_dim_constituents(const InducedModule& M,
                                                    const BigRat& v_value) {
  int t = M.point.t();
  size_t d = M.dim;
  BigRat z = v_value * v_value;
  std::vector<BigRat> xvals;
  for (const auto& xi : M.point.x)
    xvals.push_back(xi.substitute_v(v_value).as_rational());
  std::vector<RMat> sig, xs;
  for (const auto& m : M.sigma_action)
    sig.push_back(specialize_mat(m, v_value));
  for (const auto& m : M.x_action) xs.push_back(specialize_mat(m, v_value));
  RMat pi = specialize_mat(M.pi_action, v_value);

  if (t == 1) {
    OneDimConstituent oc;
    oc.is_sub = true;
    oc.sigma_value = z;
    oc.x_values = {xvals[0]};
    std::vector<OneDimConstituent> out = {oc};
    oc.is_sub = false;
    out.push_back(oc);
    return out;
  }

  auto find_lines = [&](const std::vector<RMat>& sigm,
                        const std::vector<RMat>& xm, const RMat& pim,
                        bool is_sub) {
    std::vector<OneDimConstituent> found;
    std::set<std::vector<BigRat>> seen_lines;
    // X-eigenvalue candidates: the S_t-orbit of the character values
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    std::set<std::vector<BigRat>> tried;
    do {
      std::vector<BigRat> vals(t);
      for (int i = 0; i < t; ++i) vals[i] = xvals[idx[i]];
      if (!tried.insert(vals).second) continue;
      RMat B0 = xm[0];
      for (size_t r = 0; r < d; ++r) B0[r][r] -= vals[0];
      std::vector<RVec> V = nullspace(B0);
      for (int i = 1; i < t && !V.empty(); ++i) {
        RMat Bi = xm[i];
        for (size_t r = 0; r < d; ++r) Bi[r][r] -= vals[i];
        V = intersect_with_kernel(V, Bi);
      }
      if (V.empty()) continue;
      for (const BigRat& c : {z, BigRat(-1)}) {
        std::vector<RVec> W = V;
        for (int i = 0; i < t - 1 && !W.empty(); ++i) {
          RMat Si = sigm[i];
          for (size_t r = 0; r < d; ++r) Si[r][r] -= c;
          W = intersect_with_kernel(W, Si);
        }
        if (W.empty()) continue;
        std::vector<RVec> lines;
        if (W.size() == 1) {
          if (parallel(W[0], rmat_apply(pim, W[0]))) lines.push_back(W[0]);
        } else if (W.size() == 2) {
          lines = parallel_lines_in_plane(W[0], W[1], pim);
        } else {
          throw Error("AmbiguousConstituents",
                      "invariant eigenspace of dimension > 2");
        }
        for (auto& u : lines) {
          normalize_line(u);
          if (!seen_lines.insert(u).second) continue;
          OneDimConstituent oc;
          oc.is_sub = is_sub;
          oc.sigma_value = c;
          for (int i = 0; i < t; ++i) {
            RVec img = rmat_apply(xm[i], u);
            size_t nz = 0;
            while (nz < d && u[nz] == 0) ++nz;
            oc.x_values.push_back(img[nz] / u[nz]);
          }
          found.push_back(std::move(oc));
        }
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return found;
  };

  std::vector<OneDimConstituent> out = find_lines(sig, xs, pi, true);
  std::vector<RMat> sigT, xsT;
  for (const auto& m : sig) sigT.push_back(rmat_transpose(m));
  for (const auto& m : xs) xsT.push_back(rmat_transpose(m));
  auto quo = find_lines(sigT, xsT, rmat_transpose(pi), false);
  out.insert(out.end(), quo.begin(), quo.end());
  return out;
}

ReducibilityReport reducibility_point(const TypeParams& P) {
  DerivedInvariants inv = invariants_n0_d0_s0(P);
  ReducibilityReport rep;
  rep.n0 = inv.n0;
  rep.s_star = BigRat(1, 2 * inv.n0);
  BigRat v(2);  // z = q0 = 4
  auto module_at_ratio = [&](const Scalar& ratio) {
    CharacterPoint cp;
    cp.x = {Scalar(1), ratio};
    return induce(cp, 2, AlgebraId::affine(2), v);
  };
  rep.reducible_at_witness = !is_irreducible(module_at_ratio(Scalar::z()), v);
  rep.irreducible_at_double =
      is_irreducible(module_at_ratio(Scalar::z().pow(2)), v);
  rep.irreducible_at_half = is_irreducible(module_at_ratio(Scalar::v()), v);
  return rep;
}

}  // namespace metahecke
