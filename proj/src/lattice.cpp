#include "metahecke/lattice.hpp"

#include <numeric>
#include <utility>

#include "metahecke/errors.hpp"

namespace metahecke {

namespace {

// extended gcd: returns g = gcd(a,b) and x,y with a x + b y = g
int64_t xgcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  int64_t x1, y1;
  int64_t g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

IntMat hnf(IntMat rows) {
  if (rows.empty()) return rows;
  size_t cols = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    // combine all rows with a nonzero entry in this column into one pivot row
    size_t nz = pivot_row;
    while (nz < rows.size() && rows[nz][col] == 0) ++nz;
    if (nz == rows.size()) continue;
    std::swap(rows[pivot_row], rows[nz]);
    for (size_t r = pivot_row + 1; r < rows.size(); ++r) {
      while (rows[r][col] != 0) {
        int64_t a = rows[pivot_row][col], b = rows[r][col];
        if (std::abs(a) > std::abs(b)) std::swap(rows[pivot_row], rows[r]);
        else {
          int64_t q = rows[r][col] / rows[pivot_row][col];
          for (size_t c = 0; c < cols; ++c)
            rows[r][c] -= q * rows[pivot_row][c];
        }
      }
    }
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    // reduce entries above the pivot into [0, pivot)
    for (size_t r = 0; r < pivot_row; ++r) {
      int64_t p = rows[pivot_row][col];
      int64_t q = rows[r][col] / p;
      if (rows[r][col] - q * p < 0) --q;
      if (q != 0)
        for (size_t c = 0; c < cols; ++c) rows[r][c] -= q * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntMat hnf_full_rank(IntMat rows, int t) {
  IntMat h = hnf(std::move(rows));
  if (static_cast<int>(h.size()) != t)
    throw Error("NotFullRank", "hnf_full_rank: lattice has rank < t");
  return h;
}

int64_t hnf_determinant(const IntMat& basis) {
  int64_t det = 1;
  size_t col = 0;
  for (const auto& row : basis) {
    while (col < row.size() && row[col] == 0) ++col;
    if (col == row.size())
      throw Error("NotFullRank", "hnf_determinant: not full rank");
    det *= row[col];
  }
  return det;
}

bool hnf_contains(const IntMat& basis, IntVec v) {
  size_t cols = v.size();
  size_t r = 0;
  for (size_t col = 0; col < cols; ++col) {
    size_t pr = r;
    // find the basis row with pivot at this column, if any
    size_t pivot_col = cols;
    if (pr < basis.size()) {
      pivot_col = 0;
      while (pivot_col < cols && basis[pr][pivot_col] == 0) ++pivot_col;
    }
    if (pr < basis.size() && pivot_col == col) {
      if (v[col] % basis[pr][col] != 0) return false;
      int64_t q = v[col] / basis[pr][col];
      for (size_t c = 0; c < cols; ++c) v[c] -= q * basis[pr][c];
      ++r;
    } else if (v[col] != 0) {
      return false;
    }
  }
  return true;
}

bool hnf_is_sublattice(const IntMat& sub, const IntMat& sup) {
  for (const auto& row : sub)
    if (!hnf_contains(sup, row)) return false;
  return true;
}

IntMat kernel_mod(const IntMat& B, int64_t n) {
  size_t t = B.size();
  size_t m = t ? B[0].size() : 0;
  // Rows (e_i B, e_i) and (n e_j, 0) in Z^{m+t} with the image block placed
  // first; HNF rows whose image block vanishes project onto the kernel.
  IntMat rows;
  for (size_t i = 0; i < t; ++i) {
    IntVec row(m + t, 0);
    for (size_t j = 0; j < m; ++j) row[j] = B[i][j];
    row[m + i] = 1;
    rows.push_back(std::move(row));
  }
  for (size_t j = 0; j < m; ++j) {
    IntVec row(m + t, 0);
    row[j] = n;
    rows.push_back(std::move(row));
  }
  IntMat h = hnf(std::move(rows));
  IntMat kernel;
  for (const auto& row : h) {
    bool image_zero = true;
    for (size_t j = 0; j < m; ++j)
      if (row[j] != 0) {
        image_zero = false;
        break;
      }
    if (image_zero)
      kernel.emplace_back(row.begin() + m, row.end());
  }
  return hnf_full_rank(std::move(kernel), static_cast<int>(t));
}

}  // namespace metahecke
