#pragma once

#include <stdexcept>
#include <vector>

#include "prismatic/mpoly.hpp"

namespace prismatic {

/// Determinant of a square polynomial matrix by cofactor expansion.
/// Intended for dimension <= 4.
template <class K>
MPolyT<K> det_minor_expansion(const std::vector<std::vector<MPolyT<K>>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det: empty matrix");
  if (n == 1) return m[0][0];
  MPolyT<K> acc = MPolyT<K>::zero(m[0][0].vars());
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MPolyT<K>>> sub;
    sub.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
      std::vector<MPolyT<K>> row;
      row.reserve(n - 1);
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    MPolyT<K> cof = m[0][j] * det_minor_expansion(sub);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

/// Fraction-free Bareiss determinant; every intermediate division is exact.
template <class K>
MPolyT<K> det_bareiss(std::vector<std::vector<MPolyT<K>>> m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("det: empty matrix");
  const VarList& vars = m[0][0].vars();
  MPolyT<K> prev_pivot = MPolyT<K>::constant(vars, K(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPolyT<K>::zero(vars);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPolyT<K> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = num.divided_by(prev_pivot);
        if (!q) throw std::logic_error("det_bareiss: inexact division (should not happen)");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MPolyT<K>::zero(vars);
    }
    prev_pivot = m[k][k];
  }
  MPolyT<K> d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

/// Sylvester matrix of p and q viewed as univariate in `var`; entries are
/// polynomials in the remaining variables (carried on the full list).
template <class K>
std::vector<std::vector<MPolyT<K>>> sylvester_matrix(const MPolyT<K>& p, const MPolyT<K>& q,
                                                     int var) {
  const int dp = p.degree(var), dq = q.degree(var);
  const VarList& vars = p.vars();
  auto pc = p.coeffs_in(var);  // pc[i] multiplies var^i
  auto qc = q.coeffs_in(var);
  const size_t n = static_cast<size_t>(dp + dq);
  std::vector<std::vector<MPolyT<K>>> m(n, std::vector<MPolyT<K>>(n, MPolyT<K>::zero(vars)));
  for (int r = 0; r < dq; ++r)
    for (int i = 0; i <= dp; ++i) m[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = pc[static_cast<size_t>(dp - i)];
  for (int r = 0; r < dp; ++r)
    for (int i = 0; i <= dq; ++i)
      m[static_cast<size_t>(dq + r)][static_cast<size_t>(r + i)] = qc[static_cast<size_t>(dq - i)];
  return m;
}

/// Resultant of p and q with respect to `var`: the determinant of their
/// Sylvester matrix over the polynomial ring in the remaining variables.
template <class K>
MPolyT<K> resultant(const MPolyT<K>& p, const MPolyT<K>& q, int var) {
  p.check_vars(q);
  if (p.is_zero() || q.is_zero()) throw std::domain_error("resultant: zero polynomial");
  if (p.degree(var) == 0 || q.degree(var) == 0)
    throw std::domain_error("resultant: not univariate in elimination variable");
  auto m = sylvester_matrix(p, q, var);
  if (m.size() <= 4) return det_minor_expansion(m);
  return det_bareiss(std::move(m));
}

template <class K>
MPolyT<K> resultant(const MPolyT<K>& p, const MPolyT<K>& q, const std::string& var) {
  return resultant(p, q, p.var_index(var));
}

}  // namespace prismatic
