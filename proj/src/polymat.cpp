// Copyright 2026 The hnfsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnfsub/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

void require_same_shape(const PolyMat& a, const PolyMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "matrix shapes differ");
  }
}

void require_shift(const PolyMat& m, const Shift& s) {
  if (s.size() != m.cols()) throw Error(ErrorCode::kShapeMismatch, "shift length differs from column count");
}

void swap_rows(PolyMat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// Row dst -= q * row src over columns [0, ncols).
void row_axpy(const Field& k, PolyMat& a, std::size_t dst, std::size_t src, const Poly& q,
              std::size_t ncols) {
  if (q.is_zero()) return;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (a(src, c).is_zero()) continue;
    a(dst, c) = sub(k, a(dst, c), mul(k, q, a(src, c)));
  }
}

void row_scale(const Field& k, PolyMat& a, std::size_t i, Fp c) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = scale(k, a(i, j), c);
}

// Rightmost column attaining the s-row degree; nullopt for a zero row.
std::optional<std::size_t> pivot_index(const PolyMat& m, std::size_t i, const Shift& s) {
  std::optional<std::size_t> piv;
  Degree best;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(i, j).is_zero()) continue;
    const Degree d = m(i, j).degree() + s[j];
    if (!piv || d >= best) {
      best = d;
      piv = j;
    }
  }
  return piv;
}

// Upper row echelon form by Euclidean elimination, left to right. Returns the rank.
std::size_t row_echelon(const Field& k, PolyMat& a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> p;
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        if (!p || a(i, c).degree() < a(*p, c).degree()) p = i;
      }
      if (!p) break;
      bool done = true;
      for (std::size_t i = r; i < a.rows(); ++i) {
        if (i == *p || a(i, c).is_zero()) continue;
        row_axpy(k, a, i, *p, quo(k, a(i, c), a(*p, c)), a.cols());
        if (!a(i, c).is_zero()) done = false;
      }
      if (done) {
        swap_rows(a, r, *p);
        ++r;
        break;
      }
    }
  }
  return r;
}

// HNF basis of R(mu, c) for one column c (m x 1) already reduced modulo mu:
// the leading m x m block of the HNF of [[I, c], [0, mu]].
PolyMat relbas_column(const Field& k, const Poly& mu, const PolyMat& c) {
  const std::size_t m = c.rows();
  PolyMat big(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    big(i, i) = Poly::one();
    big(i, m) = c(i, 0);
  }
  big(m, m) = mu;
  const PolyMat h = dense_hnf(k, big, false).h;
  PolyMat out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = h(i, j);
  return out;
}

}  // namespace

PolyMat PolyMat::identity(std::size_t n) {
  PolyMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one();
  return m;
}

PolyMat PolyMat::from_fieldmat(const FieldMat& f) {
  PolyMat m(f.rows(), f.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) m(i, j) = Poly::constant(f(i, j));
  return m;
}

Degree PolyMat::degree() const noexcept {
  Degree d;
  for (const Poly& p : a_) d = std::max(d, p.degree());
  return d;
}

bool PolyMat::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
}

bool PolyMat::row_is_zero(std::size_t i) const noexcept {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

IndexTuple::IndexTuple(std::vector<std::size_t> indices, std::size_t n) : idx_(std::move(indices)), n_(n) {
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    if (idx_[t] >= n || (t > 0 && idx_[t] <= idx_[t - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "indices must be strictly increasing and below n");
    }
  }
}

IndexTuple IndexTuple::leading(std::size_t m, std::size_t n) {
  std::vector<std::size_t> v(m);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return IndexTuple(std::move(v), n);
}

bool IndexTuple::is_leading() const noexcept {
  for (std::size_t t = 0; t < idx_.size(); ++t)
    if (idx_[t] != t) return false;
  return true;
}

PolyMat mul(const Field& k, const PolyMat& a, const PolyMat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kShapeMismatch, "inner dimensions differ");
  PolyMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc;
      for (std::size_t t = 0; t < a.cols(); ++t) {
        if (a(i, t).is_zero() || b(t, j).is_zero()) continue;
        acc = add(k, acc, mul(k, a(i, t), b(t, j)));
      }
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

PolyMat add(const Field& k, const PolyMat& a, const PolyMat& b) {
  require_same_shape(a, b);
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add(k, a(i, j), b(i, j));
  return c;
}

PolyMat sub(const Field& k, const PolyMat& a, const PolyMat& b) {
  require_same_shape(a, b);
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = sub(k, a(i, j), b(i, j));
  return c;
}

PolyMat neg(const Field& k, const PolyMat& a) {
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = neg(k, a(i, j));
  return c;
}

PolyMat scale(const Field& k, const PolyMat& a, const Poly& f) {
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = mul(k, a(i, j), f);
  return c;
}

PolyMat transpose(const PolyMat& a) {
  PolyMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

PolyMat rem(const Field& k, const PolyMat& a, const Poly& mu) {
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = rem(k, a(i, j), mu);
  return c;
}

PolyMat truncate(const PolyMat& a, std::size_t len) {
  PolyMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = truncate(a(i, j), len);
  return c;
}

FieldMat eval_at(const Field& k, const PolyMat& a, Fp point) {
  FieldMat f(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) f(i, j) = eval(k, a(i, j), point);
  return f;
}

PolyMat submatrix(const PolyMat& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  PolyMat s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= a.rows() || cols[j] >= a.cols()) {
        throw Error(ErrorCode::kShapeMismatch, "submatrix index out of range");
      }
      s(i, j) = a(rows[i], cols[j]);
    }
  }
  return s;
}

PolyMat select_rows(const PolyMat& a, std::span<const std::size_t> rows) {
  std::vector<std::size_t> all(a.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return submatrix(a, rows, all);
}

PolyMat select_cols(const PolyMat& a, std::span<const std::size_t> cols) {
  std::vector<std::size_t> all(a.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return submatrix(a, all, cols);
}

PolyMat random_polymat(const Field& k, std::size_t rows, std::size_t cols, std::size_t max_degree,
                       Rng& rng) {
  PolyMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Fp> c(max_degree + 1);
      for (Fp& x : c) x = rng.element(k);
      m(i, j) = Poly(std::move(c));
    }
  }
  return m;
}

std::vector<Degree> shifted_row_degree(const PolyMat& m, const Shift& s) {
  require_shift(m, s);
  std::vector<Degree> t(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t[i] = std::max(t[i], m(i, j).degree() + s[j]);
  return t;
}

FieldMat leading_matrix(const PolyMat& m, const Shift& s) {
  const auto t = shifted_row_degree(m, s);
  FieldMat l(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (t[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::int64_t e = t[i].value() - s[j];
      if (e >= 0) l(i, j) = m(i, j).coeff(static_cast<std::size_t>(e));
    }
  }
  return l;
}

bool is_reduced(const Field& k, const PolyMat& m, const Shift& s) {
  if (!m.is_square()) return false;
  return rank(k, leading_matrix(m, s)) == m.rows();
}

bool is_weak_popov(const PolyMat& m, const Shift& s) {
  if (!m.is_square()) return false;
  const FieldMat l = leading_matrix(m, s);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (l(i, i).v == 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (l(i, j).v != 0) return false;
  }
  return true;
}

bool is_popov(const PolyMat& m, const Shift& s) {
  if (!is_weak_popov(m, s)) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_monic()) return false;
    for (std::size_t j = 0; j < m.rows(); ++j)
      if (j != i && m(j, i).degree() >= m(i, i).degree()) return false;
  }
  return true;
}

bool is_hnf(const PolyMat& m) {
  if (!m.is_square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_monic()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j).degree() >= m(j, j).degree()) return false;
  }
  return true;
}

HnfResult dense_hnf(const Field& k, const PolyMat& m, bool track_transform) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "dense_hnf needs a square matrix");
  const std::size_t n = m.rows();
  HnfResult r{m, track_transform ? PolyMat::identity(n) : PolyMat()};
  PolyMat& h = r.h;
  PolyMat& u = r.u;
  auto axpy = [&](std::size_t dst, std::size_t src, const Poly& q, std::size_t ncols) {
    row_axpy(k, h, dst, src, q, ncols);
    if (track_transform) row_axpy(k, u, dst, src, q, n);
  };
  for (std::size_t col = n; col-- > 0;) {
    // Rows 0..col are still active and vanish beyond col.
    while (true) {
      std::optional<std::size_t> p;
      for (std::size_t i = 0; i <= col; ++i) {
        if (h(i, col).is_zero()) continue;
        if (!p || h(i, col).degree() < h(*p, col).degree()) p = i;
      }
      if (!p) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
      bool done = true;
      for (std::size_t i = 0; i <= col; ++i) {
        if (i == *p || h(i, col).is_zero()) continue;
        axpy(i, *p, quo(k, h(i, col), h(*p, col)), col + 1);
        if (!h(i, col).is_zero()) done = false;
      }
      if (done) {
        swap_rows(h, col, *p);
        if (track_transform) swap_rows(u, col, *p);
        break;
      }
    }
    const Fp c = k.inv(h(col, col).lead());
    row_scale(k, h, col, c);
    if (track_transform) row_scale(k, u, col, c);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (h(i, col).degree() >= h(col, col).degree()) axpy(i, col, quo(k, h(i, col), h(col, col)), col + 1);
    }
  }
  return r;
}

PolyMat hnf_relbas(const Field& k, const Poly& mu, const PolyMat& f) {
  if (mu.is_zero()) throw Error(ErrorCode::kZeroInput, "modulus is zero");
  const std::size_t m = f.rows();
  PolyMat b = PolyMat::identity(m);
  if (mu.is_constant()) return b;
  const Poly mu1 = monic(k, mu);
  // R(mu, [F_0 .. F_j]) = R(mu, B F_j) * B where B is a basis for the first j columns.
  for (std::size_t j = 0; j < f.cols(); ++j) {
    PolyMat col(m, 1);
    for (std::size_t i = 0; i < m; ++i) col(i, 0) = f(i, j);
    const PolyMat c = rem(k, mul(k, b, col), mu1);
    if (c.is_zero()) continue;
    b = dense_hnf(k, mul(k, relbas_column(k, mu1, c), b), false).h;
  }
  return b;
}

PolyMat popov_form(const Field& k, const PolyMat& m, const Shift& s) {
  if (!m.is_square()) throw Error(ErrorCode::kShapeMismatch, "popov_form needs a square matrix");
  require_shift(m, s);
  const std::size_t n = m.rows();
  PolyMat a = m;
  auto shifted = [&](std::size_t i, std::size_t j) { return a(i, j).degree() + s[j]; };

  // Mulders-Storjohann: resolve rows sharing a pivot column until all pivots differ.
  std::vector<std::size_t> piv(n);
  while (true) {
    std::vector<std::optional<std::size_t>> owner(n);
    std::optional<std::pair<std::size_t, std::size_t>> clash;
    for (std::size_t i = 0; i < n && !clash; ++i) {
      const auto p = pivot_index(a, i, s);
      if (!p) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
      piv[i] = *p;
      if (owner[*p]) clash = std::make_pair(*owner[*p], i);
      else owner[*p] = i;
    }
    if (!clash) break;
    auto [r1, r2] = *clash;
    const std::size_t j = piv[r2];
    if (shifted(r1, j) < shifted(r2, j)) std::swap(r1, r2);
    const std::size_t e = static_cast<std::size_t>(a(r1, j).degree().value() - a(r2, j).degree().value());
    const Fp c = k.div(a(r1, j).lead(), a(r2, j).lead());
    row_axpy(k, a, r1, r2, Poly::monomial(c, e), n);
  }
  PolyMat w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w(piv[i], j) = a(i, j);

  // Normalize each row against the pivots of the others.
  for (std::size_t i = 0; i < n; ++i) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || w(i, l).degree() < w(l, l).degree()) continue;
        if (!best || w(i, l).degree() + s[l] >= w(i, *best).degree() + s[*best]) best = l;
      }
      if (!best) break;
      const std::size_t l = *best;
      const std::size_t e = static_cast<std::size_t>(w(i, l).degree().value() - w(l, l).degree().value());
      const Fp c = k.div(w(i, l).lead(), w(l, l).lead());
      row_axpy(k, w, i, l, Poly::monomial(c, e), n);
    }
  }
  for (std::size_t i = 0; i < n; ++i) row_scale(k, w, i, k.inv(w(i, i).lead()));
  return w;
}

PolyMat popov_relbas(const Field& k, const Poly& mu, const PolyMat& f, const Shift& s) {
  return popov_form(k, hnf_relbas(k, mu, f), s);
}

PolyMat column_basis(const Field& k, const PolyMat& f) {
  PolyMat t = transpose(f);
  const std::size_t r = row_echelon(k, t);
  PolyMat out(f.rows(), r);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) out(i, j) = t(j, i);
  return out;
}

PolyMat relbas_onecol_hrow(const Field& k, const Poly& mu, const PolyMat& c) {
  if (c.cols() != 1 || c.rows() == 0) throw Error(ErrorCode::kShapeMismatch, "expected a nonempty column");
  const Poly mu1 = monic(k, mu);
  const Poly inv0 = mod_inverse(k, c(0, 0), mu1);
  const std::size_t m = c.rows();
  PolyMat b = PolyMat::identity(m);
  b(0, 0) = mu1;
  for (std::size_t i = 1; i < m; ++i) b(i, 0) = rem(k, neg(k, mul(k, c(i, 0), inv0)), mu1);
  return b;
}

Poly relbas_tworow(const Field& k, const Poly& mu, const PolyMat& row0, const PolyMat& rowi) {
  if (row0.rows() != 1 || rowi.rows() != 1 || row0.cols() != rowi.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "expected two rows of equal length");
  }
  const Poly mu1 = monic(k, mu);
  const std::size_t n = row0.cols();
  // Fold xgcd over the entries: g = sum u_t row0_t mod mu.
  Poly g = mu1;
  std::vector<Poly> u(n);
  for (std::size_t t = 0; t < n && !g.is_one(); ++t) {
    const Poly r = rem(k, row0(0, t), mu1);
    if (r.is_zero()) continue;
    const Xgcd e = xgcd(k, g, r);
    for (std::size_t q = 0; q < t; ++q) u[q] = mul_mod(k, u[q], e.u, mu1);
    u[t] = rem(k, e.v, mu1);
    g = e.g;
  }
  if (!g.is_one()) throw Error(ErrorCode::kGcdNotOne, "row 0 entries are not coprime with mu");
  Poly b;
  for (std::size_t t = 0; t < n; ++t) b = add(k, b, mul(k, u[t], rowi(0, t)));
  b = rem(k, neg(k, b), mu1);
  for (std::size_t t = 0; t < n; ++t) {
    if (!rem(k, add(k, mul(k, b, row0(0, t)), rowi(0, t)), mu1).is_zero()) {
      throw Error(ErrorCode::kHrowViolated, "relation basis is not of the form [[mu, 0], [b, 1]]");
    }
  }
  return b;
}

std::int64_t det_degree_reduced(const Field& k, const PolyMat& m, const Shift& s) {
  require_shift(m, s);
  if (!is_reduced(k, m, s)) throw Error(ErrorCode::kNotReduced, "matrix is not in shifted reduced form");
  std::int64_t d = 0;
  for (const Degree& t : shifted_row_degree(m, s)) d += t.value();
  for (std::int64_t x : s) d -= x;
  return d;
}

std::int64_t adj_degree_bound(const Field& k, const PolyMat& m, const Shift& s) {
  const std::int64_t d = det_degree_reduced(k, m, s);
  if (s.empty()) return d;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  return d + *hi - *lo;
}

}  // namespace hnfsub
