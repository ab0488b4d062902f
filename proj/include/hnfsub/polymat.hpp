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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hnfsub/degree.hpp"
#include "hnfsub/field.hpp"
#include "hnfsub/fieldmat.hpp"
#include "hnfsub/poly.hpp"

namespace hnfsub {

/// Dense row-major matrix of univariate polynomials.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static PolyMat identity(std::size_t n);
  static PolyMat from_fieldmat(const FieldMat& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /// Max entry degree; -infinity for the zero matrix.
  Degree degree() const noexcept;
  bool is_zero() const noexcept;
  bool row_is_zero(std::size_t i) const noexcept;

  friend bool operator==(const PolyMat&, const PolyMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Poly> a_;
};

/// Degree shift, one integer per column.
using Shift = std::vector<std::int64_t>;

/// Strictly increasing column indices in [0, n).
class IndexTuple {
 public:
  /// Throws Error(kInvalidArgument) unless strictly increasing and below n.
  IndexTuple(std::vector<std::size_t> indices, std::size_t n);
  /// (0, 1, ..., m - 1)
  static IndexTuple leading(std::size_t m, std::size_t n);

  const std::vector<std::size_t>& indices() const noexcept { return idx_; }
  std::size_t size() const noexcept { return idx_.size(); }
  std::size_t operator[](std::size_t t) const { return idx_[t]; }
  std::size_t ambient() const noexcept { return n_; }
  bool is_leading() const noexcept;

 private:
  std::vector<std::size_t> idx_;
  std::size_t n_;
};

PolyMat mul(const Field& k, const PolyMat& a, const PolyMat& b);
PolyMat add(const Field& k, const PolyMat& a, const PolyMat& b);
PolyMat sub(const Field& k, const PolyMat& a, const PolyMat& b);
PolyMat neg(const Field& k, const PolyMat& a);
PolyMat scale(const Field& k, const PolyMat& a, const Poly& c);
PolyMat transpose(const PolyMat& a);
/// Entrywise remainder modulo mu.
PolyMat rem(const Field& k, const PolyMat& a, const Poly& mu);
/// Entrywise reduction modulo x^len.
PolyMat truncate(const PolyMat& a, std::size_t len);
FieldMat eval_at(const Field& k, const PolyMat& a, Fp point);
PolyMat submatrix(const PolyMat& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols);
PolyMat select_rows(const PolyMat& a, std::span<const std::size_t> rows);
PolyMat select_cols(const PolyMat& a, std::span<const std::size_t> cols);
PolyMat random_polymat(const Field& k, std::size_t rows, std::size_t cols, std::size_t max_degree,
                       Rng& rng);

/// t_i = max_j (deg M_ij + s_j). Throws Error(kShapeMismatch) if |s| != cols.
std::vector<Degree> shifted_row_degree(const PolyMat& m, const Shift& s);
/// Entry (i, j) is the coefficient of degree t_i - s_j of M_ij.
FieldMat leading_matrix(const PolyMat& m, const Shift& s);

/// The s-leading matrix is invertible (square M only).
bool is_reduced(const Field& k, const PolyMat& m, const Shift& s);
/// The s-leading matrix is invertible and lower triangular.
bool is_weak_popov(const PolyMat& m, const Shift& s);
/// s-weak Popov with monic diagonal and deg M_ji < deg M_ii for j != i.
bool is_popov(const PolyMat& m, const Shift& s);
/// Lower triangular, monic diagonal, deg M_ij < deg M_jj for i > j.
bool is_hnf(const PolyMat& m);

struct HnfResult {
  PolyMat h;
  PolyMat u;  // unimodular with u * m = h; empty unless requested
};

/// Lower-triangular Hermite normal form by column-wise Euclidean elimination.
/// Throws Error(kSingularMatrix) if M is singular and kShapeMismatch if not square.
HnfResult dense_hnf(const Field& k, const PolyMat& m, bool track_transform = true);

/// HNF basis of R(mu, F) = { p : p F = 0 mod mu } for F of size m x n.
PolyMat hnf_relbas(const Field& k, const Poly& mu, const PolyMat& f);

/// s-Popov form of a nonsingular square matrix: weak Popov by
/// Mulders-Storjohann pivot reduction, then normalization against pivots.
PolyMat popov_form(const Field& k, const PolyMat& m, const Shift& s);
/// s-Popov basis of R(mu, F).
PolyMat popov_relbas(const Field& k, const Poly& mu, const PolyMat& f, const Shift& s);

/// Basis of the column module of F, as an m x rank(F) matrix.
PolyMat column_basis(const Field& k, const PolyMat& f);

/// HNF basis of R(mu, c) for an m x 1 column with gcd(c_0, mu) = 1: mu at
/// (0, 0), -c_i / c_0 mod mu below it, ones on the rest of the diagonal.
/// Throws Error(kNotCoprime) if gcd(c_0, mu) != 1.
PolyMat relbas_onecol_hrow(const Field& k, const Poly& mu, const PolyMat& c);

/// The (1, 0) entry b of the HNF basis [[mu, 0], [b, 1]] of R(mu, [row0; rowi]).
/// Throws Error(kGcdNotOne) if the entries of row0 and mu are not coprime,
/// and Error(kHrowViolated) if that basis does not have this shape.
Poly relbas_tworow(const Field& k, const Poly& mu, const PolyMat& row0, const PolyMat& rowi);

/// deg det M = sum(rdeg_s M) - sum(s) for s-reduced M.
/// Throws Error(kNotReduced) otherwise.
std::int64_t det_degree_reduced(const Field& k, const PolyMat& m, const Shift& s);
/// Upper bound deg det M + max(s) - min(s) on the degree of adj(M).
std::int64_t adj_degree_bound(const Field& k, const PolyMat& m, const Shift& s);

}  // namespace hnfsub
