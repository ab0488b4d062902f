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

#include "hnfsub/fieldmat.hpp"

#include <algorithm>
#include <utility>

#include "hnfsub/error.hpp"

namespace hnfsub {

namespace {

void require_same_shape(const FieldMat& a, const FieldMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch, "matrix shapes differ");
  }
}

void swap_rows(FieldMat& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const Field& k, FieldMat& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c).v == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    const Fp inv = k.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = k.mul(a(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).v == 0) continue;
      const Fp f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = k.sub(a(i, j), k.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

FieldMat FieldMat::identity(std::size_t n) {
  FieldMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp{1};
  return m;
}

bool FieldMat::is_zero() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](Fp x) { return x.v == 0; });
}

FieldMat mul(const Field& k, const FieldMat& a, const FieldMat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kShapeMismatch, "inner dimensions differ");
  FieldMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const Fp x = a(i, t);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = k.add(c(i, j), k.mul(x, b(t, j)));
    }
  }
  return c;
}

FieldMat add(const Field& k, const FieldMat& a, const FieldMat& b) {
  require_same_shape(a, b);
  FieldMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.add(a(i, j), b(i, j));
  return c;
}

FieldMat sub(const Field& k, const FieldMat& a, const FieldMat& b) {
  require_same_shape(a, b);
  FieldMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.sub(a(i, j), b(i, j));
  return c;
}

FieldMat neg(const Field& k, const FieldMat& a) {
  FieldMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = k.neg(a(i, j));
  return c;
}

FieldMat transpose(const FieldMat& a) {
  FieldMat t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

FieldMat col_slice(const FieldMat& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) throw Error(ErrorCode::kShapeMismatch, "column slice out of range");
  FieldMat s(a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) s(i, j) = a(i, first + j);
  return s;
}

std::size_t rank(const Field& k, FieldMat a) { return rref(k, a).size(); }

Fp det(const Field& k, FieldMat a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kShapeMismatch, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Fp d{1};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).v == 0) ++p;
    if (p == n) return Fp{0};
    if (p != c) {
      swap_rows(a, c, p);
      d = k.neg(d);
    }
    d = k.mul(d, a(c, c));
    const Fp inv = k.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).v == 0) continue;
      const Fp f = k.mul(a(i, c), inv);
      for (std::size_t j = c; j < n; ++j) a(i, j) = k.sub(a(i, j), k.mul(f, a(c, j)));
    }
  }
  return d;
}

std::optional<FieldMat> inverse(const Field& k, const FieldMat& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  FieldMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = Fp{1};
  }
  const auto pivots = rref(k, aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  return col_slice(aug, n, n);
}

RankFactorization rank_factorize(const Field& k, const FieldMat& a) {
  FieldMat e = a;
  const auto pivots = rref(k, e);
  const std::size_t r = pivots.size();
  // a = a[:, pivots] * rref rows.
  RankFactorization f{FieldMat(a.rows(), r), FieldMat(r, a.cols())};
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t i = 0; i < a.rows(); ++i) f.left(i, t) = a(i, pivots[t]);
    for (std::size_t j = 0; j < a.cols(); ++j) f.right(t, j) = e(t, j);
  }
  return f;
}

FieldMat random_fieldmat(const Field& k, std::size_t rows, std::size_t cols, Rng& rng) {
  FieldMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element(k);
  return m;
}

}  // namespace hnfsub
