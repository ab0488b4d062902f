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
#include <optional>
#include <vector>

#include "hnfsub/field.hpp"

namespace hnfsub {

/// Dense row-major matrix over a prime field.
class FieldMat {
 public:
  FieldMat() = default;
  FieldMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static FieldMat identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Fp& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Fp operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const noexcept;

  friend bool operator==(const FieldMat&, const FieldMat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> a_;
};

/// Throws Error(kShapeMismatch) on incompatible shapes.
FieldMat mul(const Field& k, const FieldMat& a, const FieldMat& b);
FieldMat add(const Field& k, const FieldMat& a, const FieldMat& b);
FieldMat sub(const Field& k, const FieldMat& a, const FieldMat& b);
FieldMat neg(const Field& k, const FieldMat& a);
FieldMat transpose(const FieldMat& a);
/// Columns [first, first + count).
FieldMat col_slice(const FieldMat& a, std::size_t first, std::size_t count);

std::size_t rank(const Field& k, FieldMat a);
Fp det(const Field& k, FieldMat a);
/// Gauss-Jordan inverse; nullopt when singular.
std::optional<FieldMat> inverse(const Field& k, const FieldMat& a);

/// a = left * right with left rows x r, right r x cols, r = rank(a).
struct RankFactorization {
  FieldMat left;
  FieldMat right;
};
RankFactorization rank_factorize(const Field& k, const FieldMat& a);

FieldMat random_fieldmat(const Field& k, std::size_t rows, std::size_t cols, Rng& rng);

}  // namespace hnfsub
