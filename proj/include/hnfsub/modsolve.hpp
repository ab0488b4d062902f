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
#include <variant>
#include <vector>

#include "hnfsub/field.hpp"
#include "hnfsub/polymat.hpp"
#include "hnfsub/structured.hpp"

namespace hnfsub {

/// Randomized failure reported by a Las Vegas step.
struct Fail {
  friend bool operator==(const Fail&, const Fail&) = default;
};

/// det M vanished at the last of these points and at none of the earlier ones.
struct Singular {
  std::vector<Fp> points;
  friend bool operator==(const Singular&, const Singular&) = default;
};

/// Singular at points[index] for the per-point solvers.
struct SingularAt {
  std::size_t index = 0;
  friend bool operator==(const SingularAt&, const SingularAt&) = default;
};

struct SolveSuccess {
  Poly a;                  // prod (x - a_i), coprime with det M
  PolyMat f;               // M^{-1} Y mod A (right) or X M^{-1} mod A (left)
  std::vector<Fp> points;  // the a_i in sampling order
};

using PointSolveOutcome = std::variant<Fail, SingularAt, PolyMat>;
using SolveOutcome = std::variant<Fail, Singular, SolveSuccess>;

/// F with M F = Y mod prod (x - a_i) and deg F < Delta, Delta = |points|.
/// Points are inspected in order; the first Fail or singular point is reported.
/// Throws Error(kDuplicatePoints) and Error(kDegreeTooHigh) if deg Y >= Delta.
PointSolveOutcome right_solve_with_points(const Field& k, const DispGenPoly& gen, const PolyMat& y,
                                          std::span<const Fp> points, std::uint64_t s_size, Rng& rng,
                                          const InversionBackend& backend = default_inversion_backend());

/// F with F M = X mod prod (x - a_i) and deg F < Delta.
PointSolveOutcome left_solve_with_points(const Field& k, const DispGenPoly& gen, const PolyMat& x,
                                         std::span<const Fp> points, std::uint64_t s_size, Rng& rng,
                                         const InversionBackend& backend = default_inversion_backend());

/// Samples Delta distinct points from S = {0, ..., s_size - 1} and solves
/// modulo their product. Returns Fail if the field has fewer than Delta
/// elements. Throws Error(kFieldTooSmall) if s_size exceeds the field
/// cardinality and Error(kTooFewPoints) if Delta > s_size.
SolveOutcome modular_right_solve(const Field& k, const DispGenPoly& gen, const PolyMat& y, std::size_t delta,
                                 std::uint64_t s_size, Rng& rng,
                                 const InversionBackend& backend = default_inversion_backend());

SolveOutcome modular_left_solve(const Field& k, const DispGenPoly& gen, const PolyMat& x, std::size_t delta,
                                std::uint64_t s_size, Rng& rng,
                                const InversionBackend& backend = default_inversion_backend());

/// 8 Delta max(n (n + 1), 2 D), saturating at 2^64 - 1.
std::uint64_t recommended_sample_size(std::size_t n, std::size_t delta, std::size_t det_bound);

}  // namespace hnfsub
