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
#include <variant>
#include <vector>

#include "hnfsub/modsolve.hpp"
#include "hnfsub/polymat.hpp"
#include "hnfsub/structured.hpp"

namespace hnfsub {

/// det: D >= deg det M; adj: Da >= deg adj M. det_exact records that the
/// caller asserts D = deg det M.
struct DegreeBounds {
  std::int64_t det = 0;
  std::int64_t adj = 0;
  bool det_exact = false;

  /// Delta = D + Da + 1
  std::size_t delta() const noexcept { return static_cast<std::size_t>(det + adj + 1); }
};

/// (mu, mu N_{*,J}) or (mu, mu N_{J,*}) with mu the monic least common denominator.
struct InverseSlice {
  Poly mu;
  PolyMat s;
  std::vector<Fp> points;
};

using SliceOutcome = std::variant<Fail, Singular, InverseSlice>;

/// Columns J of M^{-1} by modular solving with Delta = D + Da + 1 and
/// rational reconstruction of each entry with numerator degree <= Da and
/// denominator degree <= D.
SliceOutcome inverse_cols(const Field& k, const DispGenPoly& gen, const IndexTuple& j, const DegreeBounds& bounds,
                          std::uint64_t s_size, Rng& rng,
                          const InversionBackend& backend = default_inversion_backend());

/// Rows J of M^{-1}, the left-solving twin of inverse_cols.
SliceOutcome inverse_rows(const Field& k, const DispGenPoly& gen, const IndexTuple& j, const DegreeBounds& bounds,
                          std::uint64_t s_size, Rng& rng,
                          const InversionBackend& backend = default_inversion_backend());

enum class Branch { kHcolHrow, kHcol, kHrow, kGeneral };
enum class Cert { kTrue, kUnknown };

const char* to_string(Branch b) noexcept;
const char* to_string(Cert c) noexcept;

struct HnfSubResult {
  PolyMat b;  // HNF basis of the module M_J
  Cert cert = Cert::kUnknown;
  Branch branch = Branch::kGeneral;
  Poly mu;
  std::vector<Fp> col_points;  // points of the column solve
  std::vector<Fp> row_points;  // points of the row solve, empty if skipped
};

using HnfSubOutcome = std::variant<Fail, Singular, HnfSubResult>;

/// The HNF basis B of M_J, with cert = True guaranteeing B = H_{J,J} for
/// the HNF H of M. Requires 1 <= m <= n and j_0 = 0; throws
/// Error(kInvalidArgument) otherwise.
HnfSubOutcome hermite_submatrix(const Field& k, const DispGenPoly& gen, const IndexTuple& j,
                                const DegreeBounds& bounds, std::uint64_t s_size, Rng& rng,
                                const InversionBackend& backend = default_inversion_backend());

/// True iff deg B_00 + ... + deg B_mm = D for some prefix {0, ..., m} of J.
bool check_fills_space(const PolyMat& b, const IndexTuple& j, std::int64_t det_degree);

}  // namespace hnfsub
