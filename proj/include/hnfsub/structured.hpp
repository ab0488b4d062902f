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

#include "hnfsub/field.hpp"
#include "hnfsub/fieldmat.hpp"
#include "hnfsub/polymat.hpp"

namespace hnfsub {

/// Z0 is the down-shift, Z1 the cyclic down-shift.
enum class DisplacementOp {
  kSylvester,          // Z0 M - M Z1^T
  kInverse,            // Z1^T N - N Z0
  kTransposedInverse,  // Z0^T X - X Z1
};

const char* to_string(DisplacementOp op) noexcept;

/// Generators (G, H), both n x alpha, with op(M) = G H^T.
struct DispGenField {
  DisplacementOp op = DisplacementOp::kSylvester;
  FieldMat g;
  FieldMat h;

  std::size_t n() const noexcept { return g.rows(); }
  std::size_t alpha() const noexcept { return g.cols(); }
};

struct DispGenPoly {
  DisplacementOp op = DisplacementOp::kSylvester;
  PolyMat g;
  PolyMat h;

  std::size_t n() const noexcept { return g.rows(); }
  std::size_t alpha() const noexcept { return g.cols(); }
  Degree degree() const noexcept { return std::max(g.degree(), h.degree()); }
};

/// op(M), computed by index shifts.
FieldMat apply_displacement(const Field& k, const FieldMat& m,
                            DisplacementOp op = DisplacementOp::kSylvester);
PolyMat apply_displacement(const Field& k, const PolyMat& m,
                           DisplacementOp op = DisplacementOp::kSylvester);

/// Generators with G H^T = D and alpha = rank(D).
DispGenField compress(const Field& k, const FieldMat& d,
                      DisplacementOp op = DisplacementOp::kSylvester);
DispGenPoly compress(const Field& k, const PolyMat& d,
                     DisplacementOp op = DisplacementOp::kSylvester);

/// The unique M with op(M) = G H^T. Throws Error(kShapeMismatch) if G and H differ in shape.
FieldMat reconstruct(const Field& k, const DispGenField& gen);
PolyMat reconstruct(const Field& k, const DispGenPoly& gen);

/// Generators of M(a).
DispGenField eval_at(const Field& k, const DispGenPoly& gen, Fp point);

struct InvFail {};
struct InvSingular {};
using InversionOutcome = std::variant<InvFail, InvSingular, DispGenField>;

/// Inversion of a Sylvester-structured matrix given by generators, returning
/// inverse-operator generators of M^{-1}. Implementations may report InvFail
/// with small probability, bounded in terms of the sample size s_size.
class InversionBackend {
 public:
  virtual ~InversionBackend() = default;
  virtual InversionOutcome invert(const Field& k, const DispGenField& gen, std::uint64_t s_size,
                                  Rng& rng) const = 0;
};

/// Dense baseline: reconstruct, Gauss-Jordan, then Gbar = -N G and
/// Hbar = N^T H, which satisfy Z1^T N - N Z0 = Gbar Hbar^T. Never fails.
class DenseInversion final : public InversionBackend {
 public:
  InversionOutcome invert(const Field& k, const DispGenField& gen, std::uint64_t s_size,
                          Rng& rng) const override;
};

const InversionBackend& default_inversion_backend();

/// Inverse-operator generators of M^{-1}, InvSingular iff M is singular.
InversionOutcome inv_structured(const Field& k, const DispGenField& gen, std::uint64_t s_size, Rng& rng,
                                const InversionBackend& backend = default_inversion_backend());

/// N Y for the matrix N represented by gen. Throws Error(kShapeMismatch).
FieldMat mul_inv_structured_dense(const Field& k, const DispGenField& gen, const FieldMat& y);

/// From Z1^T N - N Z0 = Gbar Hbar^T: the generators (-Hbar, Gbar) of N^T
/// for the operator Z0^T X - X Z1.
DispGenField left_generators(const Field& k, const DispGenField& gen);

/// X N computed as (N^T X^T)^T through left_generators.
FieldMat mul_dense_inv_structured(const Field& k, const FieldMat& x, const DispGenField& gen);

}  // namespace hnfsub
