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

#include "doctest.h"
#include "error_code.hpp"
#include "hnfsub/structured.hpp"
#include "oracles.hpp"

using namespace hnfsub;
using namespace hnfsub::testing;

namespace {

const Field k(2147483647);

constexpr DisplacementOp kOps[] = {DisplacementOp::kSylvester, DisplacementOp::kInverse,
                                   DisplacementOp::kTransposedInverse};

FieldMat explicit_op(const FieldMat& m, DisplacementOp op) {
  switch (op) {
    case DisplacementOp::kSylvester: return explicit_displacement(k, m);
    case DisplacementOp::kInverse: return explicit_inverse_displacement(k, m);
    case DisplacementOp::kTransposedInverse: return explicit_transposed_displacement(k, m);
  }
  return {};
}

FieldMat hankel(std::size_t n, Rng& rng) {
  std::vector<Fp> anti(2 * n - 1);
  for (auto& x : anti) x = rng.element(k);
  FieldMat t(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = anti[i + j];
  }
  return t;
}

DispGenField random_field_generators(std::size_t n, std::size_t alpha, Rng& rng) {
  return DispGenField{DisplacementOp::kSylvester, random_fieldmat(k, n, alpha, rng), random_fieldmat(k, n, alpha, rng)};
}

}  // namespace

TEST_CASE("index-shift displacement equals the materialized operators") {
  Rng rng(1);
  for (std::size_t n : {1, 2, 5, 9}) {
    const FieldMat m = random_fieldmat(k, n, n, rng);
    for (DisplacementOp op : kOps) CHECK(apply_displacement(k, m, op) == explicit_op(m, op));
  }
}

TEST_CASE("operator names") {
  CHECK(std::string(to_string(DisplacementOp::kSylvester)) != to_string(DisplacementOp::kInverse));
}

TEST_CASE("compression and reconstruction over the field") {
  Rng rng(2);
  for (std::size_t n : {1, 3, 8, 13}) {
    for (DisplacementOp op : kOps) {
      const FieldMat m = random_fieldmat(k, n, n, rng);
      const FieldMat d = apply_displacement(k, m, op);
      const DispGenField gen = compress(k, d, op);
      CHECK(gen.op == op);
      CHECK(gen.alpha() == rank(k, d));
      CHECK(mul(k, gen.g, transpose(gen.h)) == d);
      CHECK(reconstruct(k, gen) == m);
    }
  }
}

TEST_CASE("Hankel matrices have displacement rank at most two") {
  Rng rng(3);
  for (std::size_t n : {2, 6, 11}) {
    const FieldMat t = hankel(n, rng);
    const DispGenField gen = compress(k, apply_displacement(k, t));
    CHECK(gen.alpha() <= 2);
    CHECK(reconstruct(k, gen) == t);
  }
}

TEST_CASE("polynomial generators reconstruct pointwise") {
  Rng rng(4);
  for (std::size_t n : {1, 4, 7}) {
    const DispGenPoly gen = random_generators(k, n, 2, 2, rng);
    const PolyMat m = reconstruct(k, gen);
    CHECK(apply_displacement(k, m) == mul(k, gen.g, transpose(gen.h)));
    const Fp pt{987654};
    CHECK(reconstruct(k, eval_at(k, gen, pt)) == eval_at(k, m, pt));
    const DispGenPoly c = compress(k, apply_displacement(k, m));
    CHECK(c.alpha() <= 2);
    CHECK(reconstruct(k, c) == m);
  }
  const DispGenPoly bad{DisplacementOp::kSylvester, PolyMat(3, 2), PolyMat(3, 1)};
  CHECK(error_code([&] { reconstruct(k, bad); }) == ErrorCode::kShapeMismatch);
}

TEST_CASE("structured inversion") {
  Rng rng(5);
  for (std::size_t n : {1, 2, 6, 10}) {
    const DispGenField gen = random_field_generators(n, 2, rng);
    const FieldMat m = reconstruct(k, gen);
    const auto inv = inverse(k, m);
    REQUIRE(inv.has_value());
    const InversionOutcome out = inv_structured(k, gen, 1000, rng);
    REQUIRE(std::holds_alternative<DispGenField>(out));
    const DispGenField& ng = std::get<DispGenField>(out);
    CHECK(ng.op == DisplacementOp::kInverse);
    CHECK(ng.alpha() <= gen.alpha() + 2);
    CHECK(reconstruct(k, ng) == *inv);
    CHECK(explicit_inverse_displacement(k, *inv) == mul(k, ng.g, transpose(ng.h)));

    const FieldMat y = random_fieldmat(k, n, 3, rng);
    CHECK(mul_inv_structured_dense(k, ng, y) == mul(k, *inv, y));
    const FieldMat x = random_fieldmat(k, 2, n, rng);
    CHECK(mul_dense_inv_structured(k, x, ng) == mul(k, x, *inv));

    const DispGenField lg = left_generators(k, ng);
    CHECK(lg.op == DisplacementOp::kTransposedInverse);
    CHECK(reconstruct(k, lg) == transpose(*inv));
  }
  // rank-deficient: G H^T = 0 gives the zero matrix
  const DispGenField zero{DisplacementOp::kSylvester, FieldMat(3, 1), FieldMat(3, 1)};
  CHECK(std::holds_alternative<InvSingular>(inv_structured(k, zero, 1000, rng)));
  const DispGenField ng = std::get<DispGenField>(inv_structured(k, random_field_generators(3, 1, rng), 1000, rng));
  CHECK(error_code([&] { mul_inv_structured_dense(k, ng, FieldMat(2, 2)); }) == ErrorCode::kShapeMismatch);
}
