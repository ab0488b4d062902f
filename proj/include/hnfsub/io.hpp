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

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "hnfsub/bivar.hpp"
#include "hnfsub/field.hpp"
#include "hnfsub/polymat.hpp"
#include "hnfsub/structured.hpp"

namespace hnfsub {

// Text formats. Every Poly occupies one line of ascending coefficients
// ("0" or an empty line for zero). Lines starting with '#' are ignored.
//
//   matrix:      "rows cols", then rows * cols entries, row-major
//   generators:  "n alpha d", then G (n * alpha entries), then H
//   basis file:  "p ell", then per polynomial "ny" and ny lines for y^0 .. y^{ny-1}

void write_polymat(std::ostream& os, const PolyMat& m);
/// Throws Error(kParse) on malformed input.
PolyMat read_polymat(const Field& k, std::istream& is);

void write_generators(std::ostream& os, const DispGenPoly& gen);
DispGenPoly read_generators(const Field& k, std::istream& is);

/// A matrix or a generator file, told apart by the header field count.
using MatrixInput = std::variant<PolyMat, DispGenPoly>;
MatrixInput read_matrix_input(const Field& k, std::istream& is);

void write_basis(std::ostream& os, std::uint64_t p, const std::vector<BivPoly>& polys);

struct BasisFile {
  std::uint64_t p = 0;
  std::vector<BivPoly> polys;
};
/// The polynomials are parsed in the field named by the header.
BasisFile read_basis(std::istream& is);

}  // namespace hnfsub
