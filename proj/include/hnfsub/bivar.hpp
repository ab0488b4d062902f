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
#include <optional>
#include <variant>
#include <vector>

#include "hnfsub/hnfcore.hpp"
#include "hnfsub/poly.hpp"
#include "hnfsub/polymat.hpp"
#include "hnfsub/structured.hpp"

namespace hnfsub {

/// Bivariate polynomial in K[x][y]: ycoeff(i) is the coefficient of y^i.
class BivPoly {
 public:
  BivPoly() = default;
  explicit BivPoly(std::vector<Poly> ycoeffs) : y_(std::move(ycoeffs)) { normalize(); }

  bool is_zero() const noexcept { return y_.empty(); }
  Degree ydeg() const noexcept {
    return y_.empty() ? Degree::neg_inf() : Degree(static_cast<std::int64_t>(y_.size()) - 1);
  }
  Degree xdeg() const noexcept;
  Degree tdeg() const noexcept;
  /// Coefficient of y^i, zero beyond ydeg.
  const Poly& ycoeff(std::size_t i) const noexcept;
  /// Coefficient of x^j y^i.
  Fp term(std::size_t i, std::size_t j) const noexcept { return ycoeff(i).coeff(j); }
  const std::vector<Poly>& ycoeffs() const noexcept { return y_; }

  friend bool operator==(const BivPoly&, const BivPoly&) = default;

 private:
  void normalize() {
    while (!y_.empty() && y_.back().is_zero()) y_.pop_back();
  }

  std::vector<Poly> y_;
};

/// y^i x^j
struct Monomial {
  std::int64_t y = 0;
  std::int64_t x = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// DRL order with x < y: total degree first, then the larger y-degree wins.
bool drl_less(const Monomial& a, const Monomial& b) noexcept;
/// Throws Error(kZeroPolynomial) on f = 0.
Monomial drl_leading_monomial(const BivPoly& f);

/// Minimal DRL Groebner basis sorted by increasing y-degree of the leading monomial.
struct DrlBasis {
  std::vector<BivPoly> polys;
};

/// Remainder of f by DRL division against the basis; zero iff f lies in
/// the ideal when gb is a Groebner basis.
BivPoly drl_normal_form(const Field& k, const BivPoly& f, const DrlBasis& gb);

struct Staircase {
  std::vector<std::size_t> n_i;
  std::size_t n = 0;
  std::int64_t D = 0;  // ideal degree, sum over i < l - 1 of n_i xdeg(lm g_i)
  std::vector<std::size_t> offsets;  // first row of each block
};

/// Throws Error(kNotMinimalBasis) unless the leading monomials form a
/// minimal staircase: l >= 2, a pure x power first, a pure y power last,
/// y-degrees strictly increasing and x-degrees strictly decreasing.
Staircase build_staircase(const DrlBasis& gb);

/// Rows y^k g_i on the basis (1, y, ..., y^{n-1}).
PolyMat build_matrix(const DrlBasis& gb, const Staircase& st);

/// y (f - f_{n-1} y^{n-1}) + f_{n-1}. Throws Error(kDegreeTooHigh) if ydeg f >= n.
BivPoly psi(const Field& k, const BivPoly& f, std::size_t n);

/// Generators of L M, L the row reversal: G has columns e_{m_k} for
/// m_k = n - (n_0 + ... + n_k), H the y-coefficients of g_{k+1} - psi(y^{n_k - 1} g_k)
/// for k < l - 1 and of -psi(y^{n_{l-1} - 1} g_{l-1}) for k = l - 1.
DispGenPoly displacement_generators_lm(const Field& k, const DrlBasis& gb, const Staircase& st);

/// L M
PolyMat reverse_rows(const PolyMat& m);

struct LexBasis {
  std::vector<BivPoly> polys;
  bool reduced = false;
  /// A y-monic element was found within the rows of B.
  bool complete = false;
};

/// Rows of B whose diagonal degree is smaller than every earlier one, up to
/// and including the first row with a constant diagonal; row i maps to
/// sum_j B_ij y^j.
LexBasis extract_lex(const PolyMat& b);

/// Number of monomials under the lex staircase of a basis from extract_lex.
std::int64_t lex_standard_monomials(const LexBasis& lex);

struct ChangeOrderOptions {
  std::optional<std::size_t> m_hint;    // defaults to 2
  std::optional<std::uint64_t> s_size;  // defaults to recommended_sample_size
};

struct ChangeOrderResult {
  LexBasis lex;
  Staircase staircase;
  std::size_t alpha = 0;
  std::size_t m = 0;
  std::size_t doublings = 0;
  Branch branch = Branch::kGeneral;
  Cert cert = Cert::kUnknown;
};

using ChangeOrderOutcome = std::variant<Fail, Singular, ChangeOrderResult>;

/// Reduced lex basis from a minimal DRL basis, doubling m until the
/// leading principal HNF submatrix contains a y-monic row.
ChangeOrderOutcome change_order(const Field& k, const DrlBasis& gb, const ChangeOrderOptions& options, Rng& rng,
                                const InversionBackend& backend = default_inversion_backend());

}  // namespace hnfsub
