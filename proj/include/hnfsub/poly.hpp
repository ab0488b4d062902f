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
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hnfsub/degree.hpp"
#include "hnfsub/field.hpp"

namespace hnfsub {

/// Dense univariate polynomial over a prime field.
///
/// Coefficients are stored in ascending degree with trailing zeros removed,
/// so the zero polynomial is the empty vector. A Poly does not remember its
/// field; every arithmetic function takes the Field explicitly.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Fp> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Poly constant(Fp c) { return Poly(std::vector<Fp>{c}); }
  static Poly one() { return constant(Fp{1}); }
  /// c * x^k
  static Poly monomial(Fp c, std::size_t k);
  /// x - a
  static Poly linear(const Field& k, Fp a);
  /// Reduces signed integer coefficients into the field.
  static Poly from_ints(const Field& k, std::span<const std::int64_t> coeffs);

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0].v == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  /// Number of stored coefficients, i.e. degree + 1 (0 for zero).
  std::size_t size() const noexcept { return c_.size(); }
  Degree degree() const noexcept {
    return c_.empty() ? Degree::neg_inf() : Degree(static_cast<std::int64_t>(c_.size()) - 1);
  }
  /// Coefficient of x^i, zero beyond the degree.
  Fp coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Fp{0}; }
  /// Leading coefficient; zero for the zero polynomial.
  Fp lead() const noexcept { return c_.empty() ? Fp{0} : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back().v == 1; }

  const std::vector<Fp>& coeffs() const noexcept { return c_; }

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
  }

  std::vector<Fp> c_;
};

Poly add(const Field& k, const Poly& a, const Poly& b);
Poly sub(const Field& k, const Poly& a, const Poly& b);
Poly neg(const Field& k, const Poly& a);
Poly scale(const Field& k, const Poly& a, Fp c);
/// a * x^s
Poly shift(const Poly& a, std::size_t s);
/// a mod x^len
Poly truncate(const Poly& a, std::size_t len);
Poly derivative(const Field& k, const Poly& a);

/// Schoolbook below a size threshold, Karatsuba above.
Poly mul(const Field& k, const Poly& a, const Poly& b);

/// Euclidean division a = q*b + r with deg r < deg b. Throws
/// Error(kZeroInput) when b is zero.
std::pair<Poly, Poly> divrem(const Field& k, const Poly& a, const Poly& b);
Poly quo(const Field& k, const Poly& a, const Poly& b);
Poly rem(const Field& k, const Poly& a, const Poly& b);
/// Quotient of an exact division; throws Error(kNoSolution) if b does not divide a.
Poly exact_quo(const Field& k, const Poly& a, const Poly& b);
bool divides(const Field& k, const Poly& b, const Poly& a);
Poly mul_mod(const Field& k, const Poly& a, const Poly& b, const Poly& modulus);

/// Zero stays zero; otherwise divides by the leading coefficient.
Poly monic(const Field& k, const Poly& a);

Fp eval(const Field& k, const Poly& f, Fp point);

struct Xgcd {
  Poly g;  // monic gcd
  Poly u;
  Poly v;  // u*a + v*b = g
};

/// Throws Error(kBothZero) if a = b = 0.
Xgcd xgcd(const Field& k, const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Field& k, const Poly& a, const Poly& b);
/// Monic lcm of two nonzero polynomials.
Poly lcm(const Field& k, const Poly& a, const Poly& b);
/// Monic lcm of a list of nonzero polynomials via a balanced product tree.
/// Throws Error(kZeroInput) if the list is empty or holds a zero.
Poly lcm_tree(const Field& k, std::span<const Poly> polys);

/// Inverse of c modulo mu, reduced below deg mu. Throws Error(kNotCoprime)
/// when gcd(c, mu) != 1 and Error(kZeroInput) when mu = 0.
Poly mod_inverse(const Field& k, const Poly& c, const Poly& mu);

struct Fraction {
  Poly num;  // f
  Poly den;  // g, monic
};

/// Finds (f, g) with g*F = f mod A, deg f <= num_bound, deg g <= den_bound,
/// gcd(f, g) = 1 and g monic, by stopping the extended Euclidean algorithm
/// on (A, F) at the first remainder of degree <= num_bound.
///
/// Requires num_bound + den_bound < deg A. Throws Error(kNoSolution) when
/// the cut produces a pair that violates the degree or coprimality
/// constraints, which happens exactly when no such fraction exists.
Fraction rational_reconstruct(const Field& k, const Poly& F, const Poly& A,
                              std::int64_t num_bound, std::int64_t den_bound);

/// prod (x - a_i)
Poly product_of_linears(const Field& k, std::span<const Fp> points);

/// Subproduct tree over a fixed list of points, reused for many
/// evaluations and interpolations at those points. Small instances fall
/// back to Horner evaluation and Lagrange interpolation.
class SubproductTree {
 public:
  /// Throws Error(kDuplicatePoints) unless the points are pairwise distinct.
  SubproductTree(const Field& k, std::vector<Fp> points);

  const std::vector<Fp>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// prod (x - a_i)
  const Poly& root() const noexcept { return levels_.back().front(); }

  std::vector<Fp> evaluate(const Poly& f) const;
  /// Unique polynomial of degree < size() with the given values.
  Poly interpolate(std::span<const Fp> values) const;

 private:
  void remainder_down(const Poly& f, std::size_t level, std::size_t index,
                      std::vector<Fp>& out) const;
  Poly combine_up(std::span<const Fp> scaled) const;

  const Field* k_;
  std::vector<Fp> points_;
  // levels_[0] holds the linear factors, levels_.back() the single root.
  std::vector<std::vector<Poly>> levels_;
  // 1 / A'(a_i), filled lazily by the first interpolation.
  mutable std::vector<Fp> weights_;
};

std::vector<Fp> multipoint_eval(const Field& k, const Poly& f, std::span<const Fp> points);
/// Throws Error(kDuplicatePoints) and Error(kInvalidArgument) on size mismatch.
Poly interpolate(const Field& k, std::span<const Fp> points, std::span<const Fp> values);

/// Space-separated ascending coefficients, e.g. "1 0 3" for 3x^2 + 1; the
/// zero polynomial prints as "0".
std::string to_text(const Poly& f);
/// Parses the text form; signed integers are reduced into the field.
Poly poly_from_text(const Field& k, const std::string& line);

}  // namespace hnfsub
