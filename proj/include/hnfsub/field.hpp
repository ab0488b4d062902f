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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

namespace hnfsub {

/// Element of Z/pZ, always kept in canonical form 0 <= v < p.
struct Fp {
  std::uint64_t v = 0;

  friend constexpr bool operator==(Fp, Fp) = default;
  friend constexpr auto operator<=>(Fp, Fp) = default;
};

inline std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v; }

bool is_prime(std::uint64_t n) noexcept;

/// Prime field Z/pZ for an odd prime p < 2^63.
///
/// Products go through 128-bit intermediates, so any word-size prime below
/// 2^63 works without special reduction tricks.
class Field {
 public:
  /// Throws Error(kNotPrime) unless p is an odd prime below 2^63.
  explicit Field(std::uint64_t p);

  std::uint64_t modulus() const noexcept { return p_; }

  Fp zero() const noexcept { return Fp{0}; }
  Fp one() const noexcept { return Fp{1}; }

  Fp from_uint(std::uint64_t x) const noexcept { return Fp{x % p_}; }
  Fp from_int(std::int64_t x) const noexcept;
  /// Centered lift in (-p/2, p/2]; handy for printing small negatives.
  std::int64_t to_signed(Fp a) const noexcept;

  Fp add(Fp a, Fp b) const noexcept {
    const std::uint64_t s = a.v + b.v;
    return Fp{s >= p_ ? s - p_ : s};
  }
  Fp sub(Fp a, Fp b) const noexcept { return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)}; }
  Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
  Fp mul(Fp a, Fp b) const noexcept;
  Fp pow(Fp a, std::uint64_t e) const noexcept;
  /// Throws Error(kZeroInverse) on a = 0.
  Fp inv(Fp a) const;
  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

/// Deterministic 64-bit random stream. Never shared between concurrent
/// tasks: hand each task its own fork().
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform(std::uint64_t bound);
  Fp element(const Field& k) { return Fp{uniform(k.modulus())}; }
  Fp nonzero(const Field& k) { return Fp{1 + uniform(k.modulus() - 1)}; }
  /// Independent child stream, seeded from this one.
  Rng fork() { return Rng(engine_()); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Draws `count` pairwise distinct elements from S = {0, ..., s_size - 1},
/// uniformly among all subsets of that cardinality, returned in uniformly
/// random order.
///
/// Throws Error(kTooFewPoints) if count > s_size and Error(kFieldTooSmall)
/// if s_size exceeds the field cardinality.
std::vector<Fp> sample_distinct_subset(const Field& k, std::uint64_t s_size, std::size_t count,
                                       Rng& rng);

}  // namespace hnfsub
