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

#include "hnfsub/field.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "hnfsub/error.hpp"

namespace hnfsub {
namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace

// Miller-Rabin with the first twelve prime bases, which is exact below 2^64.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kBases) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field::Field(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 63U) || !is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, "modulus " + std::to_string(p) +
                                          " is not an odd prime below 2^63");
  }
}

Fp Field::from_int(std::int64_t x) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return Fp{static_cast<std::uint64_t>(r)};
}

std::int64_t Field::to_signed(Fp a) const noexcept {
  if (a.v > p_ / 2) return -static_cast<std::int64_t>(p_ - a.v);
  return static_cast<std::int64_t>(a.v);
}

Fp Field::mul(Fp a, Fp b) const noexcept { return Fp{mulmod(a.v, b.v, p_)}; }

Fp Field::pow(Fp a, std::uint64_t e) const noexcept { return Fp{powmod(a.v, e, p_)}; }

Fp Field::inv(Fp a) const {
  if (a.v == 0) throw Error(ErrorCode::kZeroInverse, "inverse of zero");
  // Extended Euclid on (a, p); the signed cofactor stays below p in magnitude.
  std::int64_t t0 = 0, t1 = 1;
  std::uint64_t r0 = p_, r1 = a.v;
  while (r1 != 0) {
    const std::uint64_t q = r0 / r1;
    const std::uint64_t r2 = r0 - q * r1;
    const std::int64_t t2 = t0 - static_cast<std::int64_t>(q) * t1;
    r0 = r1;
    r1 = r2;
    t0 = t1;
    t1 = t2;
  }
  return from_int(t0);
}

std::uint64_t Rng::uniform(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(engine_);
}

std::vector<Fp> sample_distinct_subset(const Field& k, std::uint64_t s_size, std::size_t count,
                                       Rng& rng) {
  if (s_size > k.modulus()) {
    throw Error(ErrorCode::kFieldTooSmall, "sample set of size " + std::to_string(s_size) +
                                               " exceeds field cardinality " +
                                               std::to_string(k.modulus()));
  }
  if (count > s_size) {
    throw Error(ErrorCode::kTooFewPoints, "cannot draw " + std::to_string(count) +
                                              " distinct points from a set of size " +
                                              std::to_string(s_size));
  }
  // Floyd's algorithm gives a uniform subset; the shuffle makes the order
  // uniform too, which matters because callers scan points in order.
  std::vector<Fp> out;
  out.reserve(count);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(count * 2);
  for (std::uint64_t j = s_size - count; j < s_size; ++j) {
    const std::uint64_t t = rng.uniform(j + 1);
    const std::uint64_t pick = seen.insert(t).second ? t : j;
    if (pick == j) seen.insert(j);
    out.push_back(Fp{pick});
  }
  std::shuffle(out.begin(), out.end(), rng.engine());
  return out;
}

}  // namespace hnfsub
