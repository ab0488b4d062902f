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
#include <cstdint>
#include <optional>
#include <ostream>

namespace hnfsub {

/// Degree of a polynomial or matrix: a non-negative integer, or -infinity
/// for zero. Shifting -infinity by any finite amount leaves it unchanged.
class Degree {
 public:
  constexpr Degree() = default;  // -infinity
  constexpr explicit Degree(std::int64_t d) : d_(d) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const noexcept { return !d_.has_value(); }
  constexpr bool is_finite() const noexcept { return d_.has_value(); }
  /// Requires is_finite().
  constexpr std::int64_t value() const { return d_.value(); }

  constexpr Degree operator+(std::int64_t shift) const {
    return d_ ? Degree(*d_ + shift) : Degree();
  }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (!a.d_ || !b.d_) return a.d_.has_value() <=> b.d_.has_value();
    return *a.d_ <=> *b.d_;
  }
  friend constexpr bool operator==(const Degree& a, std::int64_t b) { return a.d_ == b; }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, std::int64_t b) {
    return a <=> Degree(b);
  }

 private:
  std::optional<std::int64_t> d_;
};

inline std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_neg_inf()) return os << "-inf";
  return os << d.value();
}

}  // namespace hnfsub
