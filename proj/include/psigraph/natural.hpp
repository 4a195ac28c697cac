// Copyright 2026 The psigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSIGRAPH_NATURAL_HPP
#define PSIGRAPH_NATURAL_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace psigraph {

using u128 = unsigned __int128;

/// Exact non-negative integer of unbounded size.
///
/// Values that fit in 128 bits are held inline and operated on with
/// overflow-checked native arithmetic; anything larger is promoted to an
/// arbitrary-precision representation. Results are demoted back to the
/// inline form whenever they fit, unless an UnboundedScope is active on the
/// current thread, in which case every result stays on the unbounded path.
class Natural {
 public:
  using Big = boost::multiprecision::cpp_int;

  Natural() = default;
  /// Any built-in integer; negative values throw std::domain_error.
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Natural(T v)  // NOLINT(google-explicit-constructor)
      : Natural(std::in_place, checked(v)) {}
  static Natural from_u128(u128 v);
  static Natural from_big(const Big& v);

  /// Parses a non-empty run of decimal digits.
  static Natural parse(std::string_view text);

  bool is_inline() const { return std::holds_alternative<u128>(rep_); }
  bool is_zero() const;
  bool is_one() const;

  std::optional<u128> to_u128() const;
  std::optional<std::uint64_t> to_u64() const;
  Big to_big() const;
  std::string to_string() const;

  /// Number of significant bits; 0 for zero.
  unsigned bit_length() const;

  Natural& operator+=(const Natural& rhs);
  /// Throws std::domain_error if rhs > *this.
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  /// Throws std::domain_error on division by zero.
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

  friend bool operator==(const Natural& a, const Natural& b);
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b);

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  Natural(std::in_place_t, std::uint64_t v);

  template <std::integral T>
  static std::uint64_t checked(T v) {
    if constexpr (std::is_signed_v<T>) {
      if (v < 0) throw std::domain_error("Natural: negative value");
    }
    return static_cast<std::uint64_t>(v);
  }

  void normalize();

  std::variant<u128, Big> rep_{u128{0}};
};

/// a | b. Requires a >= 1.
bool divides(const Natural& a, const Natural& b);
Natural gcd(Natural a, Natural b);
Natural pow(const Natural& base, unsigned exponent);

/// While alive, all Natural arithmetic on this thread stays on the
/// unbounded representation. Nests.
class UnboundedScope {
 public:
  UnboundedScope();
  ~UnboundedScope();
  UnboundedScope(const UnboundedScope&) = delete;
  UnboundedScope& operator=(const UnboundedScope&) = delete;

  static bool active();
};

std::string to_string(u128 v);

}  // namespace psigraph

#endif  // PSIGRAPH_NATURAL_HPP
