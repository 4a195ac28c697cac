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

#include "psigraph/natural.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace psigraph {

namespace {

thread_local int unbounded_depth = 0;

Natural::Big u128_to_big(u128 v) {
  Natural::Big hi = static_cast<std::uint64_t>(v >> 64);
  hi <<= 64;
  hi += static_cast<std::uint64_t>(v);
  return hi;
}

const Natural::Big& u128_max_big() {
  static const Natural::Big m = u128_to_big(~u128{0});
  return m;
}

}  // namespace

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

UnboundedScope::UnboundedScope() { ++unbounded_depth; }
UnboundedScope::~UnboundedScope() { --unbounded_depth; }
bool UnboundedScope::active() { return unbounded_depth > 0; }

Natural::Natural(std::in_place_t, std::uint64_t v) : rep_(u128{v}) { normalize(); }

Natural Natural::from_u128(u128 v) {
  Natural n;
  n.rep_ = v;
  n.normalize();
  return n;
}

Natural Natural::from_big(const Big& v) {
  if (v < 0) throw std::domain_error("Natural: negative value");
  Natural n;
  n.rep_ = v;
  n.normalize();
  return n;
}

Natural Natural::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Natural: empty string");
  Natural result;
  const Natural ten{10};
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Natural: not a decimal digit string: " + std::string(text));
    }
    result *= ten;
    result += Natural{c - '0'};
  }
  return result;
}

void Natural::normalize() {
  if (UnboundedScope::active()) {
    if (auto* small = std::get_if<u128>(&rep_)) rep_ = u128_to_big(*small);
    return;
  }
  if (auto* big = std::get_if<Big>(&rep_)) {
    if (*big <= u128_max_big()) {
      u128 lo = static_cast<std::uint64_t>(*big & Big{~std::uint64_t{0}});
      u128 hi = static_cast<std::uint64_t>(*big >> 64);
      rep_ = (hi << 64) | lo;
    }
  }
}

bool Natural::is_zero() const {
  if (auto* s = std::get_if<u128>(&rep_)) return *s == 0;
  return std::get<Big>(rep_) == 0;
}

bool Natural::is_one() const {
  if (auto* s = std::get_if<u128>(&rep_)) return *s == 1;
  return std::get<Big>(rep_) == 1;
}

std::optional<u128> Natural::to_u128() const {
  if (auto* s = std::get_if<u128>(&rep_)) return *s;
  const Big& b = std::get<Big>(rep_);
  if (b > u128_max_big()) return std::nullopt;
  u128 lo = static_cast<std::uint64_t>(b & Big{~std::uint64_t{0}});
  u128 hi = static_cast<std::uint64_t>(b >> 64);
  return (hi << 64) | lo;
}

std::optional<std::uint64_t> Natural::to_u64() const {
  auto v = to_u128();
  if (!v || (*v >> 64) != 0) return std::nullopt;
  return static_cast<std::uint64_t>(*v);
}

Natural::Big Natural::to_big() const {
  if (auto* s = std::get_if<u128>(&rep_)) return u128_to_big(*s);
  return std::get<Big>(rep_);
}

std::string Natural::to_string() const {
  if (auto* s = std::get_if<u128>(&rep_)) return psigraph::to_string(*s);
  return std::get<Big>(rep_).str();
}

unsigned Natural::bit_length() const {
  if (auto* s = std::get_if<u128>(&rep_)) {
    u128 v = *s;
    unsigned bits = 0;
    while (v != 0) {
      ++bits;
      v >>= 1;
    }
    return bits;
  }
  const Big& b = std::get<Big>(rep_);
  if (b == 0) return 0;
  return static_cast<unsigned>(boost::multiprecision::msb(b)) + 1;
}

Natural& Natural::operator+=(const Natural& rhs) {
  if (is_inline() && rhs.is_inline()) {
    u128 out;
    if (!__builtin_add_overflow(std::get<u128>(rep_), std::get<u128>(rhs.rep_), &out)) {
      rep_ = out;
      normalize();
      return *this;
    }
  }
  rep_ = Big(to_big() + rhs.to_big());
  normalize();
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (*this < rhs) throw std::domain_error("Natural: subtraction underflow");
  if (is_inline() && rhs.is_inline()) {
    rep_ = std::get<u128>(rep_) - std::get<u128>(rhs.rep_);
  } else {
    rep_ = Big(to_big() - rhs.to_big());
  }
  normalize();
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  if (is_inline() && rhs.is_inline()) {
    u128 out;
    if (!__builtin_mul_overflow(std::get<u128>(rep_), std::get<u128>(rhs.rep_), &out)) {
      rep_ = out;
      normalize();
      return *this;
    }
  }
  rep_ = Big(to_big() * rhs.to_big());
  normalize();
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  if (is_inline() && rhs.is_inline()) {
    rep_ = std::get<u128>(rep_) / std::get<u128>(rhs.rep_);
  } else {
    rep_ = Big(to_big() / rhs.to_big());
  }
  normalize();
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  if (is_inline() && rhs.is_inline()) {
    rep_ = std::get<u128>(rep_) % std::get<u128>(rhs.rep_);
  } else {
    rep_ = Big(to_big() % rhs.to_big());
  }
  normalize();
  return *this;
}

bool operator==(const Natural& a, const Natural& b) {
  if (a.is_inline() && b.is_inline()) return std::get<u128>(a.rep_) == std::get<u128>(b.rep_);
  return a.to_big() == b.to_big();
}

std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
  if (a.is_inline() && b.is_inline()) {
    u128 x = std::get<u128>(a.rep_);
    u128 y = std::get<u128>(b.rep_);
    return x < y ? std::strong_ordering::less
                 : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  int c = a.to_big().compare(b.to_big());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

bool divides(const Natural& a, const Natural& b) {
  if (a.is_zero()) throw std::domain_error("divides: zero divisor");
  return (b % a).is_zero();
}

Natural gcd(Natural a, Natural b) {
  while (!b.is_zero()) {
    Natural r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Natural pow(const Natural& base, unsigned exponent) {
  Natural result{1};
  Natural b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace psigraph
