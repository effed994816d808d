// Copyright 2026 The polydyn Authors.
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
#include <ostream>

namespace polydyn {

class FieldElement {
 public:
  constexpr FieldElement() = default;
  std::uint32_t value() const { return value_; }

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
  friend std::ostream& operator<<(std::ostream& os, FieldElement e) {
    return os << e.value_;
  }

 private:
  friend class PrimeField;
  explicit constexpr FieldElement(std::uint32_t v) : value_(v) {}
  std::uint32_t value_ = 0;
};

// The field of integers modulo a prime p. Cheap to copy; two instances
// compare equal iff they have the same characteristic.
class PrimeField {
 public:
  // Throws std::invalid_argument unless p is prime.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t size() const { return p_; }

  FieldElement element(std::int64_t v) const {
    return FieldElement(reduce(v));
  }
  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  std::uint32_t reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Throws std::domain_error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    return FieldElement(add(a.value_, b.value_));
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(sub(a.value_, b.value_));
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement(mul(a.value_, b.value_));
  }
  FieldElement neg(FieldElement a) const { return FieldElement(neg(a.value_)); }
  FieldElement inv(FieldElement a) const { return FieldElement(inv(a.value_)); }

  // Exponent of x^e after applying x^p = x. Zero stays zero.
  std::uint32_t reduce_exponent(std::uint64_t e) const {
    if (e == 0) return 0;
    return static_cast<std::uint32_t>((e - 1) % (p_ - 1) + 1);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// Smallest prime >= n (n >= 0).
std::uint32_t next_prime(std::uint32_t n);

}  // namespace polydyn
