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

#include "polydyn/interpolate.hpp"

#include <string>
#include <vector>

#include "polydyn/errors.hpp"

namespace polydyn {

namespace {

// basis[k * p + a] is the coefficient of x^k in the indicator of x = a,
// which over F_p is 1 - (x - a)^(p-1).
std::vector<std::uint32_t> indicator_basis(const PrimeField& f) {
  const std::uint32_t p = f.characteristic();
  std::vector<std::uint32_t> binom(p);  // C(p-1, k) mod p
  binom[0] = 1;
  for (std::uint32_t k = 1; k < p; ++k) {
    binom[k] = f.mul(f.mul(binom[k - 1], p - k), f.inv(k));
  }
  std::vector<std::uint32_t> basis(std::size_t{p} * p);
  for (std::uint32_t a = 0; a < p; ++a) {
    const std::uint32_t minus_a = f.neg(a);
    for (std::uint32_t k = 0; k < p; ++k) {
      const std::uint32_t term = f.mul(binom[k], f.pow(minus_a, p - 1 - k));
      basis[std::size_t{k} * p + a] = f.sub(k == 0 ? 1 : 0, term);
    }
  }
  return basis;
}

}  // namespace

Polynomial interpolate(
    PrimeField field, std::uint32_t n,
    const std::function<std::uint32_t(std::span<const std::uint32_t>)>& fn,
    std::uint64_t cap) {
  const std::uint32_t p = field.characteristic();
  const std::uint64_t count = state_count(p, n);
  if (count > cap || (n > 0 && count > cap / n)) {
    throw ResourceError("interpolation over F_" + std::to_string(p) + "^" +
                        std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }

  std::vector<std::uint32_t> values(count);
  std::vector<std::uint32_t> point(n, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    values[idx] = field.reduce(fn(point));
    for (std::uint32_t i = n; i-- > 0;) {
      if (++point[i] < p) break;
      point[i] = 0;
    }
  }

  // Change basis one axis at a time: values along an axis become
  // coefficients of powers of that variable.
  const std::vector<std::uint32_t> basis = indicator_basis(field);
  std::vector<std::uint32_t> fiber(p);
  std::uint64_t stride = 1;
  for (std::uint32_t axis = n; axis-- > 0;) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < count; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t a = 0; a < p; ++a) {
          fiber[a] = values[base + off + a * stride];
        }
        for (std::uint32_t k = 0; k < p; ++k) {
          std::uint64_t acc = 0;
          for (std::uint32_t a = 0; a < p; ++a) {
            acc += std::uint64_t{basis[std::size_t{k} * p + a]} * fiber[a] % p;
          }
          values[base + off + k * stride] = static_cast<std::uint32_t>(acc % p);
        }
      }
    }
    stride = block;
  }

  std::vector<Polynomial::Term> terms;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (values[idx] == 0) continue;
    const State exps = state_from_index(idx, p, n);
    terms.push_back({Monomial::from_exponents(exps.coords()), values[idx]});
  }
  return Polynomial::from_terms(field, n, std::move(terms));
}

Polynomial interpolate(const std::map<State, FieldElement>& table,
                       PrimeField field, std::uint32_t n, std::uint64_t cap) {
  const std::uint32_t p = field.characteristic();
  for (const auto& [x, v] : table) {
    if (x.size() != n) {
      throw StructuralError("table entry with " + std::to_string(x.size()) +
                            " coordinates in a " + std::to_string(n) +
                            "-variable table");
    }
    for (std::uint32_t c : x.coords()) {
      if (c >= p) throw StructuralError("table entry outside F_" + std::to_string(p));
    }
  }
  if (table.size() != state_count(p, n)) {
    throw StructuralError("incomplete table: " + std::to_string(table.size()) +
                          " of " + std::to_string(state_count(p, n)) +
                          " points defined");
  }
  return interpolate(
      field, n,
      [&](std::span<const std::uint32_t> x) {
        return table.at(State(std::vector<std::uint32_t>(x.begin(), x.end())))
            .value();
      },
      cap);
}

}  // namespace polydyn
