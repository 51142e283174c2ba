// Copyright 2026 The mrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mrank {

/// Element of F_{p^m} in canonical encoding: value = sum c_i p^i, where
/// c_0..c_{m-1} are the coefficients of the residue polynomial.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Immutable description of a finite field F_{p^m} together with its
/// arithmetic. Fields of order up to 256 run on precomputed tables; larger
/// ones fall back to modular (m == 1) or polynomial (m > 1) arithmetic.
///
/// Instances are shared through FieldPtr and are safe to use from many
/// threads at once.
class Field {
public:
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Monic modulus, coefficients from degree 0 up to degree m. For m == 1
  /// this is x (the "x - 0" convention).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return m_ == 1; }
  bool char_two() const noexcept { return p_ == 2; }

  /// "p^m" for extension fields, "p" for prime fields.
  std::string name() const;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws Error{ZeroInverse} for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer under Z -> F_p -> F.
  Elem from_int(long long v) const noexcept;

  /// True iff `a` is a constant polynomial, i.e. lies in F_p.
  bool is_in_prime_subfield(Elem a) const noexcept { return a < p_; }
  bool contains(Elem a) const noexcept { return a < q_; }

  bool is_square(Elem a) const noexcept;
  /// Some s with s*s == a, the smallest in encoding order.
  std::optional<Elem> sqrt(Elem a) const;
  /// Smallest non-square in encoding order; only meaningful for odd q.
  Elem smallest_nonsquare() const;

  /// 0, 1, ..., q-1.
  std::vector<Elem> elements() const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

private:
  friend std::shared_ptr<const Field> make_field(std::uint32_t, std::uint32_t,
                                                  std::optional<std::vector<std::uint32_t>>);
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Elem poly_mul(Elem a, Elem b) const noexcept;
  Elem digit_add(Elem a, Elem b, bool subtract) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool tables_ = false;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::int32_t> sqrt_;  // -1 for non-squares, filled for q <= 256
};

using FieldPtr = std::shared_ptr<const Field>;

/// Validates (p, m, modulus) and builds the field. Without an explicit
/// modulus the lexicographically smallest monic irreducible of degree m is
/// used (coefficients compared from degree m-1 down to degree 0).
///
/// Errors: NotPrime, TooLarge, BadModulus, ReducibleModulus.
FieldPtr make_field(std::uint32_t p, std::uint32_t m = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Accepts "p^m" or a prime power "q".
FieldPtr parse_field(std::string_view text);

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over F_p by trial division with all
/// monic polynomials of degree <= deg/2. Coefficients low to high.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace mrank
