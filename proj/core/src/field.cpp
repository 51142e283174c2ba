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

#include "mrank/field.hpp"

#include <charconv>

#include "mrank/error.hpp"

namespace mrank {

namespace {

using Poly = std::vector<std::uint32_t>;  // low to high

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of f modulo g (g nonzero) over F_p.
Poly poly_rem(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = std::uint64_t(f.back()) * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Poly d(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  const std::size_t deg = f.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g(d + 1);
      std::uint64_t v = low;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(Errc::BadModulus, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(Errc::TooLarge, "field order exceeds 2^16");
  }
  Poly mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != m + 1 || mod.back() != 1)
      throw Error(Errc::BadModulus, "modulus must be monic of degree m");
    for (auto c : mod)
      if (c >= p) throw Error(Errc::BadModulus, "modulus coefficient out of range");
    if (m == 1) {
      mod = {0, 1};
    } else if (!is_irreducible(mod, p)) {
      throw Error(Errc::ReducibleModulus, "modulus is reducible over F_p");
    }
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    const std::uint64_t lows = q;  // p^m choices for c_0..c_{m-1}
    for (std::uint64_t v = 0; v < lows; ++v) {
      Poly cand = digits(static_cast<std::uint32_t>(v), p, m);
      cand.push_back(1);
      if (is_irreducible(cand, p)) {
        mod = std::move(cand);
        break;
      }
    }
  }
  return FieldPtr(new Field(p, m, std::move(mod)));
}

FieldPtr parse_field(std::string_view text) {
  auto parse_u32 = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::BadFieldName, "cannot parse field '" + std::string(text) + "'");
    return v;
  };
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    return make_field(parse_u32(text.substr(0, caret)), parse_u32(text.substr(caret + 1)));
  }
  const std::uint32_t q = parse_u32(text);
  if (q < 2) throw Error(Errc::BadFieldName, "field order must be >= 2");
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t m = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1) throw Error(Errc::NotPrime, std::to_string(q) + " is not a prime power");
    return make_field(p, m);
  }
  throw Error(Errc::BadFieldName, "unreachable");
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
  if (q_ > 256) return;

  const std::size_t q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  sqrt_.assign(q, -1);
  for (Elem a = 0; a < q; ++a) {
    neg_[a] = static_cast<std::uint16_t>(digit_add(0, a, true));
    for (Elem b = 0; b < q; ++b) {
      add_[a * q + b] = static_cast<std::uint16_t>(digit_add(a, b, false));
      mul_[a * q + b] = static_cast<std::uint16_t>(poly_mul(a, b));
    }
  }
  for (Elem a = 1; a < q; ++a)
    for (Elem b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
  for (Elem s = q; s-- > 0;) sqrt_[mul_[s * q + s]] = static_cast<std::int32_t>(s);
  tables_ = true;
}

std::string Field::name() const {
  return m_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(m_);
}

Elem Field::digit_add(Elem a, Elem b, bool subtract) const noexcept {
  if (m_ == 1) return subtract ? (a + p_ - b) % p_ : (a + b) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    const Elem da = a % p_, db = b % p_;
    const Elem d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem Field::poly_mul(Elem a, Elem b) const noexcept {
  if (m_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
  const Poly da = digits(a, p_, m_), db = digits(b, p_, m_);
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  // reduce with the monic modulus
  for (std::size_t d = prod.size(); d-- > m_;) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < m_; ++i)
      prod[d - m_ + i] = (prod[d - m_ + i] + p_ - c * modulus_[i] % p_) % p_;
  }
  Elem out = 0;
  for (std::uint32_t i = m_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Elem Field::add(Elem a, Elem b) const noexcept {
  return tables_ ? add_[a * q_ + b] : digit_add(a, b, false);
}

Elem Field::sub(Elem a, Elem b) const noexcept {
  return tables_ ? add_[a * q_ + neg_[b]] : digit_add(a, b, true);
}

Elem Field::neg(Elem a) const noexcept { return tables_ ? neg_[a] : digit_add(0, a, true); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  return tables_ ? mul_[a * q_ + b] : poly_mul(a, b);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroInverse, "inverse of zero in F_" + name());
  if (tables_) return inv_[a];
  if (m_ == 1) return inv_mod(a, p_);
  return pow(a, q_ - 2);
}

Elem Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

bool Field::is_square(Elem a) const noexcept {
  if (a == 0 || p_ == 2) return true;
  if (tables_) return sqrt_[a] >= 0;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::optional<Elem> Field::sqrt(Elem a) const {
  if (tables_) {
    if (sqrt_[a] < 0) return std::nullopt;
    return static_cast<Elem>(sqrt_[a]);
  }
  for (Elem s = 0; s < q_; ++s)
    if (mul(s, s) == a) return s;
  return std::nullopt;
}

Elem Field::smallest_nonsquare() const {
  for (Elem a = 1; a < q_; ++a)
    if (!is_square(a)) return a;
  throw Error(Errc::InvalidArgument, "every element of F_" + name() + " is a square");
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (Elem a = 0; a < q_; ++a) out[a] = a;
  return out;
}

}  // namespace mrank
