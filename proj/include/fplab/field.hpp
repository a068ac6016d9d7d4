#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

#include "fplab/error.hpp"

namespace fplab {

/// Raw residue type used inside polynomials. Values are always in [0, p).
using Coeff = std::uint32_t;

/// A prime 2 <= p < 2^16. Primality is checked at construction, so every
/// `Prime` in the program is a valid characteristic.
class Prime {
 public:
  explicit Prime(std::uint32_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

// Residue arithmetic on raw coefficients. Operands must already be reduced.
inline Coeff add_mod(Coeff a, Coeff b, std::uint32_t p) noexcept {
  Coeff s = a + b;
  return s >= p ? s - p : s;
}
inline Coeff sub_mod(Coeff a, Coeff b, std::uint32_t p) noexcept { return a >= b ? a - b : a + p - b; }
inline Coeff neg_mod(Coeff a, std::uint32_t p) noexcept { return a == 0 ? 0 : p - a; }
inline Coeff mul_mod(Coeff a, Coeff b, std::uint32_t p) noexcept {
  return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p);
}
Coeff pow_mod(Coeff a, std::uint64_t k, std::uint32_t p) noexcept;
/// Inverse via Fermat; throws DomainError on zero.
Coeff inv_mod(Coeff a, std::uint32_t p);
/// Reduces an arbitrary signed integer into [0, p).
Coeff reduce_mod(std::int64_t v, std::uint32_t p) noexcept;

/// An element of F_p carrying its characteristic.
class Fp {
 public:
  Fp(Prime p, std::int64_t v) : p_(p), v_(reduce_mod(v, p.value())) {}

  Prime prime() const noexcept { return p_; }
  Coeff value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp inverse() const;
  Fp pow(std::uint64_t k) const { return Fp(p_, pow_mod(v_, k, p_.value())); }

  Fp operator-() const { return Fp(p_, neg_mod(v_, p_.value())); }
  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b);
  friend bool operator==(Fp a, Fp b) = default;

 private:
  Prime p_;
  Coeff v_;
};

/// The p-th root in F_p. Frobenius is the identity on a prime field.
inline Fp pth_root(Fp a) noexcept { return a; }

std::ostream& operator<<(std::ostream& os, Fp a);

}  // namespace fplab
