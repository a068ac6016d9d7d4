#include "fplab/field.hpp"

#include <ostream>
#include <string>

namespace fplab {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16)) throw DomainError("characteristic " + std::to_string(p) + " exceeds 2^16");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

Coeff pow_mod(Coeff a, std::uint64_t k, std::uint32_t p) noexcept {
  Coeff result = 1 % p;
  while (k > 0) {
    if (k & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    k >>= 1;
  }
  return result;
}

Coeff inv_mod(Coeff a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

Coeff reduce_mod(std::int64_t v, std::uint32_t p) noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

namespace {
Prime common(Fp a, Fp b) {
  if (a.prime() != b.prime())
    throw DomainError("mismatched characteristic: " + std::to_string(a.prime().value()) + " vs " +
                      std::to_string(b.prime().value()));
  return a.prime();
}
}  // namespace

Fp Fp::inverse() const { return Fp(p_, inv_mod(v_, p_.value())); }

Fp operator+(Fp a, Fp b) {
  Prime p = common(a, b);
  return Fp(p, add_mod(a.v_, b.v_, p.value()));
}
Fp operator-(Fp a, Fp b) {
  Prime p = common(a, b);
  return Fp(p, sub_mod(a.v_, b.v_, p.value()));
}
Fp operator*(Fp a, Fp b) {
  Prime p = common(a, b);
  return Fp(p, mul_mod(a.v_, b.v_, p.value()));
}
Fp operator/(Fp a, Fp b) {
  Prime p = common(a, b);
  return Fp(p, mul_mod(a.v_, inv_mod(b.v_, p.value()), p.value()));
}

std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.value(); }

}  // namespace fplab
