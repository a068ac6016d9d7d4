#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fplab/field.hpp"

namespace fplab {

/// Hard capacity of a monomial. Rings built from user input are limited to
/// kDefaultVarLimit; auxiliary rings (intersections, preimages) may use more.
inline constexpr std::size_t kMaxVars = 32;
inline constexpr std::size_t kDefaultVarLimit = 12;

using Exponent = std::uint32_t;
/// Exponents beyond this raise ResourceError instead of wrapping.
inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 30;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  std::uint64_t degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }
  std::span<const Exponent> exponents() const noexcept { return {e_.data(), n_}; }

  void set(std::size_t i, Exponent v);

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  /// Every exponent multiplied by k (overflow-checked).
  Monomial scaled(std::uint64_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.n_ != b.n_ || a.deg_ != b.deg_) return false;
    for (std::size_t i = 0; i < a.n_; ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }

  std::size_t hash() const noexcept;

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint64_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// grevlex, lex, or the two-block elimination order elim(k): the first k
/// variables form a block compared by degree then grevlex, ties broken by
/// grevlex on the remaining variables.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elim };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elim(std::size_t k) { return MonomialOrder(Kind::elim, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block() const noexcept { return k_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::size_t k_;
};

std::strong_ordering grevlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) noexcept;

class RingCtx;
using Ring = std::shared_ptr<const RingCtx>;

/// F_p[x_1..x_n] with a fixed monomial order.
class RingCtx : public std::enable_shared_from_this<RingCtx> {
 public:
  /// Validates names ([a-zA-Z][a-zA-Z0-9_]*, unique). With `allow_reserved`,
  /// names may also carry the '@' prefix used by auxiliary rings.
  static Ring make(Prime p, std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex(),
                   std::size_t max_vars = kDefaultVarLimit, bool allow_reserved = false);

  Prime prime() const noexcept { return prime_; }
  std::uint32_t characteristic() const noexcept { return prime_.value(); }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same variables and prime under a different order.
  Ring with_order(MonomialOrder order) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  friend bool operator==(const RingCtx& a, const RingCtx& b) {
    return a.prime_ == b.prime_ && a.order_ == b.order_ && a.vars_ == b.vars_;
  }

 private:
  RingCtx(Prime p, std::vector<std::string> vars, MonomialOrder order)
      : prime_(p), vars_(std::move(vars)), order_(order) {}

  Prime prime_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

bool same_ring(const Ring& a, const Ring& b);
/// Same prime and variable names; orders may differ.
bool same_variables(const Ring& a, const Ring& b);

struct Term {
  Coeff coeff;
  Monomial mono;
};

/// Sparse polynomial over F_p. Terms are nonzero, distinct and strictly
/// descending in the ring's order, so equality is structural.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  static Polynomial constant(Ring ring, std::int64_t c);
  static Polynomial variable(Ring ring, std::size_t i);
  static Polynomial term(Ring ring, Coeff c, Monomial m);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  Coeff leading_coeff() const { return leading_term().coeff; }

  /// Maximum total degree; 0 for the zero polynomial.
  std::uint64_t degree() const noexcept;
  bool is_homogeneous() const noexcept;

  Polynomial monic() const;
  Polynomial scaled(Coeff c) const;
  Polynomial times_term(Coeff c, const Monomial& m) const;

  /// The same polynomial re-sorted in another ring with identical variables.
  Polynomial in_ring(const Ring& target) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// this - c*m*g, fused (the reduction step).
  Polynomial sub_multiple(Coeff c, const Monomial& m, const Polynomial& g) const;

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted) : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial pow(const Polynomial& f, std::uint64_t k);
/// f^(p^e), computed termwise.
Polynomial frobenius_power(const Polynomial& f, unsigned e);
/// p^e with overflow guard.
std::uint64_t frobenius_q(std::uint32_t p, unsigned e);

/// Exact quotient f / g; throws DomainError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

}  // namespace fplab
