#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fplab/groebner.hpp"

namespace fplab {

/// Integer polynomial in t, coefficients indexed by degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs);

  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  std::int64_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  std::size_t size() const noexcept { return c_.size(); }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t at_one() const;

  /// 1 - t^k
  static IntPoly one_minus_t_pow(std::uint64_t k);

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  /// t^k * a
  IntPoly shifted(std::uint64_t k) const;
  /// Exact division by (1 - t); requires at_one() == 0.
  IntPoly divided_by_one_minus_t() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// "1 + 2*t + 3*t^2 - t^4"
  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// HS(S/I) = raw_numerator / (1-t)^nvars = reduced_numerator / (1-t)^pole_order.
struct HilbertSeries {
  IntPoly raw_numerator;
  IntPoly reduced_numerator;
  std::size_t nvars = 0;
  std::size_t pole_order = 0;
};

/// Ideal generated by the leading monomials of the reduced grevlex basis.
Ideal initial_ideal(const Ideal& I);

/// Numerator of the Hilbert series of S/M for a monomial ideal M, by the
/// pivot recursion HN(M) = HN(M + (x)) + t * HN(M : x).
IntPoly hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars);

/// Requires homogeneous, proper I.
HilbertSeries hilbert_series(const Ideal& I);
std::size_t dimension(const Ideal& I);
std::int64_t multiplicity(const Ideal& I);
/// n minus the number of linear forms in the reduced grevlex basis.
std::size_t embedding_dimension(const Ideal& I);

/// dim_F (S/I) counted as standard monomials; nullopt when infinite.
std::optional<std::uint64_t> length_quotient(const Ideal& I);

}  // namespace fplab
