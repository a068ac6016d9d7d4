#pragma once

#include <random>
#include <string>
#include <vector>

#include "fplab/groebner.hpp"

namespace fplab::test {

/// Seeded generator of small random rings, polynomials and ideals.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  Ring ring(std::size_t min_vars = 1, std::size_t max_vars = 4) {
    const std::uint32_t p = coin() ? 2 : 3;
    const std::size_t n = uniform(min_vars, max_vars);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back(std::string(1, static_cast<char>('a' + i)));
    return RingCtx::make(Prime(p), vars);
  }

  Monomial monomial(const Ring& r, std::uint64_t degree) {
    const std::size_t n = r->nvars();
    std::vector<Exponent> e(n, 0);
    for (std::uint64_t k = 0; k < degree; ++k) ++e[uniform(0, n - 1)];
    return Monomial(e);
  }

  /// Up to `max_terms` terms of degree <= max_degree (all of one random
  /// degree in 1..max_degree when homogeneous).
  Polynomial poly(const Ring& r, std::uint64_t max_degree = 4, std::size_t max_terms = 3, bool homogeneous = false,
                  std::uint64_t min_degree = 0) {
    const std::uint32_t p = r->characteristic();
    const std::uint64_t hd = uniform(std::max<std::uint64_t>(1, min_degree), max_degree);
    std::vector<Term> terms;
    const std::size_t count = uniform(1, max_terms);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t d = homogeneous ? hd : uniform(min_degree, max_degree);
      terms.push_back(Term{static_cast<Coeff>(uniform(1, p - 1)), monomial(r, d)});
    }
    return Polynomial::from_terms(r, std::move(terms));
  }

  Polynomial nonzero_poly(const Ring& r, std::uint64_t max_degree = 4, std::size_t max_terms = 3,
                          bool homogeneous = false, std::uint64_t min_degree = 0) {
    for (;;) {
      Polynomial f = poly(r, max_degree, max_terms, homogeneous, min_degree);
      if (!f.is_zero()) return f;
    }
  }

  std::vector<Polynomial> polys(const Ring& r, std::size_t count, std::uint64_t max_degree = 4,
                                std::size_t max_terms = 3, bool homogeneous = false, std::uint64_t min_degree = 0) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(nonzero_poly(r, max_degree, max_terms, homogeneous, min_degree));
    return out;
  }

  /// A proper ideal: generators without constant term.
  Ideal proper_ideal(const Ring& r, std::size_t max_gens = 3, std::uint64_t max_degree = 4, std::size_t max_terms = 3,
                     bool homogeneous = false) {
    return Ideal(r, polys(r, uniform(1, max_gens), max_degree, max_terms, homogeneous, 1));
  }

  /// Proper ideal, homogeneous half of the time.
  Ideal mixed_ideal(const Ring& r, std::size_t max_gens = 3, std::uint64_t max_degree = 4, std::size_t max_terms = 3) {
    return proper_ideal(r, max_gens, max_degree, max_terms, coin());
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), rng_);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fplab::test
