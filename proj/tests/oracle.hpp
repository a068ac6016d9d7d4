#pragma once

// Reference computations by plain linear algebra over F_p on graded pieces,
// without Gröbner bases. Ideals must have homogeneous generators.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fplab/poly.hpp"

namespace fplab::oracle {

using Exps = std::vector<Exponent>;

inline void degree_monomials(std::size_t n, std::uint64_t d, std::size_t i, Exps& cur, std::vector<Exps>& out) {
  if (i + 1 == n) {
    cur[i] = static_cast<Exponent>(d);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t a = 0; a <= d; ++a) {
    cur[i] = static_cast<Exponent>(a);
    degree_monomials(n, d - a, i + 1, cur, out);
  }
}

inline std::vector<Exps> degree_monomials(std::size_t n, std::uint64_t d) {
  std::vector<Exps> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exps cur(n, 0);
  degree_monomials(n, d, 0, cur, out);
  return out;
}

/// Rank over F_p by Gaussian elimination; rows are consumed.
inline std::size_t rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  auto inv = [p](std::uint64_t a) {
    std::uint64_t r = 1, k = p - 2;
    while (k) {
      if (k & 1) r = r * a % p;
      a = a * a % p;
      k >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t s = inv(rows[r][c]);
    for (auto& x : rows[r]) x = x * s % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    ++r;
  }
  return r;
}

/// The degree-d piece of a homogeneous ideal, as a spanning set of
/// coefficient vectors over the monomials of degree d.
class GradedPiece {
 public:
  GradedPiece(const std::vector<Polynomial>& gens, std::size_t nvars, std::uint64_t p, std::uint64_t d)
      : n_(nvars), p_(p) {
    for (const auto& m : degree_monomials(n_, d)) index_.emplace(m, index_.size());
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw std::invalid_argument("oracle needs homogeneous generators");
      if (g.degree() > d) continue;
      for (const auto& m : degree_monomials(n_, d - g.degree())) rows_.push_back(row(g, m));
    }
  }

  std::size_t dim_ambient() const { return index_.size(); }
  std::size_t dim() const { return rank(rows_, p_); }

  /// Membership of a homogeneous degree-d polynomial (or zero).
  bool contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    auto with = rows_;
    with.push_back(row(f, Exps(n_, 0)));
    return rank(with, p_) == rank(rows_, p_);
  }

 private:
  std::vector<std::uint64_t> row(const Polynomial& g, const Exps& shift) const {
    std::vector<std::uint64_t> v(index_.size(), 0);
    for (const auto& t : g.terms()) {
      Exps e(n_);
      for (std::size_t i = 0; i < n_; ++i) e[i] = t.mono[i] + shift[i];
      v.at(index_.at(e)) = (v[index_.at(e)] + t.coeff) % p_;
    }
    return v;
  }

  std::size_t n_;
  std::uint64_t p_;
  std::map<Exps, std::size_t> index_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

inline std::size_t hilbert_function(const std::vector<Polynomial>& gens, const Ring& r, std::uint64_t d) {
  GradedPiece piece(gens, r->nvars(), r->characteristic(), d);
  return piece.dim_ambient() - piece.dim();
}

/// dim_F S/I summed over degrees until the Hilbert function vanishes;
/// throws if it has not vanished by `max_degree`.
inline std::uint64_t length(const std::vector<Polynomial>& gens, const Ring& r, std::uint64_t max_degree = 40) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 0; d <= max_degree; ++d) {
    const std::size_t h = hilbert_function(gens, r, d);
    if (h == 0) return total;
    total += h;
  }
  throw std::runtime_error("oracle length: Hilbert function did not vanish");
}

/// Membership of an arbitrary polynomial, one homogeneous component at a time.
inline bool member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  std::map<std::uint64_t, std::vector<Term>> parts;
  for (const auto& t : f.terms()) parts[t.mono.degree()].push_back(t);
  for (auto& [d, terms] : parts) {
    GradedPiece piece(gens, f.ring()->nvars(), f.ring()->characteristic(), d);
    if (!piece.contains(Polynomial::from_terms(f.ring(), terms))) return false;
  }
  return true;
}

inline std::vector<Polynomial> products(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  std::vector<Polynomial> out;
  for (const auto& f : a)
    for (const auto& g : b) out.push_back(f * g);
  return out;
}

inline std::vector<Polynomial> concat(std::vector<Polynomial> a, const std::vector<Polynomial>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// Generators of m^k.
inline std::vector<Polynomial> maximal_power(const Ring& r, std::uint64_t k) {
  std::vector<Polynomial> out;
  for (const auto& e : degree_monomials(r->nvars(), k)) out.push_back(Polynomial::term(r, 1, Monomial(e)));
  return out;
}

}  // namespace fplab::oracle
