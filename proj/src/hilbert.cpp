#include "fplab/hilbert.hpp"

#include <algorithm>
#include <unordered_set>

namespace fplab {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError("Hilbert numerator coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError("Hilbert numerator coefficient overflow");
  return r;
}

// Drops generators divisible by another one (and duplicates).
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                                        b.exponents().end());
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::size_t support_size(const Monomial& m) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += m[i] != 0;
  return s;
}

IntPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return IntPoly({1});
  if (gens.size() == 1) return IntPoly::one_minus_t_pow(gens.front().degree());

  std::vector<std::size_t> count(nvars, 0);
  bool all_pure = true;
  for (const auto& g : gens) {
    if (support_size(g) <= 1) continue;
    all_pure = false;
    for (std::size_t i = 0; i < nvars; ++i) count[i] += g[i] != 0;
  }
  if (all_pure) {
    // Minimal pure powers involve distinct variables: a complete intersection.
    IntPoly r({1});
    for (const auto& g : gens) r = r * IntPoly::one_minus_t_pow(g.degree());
    return r;
  }
  std::size_t pivot = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

  Monomial x(nvars);
  x.set(pivot, 1);
  std::vector<Monomial> with_x = gens;
  with_x.push_back(x);
  std::vector<Monomial> quotient;
  quotient.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    if (q[pivot] > 0) q.set(pivot, q[pivot] - 1);
    quotient.push_back(q);
  }
  return numerator_rec(std::move(with_x), nvars) + numerator_rec(std::move(quotient), nvars).shifted(1);
}

void require_graded_proper(const Ideal& I) {
  if (!I.is_homogeneous()) throw DomainError("Hilbert series requires a homogeneous ideal");
  if (I.is_unit()) throw DomainError("Hilbert series of the unit ideal is undefined");
}

}  // namespace

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPoly::at_one() const {
  std::int64_t s = 0;
  for (auto c : c_) s = checked_add(s, c);
  return s;
}

IntPoly IntPoly::one_minus_t_pow(std::uint64_t k) {
  if (k == 0) return IntPoly();
  std::vector<std::int64_t> c(k + 1, 0);
  c[0] = 1;
  c[k] = -1;
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<std::int64_t> c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[i], b[i]);
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a[i], b[j]));
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shifted(std::uint64_t k) const {
  if (is_zero()) return *this;
  std::vector<std::int64_t> c(k, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divided_by_one_minus_t() const {
  if (at_one() != 0) throw DomainError("polynomial is not divisible by (1 - t)");
  // a = (1 - t) q  =>  q_i = a_0 + ... + a_i
  std::vector<std::int64_t> q;
  std::int64_t run = 0;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    run = checked_add(run, c_[i]);
    q.push_back(run);
  }
  return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    if (i == 0) out += std::to_string(mag);
    else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------- Hilbert

Ideal initial_ideal(const Ideal& I) {
  const auto& gb = I.groebner_basis();
  std::vector<Polynomial> lms;
  lms.reserve(gb.size());
  for (const auto& g : gb) lms.push_back(Polynomial::term(I.ring(), 1, g.leading_monomial()));
  return Ideal(I.ring(), std::move(lms));
}

IntPoly hilbert_numerator(std::vector<Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw DomainError("monomial length does not match ring");
  return numerator_rec(std::move(generators), nvars);
}

HilbertSeries hilbert_series(const Ideal& I) {
  require_graded_proper(I);
  const std::size_t n = I.ring()->nvars();
  std::vector<Monomial> lms;
  for (const auto& g : I.groebner_basis()) lms.push_back(g.leading_monomial());
  HilbertSeries hs;
  hs.nvars = n;
  hs.raw_numerator = hilbert_numerator(std::move(lms), n);
  hs.reduced_numerator = hs.raw_numerator;
  hs.pole_order = n;
  while (hs.pole_order > 0 && hs.reduced_numerator.at_one() == 0) {
    hs.reduced_numerator = hs.reduced_numerator.divided_by_one_minus_t();
    --hs.pole_order;
  }
  return hs;
}

std::size_t dimension(const Ideal& I) { return hilbert_series(I).pole_order; }

std::int64_t multiplicity(const Ideal& I) { return hilbert_series(I).reduced_numerator.at_one(); }

std::size_t embedding_dimension(const Ideal& I) {
  require_graded_proper(I);
  std::size_t linear = 0;
  for (const auto& g : I.groebner_basis()) linear += g.degree() == 1;
  return I.ring()->nvars() - linear;
}

std::optional<std::uint64_t> length_quotient(const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  std::vector<Monomial> lms;
  for (const auto& g : I.groebner_basis()) lms.push_back(g.leading_monomial());
  for (const auto& m : lms)
    if (m.is_one()) return 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool has_pure_power = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      return m[i] > 0 && support_size(m) == 1;
    });
    if (!has_pure_power) return std::nullopt;
  }
  // Standard monomials form an order ideal; grow it one variable at a time.
  auto standard = [&](const Monomial& m) {
    return std::none_of(lms.begin(), lms.end(), [&](const Monomial& g) { return g.divides(m); });
  };
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier{Monomial(n)};
  seen.insert(frontier.front());
  std::uint64_t count = 0;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      ++count;
      for (std::size_t i = 0; i < n; ++i) {
        Monomial up = m;
        up.set(i, m[i] + 1);
        if (seen.contains(up) || !standard(up)) continue;
        seen.insert(up);
        next.push_back(up);
      }
    }
    frontier.swap(next);
  }
  return count;
}

}  // namespace fplab
