#include "fplab/frobenius.hpp"

#include <map>
#include <string>

namespace fplab {

Ideal bracket_power(const Ideal& I, unsigned e) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(frobenius_power(g, e));
  return Ideal(I.ring(), std::move(gens));
}

Ideal frobenius_root(const Polynomial& g, unsigned e) {
  if (g.is_zero()) throw DomainError("Frobenius root of the zero polynomial");
  const Ring& ring = g.ring();
  const std::uint64_t q = frobenius_q(ring->characteristic(), e);
  const std::size_t n = ring->nvars();
  // residue class -> collected terms. std::map keyed on exponents keeps the
  // generator order deterministic.
  std::map<std::vector<Exponent>, std::vector<Term>> classes;
  for (const auto& t : g.terms()) {
    std::vector<Exponent> residue(n);
    Monomial quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
      residue[i] = static_cast<Exponent>(t.mono[i] % q);
      quotient.set(i, static_cast<Exponent>(t.mono[i] / q));
    }
    // The q-th root of a coefficient in F_p is itself.
    classes[residue].push_back({t.coeff, quotient});
  }
  std::vector<Polynomial> gens;
  gens.reserve(classes.size());
  for (auto& [residue, terms] : classes) gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return Ideal(ring, std::move(gens));
}

Ideal frobenius_root(const Ideal& A, unsigned e) {
  if (A.is_zero()) throw DomainError("Frobenius root of the zero ideal");
  std::vector<Polynomial> gens;
  for (const auto& g : A.generators()) {
    const Ideal part = frobenius_root(g, e);
    gens.insert(gens.end(), part.generators().begin(), part.generators().end());
  }
  return Ideal(A.ring(), std::move(gens));
}

namespace {

// Kernel of x_i -> s_i^q modulo A(s), by eliminating the source copy.
Ideal preimage_by_elimination(const Ideal& A, std::uint64_t q) {
  const Ring& ring = A.ring();
  const std::size_t n = ring->nvars();
  std::vector<std::string> source;
  for (std::size_t i = 0; i < n; ++i) source.push_back("@s" + std::to_string(i));
  Ring ext = prepend_variables(ring, source);
  std::vector<Polynomial> gens;
  for (const auto& g : A.groebner_basis()) gens.push_back(embed(g.in_ring(ring), ext, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Monomial sq(2 * n);
    sq.set(i, static_cast<Exponent>(q));
    gens.push_back(Polynomial::variable(ext, n + i) - Polynomial::term(ext, 1, sq));
  }
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(gens)) {
    const auto& lm = g.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < n; ++i) free = free && lm[i] == 0;
    if (free) out.push_back(project(g, ring, n));
  }
  return Ideal(ring, std::move(out));
}

Polynomial homogenize(const Polynomial& f, const Ring& target) {
  const std::size_t n = f.ring()->nvars();
  const std::uint64_t d = f.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(n + 1);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    m.set(n, static_cast<Exponent>(d - t.mono.degree()));
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, const Ring& target) {
  const std::size_t n = target->nvars();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, t.mono[i]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace

Ideal frobenius_preimage(const Ideal& A, unsigned e) {
  const Ring& ring = A.ring();
  if (A.is_zero() || e == 0) return A;
  const std::uint64_t q = frobenius_q(ring->characteristic(), e);
  if (A.is_homogeneous()) return preimage_by_elimination(A, q);
  if (A.is_unit()) return Ideal::unit(ring);
  // preimage(A) = preimage(A^h) at @h = 1, with A^h generated by the
  // homogenized grevlex basis.
  std::vector<std::string> vars = ring->vars();
  vars.push_back("@h");
  const Ring hom = RingCtx::make(ring->prime(), std::move(vars), MonomialOrder::grevlex(), kMaxVars, true);
  std::vector<Polynomial> gens;
  for (const auto& g : A.groebner_basis()) gens.push_back(homogenize(g.in_ring(ring), hom));
  std::vector<Polynomial> out;
  for (const auto& g : preimage_by_elimination(Ideal(hom, std::move(gens)), q).generators())
    out.push_back(dehomogenize(g, ring));
  return Ideal(ring, std::move(out));
}

FrobeniusChain frobenius_closure(const Ideal& J, const Ideal& ambient, unsigned e_max,
                                 std::optional<unsigned> proven_bound) {
  if (e_max < 1) throw DomainError("frobenius_closure needs e_max >= 1");
  FrobeniusChain out;
  out.chain.push_back(ideal_sum(J, ambient));
  for (unsigned e = 1; e <= e_max; ++e) {
    Ideal target = ideal_sum(bracket_power(J, e), ambient);
    out.chain.push_back(ideal_sum(frobenius_preimage(target, e), ambient));
    const std::size_t k = out.chain.size() - 1;
    if (!out.stabilized_at && ideal_eq(out.chain[k], out.chain[k - 1])) out.stabilized_at = k - 1;
  }
  out.certified = proven_bound.has_value() && *proven_bound <= e_max;
  return out;
}

std::optional<Ideal> closure_ideal(const FrobeniusChain& chain, std::optional<unsigned> proven_bound) {
  if (chain.certified && proven_bound && *proven_bound < chain.chain.size()) return chain.chain[*proven_bound];
  if (chain.stabilized_at) return chain.chain[*chain.stabilized_at];
  return std::nullopt;
}

std::optional<ClosureWitness> in_frobenius_closure(const Polynomial& x, const Ideal& J, const Ideal& ambient,
                                                   unsigned e_max) {
  if (e_max < 1) throw DomainError("in_frobenius_closure needs e_max >= 1");
  for (unsigned e = 1; e <= e_max; ++e) {
    Ideal target = ideal_sum(bracket_power(J, e), ambient);
    if (ideal_member(frobenius_power(x, e), target))
      return ClosureWitness{x, e, frobenius_q(x.ring()->characteristic(), e)};
  }
  return std::nullopt;
}

bool in_bracket_maximal(const Polynomial& f, unsigned e) {
  const std::uint64_t q = frobenius_q(f.ring()->characteristic(), e);
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (std::size_t i = 0; i < t.mono.size() && !divisible; ++i) divisible = t.mono[i] >= q;
    if (!divisible) return false;
  }
  return true;
}

bool fedder_is_fpure(const Ideal& I) {
  if (I.is_unit()) throw DomainError("Fedder's criterion needs a proper ideal");
  if (I.is_zero()) return true;
  Ideal c = colon(bracket_power(I, 1), I);
  for (const auto& g : c.generators())
    if (!in_bracket_maximal(g, 1)) return true;
  return false;
}

HslResult hsl_hypersurface(const Polynomial& f, unsigned e_max) {
  if (f.is_zero()) throw DomainError("HSL number of the zero polynomial");
  for (const auto& t : f.terms())
    if (t.mono.is_one()) throw DomainError("HSL number needs f in the homogeneous maximal ideal");
  const Ring& ring = f.ring();
  const Ideal action(pow(f, ring->characteristic() - 1));
  HslResult out;
  out.chain.chain.push_back(Ideal::unit(ring));
  for (unsigned e = 0; e <= e_max; ++e) {
    const Ideal& current = out.chain.chain.back();
    Ideal next = frobenius_root(ideal_product(action, current), 1);
    const bool stable = ideal_eq(next, current);
    out.chain.chain.push_back(std::move(next));
    if (stable) {
      out.chain.stabilized_at = e;
      out.eta = e;
      break;
    }
  }
  out.chain.certified = out.eta.has_value();
  return out;
}

}  // namespace fplab
