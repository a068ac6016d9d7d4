#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fplab/groebner.hpp"

namespace fplab {

/// I^[p^e]: generated by the p^e-th powers of the generators.
Ideal bracket_power(const Ideal& I, unsigned e);

/// I_e(g): the smallest ideal K with g ∈ K^[p^e]. Splits g along the basis
/// {x^a : 0 <= a_i < p^e} of S over S^(p^e) and collects the coefficients.
Ideal frobenius_root(const Polynomial& g, unsigned e);
/// I_e(A) = sum of I_e(g) over the generators g of A.
Ideal frobenius_root(const Ideal& A, unsigned e);

/// {x : x^(p^e) ∈ A}, as the preimage of A under x_i -> x_i^(p^e).
Ideal frobenius_preimage(const Ideal& A, unsigned e);

/// A chain of ideals computed level by level. `stabilized_at` is the first
/// index k with chain[k+1] == chain[k].
struct FrobeniusChain {
  std::vector<Ideal> chain;
  std::optional<std::size_t> stabilized_at;
  bool certified = false;
};

/// chain[0] = J + I, chain[e] = {x : x^(p^e) ∈ J^[p^e] + I} + I for
/// e = 1..e_max, ascending. `certified` is set only when `proven_bound`
/// (an exponent known to compute the closure, e.g. the HSL number of a
/// Cohen-Macaulay quotient) is supplied and within range.
FrobeniusChain frobenius_closure(const Ideal& J, const Ideal& ambient, unsigned e_max,
                                 std::optional<unsigned> proven_bound = std::nullopt);

/// Best available representative of J^F from a closure chain: the proven
/// level when certified, else the first stable level.
std::optional<Ideal> closure_ideal(const FrobeniusChain& chain, std::optional<unsigned> proven_bound = std::nullopt);

struct ClosureWitness {
  Polynomial element;
  unsigned e;
  std::uint64_t q;
};

/// First e in 1..e_max with x^(p^e) ∈ J^[p^e] + I. nullopt means "not a
/// member up to e_max", which is inconclusive.
std::optional<ClosureWitness> in_frobenius_closure(const Polynomial& x, const Ideal& J, const Ideal& ambient,
                                                   unsigned e_max);

/// Fedder: S/I is F-pure iff (I^[p] : I) is not contained in m^[p].
bool fedder_is_fpure(const Ideal& I);

struct HslResult {
  FrobeniusChain chain;
  std::optional<unsigned> eta;
};

/// HSL number of S/(f) at the homogeneous maximal ideal, from the descending
/// chain C_0 = (1), C_{e+1} = I_1(f^(p-1) C_e). eta is the first e with
/// C_{e+1} = C_e; the chain is constant from there on.
HslResult hsl_hypersurface(const Polynomial& f, unsigned e_max);

/// True when every term of f is divisible by some x_i^(p^e).
bool in_bracket_maximal(const Polynomial& f, unsigned e);

}  // namespace fplab
