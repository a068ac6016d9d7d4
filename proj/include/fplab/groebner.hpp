#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "fplab/poly.hpp"

namespace fplab {

/// S-pair budget applied to every Buchberger run unless overridden.
/// Initialized from FPLAB_PAIR_BUDGET when set.
std::size_t default_pair_budget();
void set_default_pair_budget(std::size_t budget);

struct GbOptions {
  std::size_t pair_budget = default_pair_budget();
};

/// Reduced Gröbner basis of `gens` in the order of their ring, sorted by
/// descending leading monomial. Buchberger's algorithm with the
/// Gebauer-Moller criteria and sugar-degree pair selection.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const GbOptions& options = {});

/// Full reduction of `f` modulo a Gröbner basis (in the basis' ring).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

/// An ideal given by generators; the reduced Gröbner basis is computed on
/// first request per monomial order and shared between copies.
class Ideal {
 public:
  explicit Ideal(Ring ring, std::vector<Polynomial> gens = {});
  explicit Ideal(const Polynomial& f);

  static Ideal unit(const Ring& ring);
  /// (x_1, ..., x_n)
  static Ideal maximal(const Ring& ring);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const& noexcept { return gens_; }
  std::vector<Polynomial> generators() && { return std::move(gens_); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;

  /// Reduced basis for `order`; its polynomials live in ring()->with_order(order).
  const std::vector<Polynomial>& groebner_basis(MonomialOrder order = MonomialOrder::grevlex()) const;

 private:
  struct Cache;

  Ring ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& I);
/// small ⊆ big
bool ideal_contains(const Ideal& big, const Ideal& small);
/// Equality of reduced grevlex bases.
bool ideal_eq(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I ∩ F_p[x_{k+1}, ..., x_n], returned in I's ring.
Ideal eliminate(const Ideal& I, std::size_t k);
Ideal intersect(const Ideal& I, const Ideal& J);
/// (I : g) = (I ∩ (g)) / g
Ideal colon(const Ideal& I, const Polynomial& g);
/// (I : J) = ∩ over generators g of J of (I : g)
Ideal colon(const Ideal& I, const Ideal& J);

/// Auxiliary ring: `extra` reserved variables prepended to `base`'s
/// variables, with elimination order on the prepended block.
Ring prepend_variables(const Ring& base, const std::vector<std::string>& extra);
/// Shifts variable i of f to i + offset in `target`.
Polynomial embed(const Polynomial& f, const Ring& target, std::size_t offset);
/// Drops the first `offset` variables (which must not occur in f).
Polynomial project(const Polynomial& f, const Ring& target, std::size_t offset);

}  // namespace fplab
