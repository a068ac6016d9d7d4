#include "fplab/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <string>
#include <tuple>

namespace fplab {

namespace {

std::size_t initial_pair_budget() {
  if (const char* env = std::getenv("FPLAB_PAIR_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

std::atomic<std::size_t>& pair_budget_slot() {
  static std::atomic<std::size_t> budget{initial_pair_budget()};
  return budget;
}

// Reduces `f` by monic divisors. With `full` the whole polynomial is reduced,
// otherwise only until the leading term is irreducible.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial* const> divisors, bool full) {
  const Ring& ring = f.ring();
  const std::uint32_t p = ring->characteristic();
  const auto& order = ring->order();
  std::vector<Term> work(f.terms());
  std::vector<Term> rem;
  std::size_t start = 0;
  std::vector<Term> next;
  while (start < work.size()) {
    const Term t = work[start];
    const Polynomial* div = nullptr;
    for (const Polynomial* d : divisors) {
      const Monomial& lm = d->leading_monomial();
      if (lm.degree() <= t.mono.degree() && lm.divides(t.mono)) {
        div = d;
        break;
      }
    }
    if (div == nullptr) {
      rem.push_back(t);
      ++start;
      if (!full) break;
      continue;
    }
    // work[start+1..] - t.coeff * (t.mono / lm) * tail(div)
    const Monomial shift = t.mono / div->leading_monomial();
    const Coeff c = neg_mod(t.coeff, p);
    const auto& dt = div->terms();
    next.clear();
    next.reserve(work.size() - start + dt.size());
    std::size_t i = start + 1, j = 1;
    while (i < work.size() && j < dt.size()) {
      Monomial m = dt[j].mono * shift;
      auto cmp = order.compare(work[i].mono, m);
      if (cmp > 0) {
        next.push_back(work[i++]);
      } else if (cmp < 0) {
        next.push_back({mul_mod(dt[j++].coeff, c, p), m});
      } else {
        Coeff s = add_mod(work[i].coeff, mul_mod(dt[j].coeff, c, p), p);
        if (s != 0) next.push_back({s, work[i].mono});
        ++i;
        ++j;
      }
    }
    for (; i < work.size(); ++i) next.push_back(work[i]);
    for (; j < dt.size(); ++j) next.push_back({mul_mod(dt[j].coeff, c, p), dt[j].mono * shift});
    work.swap(next);
    start = 0;
  }
  for (std::size_t i = start; i < work.size(); ++i) rem.push_back(work[i]);
  // rem is already sorted: irreducible terms are emitted in descending order.
  return Polynomial::from_terms(ring, std::move(rem));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const Ring& ring, std::size_t budget) : ring_(ring), budget_(budget) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw DomainError("generators belong to different rings");
      if (!g.is_zero()) input.push_back(g.monic());
    }
    // Lower leading terms first keeps early reductions short.
    std::stable_sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (auto& g : input) {
      Polynomial h = reduce(g, basis_divisors(), true);
      if (h.is_zero()) continue;
      insert(h.monic(), h.degree());
      if (unit_found_) return {Polynomial::constant(ring_, 1)};
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > budget_)
        throw ResourceError("Gröbner basis exceeded the S-pair budget of " + std::to_string(budget_));
      Pair pr = take_pair();
      Polynomial s = spoly(pr);
      Polynomial h = reduce(s, basis_divisors(), true);
      if (h.is_zero()) continue;
      insert(h.monic(), pr.sugar);
      if (unit_found_) return {Polynomial::constant(ring_, 1)};
    }
    return finish();
  }

 private:
  std::span<const Polynomial* const> basis_divisors() {
    divisors_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) divisors_.push_back(&polys_[k]);
    return divisors_;
  }

  Polynomial spoly(const Pair& pr) const {
    const Polynomial& f = polys_[pr.i];
    const Polynomial& g = polys_[pr.j];
    Monomial mf = pr.lcm / f.leading_monomial();
    Monomial mg = pr.lcm / g.leading_monomial();
    return f.times_term(1, mf).sub_multiple(1, mg, g);
  }

  std::uint64_t pair_sugar(std::size_t i, std::size_t j, const Monomial& l) const {
    std::uint64_t si = sugar_[i] + (l.degree() - polys_[i].leading_monomial().degree());
    std::uint64_t sj = sugar_[j] + (l.degree() - polys_[j].leading_monomial().degree());
    return std::max(si, sj);
  }

  Pair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = k;
        continue;
      }
      auto c = ring_->compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j))) best = k;
    }
    Pair pr = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return pr;
  }

  // Gebauer-Moller update for the new element h.
  void insert(Polynomial h, std::uint64_t sugar) {
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    in_basis_.push_back(false);
    const Monomial& lh = polys_[hi].leading_monomial();
    if (lh.is_one()) {
      unit_found_ = true;
      return;
    }

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool alive = true;
      bool kept = false;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!in_basis_[g]) continue;
      const Monomial& lg = polys_[g].leading_monomial();
      cands.push_back({g, lcm(lh, lg), lh.coprime(lg)});
    }
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      Cand& c1 = cands[a];
      c1.alive = false;
      bool drop = false;
      if (!c1.coprime) {
        for (const Cand& c2 : cands) {
          if (&c2 == &c1 || !(c2.alive || c2.kept)) continue;
          if (c2.lcm.divides(c1.lcm)) {
            drop = true;
            break;
          }
        }
      }
      if (!drop) c1.kept = true;
    }
    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& pr) {
      if (!lh.divides(pr.lcm)) return false;
      Monomial l1 = lcm(polys_[pr.i].leading_monomial(), lh);
      Monomial l2 = lcm(polys_[pr.j].leading_monomial(), lh);
      return !(l1 == pr.lcm) && !(l2 == pr.lcm);
    });
    // Product criterion.
    for (const Cand& c : cands) {
      if (!c.kept || c.coprime) continue;
      pairs_.push_back({c.g, hi, c.lcm, pair_sugar(c.g, hi, c.lcm)});
    }
    for (std::size_t g = 0; g < hi; ++g)
      if (in_basis_[g] && lh.divides(polys_[g].leading_monomial())) in_basis_[g] = false;
    in_basis_[hi] = true;
  }

  std::vector<Polynomial> finish() {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (in_basis_[k]) keep.push_back(k);
    std::vector<Polynomial> minimal;
    for (std::size_t a : keep) {
      bool redundant = false;
      for (std::size_t b : keep)
        if (a != b && polys_[b].leading_monomial().divides(polys_[a].leading_monomial())) redundant = true;
      if (!redundant) minimal.push_back(polys_[a]);
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<const Polynomial*> others;
      for (std::size_t b = 0; b < minimal.size(); ++b)
        if (b != a) others.push_back(&minimal[b]);
      // The leading term is irreducible by the others, so full reduction
      // only rewrites the tail.
      reduced.push_back(reduce(minimal[a], others, true).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
  }

  Ring ring_;
  std::size_t budget_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint64_t> sugar_;
  std::vector<bool> in_basis_;
  std::vector<Pair> pairs_;
  std::vector<const Polynomial*> divisors_;
  bool unit_found_ = false;
};

}  // namespace

std::size_t default_pair_budget() { return pair_budget_slot().load(); }
void set_default_pair_budget(std::size_t budget) { pair_budget_slot().store(budget); }

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens, const GbOptions& options) {
  if (gens.empty()) return {};
  return Buchberger(gens.front().ring(), options.pair_budget).run(gens);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<const Polynomial*> divs;
  divs.reserve(basis.size());
  for (const auto& g : basis) {
    if (!same_ring(g.ring(), f.ring())) throw DomainError("normal form: polynomial and basis rings differ");
    if (g.leading_coeff() != 1) throw DomainError("normal form: basis must be monic");
    divs.push_back(&g);
  }
  return reduce(f, divs, true);
}

// ------------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::mutex mutex;
  std::vector<std::pair<MonomialOrder, std::vector<Polynomial>>> entries;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!same_ring(g.ring(), ring_)) throw DomainError("ideal generators belong to different rings");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal::Ideal(const Polynomial& f) : Ideal(f.ring(), {f}) {}

Ideal Ideal::unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, std::move(vars));
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

const std::vector<Polynomial>& Ideal::groebner_basis(MonomialOrder order) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->entries)
    if (o == order) return gb;
  Ring target = ring_->with_order(order);
  std::vector<Polynomial> mapped;
  mapped.reserve(gens_.size());
  for (const auto& g : gens_) mapped.push_back(g.in_ring(target));
  auto gb = buchberger(mapped);
  cache_->entries.emplace_back(order, std::move(gb));
  return cache_->entries.back().second;
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
  if (!same_variables(f.ring(), I.ring())) throw DomainError("membership: rings differ");
  if (f.is_zero()) return true;
  const auto& gb = I.groebner_basis();
  if (gb.empty()) return false;
  return normal_form(f.in_ring(gb.front().ring()), gb).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small) {
  for (const auto& g : small.generators())
    if (!ideal_member(g, big)) return false;
  return true;
}

bool ideal_eq(const Ideal& I, const Ideal& J) {
  if (!same_variables(I.ring(), J.ring())) throw DomainError("ideal equality: rings differ");
  const auto& a = I.groebner_basis();
  const auto& b = J.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a[k] == b[k])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw DomainError("ideal sum: rings differ");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw DomainError("ideal product: rings differ");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, std::size_t k) {
  const Ring& ring = I.ring();
  if (k < 1 || k >= ring->nvars()) throw DomainError("eliminate: need 1 <= k < n");
  std::vector<Polynomial> kept;
  for (const auto& g : I.groebner_basis(MonomialOrder::elim(k))) {
    const auto& lm = g.leading_monomial();
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && lm[i] == 0;
    if (free) kept.push_back(g.in_ring(ring));
  }
  return Ideal(ring, std::move(kept));
}

Ring prepend_variables(const Ring& base, const std::vector<std::string>& extra) {
  std::vector<std::string> vars = extra;
  vars.insert(vars.end(), base->vars().begin(), base->vars().end());
  return RingCtx::make(base->prime(), std::move(vars), MonomialOrder::elim(extra.size()), kMaxVars, true);
}

Polynomial embed(const Polynomial& f, const Ring& target, std::size_t offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) m.set(i + offset, t.mono[i]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial project(const Polynomial& f, const Ring& target, std::size_t offset) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < offset; ++i)
      if (t.mono[i] != 0) throw DomainError("project: polynomial involves an eliminated variable");
    for (std::size_t i = 0; i < target->nvars(); ++i) m.set(i, t.mono[i + offset]);
    terms.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring())) throw DomainError("intersect: rings differ");
  const Ring& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(ring);
  Ring ext = prepend_variables(ring, {"@t"});
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * embed(g, ext, 1));
  for (const auto& h : J.generators()) gens.push_back(one_minus_t * embed(h, ext, 1));
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(gens))
    if (g.leading_monomial()[0] == 0) out.push_back(project(g, ring, 1));
  return Ideal(ring, std::move(out));
}

Ideal colon(const Ideal& I, const Polynomial& g) {
  if (!same_ring(I.ring(), g.ring())) throw DomainError("colon: rings differ");
  if (g.is_zero()) throw DomainError("colon by the zero polynomial");
  if (g.is_constant()) return I;
  std::vector<Polynomial> quotients;
  const Ideal meet = intersect(I, Ideal(g));
  for (const auto& h : meet.generators()) quotients.push_back(divide_exact(h, g));
  return Ideal(I.ring(), std::move(quotients));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    Ideal part = colon(I, g);
    acc = acc ? intersect(*acc, part) : part;
  }
  return *acc;
}

}  // namespace fplab
