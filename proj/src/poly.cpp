#include "fplab/poly.hpp"

#include <algorithm>
#include <regex>
#include <unordered_set>

namespace fplab {

namespace {

Exponent checked_exponent(std::uint64_t v) {
  if (v > kMaxExponent) throw ResourceError("exponent overflow (" + std::to_string(v) + ")");
  return static_cast<Exponent>(v);
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (!same_ring(a, b)) throw DomainError("polynomials belong to different rings");
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw ResourceError("too many variables (" + std::to_string(nvars) + ")");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<Exponent> exps)
    : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    e_[i] = checked_exponent(exps[i]);
    deg_ += exps[i];
  }
}

void Monomial::set(std::size_t i, Exponent v) {
  checked_exponent(v);
  deg_ = deg_ - e_[i] + v;
  e_[i] = v;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = checked_exponent(std::uint64_t{a.e_[i]} + b.e_[i]);
  r.deg_ = a.deg_ + b.deg_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  r.deg_ = a.deg_ - b.deg_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && k > kMaxExponent / e_[i]) throw ResourceError("exponent overflow in Frobenius power");
    r.e_[i] = checked_exponent(k * e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = n_;
  for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
  return h;
}

// ----------------------------------------------------------- MonomialOrder

std::strong_ordering grevlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) noexcept {
  std::uint64_t da = 0, db = 0;
  for (Exponent x : a) da += x;
  for (Exponent x : b) db += x;
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  switch (kind_) {
    case Kind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    case Kind::elim: {
      const std::size_t k = std::min(k_, n);
      auto ea = a.exponents(), eb = b.exponents();
      if (auto c = grevlex_compare(ea.first(k), eb.first(k)); c != 0) return c;
      return grevlex_compare(ea.subspan(k), eb.subspan(k));
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex: return "grevlex";
    case Kind::lex: return "lex";
    case Kind::elim: return "elim(" + std::to_string(k_) + ")";
  }
  return "?";
}

// ----------------------------------------------------------------- RingCtx

Ring RingCtx::make(Prime p, std::vector<std::string> vars, MonomialOrder order, std::size_t max_vars,
                   bool allow_reserved) {
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  static const std::regex reserved("@[a-zA-Z0-9_]+");
  if (vars.empty()) throw DomainError("a ring needs at least one variable");
  if (vars.size() > std::min(max_vars, kMaxVars))
    throw ResourceError("ring has " + std::to_string(vars.size()) + " variables; limit is " +
                        std::to_string(std::min(max_vars, kMaxVars)));
  std::unordered_set<std::string> seen;
  for (const auto& v : vars) {
    bool ok = std::regex_match(v, ident) || (allow_reserved && std::regex_match(v, reserved));
    if (!ok) throw DomainError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable name '" + v + "'");
  }
  if (order.kind() == MonomialOrder::Kind::elim && (order.block() == 0 || order.block() >= vars.size()))
    throw DomainError("elimination block must satisfy 1 <= k < n");
  return Ring(new RingCtx(p, std::move(vars), order));
}

std::optional<std::size_t> RingCtx::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

Ring RingCtx::with_order(MonomialOrder order) const {
  if (order == order_) return shared_from_this();
  return Ring(new RingCtx(prime_, vars_, order));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || *a == *b; }

bool same_variables(const Ring& a, const Ring& b) {
  return a == b || (a->prime() == b->prime() && a->vars() == b->vars());
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const std::uint32_t p = ring->characteristic();
  const auto& order = ring->order();
  for (auto& t : terms) {
    if (t.mono.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
    t.coeff %= p;
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = add_mod(out.back().coeff, t.coeff, p);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(Ring ring, std::int64_t c) {
  Coeff v = reduce_mod(c, ring->characteristic());
  if (v == 0) return Polynomial(std::move(ring));
  Monomial one(ring->nvars());
  return Polynomial(ring, {Term{v, one}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t i) {
  if (i >= ring->nvars()) throw DomainError("variable index out of range");
  Monomial m(ring->nvars());
  m.set(i, 1);
  return Polynomial(ring, {Term{1, m}});
}

Polynomial Polynomial::term(Ring ring, Coeff c, Monomial m) {
  if (m.size() != ring->nvars()) throw DomainError("monomial length does not match ring");
  c %= ring->characteristic();
  if (c == 0) return Polynomial(std::move(ring));
  return Polynomial(ring, {Term{c, m}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

std::uint64_t Polynomial::degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(inv_mod(terms_.front().coeff, ring_->characteristic()));
}

Polynomial Polynomial::scaled(Coeff c) const {
  const std::uint32_t p = ring_->characteristic();
  c %= p;
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = mul_mod(t.coeff, c, p);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(Coeff c, const Monomial& m) const {
  const std::uint32_t p = ring_->characteristic();
  c %= p;
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({mul_mod(t.coeff, c, p), t.mono * m});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const Ring& target) const {
  if (target == ring_) return *this;
  if (!same_variables(ring_, target)) throw DomainError("cannot map polynomial: variables differ");
  if (target->order() == ring_->order()) return Polynomial(target, terms_);
  return from_terms(target, terms_);
}

Polynomial Polynomial::operator-() const {
  const std::uint32_t p = ring_->characteristic();
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = neg_mod(t.coeff, p);
  return Polynomial(ring_, std::move(out));
}

namespace {

// Merge of two sorted term lists: a + c*b (b already shifted).
template <class BTerm>
std::vector<Term> merge_axpy(const Ring& ring, const std::vector<Term>& a, const std::vector<Term>& b, Coeff c,
                             BTerm&& b_mono) {
  const std::uint32_t p = ring->characteristic();
  const auto& order = ring->order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial mb = b_mono(b[j].mono);
    auto cmp = order.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({mul_mod(b[j++].coeff, c, p), mb});
    } else {
      Coeff s = add_mod(a[i].coeff, mul_mod(b[j].coeff, c, p), p);
      if (s != 0) out.push_back({s, a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({mul_mod(b[j].coeff, c, p), b_mono(b[j].mono)});
  return out;
}

}  // namespace

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  return Polynomial(f.ring_, merge_axpy(f.ring_, f.terms_, g.terms_, 1, [](const Monomial& m) { return m; }));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  const Coeff minus_one = f.ring_->characteristic() - 1;
  return Polynomial(f.ring_,
                    merge_axpy(f.ring_, f.terms_, g.terms_, minus_one, [](const Monomial& m) { return m; }));
}

Polynomial Polynomial::sub_multiple(Coeff c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(ring_, g.ring_);
  const Coeff neg = neg_mod(c % ring_->characteristic(), ring_->characteristic());
  if (neg == 0) return *this;
  return Polynomial(ring_, merge_axpy(ring_, terms_, g.terms_, neg, [&](const Monomial& x) { return x * m; }));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring_, g.ring_);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
  const std::uint32_t p = f.ring_->characteristic();
  std::vector<Term> prod;
  prod.reserve(f.terms_.size() * g.terms_.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) prod.push_back({mul_mod(a.coeff, b.coeff, p), a.mono * b.mono});
  return Polynomial::from_terms(f.ring_, std::move(prod));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_) || f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].coeff != g.terms_[i].coeff || !(f.terms_[i].mono == g.terms_[i].mono)) return false;
  return true;
}

Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::uint64_t frobenius_q(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > kMaxExponent / p) throw ResourceError("Frobenius exponent p^e overflows");
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  const std::uint64_t q = frobenius_q(f.ring()->characteristic(), e);
  if (q == 1) return f;
  std::vector<Term> out;
  out.reserve(f.size());
  // Coefficients are fixed by Frobenius on F_p; order is preserved by scaling.
  for (const auto& t : f.terms()) out.push_back({t.coeff, t.mono.scaled(q)});
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const std::uint32_t p = f.ring()->characteristic();
  const Coeff inv_lc = inv_mod(g.leading_coeff(), p);
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!g.leading_monomial().divides(lt.mono)) throw DomainError("inexact polynomial division");
    Term q{mul_mod(lt.coeff, inv_lc, p), lt.mono / g.leading_monomial()};
    rest = rest.sub_multiple(q.coeff, q.mono, g);
    quotient.push_back(q);
  }
  return Polynomial::from_terms(f.ring(), std::move(quotient));
}

}  // namespace fplab
