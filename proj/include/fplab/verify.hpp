#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fplab/frobenius.hpp"
#include "fplab/hilbert.hpp"

namespace fplab {

/// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::uint64_t binom(std::int64_t v, std::int64_t d);

using AuxValue = std::variant<std::int64_t, Rational, std::string>;

/// e <= Q^(v-d) * C(v,d) + closure_defect. The bound and the verdict are
/// always derived from the stored components.
struct BoundReport {
  std::string ring_description;
  std::int64_t e = 0;
  std::int64_t v = 0;
  std::int64_t d = 0;
  std::uint64_t q = 1;
  std::int64_t closure_defect = 0;
  std::vector<std::pair<std::string, AuxValue>> auxiliaries;

  std::int64_t bound() const;
  bool holds() const { return e <= bound(); }
};

/// e(S/I) <= C(v, d). Hypotheses on S/I are not checked.
BoundReport check_hw_bound(const Ideal& I);
/// e(S/(f)) <= Q^(v-d) C(v,d) with Q = p^eta. Throws Inconclusive if eta is
/// not found within e_max.
BoundReport check_hsl_bound(const Polynomial& f, unsigned e_max = 4);

/// ((n-1)p + 1) / (n p)
Rational gamma(std::int64_t n, Prime p);

struct Remark33Family {
  Ring ring;
  Polynomial f;  ///< sum_i x_1^p ... x_i ... x_n^p
  Polynomial h;  ///< x_1 ... x_{n-1}
};
Remark33Family make_remark33_family(std::size_t n, Prime p);
/// (x_1 ... x_{i-1} x_{i+1} ... x_n : 1 <= i <= n)
Ideal hat_monomial_ideal(const Ring& ring);
/// Session-file text declaring the family (f, h, and the hat-monomial ideal).
std::string remark33_session_text(std::size_t n, Prime p);

struct ReductionResult {
  std::optional<unsigned> s;  ///< smallest s with m^(s+1) ⊆ J m^s + I
  std::size_t generators = 0;
  std::size_t dimension = 0;
  bool minimal() const { return s.has_value() && generators == dimension; }
};
ReductionResult is_reduction(const Ideal& J, const Ideal& ambient, unsigned s_max = 10);

/// All monomials of degree `degree` in the ring.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, std::uint64_t degree);

struct SkodaReport {
  std::size_t d = 0;
  /// Per degree-(d+1) monomial: first e putting it in J^F, or nullopt.
  std::vector<std::pair<Monomial, std::optional<unsigned>>> checks;
  bool holds() const;
};
/// m^(d+1) ⊆ J^F, monomial by monomial. Not holding means inconclusive.
SkodaReport check_skoda(const Ideal& J, const Ideal& ambient, unsigned e_max = 4);

/// e(R) <= C(v,d) + l(J^F/J). Throws Inconclusive when the closure chain
/// does not stabilize or the lengths are infinite.
BoundReport check_cor24b(const Ideal& J, const Ideal& ambient, unsigned e_max = 4);

enum class Verdict { pass, fail, inconclusive, error };
std::string to_string(Verdict v);

struct CheckReport {
  std::string name;
  std::string claim;
  Verdict verdict = Verdict::error;
  nlohmann::json values = nlohmann::json::object();
};

struct SuiteOptions {
  std::size_t n = 3;
  std::uint32_t p = 2;
  unsigned e_max = 4;
  unsigned s_max = 10;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckReport> checks;  ///< sorted by name
  std::vector<std::string> unchecked_claims;
  Verdict overall() const;
};

/// Names: example1, example2, remark33, bounds. Component failures are
/// reported per check; the suite never aborts early.
SuiteResult run_paper_suite(const std::string& name, const SuiteOptions& options = {});

/// Embedded session assets.
std::string_view example1_session_text();
std::string_view example2_session_text();

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const AuxValue& v);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SuiteResult& r);

}  // namespace fplab
