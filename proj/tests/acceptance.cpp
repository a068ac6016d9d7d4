#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "fplab/frobenius.hpp"
#include "fplab/hilbert.hpp"
#include "fplab/session.hpp"
#include "fplab/verify.hpp"

using namespace fplab;

namespace {

/// Collects failed sub-checks of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(Checker&)> body;
};

struct Process {
  int exit_code;
  std::string output;
};

Process run_process(const std::string& command) {
  Process out{-1, {}};
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.output.append(buf.data(), n);
  const int status = pclose(pipe);
  out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Ideal bracket_sum(const Ideal& J, const Ideal& I, unsigned e) { return ideal_sum(bracket_power(J, e), I); }

void seven_primes(Checker& c) {
  const Session s = parse_session(example1_session_text());
  Ideal K = s.ideal("P1");
  for (int i = 2; i <= 7; ++i) K = intersect(K, s.ideal("P" + std::to_string(i)));
  const Ideal I = s.ideal("I");
  c.expect(ideal_eq(K, I), "sevenfold intersection equals the stated ideal");
  const HilbertSeries hs = hilbert_series(I);
  c.expect(hs.reduced_numerator == IntPoly({1, 2, 3, 2, -1}),
           "reduced numerator " + hs.reduced_numerator.to_string());
  c.expect(dimension(I) == 2, "dimension 2");
  c.expect(multiplicity(I) == 7, "multiplicity 7");
  c.expect(binom(4, 2) == 6, "C(4,2) = 6");
  const BoundReport r = check_hw_bound(I);
  c.expect(r.bound() == 6 && !r.holds(), "hw bound fails with bound 6");
}

void five_variables(Checker& c) {
  const Session s = parse_session(example2_session_text());
  const Ideal I1 = s.ideal("I1"), I2 = s.ideal("I2"), I = s.ideal("I"), J = s.ideal("J");
  c.expect(fedder_is_fpure(I1), "S/I1 F-pure");
  c.expect(fedder_is_fpure(I2), "S/I2 F-pure");
  c.expect(fedder_is_fpure(ideal_sum(I1, I2)), "S/(I1+I2) F-pure");
  const ReductionResult red = is_reduction(J, I, 10);
  c.expect(red.s.has_value() && *red.s <= 5, "J is a reduction with s <= 5");
  c.expect(!ideal_member(s.poly("v2"), ideal_sum(J, I)), "v^2 not in J + I");
  const Polynomial diff = pow(s.poly("v2"), 2) - s.poly("rhs");
  c.expect(normal_form(diff, I.groebner_basis()).is_zero(), "NF(v^4 - RHS, GB(I)) = 0");
  const auto w = in_frobenius_closure(s.poly("v2"), J, I, 2);
  c.expect(w.has_value() && w->e == 1, "v^2 in J^F with e = 1");
}

void hat_family(Checker& c) {
  for (std::size_t n : {3u, 4u, 5u}) {
    const std::string tag = "n=" + std::to_string(n) + ": ";
    const Prime p(2);
    const auto fam = make_remark33_family(n, p);
    const Ideal root = frobenius_root(fam.f, 1);
    c.expect(ideal_eq(root, hat_monomial_ideal(fam.ring)), tag + "I_1(f) is the hat-monomial ideal");
    std::vector<Polynomial> prods;
    for (const auto& g : root.generators()) prods.push_back(fam.f * g);
    c.expect(ideal_eq(frobenius_root(Ideal(fam.ring, prods), 1), root), tag + "I_1(f I_1(f)) = I_1(f)");
    const HslResult h = hsl_hypersurface(fam.f, 4);
    c.expect(h.eta == std::optional<unsigned>(1), tag + "eta = 1");
    const Rational g = gamma(static_cast<std::int64_t>(n), p);
    c.expect(g == Rational(static_cast<std::int64_t>(n - 1) * 2 + 1, static_cast<std::int64_t>(n) * 2),
             tag + "gamma = " + g.to_string());
    const std::int64_t e = multiplicity(Ideal(fam.f));
    c.expect(Rational(e, static_cast<std::int64_t>(binom(n, n - 1)) * 2) == g, tag + "gamma from computed e and eta");
    const BoundReport b = check_hsl_bound(fam.f, 4);
    c.expect(b.holds() && b.bound() == static_cast<std::int64_t>(2 * n), tag + "bound Q*n holds");
  }
}

void scaling(Checker& c) {
  const Session s = parse_session("ring p=2 vars=x,y,z\npoly f = x^3 + y^3 + z^3\nideal J = y, z\n");
  const Ideal I = s.ideal("f"), J = s.ideal("J");
  const auto base = length_quotient(ideal_sum(J, I));
  c.expect(base == std::optional<std::uint64_t>(3), "l(R/J) = 3");
  for (unsigned e : {1u, 2u}) {
    const std::uint64_t Q = frobenius_q(2, e);
    const auto len = length_quotient(bracket_sum(J, I, e));
    c.expect(base && len == std::optional<std::uint64_t>(Q * Q * *base),
             "l(R/J^[" + std::to_string(Q) + "]) = " + (len ? std::to_string(*len) : "INFINITE"));
  }
}

void properties(Checker& c) {
  const Process p = run_process(std::string(FPLAB_PROPERTY_TEST) +
                                " --gtest_filter='*Property*:RegularRing.*' --gtest_brief=1");
  c.expect(p.exit_code == 0, "property suites pass (exit " + std::to_string(p.exit_code) + ")");
  std::smatch m;
  static const std::regex passed(R"(\[  PASSED  \] (\d+) test)");
  c.expect(std::regex_search(p.output, m, passed) && std::stoi(m[1]) >= 10, "at least ten property suites ran");
}

void sanity(Checker& c) {
  const Session s = parse_session("ring p=2 vars=x,y,z\npoly xy = x*y\nideal J = x^2, y\n");
  c.expect(multiplicity(Ideal(s.ring)) == 1, "multiplicity of (0) is 1");
  c.expect(hsl_hypersurface(s.poly("xy"), 3).eta == std::optional<unsigned>(0), "eta(xy) = 0");
  const auto chain = frobenius_closure(s.ideal("J"), Ideal(s.ring), 2);
  c.expect(ideal_eq(chain.chain.at(1), s.ideal("J")) && ideal_eq(chain.chain.at(2), s.ideal("J")),
           "(x^2, y) is Frobenius closed in a polynomial ring");
  const Process p = run_process(std::string(FPLAB_PROPERTY_TEST) + " --gtest_filter='RegularRing.*' --gtest_brief=1");
  c.expect(p.exit_code == 0, "50 random ideals in regular rings are Frobenius closed");
}

std::string strip_elapsed(const std::string& json) {
  static const std::regex elapsed(R"("elapsed_ms": \d+)");
  return std::regex_replace(json, elapsed, "\"elapsed_ms\": 0");
}

void cli_contract(Checker& c) {
  const std::string exe = FPLAB_CLI;
  for (const char* suite : {"example1", "example2"}) {
    const Process a = run_process(exe + " verify " + suite + " --json");
    const Process b = run_process(exe + " verify " + suite + " --json");
    c.expect(a.exit_code == 0 && b.exit_code == 0, std::string("verify ") + suite + " exits 0");
    c.expect(!a.output.empty() && strip_elapsed(a.output) == strip_elapsed(b.output),
             std::string("verify ") + suite + " JSON is byte-stable");
  }
  const auto bad = std::filesystem::temp_directory_path() / "fplab_acceptance_bad.fpl";
  std::ofstream(bad) << "ring p=2 vars=x,y\nideal K = x +* y\n";
  c.expect(run_process(exe + " mult -f " + bad.string() + " K").exit_code == 2, "malformed session exits 2");
  std::filesystem::remove(bad);
  const Process missing = run_process(exe + " mult -f " + std::string(FPLAB_ASSETS) + "/example1.fpl NOSUCH");
  c.expect(missing.exit_code == 2, "missing object exits 2");
  const Process mult = run_process(exe + " mult -f " + std::string(FPLAB_ASSETS) + "/example1.fpl I --json");
  c.expect(mult.exit_code == 0 && mult.output.find("\"result\": 7") != std::string::npos, "mult I reports 7");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "seven-prime example: intersection, Hilbert series, e = 7 > C(4,2)", 30, seven_primes},
      {2, "five-variable example: Fedder, reduction, v^2 in J^F but not J", 30, five_variables},
      {3, "hat-monomial hypersurface family for n = 3, 4, 5 at p = 2", 60, hat_family},
      {4, "bracket-power length scaling for x^3+y^3+z^3", 30, scaling},
      {5, "property suites", 300, properties},
      {6, "trivial and regular sanity", 60, sanity},
      {7, "CLI contract", 60, cli_contract},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > crit.limit_seconds)
      checker.expect(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(crit.limit_seconds) + " s");
    const bool ok = checker.failures().empty();
    failed += !ok;
    std::ostringstream line;
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " criterion " << crit.id << ": " << crit.title << " (" << std::fixed << secs
         << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : checker.failures()) std::cout << "    failed: " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
