#include "fplab/cli.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fplab/frobenius.hpp"
#include "fplab/hilbert.hpp"
#include "fplab/parse.hpp"
#include "fplab/session.hpp"
#include "fplab/verify.hpp"

namespace fplab::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string file;
  bool json = false;
  unsigned e_max = 4;
  unsigned s_max = 10;
  unsigned e = 1;
  std::size_t k = 1;
  std::size_t n = 3;
  std::uint32_t p = 2;
  std::string order = "grevlex";
  std::size_t pair_budget = 0;
  std::vector<std::string> names;
};

/// Thrown by handlers to end with a non-ok status while keeping a result.
struct Outcome {
  Status status;
  std::string message;
};

struct Context {
  Options opt;
  std::optional<Session> session;

  const Session& need_session() {
    if (!session) {
      if (opt.file.empty()) throw DomainError("this command needs a session file (-f <path>)");
      session = load_session(opt.file);
    }
    return *session;
  }
  void need_args(std::size_t count, const std::string& usage) const {
    if (opt.names.size() != count) throw DomainError("usage: " + usage);
  }
  Ideal ideal(std::size_t i) { return need_session().ideal(opt.names.at(i)); }
  Polynomial poly(std::size_t i) {
    const Session& s = need_session();
    const std::string& name = opt.names.at(i);
    if (s.polys.contains(name)) return s.poly(name);
    if (auto it = s.ideals.find(name); it != s.ideals.end() && it->second.generators().size() == 1)
      return it->second.generators().front();
    throw DomainError("no polynomial named '" + name + "'");
  }
};

json basis_json(const Ideal& I) {
  json out = json::array();
  for (const auto& g : I.groebner_basis()) out.push_back(format_poly(g));
  return out;
}

json gens_json(const Ideal& I) {
  json out = json::array();
  for (const auto& g : I.generators()) out.push_back(format_poly(g));
  return out;
}

json chain_json(const FrobeniusChain& c) {
  json chain = json::array();
  for (const auto& I : c.chain) chain.push_back(basis_json(I));
  return json{{"chain", chain},
              {"stabilized_at", c.stabilized_at ? json(*c.stabilized_at) : json(nullptr)},
              {"certified", c.certified}};
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "grevlex") return MonomialOrder::grevlex();
  if (name == "lex") return MonomialOrder::lex();
  throw DomainError("unknown order '" + name + "'");
}

using Handler = std::function<json(Context&)>;

const std::map<std::string, std::pair<std::string, Handler>>& handlers() {
  static const std::map<std::string, std::pair<std::string, Handler>> table = {
      {"gb", {"reduced Gröbner basis: gb I [--order grevlex|lex]", [](Context& c) {
         c.need_args(1, "gb I");
         Ideal I = c.ideal(0);
         json basis = json::array();
         for (const auto& g : I.groebner_basis(parse_order(c.opt.order))) basis.push_back(format_poly(g));
         return json{{"order", c.opt.order}, {"basis", basis}};
       }}},
      {"nf", {"normal form: nf f I [--order grevlex|lex]", [](Context& c) {
         c.need_args(2, "nf f I");
         Polynomial f = c.poly(0);
         Ideal I = c.ideal(1);
         const auto& gb = I.groebner_basis(parse_order(c.opt.order));
         Polynomial r = gb.empty() ? f : normal_form(f.in_ring(gb.front().ring()), gb).in_ring(f.ring());
         return json(format_poly(r));
       }}},
      {"member", {"ideal membership: member f I", [](Context& c) {
         c.need_args(2, "member f I");
         return json(ideal_member(c.poly(0), c.ideal(1)));
       }}},
      {"sum", {"ideal sum: sum I J", [](Context& c) {
         c.need_args(2, "sum I J");
         return json{{"basis", basis_json(ideal_sum(c.ideal(0), c.ideal(1)))}};
       }}},
      {"product", {"ideal product: product I J", [](Context& c) {
         c.need_args(2, "product I J");
         return json{{"basis", basis_json(ideal_product(c.ideal(0), c.ideal(1)))}};
       }}},
      {"intersect", {"ideal intersection: intersect I J", [](Context& c) {
         c.need_args(2, "intersect I J");
         return json{{"basis", basis_json(intersect(c.ideal(0), c.ideal(1)))}};
       }}},
      {"colon", {"colon ideal: colon I J", [](Context& c) {
         c.need_args(2, "colon I J");
         return json{{"basis", basis_json(colon(c.ideal(0), c.ideal(1)))}};
       }}},
      {"eliminate", {"eliminate the first k variables: eliminate I --k k", [](Context& c) {
         c.need_args(1, "eliminate I --k k");
         return json{{"k", c.opt.k}, {"basis", basis_json(eliminate(c.ideal(0), c.opt.k))}};
       }}},
      {"hilbert", {"Hilbert series of S/I: hilbert I", [](Context& c) {
         c.need_args(1, "hilbert I");
         HilbertSeries hs = hilbert_series(c.ideal(0));
         return json{{"raw_numerator", hs.raw_numerator.coeffs()},
                     {"reduced_numerator", hs.reduced_numerator.coeffs()},
                     {"reduced_numerator_text", hs.reduced_numerator.to_string()},
                     {"nvars", hs.nvars},
                     {"pole_order", hs.pole_order}};
       }}},
      {"dim", {"Krull dimension of S/I: dim I", [](Context& c) {
         c.need_args(1, "dim I");
         return json(dimension(c.ideal(0)));
       }}},
      {"mult", {"multiplicity of S/I: mult I", [](Context& c) {
         c.need_args(1, "mult I");
         return json(multiplicity(c.ideal(0)));
       }}},
      {"embdim", {"embedding dimension of S/I: embdim I", [](Context& c) {
         c.need_args(1, "embdim I");
         return json(embedding_dimension(c.ideal(0)));
       }}},
      {"length", {"length of S/I: length I", [](Context& c) {
         c.need_args(1, "length I");
         auto len = length_quotient(c.ideal(0));
         return len ? json(*len) : json("INFINITE");
       }}},
      {"bracket", {"Frobenius power I^[p^e]: bracket I --e e", [](Context& c) {
         c.need_args(1, "bracket I --e e");
         return json{{"e", c.opt.e}, {"basis", basis_json(bracket_power(c.ideal(0), c.opt.e))}};
       }}},
      {"froot", {"Frobenius root I_e: froot f|I --e e", [](Context& c) {
         c.need_args(1, "froot f|I --e e");
         if (c.opt.e < 1) throw DomainError("froot needs --e >= 1");
         Ideal root = frobenius_root(c.ideal(0), c.opt.e);
         return json{{"e", c.opt.e}, {"generators", gens_json(root)}, {"basis", basis_json(root)}};
       }}},
      {"fpreimage", {"Frobenius preimage {x : x^(p^e) in I}: fpreimage I --e e", [](Context& c) {
         c.need_args(1, "fpreimage I --e e");
         return json{{"e", c.opt.e}, {"basis", basis_json(frobenius_preimage(c.ideal(0), c.opt.e))}};
       }}},
      {"fclosure", {"Frobenius closure chain of J in S/I: fclosure J I [--e-max n]", [](Context& c) {
         c.need_args(2, "fclosure J I");
         return chain_json(frobenius_closure(c.ideal(0), c.ideal(1), c.opt.e_max));
       }}},
      {"inclosure", {"is x in J^F in S/I: inclosure x J I [--e-max n]", [](Context& c) -> json {
         c.need_args(3, "inclosure x J I");
         auto w = in_frobenius_closure(c.poly(0), c.ideal(1), c.ideal(2), c.opt.e_max);
         if (!w) throw Outcome{Status::inconclusive, "not a member up to e_max = " + std::to_string(c.opt.e_max)};
         return json{{"member", true}, {"e", w->e}, {"q", w->q}};
       }}},
      {"fedder", {"F-purity of S/I by Fedder's criterion: fedder I", [](Context& c) {
         c.need_args(1, "fedder I");
         return json(fedder_is_fpure(c.ideal(0)));
       }}},
      {"hsl", {"HSL number of S/(f): hsl f [--e-max n]", [](Context& c) -> json {
         c.need_args(1, "hsl f");
         HslResult r = hsl_hypersurface(c.poly(0), c.opt.e_max);
         json out = chain_json(r.chain);
         out["eta"] = r.eta ? json(*r.eta) : json(nullptr);
         if (!r.eta) throw Outcome{Status::inconclusive, "HSL chain did not stabilize; partial result: " + out.dump()};
         return out;
       }}},
      {"reduction", {"is J a reduction of m in S/I: reduction J I [--s-max n]", [](Context& c) -> json {
         c.need_args(2, "reduction J I");
         ReductionResult r = is_reduction(c.ideal(0), c.ideal(1), c.opt.s_max);
         if (!r.s) throw Outcome{Status::inconclusive, "not shown up to s_max = " + std::to_string(c.opt.s_max)};
         return json{{"s", *r.s}, {"generators", r.generators}, {"dimension", r.dimension}, {"minimal", r.minimal()}};
       }}},
      {"skoda", {"m^(d+1) in J^F for S/I: skoda J I [--e-max n]", [](Context& c) -> json {
         c.need_args(2, "skoda J I");
         const Ideal J = c.ideal(0);
         SkodaReport r = check_skoda(J, c.ideal(1), c.opt.e_max);
         json monos = json::object();
         for (const auto& [m, e] : r.checks) monos[format_monomial(m, *J.ring())] = e ? json(*e) : json(nullptr);
         json out{{"d", r.d}, {"holds", r.holds()}, {"monomials", monos}};
         if (!r.holds()) throw Outcome{Status::inconclusive, "some monomial not shown in J^F: " + out.dump()};
         return out;
       }}},
      {"hwbound", {"e(S/I) <= C(v,d): hwbound I", [](Context& c) -> json {
         c.need_args(1, "hwbound I");
         BoundReport r = check_hw_bound(c.ideal(0));
         if (!r.holds()) throw Outcome{Status::failed, "bound violated: " + to_json(r).dump()};
         return to_json(r);
       }}},
      {"hslbound", {"e(S/(f)) <= Q^(v-d) C(v,d): hslbound f [--e-max n]", [](Context& c) -> json {
         c.need_args(1, "hslbound f");
         BoundReport r = check_hsl_bound(c.poly(0), c.opt.e_max);
         if (!r.holds()) throw Outcome{Status::failed, "bound violated: " + to_json(r).dump()};
         return to_json(r);
       }}},
      {"gamma", {"sharpness ratio ((n-1)p+1)/(np): gamma --n n --p p", [](Context& c) {
         c.need_args(0, "gamma --n n --p p");
         return to_json(gamma(static_cast<std::int64_t>(c.opt.n), Prime(c.opt.p)));
       }}},
      {"verify", {"built-in checks: verify example1|example2|remark33|bounds [--n n --p p]", [](Context& c) -> json {
         c.need_args(1, "verify example1|example2|remark33|bounds");
         SuiteOptions so{c.opt.n, c.opt.p, c.opt.e_max, c.opt.s_max};
         SuiteResult r = run_paper_suite(c.opt.names[0], so);
         json out = to_json(r);
         switch (r.overall()) {
           case Verdict::pass: return out;
           case Verdict::fail: throw Outcome{Status::failed, "checks failed: " + out.dump()};
           case Verdict::inconclusive: throw Outcome{Status::inconclusive, "checks inconclusive: " + out.dump()};
           case Verdict::error: throw Outcome{Status::error, "checks errored: " + out.dump()};
         }
         return out;
       }}},
  };
  return table;
}

// Non-ok outcomes still carry a structured result: handlers embed it in the
// message as JSON after a ": " separator.
json result_from_message(std::string& message) {
  auto pos = message.find(": {");
  if (pos == std::string::npos) return nullptr;
  try {
    json parsed = json::parse(message.substr(pos + 2));
    message.resize(pos);
    return parsed;
  } catch (const json::exception&) {
    return nullptr;
  }
}

}  // namespace

int CliReport::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::failed: return 1;
    case Status::error: return 2;
    case Status::inconclusive: return 3;
  }
  return 2;
}

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

CliReport dispatch(const std::vector<std::string>& args) {
  const auto start = std::chrono::steady_clock::now();
  CliReport report;
  Context ctx;
  CLI::App app{"fplab: exact prime-characteristic commutative algebra", "fplab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-f,--file", ctx.opt.file, "session file");
  app.add_flag("--json", ctx.opt.json, "emit JSON");
  app.add_option("--e-max", ctx.opt.e_max, "largest Frobenius exponent to try");
  app.add_option("--s-max", ctx.opt.s_max, "largest reduction exponent to try");
  app.add_option("--e", ctx.opt.e, "Frobenius exponent");
  app.add_option("--k", ctx.opt.k, "number of variables to eliminate");
  app.add_option("--n", ctx.opt.n, "number of variables (gamma, remark33)");
  app.add_option("--p", ctx.opt.p, "characteristic (gamma, remark33)");
  app.add_option("--order", ctx.opt.order, "monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_option("--pair-budget", ctx.opt.pair_budget, "S-pair budget per Gröbner basis");
  for (const auto& [name, entry] : handlers()) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("names", ctx.opt.names, "named objects from the session");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.help = true;
    report.message = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    report.json_output = std::find(args.begin(), args.end(), "--json") != args.end();
    report.command = args.empty() ? "" : args.front();
    report.status = Status::error;
    report.message = e.what();
    report.result = nullptr;
    return report;
  }
  report.json_output = ctx.opt.json;
  for (auto* sub : app.get_subcommands()) report.command = sub->get_name();
  report.inputs = ctx.opt.names;
  if (ctx.opt.pair_budget > 0) set_default_pair_budget(ctx.opt.pair_budget);

  try {
    report.result = handlers().at(report.command).second(ctx);
  } catch (Outcome& o) {
    report.status = o.status;
    report.message = o.message;
    report.result = result_from_message(report.message);
  } catch (const Inconclusive& e) {
    report.status = Status::inconclusive;
    report.message = e.what();
    report.result = nullptr;
  } catch (const std::exception& e) {
    report.status = Status::error;
    report.message = e.what();
    report.result = nullptr;
  }
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const CliReport& r) {
  json status;
  switch (r.status) {
    case Status::ok: status = "ok"; break;
    case Status::failed: status = json{{"failed", r.message}}; break;
    case Status::error: status = json{{"error", r.message}}; break;
    case Status::inconclusive: status = json{{"inconclusive", r.message}}; break;
  }
  return json{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"elapsed_ms", r.elapsed_ms},
              {"status", status}};
}

std::string render_json(const CliReport& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const CliReport& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  std::string inputs;
  for (const auto& i : r.inputs) inputs += (inputs.empty() ? "" : " ") + i;
  rows.emplace_back("inputs", inputs);
  switch (r.status) {
    case Status::ok: rows.emplace_back("status", "ok"); break;
    case Status::failed: rows.emplace_back("status", "failed: " + r.message); break;
    case Status::error: rows.emplace_back("status", "error: " + r.message); break;
    case Status::inconclusive: rows.emplace_back("status", "inconclusive: " + r.message); break;
  }
  rows.emplace_back("elapsed_ms", std::to_string(r.elapsed_ms));
  if (r.result.is_object()) {
    for (const auto& [key, value] : r.result.items()) rows.emplace_back("result." + key, value.dump());
  } else if (!r.result.is_null()) {
    rows.emplace_back("result", r.result.dump());
  }
  std::size_t width = 0;
  for (const auto& [k, _] : rows) width = std::max(width, k.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out) {
  CliReport report = dispatch(args);
  if (report.help) {
    out << report.message;
    return 0;
  }
  out << (report.json_output ? render_json(report) : render_text(report));
  return report.exit_code();
}

}  // namespace fplab::cli
