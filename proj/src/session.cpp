#include "fplab/session.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "fplab/parse.hpp"

namespace fplab {

namespace {

std::size_t skip_ws(std::string_view s, std::size_t i) {
  while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
  return i;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Ring parse_ring_line(std::string_view line, std::size_t lineno) {
  static const std::regex key_value(R"(\s*([a-z]+)=(\S+))");
  std::optional<std::uint32_t> p;
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();
  std::string rest(line.substr(4));
  std::size_t col = 5;
  for (std::sregex_iterator it(rest.begin(), rest.end(), key_value), end; it != end; ++it) {
    const auto& m = *it;
    const std::size_t at = col + static_cast<std::size_t>(m.position(1));
    const std::string key = m[1];
    const std::string value = m[2];
    if (key == "p") {
      if (!std::regex_match(value, std::regex("[0-9]{1,6}"))) throw ParseError("invalid prime '" + value + "'", lineno, at);
      try {
        p = Prime(static_cast<std::uint32_t>(std::stoul(value))).value();
      } catch (const DomainError& e) {
        throw ParseError(e.what(), lineno, at);
      }
    } else if (key == "vars") {
      vars = split(value, ',');
    } else if (key == "order") {
      if (value == "grevlex") order = MonomialOrder::grevlex();
      else if (value == "lex") order = MonomialOrder::lex();
      else throw ParseError("unknown order '" + value + "'", lineno, at);
    } else {
      throw ParseError("unknown ring attribute '" + key + "'", lineno, at);
    }
  }
  // Anything the key=value scan skipped is junk.
  std::string leftover = std::regex_replace(rest, key_value, "");
  if (leftover.find_first_not_of(" \t\r") != std::string::npos)
    throw ParseError("malformed ring declaration", lineno, col);
  if (!p) throw ParseError("ring declaration needs p=<prime>", lineno, 1);
  if (vars.empty()) throw ParseError("ring declaration needs vars=...", lineno, 1);
  try {
    return RingCtx::make(Prime(*p), std::move(vars), order);
  } catch (const Error& e) {
    throw ParseError(e.what(), lineno, 1);
  }
}

}  // namespace

Ideal Session::ideal(const std::string& name) const {
  if (auto it = ideals.find(name); it != ideals.end()) return it->second;
  if (auto it = polys.find(name); it != polys.end()) return Ideal(it->second);
  throw DomainError("no ideal or polynomial named '" + name + "'");
}

Polynomial Session::poly(const std::string& name) const {
  if (auto it = polys.find(name); it != polys.end()) return it->second;
  throw DomainError("no polynomial named '" + name + "'");
}

Session parse_session(std::string_view text) {
  static const std::regex ident("[a-zA-Z][a-zA-Z0-9_]*");
  Session session;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::size_t i = skip_ws(raw, 0);
    if (i == raw.size()) {
      if (end == text.size()) break;
      continue;
    }
    std::string_view line = raw.substr(i);
    std::size_t kw_end = 0;
    while (kw_end < line.size() && std::isalpha(static_cast<unsigned char>(line[kw_end]))) ++kw_end;
    std::string keyword(line.substr(0, kw_end));

    if (keyword == "ring") {
      if (session.ring) throw ParseError("duplicate ring declaration", lineno, i + 1);
      session.ring = parse_ring_line(line, lineno);
    } else if (keyword == "poly" || keyword == "ideal") {
      if (!session.ring) throw ParseError("missing ring declaration", lineno, i + 1);
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected '='", lineno, i + line.size() + 1);
      std::string name(line.substr(kw_end, eq - kw_end));
      name.erase(0, name.find_first_not_of(" \t"));
      name.erase(name.find_last_not_of(" \t") + 1);
      if (!std::regex_match(name, ident)) throw ParseError("invalid name '" + name + "'", lineno, i + kw_end + 2);
      if (session.contains(name)) throw ParseError("duplicate name '" + name + "'", lineno, i + kw_end + 2);
      const std::size_t body_col = i + eq + 1;
      std::string_view body = line.substr(eq + 1);
      if (keyword == "poly") {
        session.polys.emplace(name, parse_poly(body, session.ring, lineno, body_col));
      } else {
        std::vector<Polynomial> gens;
        std::size_t piece_start = 0;
        for (;;) {
          std::size_t comma = body.find(',', piece_start);
          std::string_view piece = body.substr(piece_start, comma == std::string_view::npos ? std::string_view::npos
                                                                                           : comma - piece_start);
          gens.push_back(parse_poly(piece, session.ring, lineno, body_col + piece_start));
          if (comma == std::string_view::npos) break;
          piece_start = comma + 1;
        }
        session.ideals.emplace(name, Ideal(session.ring, std::move(gens)));
      }
    } else {
      throw ParseError("unknown declaration '" + keyword + "'", lineno, i + 1);
    }
    if (end == text.size()) break;
  }
  if (!session.ring) throw ParseError("missing ring declaration", lineno == 0 ? 1 : lineno, 1);
  return session;
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read session file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_session(buffer.str());
}

}  // namespace fplab
