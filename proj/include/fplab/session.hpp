#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "fplab/groebner.hpp"

namespace fplab {

/// A parsed session file:
///
///   # comment
///   ring p=<prime> vars=<v1>,<v2>,... order=grevlex|lex
///   poly <name> = <expr>
///   ideal <name> = <expr>, <expr>, ...
///
/// Exactly one ring line, before any poly/ideal line. Names are unique
/// across polys and ideals.
struct Session {
  Ring ring;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, Ideal> ideals;

  /// An ideal by name; a polynomial name yields its principal ideal.
  Ideal ideal(const std::string& name) const;
  Polynomial poly(const std::string& name) const;
  bool contains(const std::string& name) const { return polys.contains(name) || ideals.contains(name); }
};

Session parse_session(std::string_view text);
Session load_session(const std::filesystem::path& path);

}  // namespace fplab
