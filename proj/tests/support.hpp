#pragma once

#include <string>
#include <vector>

#include "fplab/groebner.hpp"
#include "fplab/parse.hpp"

namespace fplab::test {

inline Ring ring(std::uint32_t p, std::vector<std::string> vars,
                 MonomialOrder order = MonomialOrder::grevlex()) {
  return RingCtx::make(Prime(p), std::move(vars), order);
}

inline Polynomial P(const Ring& r, const std::string& text) { return parse_poly(text, r); }

inline Ideal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> out;
  for (const char* g : gens) out.push_back(parse_poly(g, r));
  return Ideal(r, std::move(out));
}

inline std::vector<std::string> basis_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.groebner_basis()) out.push_back(format_poly(g));
  return out;
}

}  // namespace fplab::test
