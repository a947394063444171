#ifndef BORO_TEXTIO_HPP
#define BORO_TEXTIO_HPP

#include <string>
#include <string_view>

#include "boro/polynomial.hpp"

namespace boro {

// Text grammar: poly := term (('+'|'-') term)*, term := coeff ['*' monomial] |
// monomial, monomial := var['^'e] ('*' var['^'e])*. Rational coefficients are
// "num" or "num/den"; cyclotomic ones are "(c0 + c1*w + ...)" with w = zeta_m.
// The parser round-trips everything the printer emits.
std::string to_text(const Polynomial<Rational>& f);
std::string to_text(const Polynomial<CycElem>& f);
std::string cyc_to_text(const CycElem& e);

Polynomial<Rational> parse_poly_rational(std::string_view text, const RingPtr& ring);
Polynomial<CycElem> parse_poly_cyc(std::string_view text, const RingPtr& ring, const CycFieldPtr& field);
CycElem parse_cyc(std::string_view text, const CycFieldPtr& field);

}  // namespace boro

#endif
