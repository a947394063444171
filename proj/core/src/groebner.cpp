#include "boro/groebner.hpp"

namespace boro {

unsigned monomial_count(unsigned nvars, unsigned degree) {
    // C(degree + nvars - 1, nvars - 1)
    unsigned long long num = 1, den = 1;
    for (unsigned i = 1; i < nvars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return static_cast<unsigned>(num / den);
}

void enumerate_monomials(unsigned nvars, unsigned degree,
                         const std::function<void(const Monomial&)>& fn) {
    Monomial m;
    // lexicographic enumeration of compositions of `degree` into nvars parts
    std::function<void(unsigned, unsigned)> rec = [&](unsigned var, unsigned left) {
        if (var + 1 == nvars) {
            m.e[var] = static_cast<std::uint16_t>(left);
            fn(m);
            m.e[var] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            m.e[var] = static_cast<std::uint16_t>(e);
            rec(var + 1, left - e);
        }
        m.e[var] = 0;
    };
    if (nvars == 0) return;
    rec(0, degree);
}

}  // namespace boro
