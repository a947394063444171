#include "boro/rational.hpp"

namespace boro {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class num(std::string(text), 10);
            return Rational(num);
        }
        mpz_class num(std::string(text.substr(0, slash)), 10);
        mpz_class den(std::string(text.substr(slash + 1)), 10);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: " + std::string(text));
    }
}

std::size_t hash_value(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed270b;
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i) h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
    return h;
}

std::size_t hash_value(const Rational& q) {
    return hash_combine(hash_value(q.get_num()), hash_value(q.get_den()));
}

}  // namespace boro
