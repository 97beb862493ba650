#include "polyres/rational.hpp"

#include "polyres/errors.hpp"

#include <cctype>

namespace polyres {

Integer factorial(unsigned long n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational frac(long num, long den) {
    if (den == 0) throw InputError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty rational literal");
    s = s.substr(b, e - b + 1);

    bool ok = !s.empty();
    size_t i = 0;
    if (ok && (s[i] == '+' || s[i] == '-')) ++i;
    bool digits = false;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) digits = true;
    ok = ok && digits;
    if (ok && i < s.size()) {
        ok = s[i] == '/';
        ++i;
        digits = false;
        for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) digits = true;
        ok = ok && digits && i == s.size();
    }
    if (!ok) throw InputError("malformed rational literal: '" + text + "'");
    if (s[0] == '+') s.erase(0, 1); // mpq_set_str does not take a leading '+'

    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("malformed rational literal: '" + text + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace polyres
