#include "immpoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace immpoly {

Rational parse_rational(const std::string& s)
{
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.find('.') != std::string::npos)
        throw std::invalid_argument("decimal notation rejected, use p/q: " + s);

    auto check_integer_token = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("malformed rational: " + s);
        size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("malformed rational: " + s);
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i])))
                throw std::invalid_argument("malformed rational: " + s);
    };

    const size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    check_integer_token(num);
    mpz_class p(num);
    mpz_class q(1);
    if (slash != std::string::npos) {
        const std::string den = s.substr(slash + 1);
        check_integer_token(den);
        q = mpz_class(den);
        if (q == 0) throw std::invalid_argument("zero denominator: " + s);
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

Rational rational_pow(const Rational& x, int e)
{
    if (e < 0) throw std::invalid_argument("rational_pow needs e >= 0");
    Rational acc = 1;
    for (int i = 0; i < e; ++i) acc *= x;
    return acc;
}

}  // namespace immpoly
