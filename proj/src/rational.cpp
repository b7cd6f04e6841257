#include "hornlab/rational.hpp"

#include "hornlab/errors.hpp"

#include <cctype>

namespace hornlab {

Integer floor_int(const Rational& x) {
    Integer num = numerator(x);
    Integer den = denominator(x); // always > 0
    Integer q = num / den;        // truncates toward zero
    if (num < 0 && q * den != num) {
        --q;
    }
    return q;
}

namespace {

bool is_decimal_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        ++i;
    }
    if (i >= s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num_part = s.substr(0, slash);
    if (!is_decimal_integer(num_part)) {
        throw PreconditionError("malformed rational: '" + s + "'");
    }
    if (slash == std::string::npos) {
        return Rational(Integer(num_part));
    }
    const std::string den_part = s.substr(slash + 1);
    if (!is_decimal_integer(den_part) || den_part.front() == '-') {
        throw PreconditionError("malformed rational: '" + s + "'");
    }
    Integer den(den_part);
    if (den == 0) {
        throw PreconditionError("zero denominator in rational: '" + s + "'");
    }
    return Rational(Integer(num_part), den);
}

std::string format_rational(const Rational& x) {
    return x.str();
}

bool is_multiple_of_unit_fraction(const Rational& x, int n) {
    if (n <= 0) {
        throw PreconditionError("unit fraction denominator must be positive");
    }
    Rational scaled = x * n;
    return denominator(scaled) == 1;
}

} // namespace hornlab
