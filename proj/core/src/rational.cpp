#include "tautring/rational.hpp"

#include <stdexcept>

namespace tautring {

Rational rationalFromString(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    try {
        Rational q(text);
        q.canonicalize();
        if (q.get_den() == 0)
            throw std::invalid_argument("zero denominator in '" + text + "'");
        return q;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

std::string toString(const Rational& q) {
    return q.get_str();
}

long toLong(const Rational& q) {
    if (!isInteger(q))
        throw std::invalid_argument("rational " + toString(q) + " is not an integer");
    if (!q.get_num().fits_slong_p())
        throw std::overflow_error("rational " + toString(q) + " does not fit in long");
    return q.get_num().get_si();
}

} // namespace tautring
