#include "genusforge/ints.hpp"

#include <cctype>
#include <cstdlib>

namespace genusforge {

Int isqrt(const Int& n) {
    if (n < 0) throw InvalidInput("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

Int ceil_div(const Int& a, const Int& b) {
    if (b <= 0) throw InvalidInput("ceil_div: divisor must be positive");
    Int q = a / b;
    if (q * b < a) ++q;
    return q;
}

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw InvalidInput("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Int parse_int(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty integer literal");
    std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (i == text.size()) throw InvalidInput("bare sign is not an integer");
    for (; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw InvalidInput("not a decimal integer: '" + text + "'");
    return Int(text);
}

std::uint64_t max_search_bound() {
    static const std::uint64_t bound = [] {
        const char* env = std::getenv("GENUSFORGE_MAX_SEARCH");
        if (env && *env) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t(200'000'000);  // desk-scale default
    }();
    return bound;
}

}  // namespace genusforge
