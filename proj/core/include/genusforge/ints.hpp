#ifndef GENUSFORGE_INTS_HPP
#define GENUSFORGE_INTS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "genusforge/errors.hpp"

namespace genusforge {

// Every quantity in the library is an exact integer (or exact rational).
// m*(H.C) and m^2 terms overflow 64 bits quickly once witnesses get large.
using Int = boost::multiprecision::cpp_int;

inline bool is_even(const Int& n) { return (n & 1) == 0; }

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// ceil(a / b) for b > 0.
Int ceil_div(const Int& a, const Int& b);

// Exact nonnegative rational, normalized, den >= 1.
struct Rational {
    Int num;
    Int den;

    Rational() : num(0), den(1) {}
    Rational(Int n, Int d);
    explicit Rational(Int n) : num(std::move(n)), den(1) {}

    bool is_zero() const { return num == 0; }
    bool operator==(const Rational&) const = default;
    std::string str() const { return num.str() + "/" + den.str(); }
};

// Parse a (possibly signed) decimal string; rejects anything else.
Int parse_int(const std::string& text);

// Search budget for oracle sweeps and bounded scans. Defaults to a desk-scale
// bound; override with the GENUSFORGE_MAX_SEARCH environment variable.
std::uint64_t max_search_bound();

}  // namespace genusforge

#endif
