#include "genusforge/quadform.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace genusforge {

MixedQuadForm::MixedQuadForm(Int a_, Int b_, Int c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a < 1 || b < 1) throw InvalidInput("quadratic coefficients must be >= 1");
    Int d = a - b;
    if (d < 0) d = -d;
    if (d != 1 && d != 2)
        throw InvalidInput("block coefficients must differ by 1 or 2, got a=" +
                           a.str() + " b=" + b.str());
}

const char* to_string(RepPattern p) {
    switch (p) {
        case RepPattern::Paired: return "paired";
        case RepPattern::PairedWithUnitShift: return "paired-unit-shift";
    }
    return "?";
}

Int evaluate(const MixedQuadForm& form, std::span<const Int> xs) {
    if (xs.size() != 18)
        throw InvalidInput("tuple length must be 18, got " + std::to_string(xs.size()));
    Int quad = 0, lin = 0;
    for (std::size_t i = 0; i < 18; ++i) {
        const Int& coeff = i < 9 ? form.a : form.b;
        quad += coeff * xs[i] * xs[i];
        lin += xs[i];
    }
    return quad + form.c * lin;
}

Int evaluate(const MixedQuadForm& form, const Representation18& rep) {
    return evaluate(form, std::span<const Int>(rep.x.data(), rep.x.size()));
}

std::vector<std::string> validate_representation(const Representation18& rep) {
    std::vector<std::string> out;
    for (int i = 0; i < 4; ++i) {
        if (rep.x[i + 4] != -rep.x[i])
            out.push_back("a-block entries " + std::to_string(i + 1) + "," +
                          std::to_string(i + 5) + " not paired");
        if (rep.x[9 + i + 4] != -rep.x[9 + i])
            out.push_back("b-block entries " + std::to_string(i + 10) + "," +
                          std::to_string(i + 14) + " not paired");
    }
    const Int want9 = rep.pattern == RepPattern::Paired ? 0 : 1;
    if (rep.x[8] != want9) out.push_back("entry 9 does not match pattern");
    if (rep.x[17] != -want9) out.push_back("entry 18 does not match pattern");
    Int sum = 0;
    for (const Int& v : rep.x) sum += v;
    if (sum != 0) out.push_back("linear part does not cancel");
    return out;
}

// ---------------------------------------------------------------------------
// Four squares
// ---------------------------------------------------------------------------

namespace {

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Descending search over ordered quadruples w >= x >= y >= z: the first hit
// is the lexicographically greatest decomposition. For fixed (w,x) the y
// loop stops as soon as the forced z would exceed y; smaller y only make
// the residue larger.
template <class I, class Sqrt>
std::array<I, 4> four_square_search(const I& n, Sqrt isq) {
    if (n == 0) return {I(0), I(0), I(0), I(0)};
    for (I w = isq(n);; --w) {
        const I rem1 = n - w * w;
        for (I x = std::min(w, isq(rem1));; --x) {
            const I rem2 = rem1 - x * x;
            for (I y = std::min(x, isq(rem2));; --y) {
                const I rem3 = rem2 - y * y;
                const I z = isq(rem3);
                if (z > y) break;
                if (z * z == rem3) return {w, x, y, z};
                if (y == 0) break;
            }
            if (x == 0) break;
        }
        if (w == 0) break;  // unreachable: Lagrange guarantees a hit
    }
    return {I(0), I(0), I(0), I(0)};
}

}  // namespace

FourSquare four_square_decompose(const Int& n) {
    if (n < 0) throw InvalidInput("four_square_decompose: negative input");
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        auto q = four_square_search<std::uint64_t>(n.convert_to<std::uint64_t>(),
                                                   isqrt_u64);
        return {Int(q[0]), Int(q[1]), Int(q[2]), Int(q[3])};
    }
    auto q = four_square_search<Int>(n, [](const Int& v) { return isqrt(v); });
    return {q[0], q[1], q[2], q[3]};
}

// ---------------------------------------------------------------------------
// Two-coin arithmetic
// ---------------------------------------------------------------------------

static void require_coprime_pair(const Int& p, const Int& q) {
    if (p < 1 || q < 1) throw InvalidInput("coin values must be >= 1");
    if (boost::multiprecision::gcd(p, q) != 1)
        throw InvalidInput("coin values must be coprime, got " + p.str() + "," + q.str());
}

Int frobenius_threshold(const Int& p, const Int& q) {
    require_coprime_pair(p, q);
    if (p == 1 || q == 1) return 0;
    return (p - 1) * (q - 1);
}

CoinPair frobenius_represent(const Int& n, const Int& p, const Int& q) {
    require_coprime_pair(p, q);
    // Solutions with r >= 0 have r unique mod q, so the minimal r (if any)
    // lies in [0, q-1].
    for (Int r = 0; r < q && p * r <= n; ++r) {
        Int rest = n - p * r;
        if (rest % q == 0) return {r, rest / q};
    }
    throw NoRepresentation(n.str() + " is not a nonnegative combination of " +
                           p.str() + " and " + q.str());
}

// ---------------------------------------------------------------------------
// Lemma-style construction
// ---------------------------------------------------------------------------

namespace {

Representation18 assemble(const FourSquare& fa, const FourSquare& fb, bool shift) {
    Representation18 rep;
    rep.pattern = shift ? RepPattern::PairedWithUnitShift : RepPattern::Paired;
    const std::array<Int, 4> av{fa.w, fa.x, fa.y, fa.z};
    const std::array<Int, 4> bv{fb.w, fb.x, fb.y, fb.z};
    for (int i = 0; i < 4; ++i) {
        rep.x[i] = av[i];
        rep.x[i + 4] = -av[i];
        rep.x[9 + i] = bv[i];
        rep.x[13 + i] = -bv[i];
    }
    rep.x[8] = shift ? 1 : 0;
    rep.x[17] = shift ? -1 : 0;
    return rep;
}

// m/2 = a*r + b*s with minimal r, honoring the gcd split. Throws
// NoRepresentation when the target is negative, odd where it must be even,
// or outside the numerical semigroup.
CoinPair solve_half(const Int& half, const Int& a, const Int& b, const Int& g) {
    if (half < 0) throw NoRepresentation("negative target");
    if (g == 1) return frobenius_represent(half, a, b);
    // a, b both even: a*r + b*s is even, so half must be too.
    if (!is_even(half)) throw NoRepresentation("parity obstruction");
    return frobenius_represent(half / 2, a / 2, b / 2);
}

}  // namespace

Representation18 represent_even(const Int& m, const MixedQuadForm& form) {
    if (!is_even(m)) throw InvalidInput("target must be even, got " + m.str());
    const Int g = boost::multiprecision::gcd(form.a, form.b);

    // Case split of the construction; below m0_bound the same two patterns
    // are tried without the threshold guarantee.
    try {
        CoinPair rs = solve_half(m / 2, form.a, form.b, g);
        return assemble(four_square_decompose(rs.r), four_square_decompose(rs.s),
                        false);
    } catch (const NoRepresentation&) {
        // fall through to the unit-shift pattern
    }
    const Int shifted = m - form.a - form.b;
    if (shifted >= 0 && is_even(shifted)) {
        try {
            CoinPair rs = solve_half(shifted / 2, form.a, form.b, g);
            return assemble(four_square_decompose(rs.r),
                            four_square_decompose(rs.s), true);
        } catch (const NoRepresentation&) {
        }
    }
    throw NoRepresentation("no pattern representation of " + m.str() +
                           " by form a=" + form.a.str() + " b=" + form.b.str());
}

Int m0_bound(const MixedQuadForm& form) {
    const Int g = boost::multiprecision::gcd(form.a, form.b);
    Int bound;
    if (g == 1) {
        bound = 2 * frobenius_threshold(form.a, form.b);
    } else {
        // Residue 0 mod 4 needs m >= 4*T'; residue 2 mod 4 needs
        // m - a - b >= 4*T'. The latter dominates.
        bound = 4 * frobenius_threshold(form.a / 2, form.b / 2) + form.a + form.b;
    }
    if (!is_even(bound)) ++bound;
    return bound;
}

// ---------------------------------------------------------------------------
// Exact representability oracle
// ---------------------------------------------------------------------------

namespace {

Int floor_div(const Int& a, const Int& b) {
    // b > 0; cpp_int division truncates toward zero
    Int q = a / b;
    if (q * b > a) --q;
    return q;
}

Int var_value(const Int& coeff, const Int& c, const Int& x) {
    return coeff * x * x + c * x;
}

// min over integer x of coeff*x^2 + c*x  (vertex at -c/(2*coeff))
Int var_min(const Int& coeff, const Int& c) {
    Int x0 = floor_div(-c, 2 * coeff);
    return std::min(var_value(coeff, c, x0), var_value(coeff, c, x0 + 1));
}

long long to_ll(const Int& v) {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max())
        throw InvalidInput("oracle bound does not fit 64 bits: " + v.str());
    return v.convert_to<long long>();
}

// All per-variable values coeff*x^2 + c*x <= cap, sorted by x.
std::vector<long long> var_values_upto(const Int& coeff, const Int& c, const Int& cap) {
    const Int disc = c * c + 4 * coeff * cap;
    std::vector<long long> vals;
    if (disc < 0) return vals;
    const Int s = isqrt(disc);
    const Int xmax = floor_div(-c + s, 2 * coeff);
    const Int xmin = -floor_div(c + s, 2 * coeff);  // ceil of the lower root
    for (Int x = xmin; x <= xmax; ++x) {
        Int v = var_value(coeff, c, x);
        if (v <= cap) vals.push_back(to_ll(v));
    }
    return vals;
}

}  // namespace

bool RepresentabilityTable::representable(const Int& even_m) const {
    if (!is_even(even_m)) throw InvalidInput("oracle table indexed with odd value");
    if (even_m < lo) return false;  // below the form's minimum
    if (even_m > hi) throw InvalidInput("oracle table indexed beyond its limit");
    return even_ok[((even_m - lo) / 2).convert_to<std::size_t>()];
}

RepresentabilityTable representable_evens(const MixedQuadForm& form,
                                          const Int& search_limit) {
    if (search_limit < 0) throw InvalidInput("search limit must be nonnegative");

    // Any solution of f(x) = m <= limit keeps every per-variable value in
    // [Vmin, limit - 17*Vmin]; that bounds |x_i| and makes the sweep below
    // complete for every target up to the limit.
    const Int vmin = std::min(std::min(var_min(form.a, form.c), var_min(form.b, form.c)), Int(0));
    const Int cap = search_limit - 17 * vmin;
    const auto avals = var_values_upto(form.a, form.c, cap);
    const auto bvals = var_values_upto(form.b, form.c, cap);

    const long long lo_w = to_ll(18 * vmin);
    const long long hi_w = to_ll(search_limit - 18 * vmin);
    const auto width = static_cast<std::uint64_t>(hi_w - lo_w + 1);
    if (width > max_search_bound())
        throw InvalidInput("oracle window " + std::to_string(width) +
                           " exceeds GENUSFORGE_MAX_SEARCH");

    boost::dynamic_bitset<> cur(width), next(width);
    cur.set(static_cast<std::size_t>(-lo_w));
    auto fold = [&](const std::vector<long long>& vals) {
        next.reset();
        for (long long v : vals) {
            if (v >= 0)
                next |= (cur << static_cast<std::size_t>(v));
            else
                next |= (cur >> static_cast<std::size_t>(-v));
        }
        cur.swap(next);
    };
    for (int i = 0; i < 9; ++i) fold(avals);
    for (int i = 0; i < 9; ++i) fold(bvals);

    RepresentabilityTable table;
    long long lo_even = lo_w + (((lo_w % 2) + 2) % 2);
    long long hi_even = to_ll(search_limit) - (search_limit % 2 == 0 ? 0 : 1);
    table.lo = lo_even;
    table.hi = hi_even;
    for (long long v = lo_even; v <= hi_even; v += 2)
        table.even_ok.push_back(cur[static_cast<std::size_t>(v - lo_w)]);
    return table;
}

Int m0_exact(const MixedQuadForm& form, const Int& search_limit) {
    if (search_limit < m0_bound(form))
        throw InvalidInput("search limit " + search_limit.str() +
                           " below m0_bound " + m0_bound(form).str());
    const RepresentabilityTable table = representable_evens(form, search_limit);
    if (!table.representable(table.hi))
        throw NotFound("no representable stretch reaching the search limit");
    for (Int m = table.hi - 2; m >= table.lo; m -= 2)
        if (!table.representable(m)) return m + 2;
    return table.lo;
}

}  // namespace genusforge
