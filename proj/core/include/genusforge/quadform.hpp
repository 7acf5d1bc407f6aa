#ifndef GENUSFORGE_QUADFORM_HPP
#define GENUSFORGE_QUADFORM_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "genusforge/ints.hpp"

namespace genusforge {

// The 18-variable family
//
//   f(x_1..x_18) = a*(x_1^2+..+x_9^2) + b*(x_10^2+..+x_18^2) + c*(x_1+..+x_18)
//
// with a,b >= 1, |a-b| in {1,2} and a uniform linear coefficient c. Every
// large enough even integer is a value of f, by an explicit construction
// whose output never depends on c.
struct MixedQuadForm {
    Int a;
    Int b;
    Int c;

    MixedQuadForm(Int a_, Int b_, Int c_);
};

enum class RepPattern {
    // x_{i+4} = -x_i for i in {1..4} and {10..13}; x_9 = x_18 = 0.
    Paired,
    // Same pairing, plus x_9 = 1 and x_18 = -1.
    PairedWithUnitShift,
};

const char* to_string(RepPattern p);

// An 18-tuple solving f(x) = m, tagged with the construction case that
// produced it. Both patterns have vanishing linear part.
struct Representation18 {
    std::array<Int, 18> x;
    RepPattern pattern;
};

// Nonempty iff the tuple breaks a pattern invariant (length is enforced by
// the type; pairing, unit entries and linear-part cancellation are checked).
std::vector<std::string> validate_representation(const Representation18& rep);

// Plain evaluation of f. Throws InvalidInput unless xs.size() == 18.
Int evaluate(const MixedQuadForm& form, std::span<const Int> xs);
Int evaluate(const MixedQuadForm& form, const Representation18& rep);

// w >= x >= y >= z >= 0 with w^2+x^2+y^2+z^2 = n.
struct FourSquare {
    Int w, x, y, z;
};

// Deterministic four-square decomposition: the lexicographically greatest
// ordered quadruple. Exhaustive descending search; fine for desk-scale n.
FourSquare four_square_decompose(const Int& n);

// Least n0 such that every n >= n0 equals p*r + q*s with r,s >= 0.
// Requires gcd(p,q) = 1; equals (p-1)(q-1), cross-checked by scan in tests.
Int frobenius_threshold(const Int& p, const Int& q);

struct CoinPair {
    Int r, s;
};

// n = p*r + q*s with r,s >= 0 and r minimal. Requires gcd(p,q) = 1.
// Throws NoRepresentation when n has no such representation (never happens
// for n >= frobenius_threshold(p,q)).
CoinPair frobenius_represent(const Int& n, const Int& p, const Int& q);

// Constructive solution of f(x) = m for even m.
//
// gcd(a,b) = 1:  m/2 = a*r + b*s; four-square r and s; emit Paired. The
//                paired entries double the quadratic part and cancel the
//                linear part, so c never enters.
// gcd(a,b) = 2, m = 0 mod 4:  m/4 = (a/2)*r + (b/2)*s (coprime halves since
//                |a-b| = 2), hence m/2 = a*r + b*s; Paired as above.
// gcd(a,b) = 2, m = 2 mod 4:  a+b = 2 mod 4, so m-a-b = 0 mod 4; solve the
//                previous case for m-a-b and add x_9 = 1, x_18 = -1, which
//                contributes a+b quadratically and nothing linearly.
//
// Guaranteed for even m >= m0_bound(form). Below the bound the same two
// patterns are searched without the threshold guarantee; if neither reaches
// m, throws NoRepresentation. Odd m throws InvalidInput.
Representation18 represent_even(const Int& m, const MixedQuadForm& form);

// Constructive sufficiency threshold: every even m >= m0_bound(form) is
// realized by represent_even. Independent of c.
//   gcd 1:  2 * frobenius_threshold(a,b)
//   gcd 2:  4 * frobenius_threshold(a/2,b/2) + a + b   (covers both residues)
Int m0_bound(const MixedQuadForm& form);

// Empirical counterpart: the least even m* such that every even m in
// [m*, search_limit] is a value of f at SOME integer tuple (not only the
// pattern constructions). Decided exactly by a reachability sweep over the
// per-variable range any solution must lie in. Requires
// search_limit >= m0_bound(form); throws NotFound if even search_limit
// itself is unrepresentable.
Int m0_exact(const MixedQuadForm& form, const Int& search_limit);

// Exact representability table for even m in [lo_hint, search_limit], used
// by m0_exact and the sweep front end. Index i corresponds to
// m = 2*i + parity offset of the returned base; see RepresentabilityTable.
struct RepresentabilityTable {
    Int lo;                    // least even value covered (inclusive)
    Int hi;                    // greatest even value covered (inclusive)
    std::vector<bool> even_ok; // entry k: lo + 2k representable
    bool representable(const Int& even_m) const;
};

RepresentabilityTable representable_evens(const MixedQuadForm& form,
                                          const Int& search_limit);

}  // namespace genusforge

#endif
