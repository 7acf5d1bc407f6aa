#ifndef GENUSFORGE_AMPLENESS_HPP
#define GENUSFORGE_AMPLENESS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genusforge/ints.hpp"
#include "genusforge/lattice.hpp"

namespace genusforge {

// A lattice with a distinguished canonical class and named positivity test
// classes; common ground for intersection models and their blowups.
struct LatticeView {
    const IntMatrix* gram;
    DivisorClass canonical;
    std::vector<std::pair<std::string, DivisorClass>> tests;
};

LatticeView view_of(const IntersectionModel& model);

inline constexpr const char* kReiderCaveat =
    "positivity quantified over the declared effective test classes, a "
    "desk-scale stand-in for all irreducible curves";

// Outcome of the very-ampleness surrogate for |D|: with M := D - K,
// passed iff M.M >= 10 and M.T >= 3 for every effective test class T.
struct ReiderReport {
    bool passed;
    Int square_value;  // (D-K).(D-K)
    std::optional<std::pair<std::string, Int>> worst_test;  // min of (D-K).T
    std::string caveat = kReiderCaveat;
};

ReiderReport reider_check(const LatticeView& view, const DivisorClass& d);
ReiderReport reider_check(const IntersectionModel& model, const DivisorClass& d);

// True iff t*H - sum eps_i C_i has positive self-intersection and positive
// degree on every effective test class for EVERY sign vector
// eps in {-1,0,1}^18, decided by closed-form worst cases (no enumeration).
bool twist_positive_for_all_signs(const IntersectionModel& model, const Int& t);

// Least t >= 1 with twist_positive_for_all_signs. Requires curve blocks.
// Throws NotFound past the search budget.
Int find_twist_t(const IntersectionModel& model);

// Least m such that reider_check is guaranteed to pass for every
// D = K + mH + sum x_i C_i with x_i^2 <= e^2 m, certified analytically via
// worst-case bounds per test class (x is never enumerated). e = 0
// degenerates to the least m with reider_check(K + mH) passing.
Int m1_threshold(const IntersectionModel& model, const Rational& e);

}  // namespace genusforge

#endif
