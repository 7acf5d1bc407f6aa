#ifndef GENUSFORGE_PLANNER_HPP
#define GENUSFORGE_PLANNER_HPP

#include <array>
#include <string>
#include <vector>

#include "genusforge/ampleness.hpp"
#include "genusforge/ints.hpp"
#include "genusforge/lattice.hpp"

namespace genusforge {

// A certified realization of genus g: the class K + mH + sum x_i C_i has
// arithmetic genus g, the curve coefficients obey x_i^2 <= e_used^2 * m,
// and the ampleness surrogate accepted the class.
struct GenusWitness {
    Int g;
    Int m;
    std::array<Int, 18> x;
    DivisorClass divisor;
    Rational e_used;
    ReiderReport reider;
};

// g_m = p_a(K + mH).
Int g_sequence(const IntersectionModel& model, const Int& m);

// Least m >= m_min with g_{m-2} <= g <= g_{m-1}. Consecutive intervals
// share endpoints once g_sequence increases strictly, so existence only
// needs g >= g_{m_min - 2}; below that throws OutOfRange.
Int locate_interval(const IntersectionModel& model, const Int& g, const Int& m_min);

// Least m such that every gap value 2(g_m - g) over the certified interval
// clears the constructive threshold of the gap form.
Int lemma1_m_min(const IntersectionModel& model);

// Working parameters: the slack integer e (least with e^2 >= 4H^2 + 2,
// then raised until e^2 m >= 2(g_m - g_{m-2}) holds for all m >= m_min)
// and the effective m_min = max(caller's, m1_threshold(e), lemma1_m_min).
struct PlannerParams {
    Int e;
    Int m_min;
};

PlannerParams resolve_params(const IntersectionModel& model, const Int& caller_m_min);

// Witness synthesis: locate the interval, represent the even gap
// T = 2(g_m - g) by the gap form, assemble the divisor and fully re-verify
// every invariant. Throws OutOfRange / NoWitness / CertificationFailed.
GenusWitness witness(const IntersectionModel& model, const Int& g, const Int& m_min);
GenusWitness witness(const IntersectionModel& model, const Int& g);

// Independent recheck of all four witness invariants straight from the
// Gram matrix; never trusts the planner's algebra. Empty result = sound.
std::vector<std::string> validate_witness(const IntersectionModel& model,
                                          const GenusWitness& w);

// Least G such that witness() succeeds for every g in [G, G + scan_span].
// Empirical: valid only for the scanned span, not a proven threshold.
Int empirical_g0(const IntersectionModel& model, const Int& scan_span);

// min(g1, g2, g3): the genus floor on a product of three curves, showing
// no threshold works uniformly across all threefolds.
Int product_lower_bound(const Int& g1, const Int& g2, const Int& g3);

}  // namespace genusforge

#endif
