#include "genusforge/planner.hpp"

#include <algorithm>

#include "genusforge/quadform.hpp"

namespace genusforge {

Int g_sequence(const IntersectionModel& model, const Int& m) {
    return arithmetic_genus(model, adjoint_class(model, m));
}

Int locate_interval(const IntersectionModel& model, const Int& g, const Int& m_min) {
    if (g < g_sequence(model, m_min - 2))
        throw OutOfRange("genus " + g.str() + " below g_{m_min-2}");
    if (g <= g_sequence(model, m_min - 1)) return m_min;

    // Bracket the least m with g_{m-1} >= g by doubling, then bisect.
    Int lo = m_min;  // g_{lo-1} < g
    Int step = 1;
    Int hi = m_min + step;
    int rounds = 0;
    while (g_sequence(model, hi - 1) < g) {
        lo = hi;
        step *= 2;
        hi = m_min + step;
        if (++rounds > 512) throw NotFound("g_sequence does not reach " + g.str());
    }
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (g_sequence(model, mid - 1) >= g)
            hi = mid;
        else
            lo = mid;
    }
    // Verify the postcondition instead of trusting monotonicity.
    if (!(g_sequence(model, hi - 2) <= g && g <= g_sequence(model, hi - 1)) ||
        g_sequence(model, hi - 2) >= g_sequence(model, hi - 1))
        throw InvalidInput("g_sequence not strictly increasing past m_min");
    return hi;
}

Int lemma1_m_min(const IntersectionModel& model) {
    require_valid(model);
    if (!model.blocks) throw InvalidInput("planning needs curve blocks");
    // Gap targets over the interval for m are T in [2 d_m, 2(g_m - g_{m-2})];
    // the small end 2 d_m = 3 K.H + (2m-1) H^2 grows linearly, so the least
    // admissible m is where it clears the gap form's constructive threshold.
    const Int threshold = m0_bound(exact_gap_form(model, 1).first);  // c-independent
    const std::uint64_t cap = std::min<std::uint64_t>(max_search_bound(), 1'000'000);
    for (Int m = 1; m <= cap; ++m)
        if (2 * (g_sequence(model, m) - g_sequence(model, m - 1)) >= threshold)
            return m;
    throw NotFound("interval gaps never clear the representation threshold");
}

PlannerParams resolve_params(const IntersectionModel& model, const Int& caller_m_min) {
    require_valid(model);
    if (!model.blocks) throw InvalidInput("planning needs curve blocks");
    const std::size_t h = model.h_index(), k = model.k_index();
    const Int h2 = model.gram.at(h, h);
    const Int kh = model.gram.at(k, h);
    const Int lemma1 = lemma1_m_min(model);

    Int e = 1;
    while (e * e < 4 * h2 + 2) ++e;
    for (;; ++e) {
        const Int m1 = m1_threshold(model, Rational(e));
        const Int m_min = std::max({caller_m_min, m1, lemma1, Int(1)});
        // Need e^2 m >= 2(g_m - g_{m-2}) = 4 H^2 m + (6 K.H - 4 H^2) for all
        // m >= m_min; with e^2 > 4H^2 that is one inequality at m_min.
        if ((e * e - 4 * h2) * m_min >= 6 * kh - 4 * h2)
            return {e, m_min};
    }
}

GenusWitness witness(const IntersectionModel& model, const Int& g, const Int& m_min) {
    const PlannerParams params = resolve_params(model, m_min);
    const Int m = locate_interval(model, g, params.m_min);
    const Int gap = g_sequence(model, m) - g;
    const Int target = 2 * gap;  // even by construction

    auto [form, cert] = exact_gap_form(model, m);
    Representation18 rep;
    try {
        rep = represent_even(target, form);
    } catch (const NoRepresentation& ex) {
        throw NoWitness("gap target " + target.str() +
                        " not representable: " + ex.what());
    }

    GenusWitness w;
    w.g = g;
    w.m = m;
    w.x = rep.x;
    w.divisor = adjoint_class(model, m, std::span<const Int>(rep.x.data(), 18));
    w.e_used = Rational(params.e);
    w.reider = reider_check(model, w.divisor);
    if (!w.reider.passed) {
        std::string detail = "square " + w.reider.square_value.str();
        if (w.reider.worst_test)
            detail += ", worst test " + w.reider.worst_test->first + " = " +
                      w.reider.worst_test->second.str();
        throw CertificationFailed("ampleness check failed at m=" + m.str() + " (" +
                                  detail + ")");
    }

    auto bad = validate_witness(model, w);
    if (!bad.empty()) {
        std::string msg = "witness failed revalidation:";
        for (const auto& b : bad) msg += " [" + b + "]";
        throw Error(msg);
    }
    return w;
}

GenusWitness witness(const IntersectionModel& model, const Int& g) {
    return witness(model, g, Int(0));
}

std::vector<std::string> validate_witness(const IntersectionModel& model,
                                          const GenusWitness& w) {
    std::vector<std::string> bad;
    if (arithmetic_genus(model, w.divisor) != w.g)
        bad.push_back("arithmetic genus of divisor != g");
    if (w.divisor != adjoint_class(model, w.m, std::span<const Int>(w.x.data(), 18)))
        bad.push_back("divisor != K + mH + sum x_i C_i");
    const Int bound = w.e_used.num * w.e_used.num * w.m;
    for (const Int& xi : w.x)
        if (xi * xi * w.e_used.den * w.e_used.den > bound) {
            bad.push_back("curve coefficient exceeds e*sqrt(m) bound");
            break;
        }
    if (!reider_check(model, w.divisor).passed)
        bad.push_back("ampleness certificate fails on recheck");
    return bad;
}

Int empirical_g0(const IntersectionModel& model, const Int& scan_span) {
    if (scan_span < 0) throw InvalidInput("scan span must be nonnegative");
    const PlannerParams params = resolve_params(model, 0);
    const Int start = g_sequence(model, params.m_min - 2);

    Int g = start;
    Int run_start = start;
    Int run_len = 0;
    const Int want = scan_span + 1;
    const std::uint64_t budget =
        std::min<std::uint64_t>(max_search_bound(), 1'000'000) +
        want.convert_to<std::uint64_t>();
    for (std::uint64_t steps = 0; steps < budget; ++steps, ++g) {
        bool ok = true;
        try {
            witness(model, g, params.m_min);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            if (run_len == 0) run_start = g;
            if (++run_len == want) return run_start;
        } else {
            run_len = 0;
        }
    }
    throw NotFound("no gap-free genus run of length " + want.str() +
                   " within search budget");
}

Int product_lower_bound(const Int& g1, const Int& g2, const Int& g3) {
    if (g1 < 0 || g2 < 0 || g3 < 0)
        throw InvalidInput("component genera must be nonnegative");
    return std::min({g1, g2, g3});
}

}  // namespace genusforge
