#include "genusforge/nodal.hpp"

#include <algorithm>

namespace genusforge {

BlowupModel::BlowupModel(IntersectionModel base, const Int& r) : base_(std::move(base)) {
    require_valid(base_);
    if (r < 0) throw InvalidInput("node count must be nonnegative");
    if (r > 1'000'000) throw InvalidInput("node count beyond desk scale");
    r_ = r.convert_to<std::size_t>();
    const std::size_t n = base_.generators.size();
    gram_ = IntMatrix(n + r_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram_.at(i, j) = base_.gram.at(i, j);
    for (std::size_t i = 0; i < r_; ++i) gram_.at(n + i, n + i) = -1;
}

DivisorClass BlowupModel::pullback(const DivisorClass& base_class) const {
    if (base_class.size() != base_.generators.size())
        throw InvalidInput("pullback of a class from a different lattice");
    DivisorClass d(dim());
    for (std::size_t i = 0; i < base_class.size(); ++i) d[i] = base_class[i];
    return d;
}

DivisorClass BlowupModel::exceptional(std::size_t i) const {
    if (i >= r_) throw InvalidInput("exceptional index out of range");
    DivisorClass d(dim());
    d[base_.generators.size() + i] = 1;
    return d;
}

DivisorClass BlowupModel::sum_exceptional() const {
    DivisorClass d(dim());
    for (std::size_t i = 0; i < r_; ++i) d[base_.generators.size() + i] = 1;
    return d;
}

DivisorClass BlowupModel::canonical() const {
    return pullback(base_.unit(base_.k_index())) + sum_exceptional();
}

Int BlowupModel::intersect(const DivisorClass& d1, const DivisorClass& d2) const {
    return pair_classes(gram_, d1, d2);
}

Int BlowupModel::arithmetic_genus(const DivisorClass& d) const {
    const Int twice = intersect(d, d + canonical());
    if (!is_even(twice))
        throw InvalidInput("D.(D+K) odd on blowup; base model is inconsistent");
    return 1 + twice / 2;
}

LatticeView BlowupModel::view() const {
    LatticeView v;
    v.gram = &gram_;
    v.canonical = canonical();
    for (std::size_t t : base_.effective_tests)
        v.tests.emplace_back(base_.generators[t], pullback(base_.unit(t)));
    for (std::size_t i = 0; i < r_; ++i)
        v.tests.emplace_back("E" + std::to_string(i + 1), exceptional(i));
    return v;
}

BlowupModel blowup_extend(const IntersectionModel& base, const Int& r) {
    return BlowupModel(base, r);
}

NodalClasses nodal_class(const BlowupModel& blowup, const Int& m) {
    NodalClasses out;
    const auto& base = blowup.base();
    out.l_class = m * blowup.pullback(base.unit(base.h_index())) -
                  Int(3) * blowup.sum_exceptional();
    out.adjoint = blowup.canonical() + out.l_class;

    // K~ + L = f*(K + mH) - 2 sum E_i, as an exact vector identity.
    const DivisorClass rhs =
        blowup.pullback(adjoint_class(base, m)) - Int(2) * blowup.sum_exceptional();
    if (out.adjoint != rhs)
        throw Error("blowup adjoint identity failed; lattice extension is broken");

    // Coefficient of f*H once 3 * (floor(m/4) f*H - sum E) is split off;
    // nonnegative for m >= 0 (and >= 1 for m >= 1).
    const Int quarter = m >= 0 ? Int(m / 4) : Int((m - 3) / 4);  // floor
    out.fstar_h_coefficient = m - 3 * quarter;
    return out;
}

NodalWitness nodal_witness(const IntersectionModel& base, const Int& g,
                           const Int& m_min) {
    require_valid(base);
    const Int start = std::max(m_min, Int(1));
    const std::uint64_t cap = std::min<std::uint64_t>(max_search_bound(), 100'000);

    bool interval_seen = false;
    Int g_prev = arithmetic_genus(base, adjoint_class(base, start - 1));
    Int m = start;
    for (std::uint64_t steps = 0; steps < cap; ++steps, ++m) {
        const Int g_m = arithmetic_genus(base, adjoint_class(base, m));
        if (g_prev <= g && g <= g_m - 1) {
            interval_seen = true;
            const Int r = g_m - g;  // in [1, d_m] by the interval condition
            const BlowupModel blowup(base, r);
            NodalClasses cls = nodal_class(blowup, m);
            ReiderReport rep = reider_check(blowup.view(), cls.adjoint);
            if (rep.passed) {
                if (blowup.arithmetic_genus(cls.adjoint) != g)
                    throw Error("blowup genus recomputation disagrees with g_m - r");
                NodalWitness w;
                w.g = g;
                w.m = m;
                w.r = r;
                w.l_class = cls.l_class;
                w.reider = std::move(rep);
                auto bad = validate_nodal_witness(base, w);
                if (!bad.empty()) {
                    std::string msg = "nodal witness failed revalidation:";
                    for (const auto& b : bad) msg += " [" + b + "]";
                    throw Error(msg);
                }
                return w;
            }
        } else if (g_prev > g && g_m > g_prev) {
            break;  // strictly past every interval containing g
        }
        g_prev = g_m;
    }
    if (interval_seen)
        throw CertificationFailed("every matching interval failed the ampleness check");
    throw NoWitness("no m >= " + start.str() + " places " + g.str() +
                    " in [g_{m-1}, g_m - 1] within the scan budget");
}

std::vector<std::string> validate_nodal_witness(const IntersectionModel& base,
                                                const NodalWitness& w) {
    std::vector<std::string> bad;
    const Int g_m = arithmetic_genus(base, adjoint_class(base, w.m));
    const Int g_m1 = arithmetic_genus(base, adjoint_class(base, w.m - 1));
    const Int d_m = g_m - g_m1;
    if (w.r < 1 || w.r > d_m) bad.push_back("node count outside [1, d_m]");
    if (w.g != g_m - w.r) bad.push_back("genus != p_a(K+mH) - r");
    if (w.r < 0 || w.r > 1'000'000) return bad;

    const BlowupModel blowup(base, w.r);
    const auto& bm = base;
    const DivisorClass expect = w.m * blowup.pullback(bm.unit(bm.h_index())) -
                                Int(3) * blowup.sum_exceptional();
    if (w.l_class != expect) {
        bad.push_back("L != m f*H - 3 sum E_i");
        return bad;
    }
    const DivisorClass adjoint = blowup.canonical() + w.l_class;
    if (blowup.arithmetic_genus(adjoint) != w.g)
        bad.push_back("blowup genus recomputation != g");
    for (std::size_t i = 0; i < blowup.r(); ++i) {
        if (blowup.intersect(w.l_class, blowup.exceptional(i)) != 3) {
            bad.push_back("L.E_i != 3");
            break;
        }
        if (blowup.intersect(adjoint, blowup.exceptional(i)) != 2) {
            bad.push_back("(K+L).E_i != 2");
            break;
        }
    }
    const std::size_t h = bm.h_index();
    if (blowup.intersect(w.l_class, w.l_class) !=
        w.m * w.m * bm.gram.at(h, h) - 9 * w.r)
        bad.push_back("L.L != m^2 H^2 - 9r");
    if (!reider_check(blowup.view(), adjoint).passed)
        bad.push_back("ampleness certificate fails on recheck");
    return bad;
}

}  // namespace genusforge
