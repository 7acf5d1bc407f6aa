#include "genusforge/ampleness.hpp"

#include <algorithm>

namespace genusforge {

LatticeView view_of(const IntersectionModel& model) {
    LatticeView v;
    v.gram = &model.gram;
    v.canonical = model.unit(model.k_index());
    for (std::size_t t : model.effective_tests)
        v.tests.emplace_back(model.generators[t], model.unit(t));
    return v;
}

ReiderReport reider_check(const LatticeView& view, const DivisorClass& d) {
    DivisorClass m_class = d - view.canonical;
    ReiderReport rep;
    rep.square_value = pair_classes(*view.gram, m_class, m_class);
    rep.passed = rep.square_value >= 10;
    for (const auto& [name, cls] : view.tests) {
        Int v = pair_classes(*view.gram, m_class, cls);
        if (!rep.worst_test || v < rep.worst_test->second) rep.worst_test = {name, v};
    }
    if (rep.worst_test && rep.worst_test->second < 3) rep.passed = false;
    return rep;
}

ReiderReport reider_check(const IntersectionModel& model, const DivisorClass& d) {
    return reider_check(view_of(model), d);
}

// ---------------------------------------------------------------------------
// Twist integer
// ---------------------------------------------------------------------------
//
// W(eps) = t*H - sum eps_i C_i must stay positive against every test class
// and keep positive self-intersection for all 3^18 sign vectors. The curve
// classes are mutually disjoint and meet every non-curve generator alike,
// so each quantity splits per index and the worst case is closed-form:
//
//   non-curve test T:  W.T  = t(H.T) - (C.T) * sum eps_i
//                      min  = t(H.T) - 18|C.T|          (all eps = sign(C.T))
//   curve test C_j:    W.C_j = t(H.C) + eps_j * (-C_j.C_j)
//                      min   = t(H.C) - (-C_j.C_j)      (eps_j = -1)
//   self-intersection: W.W  = t^2 H^2 - 2t(H.C) sum eps_i + sum eps_i^2 C_i.C_i
//                      each index contributes -2t(H.C)eps_i + eps_i^2 C_i.C_i,
//                      minimized at eps_i = +1 since H.C > 0 and C_i.C_i < 0:
//                      min  = t^2 H^2 - 36 t (H.C) + sum C_i.C_i
//
// The per-block sign-count quotient enumeration in the tests checks these
// reductions against every sign-pattern class.

namespace {

struct BlockData {
    std::size_t h, k;
    std::vector<std::size_t> curves;  // a-block then b-block
    Int h2, h_dot_c, a;               // a = -C.C on the a-block
    Int sum_c_self;                   // = -(9a + 9(a+2))
};

BlockData block_data(const IntersectionModel& model) {
    if (!model.blocks) throw InvalidInput("operation needs curve blocks");
    BlockData d;
    d.h = model.h_index();
    d.k = model.k_index();
    d.curves.insert(d.curves.end(), model.blocks->a_block.begin(),
                    model.blocks->a_block.end());
    d.curves.insert(d.curves.end(), model.blocks->b_block.begin(),
                    model.blocks->b_block.end());
    d.h2 = model.gram.at(d.h, d.h);
    d.h_dot_c = model.gram.at(d.h, d.curves.front());
    d.a = model.curve_a();
    d.sum_c_self = 0;
    for (std::size_t c : d.curves) d.sum_c_self += model.gram.at(c, c);
    return d;
}

bool is_curve_index(const BlockData& d, std::size_t idx) {
    return std::find(d.curves.begin(), d.curves.end(), idx) != d.curves.end();
}

}  // namespace

bool twist_positive_for_all_signs(const IntersectionModel& model, const Int& t) {
    const BlockData d = block_data(model);
    for (std::size_t idx : model.effective_tests) {
        Int worst;
        if (is_curve_index(d, idx)) {
            worst = t * d.h_dot_c - (-model.gram.at(idx, idx));
        } else {
            Int gamma = model.gram.at(d.curves.front(), idx);
            if (gamma < 0) gamma = -gamma;
            worst = t * model.gram.at(d.h, idx) - 18 * gamma;
        }
        if (worst <= 0) return false;
    }
    const Int worst_square = t * t * d.h2 - 36 * t * d.h_dot_c + d.sum_c_self;
    return worst_square > 0;
}

Int find_twist_t(const IntersectionModel& model) {
    require_valid(model);
    if (!model.blocks) throw InvalidInput("twist search needs curve blocks");
    const std::uint64_t cap = std::min<std::uint64_t>(max_search_bound(), 1'000'000);
    for (Int t = 1; t <= cap; ++t)
        if (twist_positive_for_all_signs(model, t)) return t;
    throw NotFound("no twist integer within search budget");
}

// ---------------------------------------------------------------------------
// m1 threshold
// ---------------------------------------------------------------------------
//
// For D = K + mH + sum x_i C_i with x_i^2 <= e^2 m, write M = D - K and
// X = max |x_i| <= e sqrt(m). Worst cases over all admissible x:
//
//   non-curve test T:  M.T >= m(H.T) - 18 X |C.T|
//   curve test C_j:    M.C_j >= m(H.C) - X (-C_j.C_j)
//   square:            M.M >= m^2 H^2 - 36 m (H.C) X - X^2 sum |C_i.C_i|
//
// Writing e = p/q, each linear condition  alpha m - beta e sqrt(m) >= 3
// holds once sqrt(m) >= (beta p + 3q)/(alpha q), i.e.
// m >= ceil((beta p + 3q)^2 / (alpha q)^2), and stays true beyond. For the
// square, splitting H^2 m^2 into three equal parts gives the sufficient
// thresholds m >= (108 (H.C) p / (H^2 q))^2, m >= 27 sum|C.C| p^2/(H^2 q^2)
// and H^2 m^2 >= 30. The returned threshold is the max of these and of the
// twist-based bound m > (18 t e)^2; the latter dominates on models whose
// twist integer is large, but alone it is not sufficient when e is small.

namespace {

Int linear_condition_threshold(const Int& alpha, const Int& beta, const Rational& e) {
    // least m beyond which alpha*m - beta*e*sqrt(m) >= 3 is guaranteed
    if (alpha <= 0) throw InvalidInput("test class with nonpositive H-degree");
    const Int num = beta * e.num + 3 * e.den;
    const Int den = alpha * e.den;
    return ceil_div(num * num, den * den);
}

}  // namespace

Int m1_threshold(const IntersectionModel& model, const Rational& e) {
    require_valid(model);
    if (e.num < 0) throw InvalidInput("e must be nonnegative");

    if (e.is_zero()) {
        // x = 0 only: least m with reider_check(K + mH) passing. Every
        // quantity is nondecreasing in m, so the first pass is least.
        const std::uint64_t cap = std::min<std::uint64_t>(max_search_bound(), 1'000'000);
        for (Int m = 0; m <= cap; ++m)
            if (reider_check(model, adjoint_class(model, m)).passed) return m;
        throw NotFound("no m with passing ampleness check within budget");
    }

    const BlockData d = block_data(model);
    const Int t = find_twist_t(model);

    Int m1 = 1;
    auto raise = [&m1](const Int& v) { m1 = std::max(m1, v); };

    // m > (18 t e)^2
    const Int tp = 18 * t * e.num;
    raise(tp * tp / (e.den * e.den) + 1);

    for (std::size_t idx : model.effective_tests) {
        if (is_curve_index(d, idx)) {
            raise(linear_condition_threshold(d.h_dot_c, -model.gram.at(idx, idx), e));
        } else {
            Int gamma = model.gram.at(d.curves.front(), idx);
            if (gamma < 0) gamma = -gamma;
            raise(linear_condition_threshold(model.gram.at(d.h, idx), 18 * gamma, e));
        }
    }

    {
        const Int c1 = 108 * d.h_dot_c * e.num;
        raise(ceil_div(c1 * c1, d.h2 * d.h2 * e.den * e.den));
        raise(ceil_div(27 * (-d.sum_c_self) * e.num * e.num, d.h2 * e.den * e.den));
        Int m = 1;
        while (d.h2 * m * m < 30) ++m;
        raise(m);
    }
    return m1;
}

}  // namespace genusforge
