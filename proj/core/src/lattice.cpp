#include "genusforge/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace genusforge {

bool IntMatrix::symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    if (o.size() != size()) throw InvalidInput("divisor class dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    if (o.size() != size()) throw InvalidInput("divisor class dimension mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
}

DivisorClass& DivisorClass::operator*=(const Int& k) {
    for (auto& c : coeffs) c *= k;
    return *this;
}

std::size_t IntersectionModel::index_of(const std::string& name) const {
    if (auto idx = find(name)) return *idx;
    throw InvalidInput("no generator named '" + name + "'");
}

std::optional<std::size_t> IntersectionModel::find(const std::string& name) const {
    auto it = std::find(generators.begin(), generators.end(), name);
    if (it == generators.end()) return std::nullopt;
    return static_cast<std::size_t>(it - generators.begin());
}

DivisorClass IntersectionModel::unit(std::size_t idx) const {
    DivisorClass d(generators.size());
    d[idx] = 1;
    return d;
}

Int IntersectionModel::curve_a() const {
    if (!blocks) throw InvalidInput("model has no curve blocks");
    return -gram.at(blocks->a_block[0], blocks->a_block[0]);
}

std::vector<std::string> validate_model(const IntersectionModel& model) {
    std::vector<std::string> bad;
    const std::size_t n = model.generators.size();
    if (n == 0) {
        bad.push_back("no generators");
        return bad;
    }
    {
        std::set<std::string> seen;
        for (const auto& g : model.generators)
            if (!seen.insert(g).second) bad.push_back("duplicate generator '" + g + "'");
    }
    if (!model.find("K")) bad.push_back("missing generator K");
    if (!model.find("H")) bad.push_back("missing generator H");
    if (model.gram.size() != n) {
        bad.push_back("gram size does not match generator count");
        return bad;  // nothing below is meaningful
    }
    if (!model.gram.symmetric()) bad.push_back("gram not symmetric");
    for (std::size_t t : model.effective_tests)
        if (t >= n) bad.push_back("effective test index out of range");
    if (!model.find("K") || !model.find("H")) return bad;

    const std::size_t k = model.k_index();
    const std::size_t h = model.h_index();

    // G.G + G.K even for every generator: keeps 1 + D.(D+K)/2 integral for
    // every integer class D.
    for (std::size_t i = 0; i < n; ++i)
        if (!is_even(model.gram.at(i, i) + model.gram.at(i, k)))
            bad.push_back("even-adjoint condition violated for " + model.generators[i]);

    if (model.gram.at(h, h) <= 0) bad.push_back("H self-intersection not positive");
    for (std::size_t t : model.effective_tests) {
        if (t >= n) continue;
        if (model.gram.at(h, t) <= 0)
            bad.push_back("H not positive against effective test " + model.generators[t]);
    }

    if (model.blocks) {
        const auto& blk = *model.blocks;
        std::vector<std::size_t> all;
        all.insert(all.end(), blk.a_block.begin(), blk.a_block.end());
        all.insert(all.end(), blk.b_block.begin(), blk.b_block.end());
        std::set<std::size_t> uniq(all.begin(), all.end());
        bool indices_ok = uniq.size() == 18;
        for (std::size_t i : all)
            if (i >= n) indices_ok = false;
        if (!indices_ok) {
            bad.push_back("curve blocks must name 18 distinct generators");
            return bad;
        }
        if (uniq.count(k) || uniq.count(h))
            bad.push_back("curve blocks must not contain K or H");

        bool disjoint = true;
        for (std::size_t ii = 0; disjoint && ii < all.size(); ++ii)
            for (std::size_t jj = ii + 1; jj < all.size(); ++jj)
                if (model.gram.at(all[ii], all[jj]) != 0) {
                    disjoint = false;
                    break;
                }
        if (!disjoint) bad.push_back("blocks not disjoint");

        const Int a_self = model.gram.at(blk.a_block[0], blk.a_block[0]);
        const Int b_self = model.gram.at(blk.b_block[0], blk.b_block[0]);
        for (std::size_t i : blk.a_block)
            if (model.gram.at(i, i) != a_self) {
                bad.push_back("a-block self-intersections not uniform");
                break;
            }
        for (std::size_t i : blk.b_block)
            if (model.gram.at(i, i) != b_self) {
                bad.push_back("b-block self-intersections not uniform");
                break;
            }
        if (a_self - b_self != 2) bad.push_back("self-intersection gap != 2");
        if (a_self >= 0) bad.push_back("curve self-intersections must be negative");

        // Numerical-equivalence axiom: the 18 curves meet every NON-curve
        // generator alike. (Against each other they are disjoint with
        // negative self-intersection, so the literal all-generators version
        // is vacuously impossible.)
        for (std::size_t g = 0; g < n; ++g) {
            if (uniq.count(g)) continue;
            const Int ref = model.gram.at(all[0], g);
            for (std::size_t i : all)
                if (model.gram.at(i, g) != ref) {
                    bad.push_back("curve intersections against " + model.generators[g] +
                                  " not uniform");
                    break;
                }
        }

        // H very ample: positive degree on every curve class.
        for (std::size_t i : all)
            if (model.gram.at(h, i) <= 0) {
                bad.push_back("H not positive against curve classes");
                break;
            }

        // Genus offset between blocks, restated on the lattice: with equal
        // C.K this is exactly the self-intersection gap of 2.
        const Int pa_a = model.gram.at(blk.a_block[0], blk.a_block[0]) +
                         model.gram.at(blk.a_block[0], k);
        const Int pa_b = model.gram.at(blk.b_block[0], blk.b_block[0]) +
                         model.gram.at(blk.b_block[0], k);
        if (pa_a - pa_b != 2) bad.push_back("arithmetic genus offset between blocks != 1");
    }
    return bad;
}

void require_valid(const IntersectionModel& model) {
    auto bad = validate_model(model);
    if (bad.empty()) return;
    std::ostringstream os;
    os << "invalid intersection model:";
    for (const auto& b : bad) os << " [" << b << "]";
    throw InvalidInput(os.str());
}

Int pair_classes(const IntMatrix& gram, const DivisorClass& d1, const DivisorClass& d2) {
    if (d1.size() != gram.size() || d2.size() != gram.size())
        throw InvalidInput("divisor class dimension mismatch");
    Int total = 0;
    for (std::size_t i = 0; i < d1.size(); ++i) {
        if (d1[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < d2.size(); ++j) {
            if (d2[j] == 0) continue;
            row += d2[j] * gram.at(i, j);
        }
        total += d1[i] * row;
    }
    return total;
}

Int intersect(const IntersectionModel& model, const DivisorClass& d1,
              const DivisorClass& d2) {
    return pair_classes(model.gram, d1, d2);
}

Int arithmetic_genus(const IntersectionModel& model, const DivisorClass& d) {
    DivisorClass dk = d;
    dk[model.k_index()] += 1;
    const Int twice = pair_classes(model.gram, d, dk);
    if (!is_even(twice))
        throw InvalidInput("D.(D+K) odd; even-adjoint condition does not hold");
    return 1 + twice / 2;
}

Int adjunction_on_threefold(const Int& kx_dot_c, const Int& nh_dot_c,
                            const Int& c_self) {
    const Int sum = kx_dot_c + nh_dot_c + c_self;
    if (!is_even(sum)) throw InvalidInput("adjunction sum must be even");
    return 1 + sum / 2;
}

DivisorClass adjoint_class(const IntersectionModel& model, const Int& m) {
    DivisorClass d = model.zero();
    d[model.k_index()] = 1;
    d[model.h_index()] = m;
    return d;
}

DivisorClass adjoint_class(const IntersectionModel& model, const Int& m,
                           std::span<const Int> x) {
    if (!model.blocks)
        throw InvalidInput("curve coefficients given but model has no curve blocks");
    if (x.size() != 18) throw InvalidInput("curve coefficient tuple must have length 18");
    DivisorClass d = adjoint_class(model, m);
    for (int i = 0; i < 9; ++i) {
        d[model.blocks->a_block[i]] += x[i];
        d[model.blocks->b_block[i]] += x[9 + i];
    }
    return d;
}

// Derivation (all products via the Gram matrix, E := sum x_i C_i):
//   2 p_a(D_{m,x}) - 2 = (D_m + E).(D_m + E + K)
//                      = 2 g_m - 2 + E.(3K + 2mH) + E.E
// and E.E = -a * sum_{a-blk} x_i^2 - (a+2) * sum_{b-blk} x_i^2 by
// disjointness, E.(3K+2mH) = (3K+2mH).C * sum x_i by uniformity. Hence
//   p_a(D_m) - p_a(D_{m,x}) = f(x)/2
// with quadratic coefficients a (a-block) and a+2 (b-block) and uniform
// linear coefficient -(3K+2mH).C.
std::pair<MixedQuadForm, GapFormCertificate> exact_gap_form(
    const IntersectionModel& model, const Int& m) {
    require_valid(model);
    if (!model.blocks) throw InvalidInput("gap form needs curve blocks");

    const std::size_t c0 = model.blocks->a_block[0];
    const Int a = model.curve_a();
    const Int h_dot_c = model.gram.at(model.h_index(), c0);
    const Int k_dot_c = model.gram.at(model.k_index(), c0);
    const Int linear = -(3 * k_dot_c + 2 * m * h_dot_c);

    MixedQuadForm form(a, a + 2, linear);
    MixedQuadForm alt(a + 2, a, m * h_dot_c);

    GapFormCertificate cert;
    cert.a_block_quad = a;
    cert.b_block_quad = a + 2;
    cert.linear = linear;
    cert.alt_a_block_quad = a + 2;
    cert.alt_b_block_quad = a;
    cert.alt_linear = m * h_dot_c;
    cert.note =
        "quadratic coefficients are -C.C per block and the linear coefficient "
        "is -(3K+2mH).C, so the gap identity p_a(D_m) - p_a(D_{m,x}) = f(x)/2 "
        "holds for all integer tuples; the block-swapped bookkeeping with "
        "linear term m(H.C) is recorded for comparison only";

    // Self-check of the identity on basis vectors and seeded random tuples.
    const Int g_m = arithmetic_genus(model, adjoint_class(model, m));
    std::mt19937 rng(0xF0F0u);
    std::uniform_int_distribution<int> coeff(-20, 20);
    bool alt_ok = true;
    int samples = 0;
    auto check = [&](const std::array<Int, 18>& x) {
        std::span<const Int> xs(x.data(), x.size());
        const Int gap = g_m - arithmetic_genus(model, adjoint_class(model, m, xs));
        const Int fx = evaluate(form, xs);
        if (fx != 2 * gap)
            throw Error("gap form self-check failed; model axioms are inconsistent");
        if (evaluate(alt, xs) != 2 * gap) alt_ok = false;
        ++samples;
    };
    std::array<Int, 18> x{};
    check(x);          // zero tuple
    x[0] = 1;
    check(x);          // one a-block curve
    x[0] = 0;
    x[9] = 1;
    check(x);          // one b-block curve
    for (int round = 0; round < 8; ++round) {
        for (auto& xi : x) xi = coeff(rng);
        check(x);
    }
    cert.alt_satisfies_identity = alt_ok;
    cert.samples_checked = samples;
    return {form, cert};
}

}  // namespace genusforge
