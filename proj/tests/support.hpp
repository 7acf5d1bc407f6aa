#ifndef GENUSFORGE_TESTS_SUPPORT_HPP
#define GENUSFORGE_TESTS_SUPPORT_HPP

#include <random>

#include "genusforge/lattice.hpp"

namespace gftest {

using genusforge::CurveBlocks;
using genusforge::DivisorClass;
using genusforge::Int;
using genusforge::IntersectionModel;
using genusforge::IntMatrix;

// The reference synthetic model: K^2 = 0, K.H = 0, H^2 = 2, K.C_i = 1,
// H.C_i = 1, C_i^2 = -3 on the a-block and -5 on the b-block, curves
// mutually disjoint; effective tests H, C1..C18.
inline IntersectionModel make_reference_model() {
    IntersectionModel m;
    m.generators = {"K", "H"};
    for (int i = 1; i <= 18; ++i) m.generators.push_back("C" + std::to_string(i));
    const std::size_t n = 20;
    m.gram = IntMatrix(n);
    m.gram.set_sym(1, 1, 2);
    for (std::size_t c = 2; c < n; ++c) {
        m.gram.set_sym(0, c, 1);
        m.gram.set_sym(1, c, 1);
        m.gram.set_sym(c, c, c < 11 ? -3 : -5);
    }
    for (std::size_t t = 1; t < n; ++t) m.effective_tests.push_back(t);
    CurveBlocks blocks;
    for (std::size_t i = 0; i < 9; ++i) {
        blocks.a_block[i] = 2 + i;
        blocks.b_block[i] = 11 + i;
    }
    m.blocks = blocks;
    return m;
}

// Plane-like surface: H^2 = 1, K = -3H (so K.H = -3, K^2 = 9), tests {H}.
inline IntersectionModel make_plane_model() {
    IntersectionModel m;
    m.generators = {"K", "H"};
    m.gram = IntMatrix(2);
    m.gram.set_sym(0, 0, 9);
    m.gram.set_sym(0, 1, -3);
    m.gram.set_sym(1, 1, 1);
    m.effective_tests = {1};
    return m;
}

// Rank-1 lattice spanned by H with H^2 = h2 and K = 0 (as a generator row).
inline IntersectionModel make_rank1_model(int h2) {
    IntersectionModel m;
    m.generators = {"K", "H"};
    m.gram = IntMatrix(2);
    m.gram.set_sym(1, 1, h2);
    m.effective_tests = {1};
    return m;
}

// Valid single-parameter variants of the reference layout, for randomized
// axiom-preserving mutation tests: a >= 1, h = H.C >= 1, h2 = H^2 >= 1,
// and the even-adjoint parities K.C = a (mod 2), K.H = H^2 (mod 2).
inline IntersectionModel make_uniform_model(const Int& a, const Int& h, const Int& h2,
                                            const Int& k_dot_c, const Int& k_dot_h,
                                            const Int& k2) {
    IntersectionModel m;
    m.generators = {"K", "H"};
    for (int i = 1; i <= 18; ++i) m.generators.push_back("C" + std::to_string(i));
    m.gram = IntMatrix(20);
    m.gram.set_sym(0, 0, k2);
    m.gram.set_sym(0, 1, k_dot_h);
    m.gram.set_sym(1, 1, h2);
    for (std::size_t c = 2; c < 20; ++c) {
        m.gram.set_sym(0, c, k_dot_c);
        m.gram.set_sym(1, c, h);
        m.gram.set_sym(c, c, c < 11 ? Int(-a) : Int(-(a + 2)));
    }
    for (std::size_t t = 1; t < 20; ++t) m.effective_tests.push_back(t);
    CurveBlocks blocks;
    for (std::size_t i = 0; i < 9; ++i) {
        blocks.a_block[i] = 2 + i;
        blocks.b_block[i] = 11 + i;
    }
    m.blocks = blocks;
    return m;
}

}  // namespace gftest

#endif
