#ifndef GENUSFORGE_LATTICE_HPP
#define GENUSFORGE_LATTICE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genusforge/ints.hpp"
#include "genusforge/quadform.hpp"

namespace genusforge {

// Dense symmetric integer matrix of intersection numbers.
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), v_(n * n, Int(0)) {}

    std::size_t size() const { return n_; }
    Int& at(std::size_t i, std::size_t j) { return v_[i * n_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
    void set_sym(std::size_t i, std::size_t j, Int value) {
        at(i, j) = value;
        at(j, i) = std::move(value);
    }
    bool symmetric() const;
    bool operator==(const IntMatrix&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Int> v_;
};

// Integer coefficient vector over a model's generators.
struct DivisorClass {
    std::vector<Int> coeffs;

    DivisorClass() = default;
    explicit DivisorClass(std::size_t n) : coeffs(n, Int(0)) {}

    std::size_t size() const { return coeffs.size(); }
    Int& operator[](std::size_t i) { return coeffs[i]; }
    const Int& operator[](std::size_t i) const { return coeffs[i]; }
    bool operator==(const DivisorClass&) const = default;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Int& k);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Int& k, DivisorClass a) { return a *= k; }
};

// Index lists of the two 9-curve blocks (into the generator sequence).
struct CurveBlocks {
    std::array<std::size_t, 9> a_block;
    std::array<std::size_t, 9> b_block;
};

// Numerical stand-in for a polarized surface: named divisor-class
// generators, their Gram matrix, a distinguished canonical class K and very
// ample class H, declared effective test classes, and (optionally) the 18
// disjoint curve classes split into an a-block (self-intersection -a) and a
// b-block (self-intersection -(a+2)).
struct IntersectionModel {
    std::vector<std::string> generators;
    IntMatrix gram;
    std::vector<std::size_t> effective_tests;
    std::optional<CurveBlocks> blocks;

    std::size_t index_of(const std::string& name) const;  // throws if absent
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t k_index() const { return index_of("K"); }
    std::size_t h_index() const { return index_of("H"); }

    DivisorClass unit(std::size_t idx) const;
    DivisorClass zero() const { return DivisorClass(generators.size()); }

    // -C.C on the a-block; only meaningful on validated models with blocks.
    Int curve_a() const;
};

// Checks every model axiom; empty result means valid. Violations are data,
// not exceptions.
std::vector<std::string> validate_model(const IntersectionModel& model);

// Throws InvalidInput listing the violations, if any.
void require_valid(const IntersectionModel& model);

// Gram-bilinear pairing of coefficient vectors.
Int pair_classes(const IntMatrix& gram, const DivisorClass& d1, const DivisorClass& d2);
Int intersect(const IntersectionModel& model, const DivisorClass& d1,
              const DivisorClass& d2);

// Adjunction on the surface: p_a(D) = 1 + D.(D+K)/2. Integrality follows
// from the even-adjoint axiom; a violation throws.
Int arithmetic_genus(const IntersectionModel& model, const DivisorClass& d);

// Threefold-shaped adjunction 2p_a - 2 = K_X.C + nH.C + C.C given the three
// intersection numbers. Odd total throws InvalidInput.
Int adjunction_on_threefold(const Int& kx_dot_c, const Int& nh_dot_c,
                            const Int& c_self);

// K + m*H (+ sum x_i C_i when x is given; requires curve blocks).
DivisorClass adjoint_class(const IntersectionModel& model, const Int& m);
DivisorClass adjoint_class(const IntersectionModel& model, const Int& m,
                           std::span<const Int> x);

// Records how the gap form's coefficients were obtained, plus the
// block-swapped bookkeeping (quadratic coefficients exchanged, linear term
// m*(H.C)) that does NOT satisfy the gap identity in general.
struct GapFormCertificate {
    Int a_block_quad;     // = -C.C on the a-block
    Int b_block_quad;     // = -C.C on the b-block
    Int linear;           // = -(3K + 2mH).C
    Int alt_a_block_quad; // swapped: b_block_quad
    Int alt_b_block_quad; // swapped: a_block_quad
    Int alt_linear;       // m*(H.C)
    bool alt_satisfies_identity;  // sampled; false on generic models
    int samples_checked;
    std::string note;
};

// The exact gap form f with p_a(D_m) - p_a(D_{m,x}) = f(x)/2 for ALL
// integer 18-tuples x, derived from adjunction on the model. The returned
// certificate includes a sampled self-check of the identity.
std::pair<MixedQuadForm, GapFormCertificate> exact_gap_form(
    const IntersectionModel& model, const Int& m);

}  // namespace genusforge

#endif
