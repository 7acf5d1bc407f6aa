#ifndef GENUSFORGE_NODAL_HPP
#define GENUSFORGE_NODAL_HPP

#include <string>
#include <vector>

#include "genusforge/ampleness.hpp"
#include "genusforge/ints.hpp"
#include "genusforge/lattice.hpp"

namespace genusforge {

// Blowup of a base model at r points: generators are the pullbacks of the
// base generators followed by E_1..E_r, with E_i.E_i = -1, E_i.E_j = 0 and
// E_i orthogonal to every pullback. The canonical class of the blowup is
// f*K + sum E_i, and each E_i joins the effective test classes.
class BlowupModel {
  public:
    BlowupModel(IntersectionModel base, const Int& r);

    const IntersectionModel& base() const { return base_; }
    std::size_t r() const { return r_; }
    std::size_t dim() const { return base_.generators.size() + r_; }
    const IntMatrix& gram() const { return gram_; }

    DivisorClass pullback(const DivisorClass& base_class) const;
    DivisorClass exceptional(std::size_t i) const;  // E_{i+1}, 0-based index
    DivisorClass sum_exceptional() const;
    DivisorClass canonical() const;  // f*K + sum E_i

    Int intersect(const DivisorClass& d1, const DivisorClass& d2) const;
    Int arithmetic_genus(const DivisorClass& d) const;

    LatticeView view() const;

  private:
    IntersectionModel base_;
    std::size_t r_;
    IntMatrix gram_;
};

BlowupModel blowup_extend(const IntersectionModel& base, const Int& r);

// L = m f*H - 3 sum E_i and its adjoint K~ + L, together with the
// decomposition certificate: the f*H coefficient m - 3*floor(m/4) left
// after writing L as (m - 3 floor(m/4)) f*H + 3 * (floor(m/4) f*H - sum E).
struct NodalClasses {
    DivisorClass l_class;
    DivisorClass adjoint;
    Int fstar_h_coefficient;
};

NodalClasses nodal_class(const BlowupModel& blowup, const Int& m);

// A certified r-nodal realization of geometric genus g inside |K + mH|.
struct NodalWitness {
    Int g;
    Int m;
    Int r;
    DivisorClass l_class;  // on the blowup lattice of size base + r
    ReiderReport reider;
};

// Finds the least m >= m_min with g_{m-1} <= g <= g_m - 1 whose blowup
// class passes the ampleness surrogate; r = g_m - g lands in [1, d_m]
// automatically. Throws NoWitness if no interval matches in the scan
// budget, CertificationFailed if intervals match but never certify.
NodalWitness nodal_witness(const IntersectionModel& base, const Int& g,
                           const Int& m_min);

std::vector<std::string> validate_nodal_witness(const IntersectionModel& base,
                                                const NodalWitness& w);

}  // namespace genusforge

#endif
