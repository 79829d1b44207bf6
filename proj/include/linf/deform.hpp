#pragma once

#include <string>

#include "linf/cohomology.hpp"

namespace linf {

struct DeltaInfo {
    Cochain rep;             ///< normalized cocycle representative
    int arity = 0;
    Parity cochain_parity = Parity::even;
    std::string param_name;  ///< dual generator, opposite parity
};

enum class DeformStatus { miniversal, truncated };

/// A deformation d + sum alpha_k over a parameter ring with relation
/// generators, together with the order bookkeeping of the construction.
struct Deformation {
    GradedSpace space;
    RingPtr ring;
    ArityWindow window;
    int truncation_degree = 1;
    Cochain base;
    ParamCochain current;
    std::vector<DeltaInfo> deltas;
    std::vector<ParamPoly> relations;  ///< parallel to deltas; zeros allowed
    int order = 0;
    DeformStatus status = DeformStatus::truncated;

    Deformation(GradedSpace s, RingPtr r, ArityWindow w, int trunc,
                Cochain base_d)
        : space(std::move(s)),
          ring(std::move(r)),
          window(w),
          truncation_degree(trunc),
          base(std::move(base_d)),
          current(space, ring) {}

    RelationIdeal ideal() const;
    RelationIdeal ideal(int trunc) const;
};

/// d1 = d + sum delta_i u^i over a fresh parameter ring with one
/// generator per delta, of opposite parity (theta for even deltas,
/// t for odd ones), indexed by arity then position.
Deformation universal_infinitesimal(const Cochain& d, const CohomologyData& H,
                                    int truncation_degree);

struct Decomposition {
    ParamCochain alpha;
    std::vector<ParamPoly> relations;  ///< per delta, sign-normalized
    std::map<CochainKey, ParamPoly, KeyOrder> residues;  ///< non-cocycle parts
};

/// Split the halved self-bracket obs = [d_n, d_n] / 2 per parameter
/// monomial into delta span, coboundary and residual parts:
/// obs = sum delta_i (-R_i) - D(alpha) + residues, with alpha built from
/// canonical D-preimages. Residues must later reduce to zero modulo the
/// relation ideal.
Decomposition decompose_obstruction(const ParamCochain& obs,
                                    const CohomologyData& H);

ParamCochain half_self_bracket(const ParamCochain& c,
                               const ArityWindow& window);

/// One order step: decompose the obstruction, add alpha, replace the
/// relation list (later orders refine earlier ones), and verify the
/// residues vanish modulo the relations at the working truncation.
Deformation extend_order(const Deformation& defm, const CohomologyData& H);
Deformation extend_order(const Deformation& defm);

/// Iterate extend_order until the obstruction carries no coboundary part
/// (status miniversal, relations exact) or max_order is reached
/// (status truncated).
Deformation miniversal(const Cochain& d, int max_order,
                       const ArityWindow& window, int truncation_degree = -1);

/// Every parameter monomial coefficient of [d,d]/2 reduced modulo the
/// relation ideal at the given truncation; zero iff the deformation
/// equation holds there.
bool self_bracket_vanishes(const Deformation& defm, int trunc);

}  // namespace linf
