#pragma once

#include "linf/deform.hpp"

namespace linf {

/// Corestriction data of a coalgebra morphism of S(W), possibly with
/// parameter coefficients: one component per arity, all of even total
/// parity, with the arity-1 component invertible after augmentation.
struct MorphismData {
    GradedSpace space;
    RingPtr ring;
    ParamCochain components;

    MorphismData(GradedSpace s, RingPtr r);

    /// g given by arity-1 data only; extends multiplicatively.
    static MorphismData from_linear(const ParamCochain& linear);
    /// The identity corrected by higher-arity coderivation data:
    /// components (I, lambda).
    static MorphismData identity_plus(const ParamCochain& corrections);
    static MorphismData identity(const GradedSpace& s, RingPtr r);

    void add_component(const CochainKey& k, const ParamPoly& p);
    void validate() const;
    int max_arity() const { return components.is_zero() ? 1 : std::max(1, max_arity_of(components)); }

private:
    static int max_arity_of(const ParamCochain& c);
};

/// Evaluator for the coalgebra morphism extending the component data:
/// the sum over block partitions of Koszul-signed products of component
/// values. Satisfies the morphism law against the coproduct.
class CoalgebraMorphism {
public:
    CoalgebraMorphism(MorphismData data, ArityWindow window,
                      int truncation_degree);

    const MorphismData& data() const { return data_; }

    ParamMonoSum eval(const Monomial& m) const;
    ParamMonoSum eval(const ParamMonoSum& s) const;

private:
    MorphismData data_;
    ArityWindow window_;
    int truncation_;
    mutable std::map<Monomial, ParamMonoSum, MonoOrder> cache_;
};

CoalgebraMorphism extend_to_coalgebra_morphism(const MorphismData& g,
                                               const ArityWindow& window,
                                               int truncation_degree);

/// Checks coproduct(g(m)) = (g (x) g)(coproduct(m)) for all monomials of
/// degree <= max_degree.
bool morphism_law_holds(const CoalgebraMorphism& g, int max_degree);

/// Solve degree by degree for h with h o g = id within the window.
MorphismData invert_morphism(const MorphismData& g, const ArityWindow& window,
                             int truncation_degree);

enum class ConjugationOrder {
    inverse_left,   ///< g^{-1} o d o g, the equivalence transport
    inverse_right,  ///< g o d o g^{-1}
};

/// g*(d): the Hom(S(W), W)-valued corestriction of the conjugated
/// coderivation.
ParamCochain transport(const ParamCochain& d, const MorphismData& g,
                       const ArityWindow& window, int truncation_degree,
                       ConjugationOrder order = ConjugationOrder::inverse_left);

/// A parity-preserving morphism of parameter rings sending generators
/// into the maximal ideal of the target.
struct RingMorphism {
    RingPtr source;
    RingPtr target;
    std::map<std::string, ParamPoly> images;
    int truncation_degree;

    RingMorphism(RingPtr src, RingPtr tgt,
                 std::map<std::string, ParamPoly> imgs, int trunc);

    ParamPoly apply(const ParamPoly& p) const;
    ParamCochain apply(const ParamCochain& c) const;
};

/// Push a deformation to a new base. Every relation generator must map
/// into the target ideal; the result carries the target relations.
Deformation pushout(const Deformation& defm, const RingMorphism& lam,
                    const RelationIdeal& target_relations);

}  // namespace linf
