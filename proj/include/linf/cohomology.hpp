#pragma once

#include "linf/exactla.hpp"
#include "linf/pcochain.hpp"

namespace linf {

/// Exact kernel/image data of D = [d, .] inside an arity window,
/// computed arity by arity over the canonical cochain basis.
///
/// An arity n is "exact" when every D-image of an arity-n cochain stays
/// inside the window, so its kernel there is the true cocycle space.
/// Cocycles, coboundaries and the delta complement are only drawn from
/// exact arities.
class CohomologyData {
public:
    struct Delta {
        std::vector<Rat> coords;  ///< full window coordinates, leading 1
        int arity = 0;
        int lead = 0;  ///< leading column (canonical cochain order)
        Parity parity = Parity::even;
    };

    struct Split {
        std::vector<Rat> delta_coeffs;  ///< one per delta, zeros elsewhere
        std::map<CochainKey, Rat, KeyOrder> preimage;  ///< D(preimage) = image part
        std::map<CochainKey, Rat, KeyOrder> noncocycle;
    };

    CohomologyData(const Cochain& d, const ArityWindow& window);

    const GradedSpace& space() const { return space_; }
    const Cochain& d() const { return d_; }
    const ArityWindow& window() const { return window_; }

    const std::vector<CochainKey>& keys() const { return keys_; }
    int key_index(const CochainKey& k) const;
    bool arity_exact(int arity) const;

    const std::vector<std::vector<Rat>>& cocycles() const { return cocycles_; }
    const std::vector<std::vector<Rat>>& coboundaries() const {
        return coboundaries_;
    }
    /// Basis-cochain preimage of each coboundary basis vector.
    const std::vector<CochainKey>& coboundary_preimages() const {
        return coboundary_preimages_;
    }
    const std::vector<Delta>& deltas() const { return deltas_; }

    Cochain delta_cochain(int i) const;
    Cochain cocycle_cochain(int i) const;
    Cochain coboundary_cochain(int i) const;

    int homology_dim() const { return static_cast<int>(deltas_.size()); }
    int homology_dim_at(int arity) const;
    int cocycle_dim_at(int arity) const;
    int coboundary_dim_at(int arity) const;

    /// Decompose an arity-homogeneous coordinate vector into delta span,
    /// coboundary (returning a canonical D-preimage) and a residual
    /// outside the cocycle space. Throws WindowError on non-exact
    /// arities with nonzero input.
    Split split(int arity, const std::vector<Rat>& c_full) const;

    Cochain cochain_of(const std::vector<Rat>& coords) const;
    std::vector<Rat> coords_of(const Cochain& c) const;

private:
    GradedSpace space_;
    Cochain d_;
    ArityWindow window_;
    std::vector<CochainKey> keys_;
    std::map<CochainKey, int, KeyOrder> key_index_;
    std::vector<int> key_arity_;
    std::vector<char> exact_col_;
    RatMatrix D_;
    std::vector<std::vector<Rat>> cocycles_;
    std::vector<int> cocycle_arity_;
    std::vector<std::vector<Rat>> coboundaries_;
    std::vector<CochainKey> coboundary_preimages_;
    std::vector<int> coboundary_arity_;
    std::vector<Delta> deltas_;
    // per-arity rref of the cocycle row space, for the Z/complement split
    std::map<int, RrefResult> z_rows_rref_;
    std::map<int, std::vector<int>> arity_cols_;
    std::vector<int> complement_cols_;  ///< canonical complement of the cocycles
};

/// Computes CohomologyData after verifying that d is a codifferential on
/// a window wide enough to see [d, d].
CohomologyData cohomology(const Cochain& d, const ArityWindow& window);

}  // namespace linf
