#include "linf/cohomology.hpp"

#include <algorithm>

namespace linf {

CohomologyData::CohomologyData(const Cochain& d, const ArityWindow& window)
    : space_(d.space()), d_(d), window_(window), D_(0, 0) {
    for (int n = window.lo; n <= window.hi; ++n) {
        auto block = cochain_basis_keys(space_, n);
        for (auto& k : block) {
            arity_cols_[n].push_back(static_cast<int>(keys_.size()));
            key_index_.emplace(k, static_cast<int>(keys_.size()));
            key_arity_.push_back(n);
            keys_.push_back(std::move(k));
        }
    }
    const int dim = static_cast<int>(keys_.size());

    exact_col_.assign(dim, 0);
    for (int j = 0; j < dim; ++j)
        exact_col_[j] = arity_exact(key_arity_[j]) ? 1 : 0;

    // Full differential matrix over the window coordinates.
    D_ = RatMatrix(dim, dim);
    for (int j = 0; j < dim; ++j) {
        Cochain basis = Cochain::basis(space_, keys_[j].input, keys_[j].output);
        Cochain image = bracket(d_, basis, window_);
        for (const auto& [k, v] : cochain_coords(image)) {
            auto it = key_index_.find(k);
            if (it != key_index_.end()) D_.set(it->second, j, v);
        }
    }

    // Cocycles: kernel of D restricted to the exact columns.
    std::vector<int> exact_cols;
    for (int j = 0; j < dim; ++j)
        if (exact_col_[j]) exact_cols.push_back(j);
    RatMatrix D_exact(dim, static_cast<int>(exact_cols.size()));
    for (int r = 0; r < dim; ++r)
        for (const auto& [c, v] : D_.row(r)) {
            auto it = std::lower_bound(exact_cols.begin(), exact_cols.end(), c);
            if (it != exact_cols.end() && *it == c)
                D_exact.set(r, static_cast<int>(it - exact_cols.begin()), v);
        }
    for (const auto& kv : kernel_basis(D_exact)) {
        std::vector<Rat> full(dim, 0);
        for (int jj = 0; jj < static_cast<int>(exact_cols.size()); ++jj)
            full[exact_cols[jj]] = kv[jj];
        int arity = -1;
        for (int j = 0; j < dim; ++j)
            if (full[j] != 0) {
                if (arity < 0)
                    arity = key_arity_[j];
                else if (arity != key_arity_[j])
                    arity = -2;  // mixed-arity cocycle (multi-arity d)
            }
        cocycles_.push_back(std::move(full));
        cocycle_arity_.push_back(arity);
    }

    // Per-arity row space of the cocycles. Its rref pivots mark the
    // cocycle directions; the free columns form the canonical complement
    // of Z_n in L_n.
    for (const auto& [n, cols] : arity_cols_) {
        std::vector<int> zs;
        for (int i = 0; i < static_cast<int>(cocycles_.size()); ++i)
            if (cocycle_arity_[i] == n) zs.push_back(i);
        RatMatrix rows(static_cast<int>(zs.size()),
                       static_cast<int>(cols.size()));
        for (int r = 0; r < static_cast<int>(zs.size()); ++r)
            for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
                const Rat& v = cocycles_[zs[r]][cols[c]];
                if (v != 0) rows.set(r, c, v);
            }
        RrefResult rr = rref(rows);
        std::vector<bool> is_pivot(cols.size(), false);
        for (int p : rr.pivot_cols) is_pivot[p] = true;
        for (int c = 0; c < static_cast<int>(cols.size()); ++c)
            if (!is_pivot[c] && exact_col_[cols[c]])
                complement_cols_.push_back(cols[c]);
        z_rows_rref_.emplace(n, std::move(rr));
    }
    std::sort(complement_cols_.begin(), complement_cols_.end());

    // Coboundary basis: D of the complement columns at the rref pivots.
    // Each basis element has a single basis cochain as its preimage and
    // D restricted to the complement is injective.
    {
        RatMatrix D_comp(dim, static_cast<int>(complement_cols_.size()));
        for (int c = 0; c < static_cast<int>(complement_cols_.size()); ++c)
            for (int r = 0; r < dim; ++r) {
                const Rat& v = D_.at(r, complement_cols_[c]);
                if (v != 0) D_comp.set(r, c, v);
            }
        RrefResult rr = rref(D_comp);
        for (int p : rr.pivot_cols) {
            int col = complement_cols_[p];
            std::vector<Rat> img(dim, 0);
            for (int r = 0; r < dim; ++r) {
                const Rat& v = D_.at(r, col);
                if (v != 0) img[r] = v;
            }
            int arity = -1;
            for (int j = 0; j < dim; ++j)
                if (img[j] != 0) {
                    if (arity < 0)
                        arity = key_arity_[j];
                    else if (arity != key_arity_[j])
                        arity = -2;
                }
            coboundaries_.push_back(std::move(img));
            coboundary_preimages_.push_back(keys_[col]);
            coboundary_arity_.push_back(arity);
        }
    }

    // Delta complement: cocycle vectors independent of the coboundaries,
    // chosen by rref pivots with coboundaries listed first.
    {
        int bc = static_cast<int>(coboundaries_.size());
        int zc = static_cast<int>(cocycles_.size());
        RatMatrix m(dim, bc + zc);
        for (int c = 0; c < bc; ++c)
            for (int r = 0; r < dim; ++r)
                if (coboundaries_[c][r] != 0) m.set(r, c, coboundaries_[c][r]);
        for (int c = 0; c < zc; ++c)
            for (int r = 0; r < dim; ++r)
                if (cocycles_[c][r] != 0) m.set(r, bc + c, cocycles_[c][r]);
        RrefResult rr = rref(m);
        for (int p : rr.pivot_cols) {
            if (p < bc) continue;
            const auto& v = cocycles_[p - bc];
            Delta delta;
            delta.coords = v;
            delta.arity = cocycle_arity_[p - bc];
            int lead = -1;
            for (int j = 0; j < dim; ++j)
                if (v[j] != 0) {
                    lead = j;
                    break;
                }
            delta.lead = lead;
            Rat scale = Rat(1) / v[lead];
            if (scale != 1)
                for (auto& x : delta.coords) x *= scale;
            delta.parity = key_parity(space_, keys_[lead]);
            for (int j = 0; j < dim; ++j)
                if (delta.coords[j] != 0 &&
                    key_parity(space_, keys_[j]) != delta.parity)
                    throw ParityError("delta representative not homogeneous");
            deltas_.push_back(std::move(delta));
        }
        std::stable_sort(deltas_.begin(), deltas_.end(),
                         [](const Delta& a, const Delta& b) {
                             if (a.arity != b.arity) return a.arity < b.arity;
                             return a.lead < b.lead;
                         });
    }
}

int CohomologyData::key_index(const CochainKey& k) const {
    auto it = key_index_.find(k);
    if (it == key_index_.end())
        throw WindowError("cochain key outside the arity window");
    return it->second;
}

bool CohomologyData::arity_exact(int arity) const {
    if (!window_.contains(arity)) return false;
    if (d_.is_zero()) return true;
    int top = arity + d_.max_arity() - 1;
    // on an all-odd space the symmetric algebra stops at the odd dimension
    if (space_.even_dim() == 0) top = std::min(top, space_.odd_dim());
    return top <= window_.hi;
}

Cochain CohomologyData::cochain_of(const std::vector<Rat>& coords) const {
    Cochain out(space_);
    for (int j = 0; j < static_cast<int>(keys_.size()); ++j)
        if (coords[j] != 0)
            out.add_value(keys_[j].input, keys_[j].output,
                          coords[j] *
                              even_factorial_norm(space_, keys_[j].input));
    return out;
}

std::vector<Rat> CohomologyData::coords_of(const Cochain& c) const {
    std::vector<Rat> v(keys_.size(), 0);
    for (const auto& [k, val] : cochain_coords(c)) v[key_index(k)] = val;
    return v;
}

Cochain CohomologyData::delta_cochain(int i) const {
    return cochain_of(deltas_.at(i).coords);
}

Cochain CohomologyData::cocycle_cochain(int i) const {
    return cochain_of(cocycles_.at(i));
}

Cochain CohomologyData::coboundary_cochain(int i) const {
    return cochain_of(coboundaries_.at(i));
}

int CohomologyData::homology_dim_at(int arity) const {
    int n = 0;
    for (const auto& d : deltas_)
        if (d.arity == arity) ++n;
    return n;
}

int CohomologyData::cocycle_dim_at(int arity) const {
    int n = 0;
    for (int a : cocycle_arity_)
        if (a == arity) ++n;
    return n;
}

int CohomologyData::coboundary_dim_at(int arity) const {
    int n = 0;
    for (int a : coboundary_arity_)
        if (a == arity) ++n;
    return n;
}

CohomologyData::Split CohomologyData::split(
    int arity, const std::vector<Rat>& c_full) const {
    Split out;
    out.delta_coeffs.assign(deltas_.size(), 0);
    bool zero = true;
    for (const Rat& v : c_full)
        if (v != 0) {
            zero = false;
            break;
        }
    if (zero) return out;
    if (!arity_exact(arity))
        throw WindowError(
            "obstruction component at arity " + std::to_string(arity) +
            " cannot be decomposed exactly; enlarge the window");

    const auto& cols = arity_cols_.at(arity);
    const RrefResult& zr = z_rows_rref_.at(arity);

    // Reduce against the cocycle row space: what survives on the free
    // columns is the non-cocycle residual.
    std::vector<Rat> local(cols.size(), 0);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        local[c] = c_full[cols[c]];
    std::vector<Rat> residual = local;
    for (int r = 0; r < static_cast<int>(zr.pivot_cols.size()); ++r) {
        const Rat f = residual[zr.pivot_cols[r]];
        if (f == 0) continue;
        for (const auto& [c, v] : zr.matrix.row(r)) residual[c] -= f * v;
    }
    std::vector<Rat> z_local(cols.size(), 0);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        z_local[c] = local[c] - residual[c];
        if (residual[c] != 0) out.noncocycle[keys_[cols[c]]] = residual[c];
    }

    // Write the cocycle part over [deltas | D restricted to the
    // complement of the cocycles]. The delta coefficients are unique;
    // the preimage is unique with zero coefficients on every cocycle
    // direction.
    const int dim = static_cast<int>(keys_.size());
    std::vector<int> delta_ids;
    for (int i = 0; i < static_cast<int>(deltas_.size()); ++i)
        if (deltas_[i].arity == arity) delta_ids.push_back(i);

    RatMatrix m(dim,
                static_cast<int>(delta_ids.size() + complement_cols_.size()));
    for (int c = 0; c < static_cast<int>(delta_ids.size()); ++c)
        for (int r = 0; r < dim; ++r) {
            const Rat& v = deltas_[delta_ids[c]].coords[r];
            if (v != 0) m.set(r, c, v);
        }
    for (int c = 0; c < static_cast<int>(complement_cols_.size()); ++c)
        for (int r = 0; r < dim; ++r) {
            const Rat& v = D_.at(r, complement_cols_[c]);
            if (v != 0) m.set(r, static_cast<int>(delta_ids.size()) + c, v);
        }
    std::vector<Rat> rhs(dim, 0);
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        rhs[cols[c]] = z_local[c];
    auto sol = solve_particular(m, rhs);
    if (std::holds_alternative<InconsistentSystem>(sol))
        throw Error("cocycle failed to split into delta span and coboundary");
    const auto& x = std::get<std::vector<Rat>>(sol);
    for (int c = 0; c < static_cast<int>(delta_ids.size()); ++c)
        out.delta_coeffs[delta_ids[c]] = x[c];
    for (int c = 0; c < static_cast<int>(complement_cols_.size()); ++c) {
        const Rat& v = x[delta_ids.size() + c];
        if (v != 0) out.preimage[keys_[complement_cols_[c]]] = v;
    }
    return out;
}

CohomologyData cohomology(const Cochain& d, const ArityWindow& window) {
    int ext_hi = std::max(window.hi, 2 * std::max(d.max_arity(), 1) - 1);
    CodifferentialCheck chk = check_codifferential(d, ArityWindow(1, ext_hi));
    if (!chk.ok) {
        std::string msg = chk.parity_ok
                              ? "[d,d] does not vanish within the window"
                              : "codifferential must be odd";
        throw Error("not a codifferential: " + msg);
    }
    return CohomologyData(d, window);
}

}  // namespace linf
