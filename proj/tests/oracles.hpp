#pragma once

// Independent reference computations for the golden tests. These stay
// deliberately naive: word-level sums, minor expansions and hand-entered
// structure constants, never the engine's composition path.

#include <map>
#include <vector>

#include "linf/exactla.hpp"
#include "linf/paramring.hpp"
#include "linf/cochain.hpp"

namespace linf::testing {

/// Word-level bracket: the displayed unshuffle sum evaluated directly,
/// for cochains concentrated in single arities ka and kb.
inline std::map<int, Rat> word_bracket_value(const Cochain& a, int ka,
                                             const Cochain& b, int kb,
                                             const Monomial& m) {
    const GradedSpace& space = a.space();
    const std::vector<int> w = m.word();
    const int n = static_cast<int>(w.size());
    std::vector<Parity> parities;
    for (int i : w) parities.push_back(space.parity(i));

    auto half = [&](const Cochain& outer, const Cochain& inner,
                    int k_inner) {
        std::map<int, Rat> acc;
        if (k_inner > n) return acc;
        for (const Unshuffle& u : unshuffles(k_inner, n)) {
            int sign = koszul_sign(parities, u);
            Monomial block = monomial_from_positions(space, w, u.left);
            const auto* val = inner.value(block);
            if (!val) continue;
            for (const auto& [t, c] : *val) {
                Monomial single;
                single.exps.assign(space.dim(), 0);
                single.exps[t] = 1;
                Rat coeff = sign * c;
                Monomial arg = single;
                if (!u.right.empty()) {
                    Monomial rest = monomial_from_positions(space, w, u.right);
                    auto prod = monomial_product(space, single, rest);
                    if (!prod) continue;
                    coeff *= prod->first;
                    arg = prod->second;
                }
                const auto* outv = outer.value(arg);
                if (!outv) continue;
                for (const auto& [t2, c2] : *outv) {
                    Rat& r = acc[t2];
                    r += coeff * c2;
                    if (r == 0) acc.erase(t2);
                }
            }
        }
        return acc;
    };

    std::map<int, Rat> out = half(a, b, kb);
    int sgn = sign_pow(a.parity(), b.parity());
    for (const auto& [t, c] : half(b, a, ka)) {
        Rat& r = out[t];
        r -= sgn * c;
        if (r == 0) out.erase(t);
    }
    return out;
}

inline Rat det_expand(const RatMatrix& m, std::vector<int> rows,
                      std::vector<int> cols) {
    if (rows.empty()) return 1;
    Rat det = 0;
    int sign = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
        const Rat& entry = m.at(rows[i], cols[0]);
        if (entry != 0) {
            std::vector<int> sub_rows;
            for (size_t j = 0; j < rows.size(); ++j)
                if (j != i) sub_rows.push_back(rows[j]);
            std::vector<int> sub_cols(cols.begin() + 1, cols.end());
            det += sign * entry * det_expand(m, sub_rows, sub_cols);
        }
        sign = -sign;
    }
    return det;
}

/// Rank as the largest size of a nonzero minor.
inline int minor_rank(const RatMatrix& m) {
    int max_k = std::min(m.rows(), m.cols());
    for (int k = max_k; k >= 1; --k) {
        std::vector<int> rows(k), cols(k);
        // iterate over k-subsets of rows and columns
        auto next_subset = [](std::vector<int>& s, int n) {
            int k2 = static_cast<int>(s.size());
            int i = k2 - 1;
            while (i >= 0 && s[i] == n - k2 + i) --i;
            if (i < 0) return false;
            ++s[i];
            for (int j = i + 1; j < k2; ++j) s[j] = s[j - 1] + 1;
            return true;
        };
        for (int i = 0; i < k; ++i) rows[i] = i;
        do {
            for (int i = 0; i < k; ++i) cols[i] = i;
            do {
                if (det_expand(m, rows, cols) != 0) return k;
            } while (next_subset(cols, m.cols()));
        } while (next_subset(rows, m.rows()));
    }
    return 0;
}

/// Brute-force expansion of sum_{k+l=n+1} (k-l) th^k th^l over odd
/// parameters th^1..th^K in canonical form (th^k th^l = -th^l th^k).
inline ParamPoly one_dim_relation_oracle(RingPtr ring, int n, int K) {
    ParamPoly out(ring);
    for (int k = 1; k <= K; ++k) {
        int l = n + 1 - k;
        if (l < 1 || l > K) continue;
        if (k == l) continue;  // th^2 = 0
        ParamMonomial m = ParamMonomial::one(*ring);
        m.odd_present[k - 1] = 1;
        m.odd_present[l - 1] = 1;
        // canonical order lists the lower index first
        Rat sign = (k < l) ? 1 : -1;
        out.add_term(m, sign * Rat(k - l));
    }
    return out;
}

}  // namespace linf::testing
