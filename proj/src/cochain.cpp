#include "linf/cochain.hpp"

#include <algorithm>

namespace linf {

Cochain Cochain::basis(const GradedSpace& space, const Monomial& input,
                       int output_index) {
    if (output_index < 0 || output_index >= space.dim())
        throw NameError("output vector not in space");
    Cochain c(space);
    c.add_value(input, output_index, even_factorial_norm(space, input));
    return c;
}

Cochain Cochain::basis(const GradedSpace& space, const Monomial& input,
                       const std::string& output_name) {
    return basis(space, input, space.index_of(output_name));
}

void Cochain::add_value(const Monomial& m, int target, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(m.exps.size()) != space_.dim())
        throw MismatchError("monomial does not fit space");
    Parity p = space_.parity(target) + m.parity(space_);
    if (parity_ && *parity_ != p)
        throw ParityError("cochain term breaks parity homogeneity");
    parity_ = p;
    auto& vec = terms_[m];
    auto it = vec.find(target);
    if (it == vec.end()) {
        vec.emplace(target, c);
    } else {
        it->second += c;
        if (it->second == 0) {
            vec.erase(it);
            if (vec.empty()) terms_.erase(m);
        }
    }
    if (terms_.empty()) parity_.reset();
}

const std::map<int, Rat>* Cochain::value(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
}

std::vector<int> Cochain::arities() const {
    std::vector<int> out;
    for (const auto& [m, vec] : terms_) {
        int d = m.degree();
        if (out.empty() || out.back() != d) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Cochain::max_arity() const {
    int mx = 0;
    for (const auto& [m, vec] : terms_) mx = std::max(mx, m.degree());
    return mx;
}

Cochain& Cochain::operator+=(const Cochain& o) {
    if (!(space_ == o.space_)) throw MismatchError("cochains over different spaces");
    for (const auto& [m, vec] : o.terms_)
        for (const auto& [t, c] : vec) add_value(m, t, c);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    if (!(space_ == o.space_)) throw MismatchError("cochains over different spaces");
    for (const auto& [m, vec] : o.terms_)
        for (const auto& [t, c] : vec) add_value(m, t, -c);
    return *this;
}

Cochain& Cochain::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        parity_.reset();
        return *this;
    }
    for (auto& [m, vec] : terms_)
        for (auto& [t, v] : vec) v *= c;
    return *this;
}

Parity key_parity(const GradedSpace& space, const CochainKey& k) {
    return space.parity(k.output) + k.input.parity(space);
}

std::vector<CochainKey> cochain_basis_keys(const GradedSpace& space,
                                           int arity) {
    std::vector<CochainKey> keys;
    for (const Monomial& m : enumerate_monomials(space, arity))
        for (int t = 0; t < space.dim(); ++t) keys.push_back({m, t});
    return keys;
}

std::map<CochainKey, Rat, KeyOrder> cochain_coords(const Cochain& c) {
    std::map<CochainKey, Rat, KeyOrder> coords;
    for (const auto& [m, vec] : c.terms()) {
        Rat norm = even_factorial_norm(c.space(), m);
        for (const auto& [t, v] : vec) coords[{m, t}] = v / norm;
    }
    return coords;
}

Cochain cochain_from_coords(
    const GradedSpace& space,
    const std::map<CochainKey, Rat, KeyOrder>& coords) {
    Cochain c(space);
    for (const auto& [k, v] : coords)
        c.add_value(k.input, k.output, v * even_factorial_norm(space, k.input));
    return c;
}

SignedMonomialSum tilde_apply(const Cochain& phi, const Monomial& m) {
    SignedMonomialSum out;
    const GradedSpace& space = phi.space();
    const std::vector<int> w = m.word();
    const int n = static_cast<int>(w.size());
    std::vector<Parity> parities;
    parities.reserve(n);
    for (int i : w) parities.push_back(space.parity(i));

    for (int k : phi.arities()) {
        if (k > n) continue;
        for (const Unshuffle& u : unshuffles(k, n)) {
            Monomial block = monomial_from_positions(space, w, u.left);
            const auto* val = phi.value(block);
            if (!val) continue;
            int sign = koszul_sign(parities, u);
            if (u.right.empty()) {
                // top-degree case: the lift equals the map itself
                for (const auto& [t, c] : *val) {
                    Monomial single;
                    single.exps.assign(space.dim(), 0);
                    single.exps[t] = 1;
                    add_term(out, single, sign * c);
                }
                continue;
            }
            Monomial rest = monomial_from_positions(space, w, u.right);
            for (const auto& [t, c] : *val) {
                Monomial single;
                single.exps.assign(space.dim(), 0);
                single.exps[t] = 1;
                auto prod = monomial_product(space, single, rest);
                if (!prod) continue;
                add_term(out, prod->second, prod->first * sign * c);
            }
        }
    }
    return out;
}

std::map<int, Rat> apply_to_sum(const Cochain& phi,
                                const SignedMonomialSum& sum) {
    std::map<int, Rat> out;
    for (const auto& [m, c] : sum) {
        const auto* val = phi.value(m);
        if (!val) continue;
        for (const auto& [t, v] : *val) {
            Rat& acc = out[t];
            acc += c * v;
            if (acc == 0) out.erase(t);
        }
    }
    return out;
}

Cochain bracket(const Cochain& a, const Cochain& b,
                const ArityWindow& window) {
    if (!(a.space() == b.space()))
        throw MismatchError("bracket of cochains over different spaces");
    const GradedSpace& space = a.space();
    Cochain out(space);
    if (a.is_zero() || b.is_zero()) return out;
    int sgn = sign_pow(a.parity(), b.parity());

    std::vector<int> out_arities;
    for (int ka : a.arities())
        for (int kb : b.arities()) {
            int n = ka + kb - 1;
            if (window.contains(n)) out_arities.push_back(n);
        }
    std::sort(out_arities.begin(), out_arities.end());
    out_arities.erase(std::unique(out_arities.begin(), out_arities.end()),
                      out_arities.end());

    for (int n : out_arities) {
        for (const Monomial& m : enumerate_monomials(space, n)) {
            std::map<int, Rat> v1 = apply_to_sum(a, tilde_apply(b, m));
            std::map<int, Rat> v2 = apply_to_sum(b, tilde_apply(a, m));
            for (const auto& [t, c] : v1) out.add_value(m, t, c);
            for (const auto& [t, c] : v2) out.add_value(m, t, -sgn * c);
        }
    }
    return out;
}

Cochain differential(const Cochain& d, const Cochain& phi,
                     const ArityWindow& window) {
    return bracket(d, phi, window);
}

CodifferentialCheck check_codifferential(const Cochain& d,
                                         const ArityWindow& window) {
    CodifferentialCheck result(d.space());
    result.parity_ok = d.is_zero() || d.parity() == Parity::odd;
    result.residual = bracket(d, d, window);
    result.ok = result.parity_ok && result.residual.is_zero();
    return result;
}

bool jacobi_correspondence(const Cochain& d) {
    const GradedSpace& space = d.space();
    if (space.even_dim() > 0)
        throw MismatchError(
            "Jacobi correspondence implemented for all-odd spaces");
    for (int n : d.arities())
        if (n != 2)
            throw MismatchError("codifferential must be concentrated in arity 2");

    auto pair_bracket = [&](int i, int j) -> std::map<int, Rat> {
        Monomial a;
        a.exps.assign(space.dim(), 0);
        a.exps[i] += 1;
        if (i == j) return {};  // odd square vanishes
        Monomial b;
        b.exps.assign(space.dim(), 0);
        b.exps[j] = 1;
        auto prod = monomial_product(space, a, b);
        if (!prod) return {};
        std::map<int, Rat> out;
        const auto* val = d.value(prod->second);
        if (!val) return out;
        for (const auto& [t, c] : *val) out[t] = prod->first * c;
        return out;
    };

    bool jacobi = true;
    const int dim = space.dim();
    for (int i = 0; i < dim && jacobi; ++i)
        for (int j = 0; j < dim && jacobi; ++j)
            for (int k = 0; k < dim && jacobi; ++k) {
                // [[i,j],k] + [[j,k],i] - [[i,k],j]
                std::map<int, Rat> total;
                auto acc = [&](const std::map<int, Rat>& inner, int outer,
                               const Rat& scale, bool outer_right) {
                    for (const auto& [w, c] : inner) {
                        auto term = outer_right ? pair_bracket(w, outer)
                                                : pair_bracket(outer, w);
                        for (const auto& [t, v] : term) {
                            Rat& r = total[t];
                            r += scale * c * v;
                            if (r == 0) total.erase(t);
                        }
                    }
                };
                acc(pair_bracket(i, j), k, 1, true);
                acc(pair_bracket(j, k), i, 1, true);
                acc(pair_bracket(i, k), j, -1, true);
                if (!total.empty()) jacobi = false;
            }

    int top = std::min(space.dim(), 3);
    CodifferentialCheck chk =
        check_codifferential(d, ArityWindow(1, std::max(3, top)));
    bool square_zero = chk.residual.is_zero();
    if (jacobi != square_zero)
        throw Error("Jacobi correspondence disagrees with [d,d] = 0");
    return jacobi;
}

}  // namespace linf
