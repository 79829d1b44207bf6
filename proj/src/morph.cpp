#include "linf/morph.hpp"

#include <algorithm>
#include <numeric>

namespace linf {

MorphismData::MorphismData(GradedSpace s, RingPtr r)
    : space(std::move(s)), ring(std::move(r)), components(space, ring) {}

int MorphismData::max_arity_of(const ParamCochain& c) {
    int mx = 1;
    for (const auto& [k, p] : c.terms()) mx = std::max(mx, k.input.degree());
    return mx;
}

MorphismData MorphismData::from_linear(const ParamCochain& linear) {
    MorphismData g(linear.space(), linear.ring());
    for (const auto& [k, p] : linear.terms()) {
        if (k.input.degree() != 1)
            throw MismatchError("linear morphism data must have arity 1");
        g.add_component(k, p);
    }
    g.validate();
    return g;
}

MorphismData MorphismData::identity(const GradedSpace& s, RingPtr r) {
    MorphismData g(s, r);
    for (int i = 0; i < s.dim(); ++i) {
        Monomial m;
        m.exps.assign(s.dim(), 0);
        m.exps[i] = 1;
        g.add_component({m, i}, ParamPoly::constant(r, 1));
    }
    return g;
}

MorphismData MorphismData::identity_plus(const ParamCochain& corrections) {
    MorphismData g = identity(corrections.space(), corrections.ring());
    for (const auto& [k, p] : corrections.terms()) g.add_component(k, p);
    g.validate();
    return g;
}

void MorphismData::add_component(const CochainKey& k, const ParamPoly& p) {
    if (p.is_zero()) return;
    for (const auto& [mu, c] : p.terms())
        if (key_parity(space, k) + mu.parity() != Parity::even)
            throw ParityError(
                "coalgebra morphism components must be even maps");
    components.add_term(k, p);
}

void MorphismData::validate() const {
    // The arity-1 component must be invertible after augmentation.
    const int dim = space.dim();
    RatMatrix m(dim, dim);
    for (const auto& [k, p] : components.terms()) {
        if (k.input.degree() != 1) continue;
        int src = -1;
        for (int i = 0; i < dim; ++i)
            if (k.input.exps[i] == 1) src = i;
        Rat c = augment(p);
        if (c != 0) m.set(k.output, src, c);
    }
    if (rank(m) != dim)
        throw MismatchError(
            "linear part of the morphism is not invertible after augmentation");
}

CoalgebraMorphism::CoalgebraMorphism(MorphismData data, ArityWindow window,
                                     int truncation_degree)
    : data_(std::move(data)), window_(window), truncation_(truncation_degree) {
    data_.validate();
}

CoalgebraMorphism extend_to_coalgebra_morphism(const MorphismData& g,
                                               const ArityWindow& window,
                                               int truncation_degree) {
    return CoalgebraMorphism(g, window, truncation_degree);
}

ParamMonoSum CoalgebraMorphism::eval(const Monomial& m) const {
    auto hit = cache_.find(m);
    if (hit != cache_.end()) return hit->second;
    if (m.degree() > window_.hi)
        throw WindowError(
            "monomial degree exceeds the window's composition depth");

    const GradedSpace& space = data_.space;
    const std::vector<int> w = m.word();
    const int n = static_cast<int>(w.size());
    std::vector<Parity> parities;
    parities.reserve(n);
    for (int i : w) parities.push_back(space.parity(i));

    // Arities with any component present.
    std::vector<bool> has_arity(n + 1, false);
    for (const auto& [k, p] : data_.components.terms()) {
        int a = k.input.degree();
        if (a <= n) has_arity[a] = true;
    }

    ParamMonoSum total(space, data_.ring);

    // Enumerate set partitions of the word positions; blocks are sorted
    // internally and listed by least element. Prune block sizes without
    // components.
    std::vector<std::vector<int>> blocks;
    std::vector<int> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0);

    auto emit = [&]() {
        std::vector<int> perm;
        for (const auto& b : blocks) perm.insert(perm.end(), b.begin(), b.end());
        int sign = koszul_sign(parities, perm);

        ParamMonoSum prod(space, data_.ring);
        bool first = true;
        for (const auto& b : blocks) {
            Monomial block = monomial_from_positions(space, w, b);
            std::map<int, ParamPoly> val = data_.components.eval(block);
            if (val.empty()) return;
            ParamMonoSum factor(space, data_.ring);
            for (const auto& [t, p] : val) {
                Monomial single;
                single.exps.assign(space.dim(), 0);
                single.exps[t] = 1;
                factor.add(single, truncate(p, truncation_));
            }
            if (first) {
                prod = std::move(factor);
                first = false;
            } else {
                prod = prod.mul(factor).truncated(truncation_);
            }
            if (prod.is_zero()) return;
        }
        for (const auto& [mono, p] : prod.terms()) {
            ParamPoly q = p;
            q *= sign;
            total.add(mono, q);
        }
    };

    auto rec = [&](auto&& self, std::vector<int> avail) -> void {
        if (avail.empty()) {
            emit();
            return;
        }
        int head = avail.front();
        // choose the block containing `head`
        std::vector<int> rest(avail.begin() + 1, avail.end());
        int r = static_cast<int>(rest.size());
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> block{head};
            std::vector<int> left;
            for (int i = 0; i < r; ++i)
                if (mask & (1 << i))
                    block.push_back(rest[i]);
                else
                    left.push_back(rest[i]);
            if (static_cast<int>(block.size()) > n ||
                !has_arity[block.size()])
                continue;
            blocks.push_back(block);
            self(self, left);
            blocks.pop_back();
        }
    };
    rec(rec, remaining);

    cache_.emplace(m, total);
    return total;
}

ParamMonoSum CoalgebraMorphism::eval(const ParamMonoSum& s) const {
    ParamMonoSum out(data_.space, data_.ring);
    for (const auto& [m, q] : s.terms())
        out += eval(m).rmul(q).truncated(truncation_);
    return out;
}

bool morphism_law_holds(const CoalgebraMorphism& g, int max_degree) {
    const GradedSpace& space = g.data().space;
    for (int n = 2; n <= max_degree; ++n) {
        for (const Monomial& m : enumerate_monomials(space, n)) {
            // left side: coproduct of g(m)
            std::map<std::pair<Monomial, Monomial>, ParamPoly,
                     bool (*)(const std::pair<Monomial, Monomial>&,
                              const std::pair<Monomial, Monomial>&)>
                lhs([](const std::pair<Monomial, Monomial>& a,
                       const std::pair<Monomial, Monomial>& b) {
                    MonoOrder lt;
                    if (lt(a.first, b.first)) return true;
                    if (lt(b.first, a.first)) return false;
                    return lt(a.second, b.second);
                });
            auto add_lhs = [&](const Monomial& a, const Monomial& b,
                              const ParamPoly& p) {
                auto key = std::make_pair(a, b);
                auto it = lhs.find(key);
                if (it == lhs.end())
                    lhs.emplace(key, p);
                else {
                    it->second += p;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            };
            ParamMonoSum gm_sum = g.eval(m);
            for (const auto& [gm, q] : gm_sum.terms())
                for (const auto& [c, a, b] : coproduct(space, gm)) {
                    ParamPoly p = q;
                    p *= c;
                    add_lhs(a, b, p);
                }
            // right side: (g (x) g) of coproduct(m); the second factor's
            // parameters cross the first factor's output.
            for (const auto& [c, a, b] : coproduct(space, m)) {
                ParamMonoSum ga = g.eval(a);
                ParamMonoSum gb = g.eval(b);
                for (const auto& [ma, pa] : ga.terms())
                    for (const auto& [mb, pb] : gb.terms()) {
                        ParamPoly p = poly_mul(
                            koszul_flip(pa, mb.parity(space)), pb);
                        p *= -c;  // subtract the right side
                        add_lhs(ma, mb, p);
                    }
            }
            for (const auto& [key, p] : lhs)
                if (!p.is_zero()) return false;
        }
    }
    return true;
}

namespace {

/// Inverse of a parameter-valued matrix whose augmentation is
/// invertible, as a truncated series.
std::vector<std::vector<ParamPoly>> invert_param_matrix(
    const GradedSpace& space, RingPtr ring,
    const std::vector<std::vector<ParamPoly>>& m, int trunc) {
    const int dim = space.dim();
    RatMatrix m0(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Rat c = augment(m[i][j]);
            if (c != 0) m0.set(i, j, c);
        }
    // exact inverse of the rational part via rref of [m0 | I]
    RatMatrix aug(dim, 2 * dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const Rat& v = m0.at(i, j);
            if (v != 0) aug.set(i, j, v);
        }
        aug.set(i, dim + i, 1);
    }
    RrefResult rr = rref(aug);
    for (int i = 0; i < dim; ++i)
        if (static_cast<int>(rr.pivot_cols.size()) <= i ||
            rr.pivot_cols[i] != i)
            throw MismatchError("linear part not invertible");
    std::vector<std::vector<Rat>> m0inv(dim, std::vector<Rat>(dim, 0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m0inv[i][j] = rr.matrix.at(i, dim + j);

    auto zero_poly = [&]() { return ParamPoly(ring); };
    // nmat = -m0inv * (m - m0); entries lie in the maximal ideal
    std::vector<std::vector<ParamPoly>> nmat(
        dim, std::vector<ParamPoly>(dim, zero_poly()));
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k) {
            if (m0inv[i][k] == 0) continue;
            for (int j = 0; j < dim; ++j) {
                ParamPoly plus = m[k][j];
                plus.add_term(ParamMonomial::one(*ring), -augment(m[k][j]));
                plus *= -m0inv[i][k];
                nmat[i][j] += plus;
            }
        }
    // inverse = (sum_k nmat^k) * m0inv
    std::vector<std::vector<ParamPoly>> acc(
        dim, std::vector<ParamPoly>(dim, zero_poly()));
    std::vector<std::vector<ParamPoly>> power(
        dim, std::vector<ParamPoly>(dim, zero_poly()));
    for (int i = 0; i < dim; ++i) {
        acc[i][i] = ParamPoly::constant(ring, 1);
        power[i][i] = ParamPoly::constant(ring, 1);
    }
    for (int k = 1; k <= trunc; ++k) {
        std::vector<std::vector<ParamPoly>> next(
            dim, std::vector<ParamPoly>(dim, zero_poly()));
        bool nonzero = false;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                ParamPoly s = zero_poly();
                for (int l = 0; l < dim; ++l)
                    s += truncate(poly_mul(power[i][l], nmat[l][j]), trunc);
                next[i][j] = s;
                if (!s.is_zero()) nonzero = true;
            }
        power = std::move(next);
        if (!nonzero) break;
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) acc[i][j] += power[i][j];
    }
    std::vector<std::vector<ParamPoly>> inv(
        dim, std::vector<ParamPoly>(dim, zero_poly()));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            ParamPoly s = zero_poly();
            for (int l = 0; l < dim; ++l) {
                if (m0inv[l][j] == 0) continue;
                ParamPoly t = acc[i][l];
                t *= m0inv[l][j];
                s += t;
            }
            inv[i][j] = truncate(s, trunc);
        }
    return inv;
}

std::vector<std::vector<ParamPoly>> linear_matrix(const MorphismData& g) {
    const int dim = g.space.dim();
    std::vector<std::vector<ParamPoly>> m(
        dim, std::vector<ParamPoly>(dim, ParamPoly(g.ring)));
    for (const auto& [k, p] : g.components.terms()) {
        if (k.input.degree() != 1) continue;
        int src = -1;
        for (int i = 0; i < dim; ++i)
            if (k.input.exps[i] == 1) src = i;
        m[k.output][src] += p;
    }
    return m;
}

MorphismData linear_from_matrix(const GradedSpace& space, RingPtr ring,
                                const std::vector<std::vector<ParamPoly>>& m) {
    MorphismData g(space, ring);
    const int dim = space.dim();
    for (int j = 0; j < dim; ++j) {
        Monomial src;
        src.exps.assign(dim, 0);
        src.exps[j] = 1;
        for (int i = 0; i < dim; ++i)
            if (!m[i][j].is_zero()) g.add_component({src, i}, m[i][j]);
    }
    return g;
}

}  // namespace

namespace {

/// W-component of a monomial sum, as target index -> coefficient.
std::map<int, ParamPoly> w_part(const GradedSpace& space,
                                const ParamMonoSum& s) {
    std::map<int, ParamPoly> out;
    for (const auto& [mono, p] : s.terms()) {
        if (mono.degree() != 1) continue;
        for (int i = 0; i < space.dim(); ++i)
            if (mono.exps[i] == 1) {
                auto it = out.find(i);
                if (it == out.end())
                    out.emplace(i, p);
                else {
                    it->second += p;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
    }
    return out;
}

}  // namespace

MorphismData invert_morphism(const MorphismData& g, const ArityWindow& window,
                             int truncation_degree) {
    g.validate();
    auto g1 = linear_matrix(g);
    auto h1 = invert_param_matrix(g.space, g.ring, g1, truncation_degree);
    MorphismData h = linear_from_matrix(g.space, g.ring, h1);

    CoalgebraMorphism ghat =
        extend_to_coalgebra_morphism(g, window, truncation_degree);
    CoalgebraMorphism h1hat =
        extend_to_coalgebra_morphism(h, window, truncation_degree);

    // Solve the corestriction components degree by degree: on degree n,
    // the unknown h_n enters pi_W(h(g(m))) only through the linear part
    // of g, so h_n(m') = -residual(H1(m')) for the inverse linear
    // extension H1.
    for (int n = 2; n <= window.hi; ++n) {
        auto monos = enumerate_monomials(g.space, n);
        if (monos.empty()) continue;
        CoalgebraMorphism hhat =
            extend_to_coalgebra_morphism(h, window, truncation_degree);
        for (const Monomial& m : monos) {
            std::map<int, ParamPoly> val;
            ParamMonoSum pulled = h1hat.eval(m);
            for (const auto& [mono, q] : pulled.terms()) {
                std::map<int, ParamPoly> res =
                    w_part(g.space, hhat.eval(ghat.eval(mono)));
                for (const auto& [t, p] : res) {
                    ParamPoly add = truncate(poly_mul(p, q),
                                             truncation_degree);
                    if (add.is_zero()) continue;
                    auto it = val.find(t);
                    if (it == val.end())
                        val.emplace(t, add);
                    else {
                        it->second += add;
                        if (it->second.is_zero()) val.erase(it);
                    }
                }
            }
            Parity mp = m.parity(g.space);
            Rat norm = even_factorial_norm(g.space, m);
            for (const auto& [t, p] : val) {
                ParamPoly adj = koszul_flip(p, mp);
                adj *= -Rat(1) / norm;
                h.add_component({m, t}, adj);
            }
        }
    }
    h.validate();
    return h;
}

ParamCochain transport(const ParamCochain& d, const MorphismData& g,
                       const ArityWindow& window, int truncation_degree,
                       ConjugationOrder order) {
    if (!(d.space() == g.space) || !(*d.ring() == *g.ring))
        throw MismatchError("transport space or ring mismatch");
    MorphismData ginv = invert_morphism(g, window, truncation_degree);
    const MorphismData& outer =
        (order == ConjugationOrder::inverse_left) ? ginv : g;
    const MorphismData& inner =
        (order == ConjugationOrder::inverse_left) ? g : ginv;
    CoalgebraMorphism inner_hat =
        extend_to_coalgebra_morphism(inner, window, truncation_degree);
    CoalgebraMorphism outer_hat =
        extend_to_coalgebra_morphism(outer, window, truncation_degree);

    std::map<Monomial, std::map<int, ParamPoly>, MonoOrder> table;
    for (int n = window.lo; n <= window.hi; ++n) {
        for (const Monomial& m : enumerate_monomials(d.space(), n)) {
            ParamMonoSum t1 = inner_hat.eval(m);
            ParamMonoSum t2 = d.tilde_eval(t1).truncated(truncation_degree);
            ParamMonoSum t3 = outer_hat.eval(t2);
            std::map<int, ParamPoly> row;
            for (const auto& [mono, p] : t3.terms()) {
                if (mono.degree() != 1) continue;
                for (int i = 0; i < d.space().dim(); ++i)
                    if (mono.exps[i] == 1) {
                        auto it = row.find(i);
                        if (it == row.end())
                            row.emplace(i, truncate(p, truncation_degree));
                        else
                            it->second += truncate(p, truncation_degree);
                    }
            }
            if (!row.empty()) table.emplace(m, std::move(row));
        }
    }
    return pcochain_from_eval(d.space(), d.ring(), table);
}

RingMorphism::RingMorphism(RingPtr src, RingPtr tgt,
                           std::map<std::string, ParamPoly> imgs, int trunc)
    : source(std::move(src)),
      target(std::move(tgt)),
      images(std::move(imgs)),
      truncation_degree(trunc) {
    for (int i = 0; i < source->even_count(); ++i)
        if (!images.count(source->even_name(i)))
            throw NameError("missing image for parameter '" +
                            source->even_name(i) + "'");
    for (int j = 0; j < source->odd_count(); ++j)
        if (!images.count(source->odd_name(j)))
            throw NameError("missing image for parameter '" +
                            source->odd_name(j) + "'");
    for (const auto& [name, img] : images) {
        auto [is_odd, idx] = source->generator(name);
        (void)idx;
        if (!(*img.ring() == *target))
            throw MismatchError("image of '" + name + "' not in target ring");
        if (augment(img) != 0)
            throw DegreeError("image of '" + name +
                              "' must lie in the maximal ideal");
        for (const auto& [mu, c] : img.terms())
            if (mu.parity() != (is_odd ? Parity::odd : Parity::even))
                throw ParityError("image of '" + name +
                                  "' does not preserve parity");
    }
}

ParamPoly RingMorphism::apply(const ParamPoly& p) const {
    ParamPoly out(target);
    for (const auto& [mu, c] : p.terms()) {
        ParamPoly term = ParamPoly::constant(target, c);
        for (int j = 0; j < source->odd_count(); ++j)
            if (mu.odd_present[j])
                term = truncate(
                    poly_mul(term, images.at(source->odd_name(j))),
                    truncation_degree);
        for (int i = 0; i < source->even_count(); ++i)
            for (int e = 0; e < mu.even_exps[i]; ++e)
                term = truncate(
                    poly_mul(term, images.at(source->even_name(i))),
                    truncation_degree);
        out += term;
    }
    return out;
}

ParamCochain RingMorphism::apply(const ParamCochain& c) const {
    ParamCochain out(c.space(), target);
    for (const auto& [k, p] : c.terms()) out.add_term(k, apply(p));
    return out;
}

Deformation pushout(const Deformation& defm, const RingMorphism& lam,
                    const RelationIdeal& target_relations) {
    if (!(*lam.source == *defm.ring))
        throw MismatchError("ring morphism source differs from the base");
    for (int i = 0; i < static_cast<int>(defm.relations.size()); ++i) {
        const ParamPoly& r = defm.relations[i];
        if (r.is_zero()) continue;
        ParamPoly img = lam.apply(truncate(r, lam.truncation_degree));
        if (!reduce_mod(img, target_relations).is_zero())
            throw Error("push-out violates relation " + std::to_string(i + 1) +
                        " of the base");
    }
    Deformation out(defm.space, lam.target, defm.window,
                    target_relations.truncation_degree, defm.base);
    out.current = lam.apply(defm.current);
    for (const DeltaInfo& d : defm.deltas)
        out.deltas.push_back({d.rep, d.arity, d.cochain_parity, ""});
    out.relations = target_relations.generators;
    out.order = defm.order;
    out.status = defm.status;
    return out;
}

}  // namespace linf
