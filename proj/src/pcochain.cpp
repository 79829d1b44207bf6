#include "linf/pcochain.hpp"

namespace linf {

void ParamMonoSum::add(const Monomial& m, const ParamPoly& p) {
    if (p.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamMonoSum& ParamMonoSum::operator+=(const ParamMonoSum& o) {
    for (const auto& [m, p] : o.terms_) add(m, p);
    return *this;
}

ParamMonoSum ParamMonoSum::rmul(const ParamPoly& q) const {
    ParamMonoSum out(space_, ring_);
    for (const auto& [m, p] : terms_) out.add(m, poly_mul(p, q));
    return out;
}

ParamMonoSum ParamMonoSum::mul(const ParamMonoSum& o) const {
    ParamMonoSum out(space_, ring_);
    for (const auto& [ma, pa] : terms_) {
        for (const auto& [mb, pb] : o.terms_) {
            auto prod = monomial_product(space_, ma, mb);
            if (!prod) continue;
            // pa crosses mb on its way right
            ParamPoly coeff =
                poly_mul(koszul_flip(pa, mb.parity(space_)), pb);
            coeff *= prod->first;
            out.add(prod->second, coeff);
        }
    }
    return out;
}

ParamMonoSum ParamMonoSum::truncated(int degree) const {
    ParamMonoSum out(space_, ring_);
    for (const auto& [m, p] : terms_) out.add(m, truncate(p, degree));
    return out;
}

ParamCochain ParamCochain::from_cochain(const Cochain& c, RingPtr ring) {
    ParamCochain out(c.space(), ring);
    out.add_cochain(c, ParamPoly::constant(ring, 1));
    return out;
}

ParamPoly ParamCochain::coefficient(const CochainKey& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? ParamPoly(ring_) : it->second;
}

void ParamCochain::add_term(const CochainKey& k, const ParamPoly& p) {
    if (p.is_zero()) return;
    Parity kp = key_parity(space_, k);
    Parity total = kp + p.parity();  // throws if p not homogeneous
    if (total_parity_ && *total_parity_ != total)
        throw ParityError("parameter cochain term breaks parity homogeneity");
    total_parity_ = total;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, p);
    } else {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
    if (terms_.empty()) total_parity_.reset();
}

void ParamCochain::add_cochain(const Cochain& c, const ParamPoly& p) {
    if (!(c.space() == space_)) throw MismatchError("space mismatch");
    if (p.is_zero() || c.is_zero()) return;
    for (const auto& [k, v] : cochain_coords(c)) {
        ParamPoly q = p;
        q *= v;
        add_term(k, q);
    }
}

ParamCochain& ParamCochain::operator+=(const ParamCochain& o) {
    if (!(space_ == o.space_) || !(*ring_ == *o.ring_))
        throw MismatchError("parameter cochains over different space or ring");
    for (const auto& [k, p] : o.terms_) add_term(k, p);
    return *this;
}

ParamCochain& ParamCochain::operator-=(const ParamCochain& o) {
    if (!(space_ == o.space_) || !(*ring_ == *o.ring_))
        throw MismatchError("parameter cochains over different space or ring");
    for (const auto& [k, p] : o.terms_) {
        ParamPoly q = p;
        q *= Rat(-1);
        add_term(k, q);
    }
    return *this;
}

ParamCochain ParamCochain::truncated(int degree) const {
    ParamCochain out(space_, ring_);
    for (const auto& [k, p] : terms_) out.add_term(k, truncate(p, degree));
    return out;
}

Cochain ParamCochain::augmented() const {
    Cochain out(space_);
    for (const auto& [k, p] : terms_) {
        Rat c = augment(p);
        if (c != 0)
            out.add_value(k.input, k.output,
                          c * even_factorial_norm(space_, k.input));
    }
    return out;
}

std::map<int, ParamPoly> ParamCochain::eval(const Monomial& m) const {
    std::map<int, ParamPoly> out;
    Parity mp = m.parity(space_);
    for (const auto& [k, p] : terms_) {
        if (!(k.input == m)) continue;
        ParamPoly c = koszul_flip(p, mp);
        c *= even_factorial_norm(space_, m);
        auto it = out.find(k.output);
        if (it == out.end()) {
            out.emplace(k.output, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

ParamMonoSum ParamCochain::tilde_eval(const Monomial& m) const {
    ParamMonoSum out(space_, ring_);
    Parity mp = m.parity(space_);
    for (const auto& [k, p] : terms_) {
        Cochain basis = Cochain::basis(space_, k.input, k.output);
        SignedMonomialSum lifted = tilde_apply(basis, m);
        if (lifted.empty()) continue;
        ParamPoly crossed = koszul_flip(p, mp);
        for (const auto& [mono, c] : lifted) {
            ParamPoly q = crossed;
            q *= c;
            out.add(mono, q);
        }
    }
    return out;
}

ParamMonoSum ParamCochain::tilde_eval(const ParamMonoSum& s) const {
    ParamMonoSum out(space_, ring_);
    for (const auto& [m, q] : s.terms()) out += tilde_eval(m).rmul(q);
    return out;
}

ParamCochain param_bracket(const ParamCochain& a, const ParamCochain& b,
                           const ArityWindow& window) {
    if (!(a.space() == b.space()) || !(*a.ring() == *b.ring()))
        throw MismatchError("bracket over different spaces or rings");
    ParamCochain out(a.space(), a.ring());
    const GradedSpace& space = a.space();

    std::map<std::pair<CochainKey, CochainKey>,
             std::map<CochainKey, Rat, KeyOrder>,
             bool (*)(const std::pair<CochainKey, CochainKey>&,
                      const std::pair<CochainKey, CochainKey>&)>
        cache([](const std::pair<CochainKey, CochainKey>& x,
                 const std::pair<CochainKey, CochainKey>& y) {
            KeyOrder lt;
            if (lt(x.first, y.first)) return true;
            if (lt(y.first, x.first)) return false;
            return lt(x.second, y.second);
        });

    for (const auto& [ka, pa] : a.terms()) {
        for (const auto& [kb, pb] : b.terms()) {
            auto it = cache.find({ka, kb});
            if (it == cache.end()) {
                Cochain ca = Cochain::basis(space, ka.input, ka.output);
                Cochain cb = Cochain::basis(space, kb.input, kb.output);
                it = cache.emplace(std::make_pair(ka, kb),
                                   cochain_coords(bracket(ca, cb, window)))
                         .first;
            }
            if (it->second.empty()) continue;
            ParamPoly coeff =
                poly_mul(koszul_flip(pa, key_parity(space, kb)), pb);
            if (coeff.is_zero()) continue;
            for (const auto& [kr, v] : it->second) {
                ParamPoly q = coeff;
                q *= v;
                out.add_term(kr, q);
            }
        }
    }
    return out;
}

ParamCochain pcochain_from_eval(
    const GradedSpace& space, RingPtr ring,
    const std::map<Monomial, std::map<int, ParamPoly>, MonoOrder>& table) {
    ParamCochain out(space, ring);
    for (const auto& [m, vec] : table) {
        Parity mp = m.parity(space);
        Rat norm = even_factorial_norm(space, m);
        for (const auto& [t, p] : vec) {
            ParamPoly coeff = koszul_flip(p, mp);
            coeff *= Rat(1) / norm;
            out.add_term({m, t}, coeff);
        }
    }
    return out;
}

}  // namespace linf
