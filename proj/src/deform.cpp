#include "linf/deform.hpp"

#include <algorithm>

namespace linf {

RelationIdeal Deformation::ideal() const { return ideal(truncation_degree); }

RelationIdeal Deformation::ideal(int trunc) const {
    std::vector<ParamPoly> gens;
    for (const ParamPoly& r : relations)
        if (!r.is_zero()) gens.push_back(truncate(r, trunc));
    return RelationIdeal(ring, std::move(gens), trunc);
}

Deformation universal_infinitesimal(const Cochain& d, const CohomologyData& H,
                                    int truncation_degree) {
    std::vector<std::string> even_names, odd_names;
    std::vector<DeltaInfo> infos;
    int theta_count = 0, t_count = 0;
    for (int i = 0; i < static_cast<int>(H.deltas().size()); ++i) {
        const auto& delta = H.deltas()[i];
        DeltaInfo info{H.delta_cochain(i), delta.arity, delta.parity, ""};
        if (delta.parity == Parity::even) {
            info.param_name = "th" + std::to_string(++theta_count);
            odd_names.push_back(info.param_name);
        } else {
            info.param_name = "t" + std::to_string(++t_count);
            even_names.push_back(info.param_name);
        }
        infos.push_back(std::move(info));
    }
    RingPtr ring = std::make_shared<ParamRing>(even_names, odd_names);
    Deformation defm(d.space(), ring, H.window(), truncation_degree, d);
    defm.deltas = std::move(infos);
    defm.current = ParamCochain::from_cochain(d, ring);
    for (const DeltaInfo& info : defm.deltas)
        defm.current.add_cochain(info.rep, ParamPoly::gen(ring, info.param_name));
    defm.relations.assign(defm.deltas.size(), ParamPoly(ring));
    defm.order = defm.deltas.empty() ? 0 : 1;
    defm.status = defm.deltas.empty() ? DeformStatus::miniversal
                                      : DeformStatus::truncated;
    return defm;
}

ParamCochain half_self_bracket(const ParamCochain& c,
                               const ArityWindow& window) {
    ParamCochain br = param_bracket(c, c, window);
    ParamCochain out(c.space(), c.ring());
    for (const auto& [k, p] : br.terms()) {
        ParamPoly half = p;
        half *= Rat(1, 2);
        out.add_term(k, half);
    }
    return out;
}

Decomposition decompose_obstruction(const ParamCochain& obs,
                                    const CohomologyData& H) {
    Decomposition dec{ParamCochain(obs.space(), obs.ring()),
                      {},
                      {}};
    dec.relations.assign(H.deltas().size(), ParamPoly(obs.ring()));

    // Regroup per parameter monomial and per arity.
    std::map<ParamMonomial, std::map<int, std::vector<Rat>>, ParamMonoOrder>
        buckets;
    for (const auto& [k, p] : obs.terms()) {
        int arity = k.input.degree();
        int col = H.key_index(k);
        for (const auto& [mu, c] : p.terms()) {
            auto& vec = buckets[mu][arity];
            if (vec.empty()) vec.assign(H.keys().size(), 0);
            vec[col] = c;
        }
    }

    for (const auto& [mu, by_arity] : buckets) {
        for (const auto& [arity, c_full] : by_arity) {
            CohomologyData::Split s = H.split(arity, c_full);
            for (int i = 0; i < static_cast<int>(s.delta_coeffs.size()); ++i)
                if (s.delta_coeffs[i] != 0)
                    dec.relations[i].add_term(mu, -s.delta_coeffs[i]);
            for (const auto& [k, v] : s.preimage) {
                ParamPoly p(obs.ring());
                p.add_term(mu, -v);
                dec.alpha.add_term(k, p);
            }
            for (const auto& [k, v] : s.noncocycle) {
                ParamPoly p(obs.ring());
                p.add_term(mu, v);
                auto it = dec.residues.find(k);
                if (it == dec.residues.end())
                    dec.residues.emplace(k, p);
                else
                    it->second += p;
            }
        }
    }

    // Sign-normalize the relation generators: leading coefficient positive.
    for (ParamPoly& r : dec.relations) {
        if (r.is_zero()) continue;
        if (r.terms().begin()->second < 0) r *= Rat(-1);
    }
    return dec;
}

namespace {

void check_residues(const Decomposition& dec, const Deformation& defm,
                    int trunc) {
    std::vector<ParamPoly> gens;
    for (const ParamPoly& r : dec.relations)
        if (!r.is_zero()) gens.push_back(truncate(r, trunc));
    RelationIdeal ideal(defm.ring, std::move(gens), trunc);
    for (const auto& [k, p] : dec.residues) {
        ParamPoly red = reduce_mod(truncate(p, trunc), ideal);
        if (!red.is_zero())
            throw Error(
                "obstruction coefficient is not a cocycle modulo the "
                "relations (first failing monomial on basis cochain at "
                "arity " +
                std::to_string(k.input.degree()) +
                "); the window may be too small");
    }
}

}  // namespace

Deformation extend_order(const Deformation& defm, const CohomologyData& H) {
    ParamCochain obs = half_self_bracket(defm.current, defm.window);
    Decomposition dec = decompose_obstruction(obs, H);
    Deformation next = defm;
    next.relations = dec.relations;
    if (dec.alpha.is_zero()) {
        // No coboundary part: the deformation is miniversal and the
        // relations hold exactly, so check the residues at the full
        // truncation degree.
        check_residues(dec, next, next.truncation_degree);
        next.status = DeformStatus::miniversal;
        return next;
    }
    int working = std::min(next.order + 1, next.truncation_degree);
    check_residues(dec, next, working);
    next.current += dec.alpha;
    next.current = next.current.truncated(next.truncation_degree);
    next.order += 1;
    next.status = DeformStatus::truncated;
    return next;
}

Deformation extend_order(const Deformation& defm) {
    return extend_order(defm, cohomology(defm.base, defm.window));
}

Deformation miniversal(const Cochain& d, int max_order,
                       const ArityWindow& window, int truncation_degree) {
    if (max_order < 1) throw DegreeError("max_order must be at least 1");
    if (truncation_degree < 0) truncation_degree = max_order + 2;
    CohomologyData H = cohomology(d, window);
    Deformation defm = universal_infinitesimal(d, H, truncation_degree);
    if (defm.deltas.empty()) return defm;
    while (true) {
        ParamCochain obs = half_self_bracket(defm.current, defm.window);
        Decomposition dec = decompose_obstruction(obs, H);
        defm.relations = dec.relations;
        if (dec.alpha.is_zero()) {
            check_residues(dec, defm, defm.truncation_degree);
            defm.status = DeformStatus::miniversal;
            return defm;
        }
        int working = std::min(defm.order + 1, defm.truncation_degree);
        check_residues(dec, defm, working);
        if (defm.order >= max_order) {
            defm.status = DeformStatus::truncated;
            return defm;
        }
        defm.current += dec.alpha;
        defm.current = defm.current.truncated(defm.truncation_degree);
        defm.order += 1;
    }
}

bool self_bracket_vanishes(const Deformation& defm, int trunc) {
    ParamCochain obs = half_self_bracket(defm.current, defm.window);
    std::vector<ParamPoly> gens;
    for (const ParamPoly& r : defm.relations)
        if (!r.is_zero()) gens.push_back(truncate(r, trunc));
    RelationIdeal ideal(defm.ring, std::move(gens), trunc);
    for (const auto& [k, p] : obs.terms()) {
        ParamPoly red = reduce_mod(truncate(p, trunc), ideal);
        if (!red.is_zero()) return false;
    }
    return true;
}

}  // namespace linf
