#include "linf/render.hpp"

#include <json.hpp>

#include <sstream>

namespace linf {

using nlohmann::json;

Format format_from_string(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "latex") return Format::latex;
    if (name == "structured") return Format::structured;
    throw Error("unknown format '" + name + "'");
}

namespace {

enum class Shape { even_line, odd_line, odd_plane, one_one, even_plane, other };

Shape shape_of(const GradedSpace& s) {
    if (s.even_dim() == 1 && s.odd_dim() == 0) return Shape::even_line;
    if (s.even_dim() == 0 && s.odd_dim() == 1) return Shape::odd_line;
    if (s.even_dim() == 0 && s.odd_dim() == 2) return Shape::odd_plane;
    if (s.even_dim() == 1 && s.odd_dim() == 1) return Shape::one_one;
    if (s.even_dim() == 2 && s.odd_dim() == 0) return Shape::even_plane;
    return Shape::other;
}

std::string sup_sub(const std::string& head, const std::string& sup,
                    const std::string& sub, Format fmt) {
    std::string out = head;
    if (fmt == Format::latex) {
        if (!sup.empty()) out += "^{" + sup + "}";
        if (!sub.empty()) out += "_{" + sub + "}";
    } else {
        if (!sup.empty()) out += "^" + sup;
        if (!sub.empty()) out += "_" + sub;
    }
    return out;
}

}  // namespace

std::string monomial_name(const GradedSpace& space, const Monomial& m,
                          Format fmt) {
    std::string out;
    for (int i = 0; i < space.dim(); ++i) {
        if (m.exps[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += space.name(i);
        if (m.exps[i] > 1)
            out += (fmt == Format::latex)
                       ? "^{" + std::to_string(m.exps[i]) + "}"
                       : "^" + std::to_string(m.exps[i]);
    }
    return out;
}

std::string key_name(const GradedSpace& space, const CochainKey& key,
                     Format fmt) {
    const bool latex = fmt == Format::latex;
    const std::string phi = latex ? "\\varphi" : "phi";
    const std::string psi = latex ? "\\psi" : "psi";
    const int arity = key.input.degree();
    switch (shape_of(space)) {
        case Shape::even_line:
            return sup_sub(phi, "", std::to_string(arity), fmt);
        case Shape::odd_line:
            return phi;
        case Shape::odd_plane: {
            if (arity == 1) {
                int i = 0;
                for (int b = 0; b < 2; ++b)
                    if (key.input.exps[b] == 1) i = b + 1;
                return sup_sub(phi, std::to_string(i),
                               std::to_string(key.output + 1), fmt);
            }
            return sup_sub(psi, "", std::to_string(key.output + 1), fmt);
        }
        case Shape::one_one: {
            bool has_f = key.input.exps[1] == 1;
            bool out_e = key.output == 0;
            std::string k = std::to_string(arity);
            if (!has_f && out_e) return sup_sub(phi, k, "e", fmt);
            if (!has_f && !out_e) return sup_sub(psi, k, "f", fmt);
            if (has_f && out_e) return sup_sub(psi, k, "e", fmt);
            return sup_sub(phi, k, "f", fmt);
        }
        case Shape::even_plane: {
            std::string idx = "(" + std::to_string(key.input.exps[0]) + "," +
                              std::to_string(key.input.exps[1]) + ")," +
                              std::to_string(key.output + 1);
            return sup_sub(phi, "", idx, fmt);
        }
        case Shape::other:
            break;
    }
    if (latex)
        return "c_{" + monomial_name(space, key.input, fmt) + " \\to " +
               space.name(key.output) + "}";
    return "c[" + monomial_name(space, key.input, fmt) + " -> " +
           space.name(key.output) + "]";
}

std::string param_name(const std::string& generator, Format fmt) {
    if (fmt != Format::latex) return generator;
    // thN -> \theta_{N}, tN -> t_{N}; other names verbatim
    auto digits = [](const std::string& s, size_t from) {
        if (from >= s.size()) return false;
        for (size_t i = from; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (generator.rfind("th", 0) == 0 && digits(generator, 2))
        return "\\theta_{" + generator.substr(2) + "}";
    if (generator.rfind("t", 0) == 0 && digits(generator, 1))
        return "t_{" + generator.substr(1) + "}";
    return generator;
}

std::string rat_string(const Rat& r, Format fmt) {
    if (fmt == Format::latex && denominator(r) != 1) {
        std::string sign = r < 0 ? "-" : "";
        Rat a = r < 0 ? Rat(-r) : r;
        return sign + "\\tfrac{" + numerator(a).str() + "}{" +
               denominator(a).str() + "}";
    }
    return r.str();
}

namespace {

std::string param_monomial_string(const ParamRing& ring,
                                  const ParamMonomial& m, Format fmt) {
    std::string out;
    auto push = [&](const std::string& s) {
        if (!out.empty() && fmt != Format::latex) out += " ";
        out += s;
    };
    for (int j = 0; j < ring.odd_count(); ++j)
        if (m.odd_present[j]) push(param_name(ring.odd_name(j), fmt));
    for (int i = 0; i < ring.even_count(); ++i) {
        if (m.even_exps[i] == 0) continue;
        std::string g = param_name(ring.even_name(i), fmt);
        if (m.even_exps[i] > 1)
            g += (fmt == Format::latex)
                     ? "^{" + std::to_string(m.even_exps[i]) + "}"
                     : "^" + std::to_string(m.even_exps[i]);
        push(g);
    }
    return out;
}

/// Append "sign coeff body" to a running sum string.
void append_term(std::string& out, const Rat& coeff, const std::string& body,
                 Format fmt) {
    bool first = out.empty();
    Rat a = coeff;
    if (a < 0) {
        out += first ? "-" : " - ";
        a = -a;
    } else if (!first) {
        out += " + ";
    }
    if (a != 1 || body.empty()) {
        out += rat_string(a, fmt);
        if (!body.empty()) out += (fmt == Format::latex) ? " " : " ";
    }
    out += body;
}

}  // namespace

std::string poly_string(const ParamPoly& p, Format fmt) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms())
        append_term(out, c, param_monomial_string(*p.ring(), m, fmt), fmt);
    return out;
}

std::vector<Alias> deformation_aliases(const Deformation& defm) {
    std::vector<Alias> out;
    if (!(shape_of(defm.space) == Shape::one_one)) return out;
    for (const DeltaInfo& d : defm.deltas) {
        if (d.cochain_parity != Parity::even) continue;
        int even_here = 0;
        for (const DeltaInfo& o : defm.deltas)
            if (o.arity == d.arity && o.cochain_parity == Parity::even)
                ++even_here;
        if (even_here != 1) continue;
        std::string k = std::to_string(d.arity);
        out.push_back({d.rep, "h^" + k, "h^{" + k + "}"});
    }
    return out;
}

namespace {

/// Match c against scalar multiples of the aliases; empty string when no
/// alias applies.
std::string alias_match(const Cochain& c, Format fmt,
                        const std::vector<Alias>& aliases, Rat* scale) {
    for (const Alias& a : aliases) {
        auto ca = cochain_coords(a.rep);
        auto cc = cochain_coords(c);
        if (ca.size() != cc.size()) continue;
        Rat ratio = 0;
        bool ok = true;
        for (const auto& [k, v] : ca) {
            auto it = cc.find(k);
            if (it == cc.end()) {
                ok = false;
                break;
            }
            Rat r = it->second / v;
            if (ratio == 0)
                ratio = r;
            else if (ratio != r) {
                ok = false;
                break;
            }
        }
        if (ok && ratio != 0) {
            *scale = ratio;
            return fmt == Format::latex ? a.latex : a.plain;
        }
    }
    return "";
}

}  // namespace

std::string cochain_string(const Cochain& c, Format fmt,
                           const std::vector<Alias>& aliases) {
    if (c.is_zero()) return "0";
    Rat scale = 0;
    std::string alias = alias_match(c, fmt, aliases, &scale);
    if (!alias.empty()) {
        std::string out;
        append_term(out, scale, alias, fmt);
        return out;
    }
    std::string out;
    for (const auto& [k, v] : cochain_coords(c))
        append_term(out, v, key_name(c.space(), k, fmt), fmt);
    return out;
}

std::string param_cochain_string(const ParamCochain& pc, Format fmt,
                                 const std::vector<Alias>& aliases) {
    if (pc.is_zero()) return "0";
    // group by parameter monomial in canonical order
    std::map<ParamMonomial, Cochain, ParamMonoOrder> groups;
    for (const auto& [k, p] : pc.terms())
        for (const auto& [mu, c] : p.terms()) {
            auto it = groups.find(mu);
            if (it == groups.end())
                it = groups.emplace(mu, Cochain(pc.space())).first;
            it->second.add_value(
                k.input, k.output,
                c * even_factorial_norm(pc.space(), k.input));
        }
    std::string out;
    for (const auto& [mu, coeff] : groups) {
        std::string mu_str = param_monomial_string(*pc.ring(), mu, fmt);
        Rat scale = 0;
        std::string alias = alias_match(coeff, fmt, aliases, &scale);
        std::string body;
        if (!alias.empty()) {
            body = alias;
        } else {
            auto coords = cochain_coords(coeff);
            if (coords.size() == 1) {
                scale = coords.begin()->second;
                body = key_name(pc.space(), coords.begin()->first, fmt);
            } else {
                // parenthesized multi-term cochain coefficient
                std::string inner = cochain_string(coeff, fmt, aliases);
                scale = 1;
                body = (fmt == Format::latex) ? "\\left(" + inner + "\\right)"
                                              : "(" + inner + ")";
            }
        }
        if (!mu_str.empty())
            body += (fmt == Format::latex ? " " : " ") + mu_str;
        append_term(out, scale, body, fmt);
    }
    return out;
}

std::string deformation_string(const Deformation& defm, Format fmt) {
    std::vector<Alias> aliases = deformation_aliases(defm);
    std::ostringstream out;
    const char* status = defm.status == DeformStatus::miniversal
                             ? "miniversal"
                             : "truncated";
    out << "status: " << status << " at order " << defm.order << "\n";
    out << "window: " << defm.window.lo << ".." << defm.window.hi
        << ", truncation degree: " << defm.truncation_degree << "\n";
    if (fmt == Format::latex)
        out << "d = " << param_cochain_string(defm.current, fmt, aliases)
            << "\n";
    else
        out << "d = " << param_cochain_string(defm.current, fmt, aliases)
            << "\n";
    bool any = false;
    for (const ParamPoly& r : defm.relations)
        if (!r.is_zero()) any = true;
    if (!any) {
        out << "no relations\n";
    } else {
        out << "relations:\n";
        for (const ParamPoly& r : defm.relations) {
            if (r.is_zero()) continue;
            out << "  " << poly_string(r, fmt) << " = 0\n";
        }
    }
    bool tower_continues =
        defm.space.even_dim() > 0 || defm.window.hi < defm.space.odd_dim();
    if (tower_continues)
        for (const DeltaInfo& d : defm.deltas)
            if (d.arity == defm.window.hi) {
                out << "note: the delta basis reaches the window boundary; "
                       "the family of parameters and relations continues at "
                       "higher arities\n";
                break;
            }
    return out.str();
}

namespace {

json poly_json(const ParamPoly& p) {
    json terms = json::array();
    const ParamRing& ring = *p.ring();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["c"] = c.str();
        json odd = json::array();
        for (int j = 0; j < ring.odd_count(); ++j)
            if (m.odd_present[j]) odd.push_back(ring.odd_name(j));
        json even = json::object();
        for (int i = 0; i < ring.even_count(); ++i)
            if (m.even_exps[i] > 0)
                even[ring.even_name(i)] = m.even_exps[i];
        t["odd"] = odd;
        t["even"] = even;
        terms.push_back(t);
    }
    return terms;
}

ParamPoly poly_from_json(RingPtr ring, const json& terms) {
    ParamPoly p(ring);
    for (const auto& t : terms) {
        ParamMonomial m = ParamMonomial::one(*ring);
        for (const auto& name : t.at("odd")) {
            auto [is_odd, idx] = ring->generator(name.get<std::string>());
            if (!is_odd) throw Error("structured input: even generator in odd slot");
            m.odd_present[idx] = 1;
        }
        for (const auto& [name, e] : t.at("even").items()) {
            auto [is_odd, idx] = ring->generator(name);
            if (is_odd) throw Error("structured input: odd generator in even slot");
            m.even_exps[idx] = e.get<int>();
        }
        p.add_term(m, Rat(t.at("c").get<std::string>()));
    }
    return p;
}

json mono_json(const GradedSpace& space, const Monomial& m) {
    json out = json::object();
    for (int i = 0; i < space.dim(); ++i)
        if (m.exps[i] > 0) out[space.name(i)] = m.exps[i];
    return out;
}

Monomial mono_from_json(const GradedSpace& space, const json& j) {
    std::vector<std::pair<int, int>> parts;
    for (const auto& [name, e] : j.items())
        parts.emplace_back(space.index_of(name), e.get<int>());
    return make_monomial(space, parts);
}

json pcochain_json(const ParamCochain& pc) {
    json terms = json::array();
    for (const auto& [k, p] : pc.terms()) {
        json t;
        t["input"] = mono_json(pc.space(), k.input);
        t["output"] = pc.space().name(k.output);
        t["coeff"] = poly_json(p);
        terms.push_back(t);
    }
    return terms;
}

ParamCochain pcochain_from_json(const GradedSpace& space, RingPtr ring,
                                const json& terms) {
    ParamCochain pc(space, ring);
    for (const auto& t : terms) {
        Monomial m = mono_from_json(space, t.at("input"));
        int out = space.index_of(t.at("output").get<std::string>());
        pc.add_term({m, out}, poly_from_json(ring, t.at("coeff")));
    }
    return pc;
}

json space_json(const GradedSpace& s) {
    json even = json::array(), odd = json::array();
    for (int i = 0; i < s.even_dim(); ++i) even.push_back(s.name(i));
    for (int i = s.even_dim(); i < s.dim(); ++i) odd.push_back(s.name(i));
    return json{{"even", even}, {"odd", odd}};
}

GradedSpace space_from_json(const json& j) {
    std::vector<std::string> even, odd;
    for (const auto& n : j.at("even")) even.push_back(n.get<std::string>());
    for (const auto& n : j.at("odd")) odd.push_back(n.get<std::string>());
    return GradedSpace(even, odd);
}

json ring_json(const ParamRing& r) {
    json even = json::array(), odd = json::array();
    for (int i = 0; i < r.even_count(); ++i) even.push_back(r.even_name(i));
    for (int j2 = 0; j2 < r.odd_count(); ++j2) odd.push_back(r.odd_name(j2));
    return json{{"even", even}, {"odd", odd}};
}

RingPtr ring_from_json(const json& j) {
    std::vector<std::string> even, odd;
    for (const auto& n : j.at("even")) even.push_back(n.get<std::string>());
    for (const auto& n : j.at("odd")) odd.push_back(n.get<std::string>());
    return std::make_shared<ParamRing>(even, odd);
}

json header_json(const ArityWindow& window, int truncation) {
    json j;
    j["schema"] = kStructuredSchema;
    j["engine_version"] = kEngineVersion;
    j["window"] = json{{"min", window.lo}, {"max", window.hi}};
    j["truncation_degree"] = truncation;
    return j;
}

json cochain_json(const Cochain& c) {
    json terms = json::array();
    for (const auto& [k, v] : cochain_coords(c)) {
        json t;
        t["input"] = mono_json(c.space(), k.input);
        t["output"] = c.space().name(k.output);
        t["coeff"] = v.str();
        terms.push_back(t);
    }
    return terms;
}

Cochain cochain_from_json(const GradedSpace& space, const json& terms) {
    Cochain c(space);
    for (const auto& t : terms) {
        Monomial m = mono_from_json(space, t.at("input"));
        int out = space.index_of(t.at("output").get<std::string>());
        c.add_value(m, out,
                    Rat(t.at("coeff").get<std::string>()) *
                        even_factorial_norm(space, m));
    }
    return c;
}

}  // namespace

std::string deformation_structured(const Deformation& defm) {
    json j = header_json(defm.window, defm.truncation_degree);
    j["kind"] = "deformation";
    j["space"] = space_json(defm.space);
    j["ring"] = ring_json(*defm.ring);
    j["base"] = cochain_json(defm.base);
    j["terms"] = pcochain_json(defm.current);
    json deltas = json::array();
    for (const DeltaInfo& d : defm.deltas) {
        json dj;
        dj["arity"] = d.arity;
        dj["parity"] = parity_name(d.cochain_parity);
        dj["param"] = d.param_name;
        dj["terms"] = cochain_json(d.rep);
        deltas.push_back(dj);
    }
    j["deltas"] = deltas;
    json rels = json::array();
    for (const ParamPoly& r : defm.relations) rels.push_back(poly_json(r));
    j["relations"] = rels;
    j["order"] = defm.order;
    j["status"] = defm.status == DeformStatus::miniversal ? "miniversal"
                                                          : "truncated";
    return j.dump(2) + "\n";
}

Deformation deformation_from_structured(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind") != "deformation")
        throw Error("structured input is not a deformation");
    GradedSpace space = space_from_json(j.at("space"));
    RingPtr ring = ring_from_json(j.at("ring"));
    ArityWindow window(j.at("window").at("min").get<int>(),
                       j.at("window").at("max").get<int>());
    Deformation defm(space, ring, window,
                     j.at("truncation_degree").get<int>(),
                     cochain_from_json(space, j.at("base")));
    defm.current = pcochain_from_json(space, ring, j.at("terms"));
    for (const auto& dj : j.at("deltas")) {
        DeltaInfo d{cochain_from_json(space, dj.at("terms")),
                    dj.at("arity").get<int>(),
                    dj.at("parity").get<std::string>() == "even"
                        ? Parity::even
                        : Parity::odd,
                    dj.at("param").get<std::string>()};
        defm.deltas.push_back(std::move(d));
    }
    for (const auto& rj : j.at("relations"))
        defm.relations.push_back(poly_from_json(ring, rj));
    defm.order = j.at("order").get<int>();
    defm.status = j.at("status") == "miniversal" ? DeformStatus::miniversal
                                                 : DeformStatus::truncated;
    return defm;
}

std::string param_cochain_structured(const ParamCochain& pc,
                                     const ArityWindow& window,
                                     int truncation_degree) {
    json j = header_json(window, truncation_degree);
    j["kind"] = "param_cochain";
    j["space"] = space_json(pc.space());
    j["ring"] = ring_json(*pc.ring());
    j["terms"] = pcochain_json(pc);
    return j.dump(2) + "\n";
}

ParamCochain param_cochain_from_structured(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind") != "param_cochain")
        throw Error("structured input is not a parameter cochain");
    GradedSpace space = space_from_json(j.at("space"));
    RingPtr ring = ring_from_json(j.at("ring"));
    return pcochain_from_json(space, ring, j.at("terms"));
}

}  // namespace linf
