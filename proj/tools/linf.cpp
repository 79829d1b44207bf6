// Command-line frontend: parse a job configuration, run the requested
// computation and render the result.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "linf/config.hpp"
#include "linf/render.hpp"

using namespace linf;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitTruncated = 4;

struct Options {
    std::string config_path;
    std::string format;
    std::string window;
    int order = -1;
    std::string out_path;
    int workers = 1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Write the result in one shot; with --out via a temporary plus rename.
void emit(const Options& opt, const std::string& body) {
    if (opt.out_path.empty()) {
        std::cout << body;
        return;
    }
    std::string tmp = opt.out_path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cannot write '" + tmp + "'");
        out << body;
    }
    if (std::rename(tmp.c_str(), opt.out_path.c_str()) != 0)
        throw Error("cannot rename into '" + opt.out_path + "'");
}

ArityWindow parse_window_flag(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw Error("--window expects A:B");
    return ArityWindow(std::stoi(s.substr(0, colon)),
                       std::stoi(s.substr(colon + 1)));
}

Format pick_format(const Options& opt, const JobConfig& cfg) {
    if (!opt.format.empty()) return format_from_string(opt.format);
    if (cfg.format) return *cfg.format;
    return Format::plain;
}

ArityWindow pick_window(const Options& opt, const JobConfig& cfg,
                        ArityWindow fallback) {
    if (!opt.window.empty()) return parse_window_flag(opt.window);
    if (cfg.window) return *cfg.window;
    return fallback;
}

Cochain plain_differential(const JobConfig& cfg) {
    for (const auto& [k, p] : cfg.differential.terms())
        for (const auto& [mu, c] : p.terms())
            if (!mu.is_one())
                throw Error(
                    "this command needs a parameter-free codifferential");
    return cfg.differential.augmented();
}

json header(const ArityWindow& window, int truncation) {
    json j;
    j["schema"] = kStructuredSchema;
    j["engine_version"] = kEngineVersion;
    j["window"] = json{{"min", window.lo}, {"max", window.hi}};
    j["truncation_degree"] = truncation;
    return j;
}

int cmd_bracket_table(const Options& opt, const JobConfig& cfg) {
    Format fmt = pick_format(opt, cfg);
    ArityWindow window = pick_window(opt, cfg, ArityWindow(1, 6));
    const GradedSpace& space = cfg.space;

    std::vector<CochainKey> keys;
    for (int n = window.lo; n <= window.hi; ++n)
        for (const CochainKey& k : cochain_basis_keys(space, n))
            keys.push_back(k);

    struct Entry {
        CochainKey a, b;
        Cochain value;
    };
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < static_cast<int>(keys.size()); ++i)
        for (int j = i; j < static_cast<int>(keys.size()); ++j)
            pairs.emplace_back(i, j);

    std::vector<Entry> entries(pairs.size(),
                               Entry{CochainKey{}, CochainKey{}, Cochain(space)});
    auto work = [&](int from, int to) {
        for (int p = from; p < to; ++p) {
            auto [i, j] = pairs[p];
            Cochain a = Cochain::basis(space, keys[i].input, keys[i].output);
            Cochain b = Cochain::basis(space, keys[j].input, keys[j].output);
            entries[p] = Entry{keys[i], keys[j], bracket(a, b, window)};
        }
    };
    int workers = std::max(1, opt.workers);
    if (workers == 1) {
        work(0, static_cast<int>(pairs.size()));
    } else {
        std::vector<std::future<void>> futs;
        int chunk =
            (static_cast<int>(pairs.size()) + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            int from = w * chunk;
            int to = std::min<int>(static_cast<int>(pairs.size()),
                                   from + chunk);
            if (from >= to) break;
            futs.push_back(
                std::async(std::launch::async, work, from, to));
        }
        for (auto& f : futs) f.get();
    }

    if (fmt == Format::structured) {
        json j = header(window, 0);
        j["kind"] = "bracket_table";
        j["space"] = json{{"even", json::array()}, {"odd", json::array()}};
        for (int i = 0; i < space.even_dim(); ++i)
            j["space"]["even"].push_back(space.name(i));
        for (int i = space.even_dim(); i < space.dim(); ++i)
            j["space"]["odd"].push_back(space.name(i));
        json list = json::array();
        for (const Entry& e : entries) {
            json row;
            row["a"] = key_name(space, e.a, Format::plain);
            row["b"] = key_name(space, e.b, Format::plain);
            json val = json::array();
            for (const auto& [k, v] : cochain_coords(e.value)) {
                json term;
                term["coeff"] = v.str();
                term["cochain"] = key_name(space, k, Format::plain);
                val.push_back(term);
            }
            row["bracket"] = val;
            list.push_back(row);
        }
        j["entries"] = list;
        emit(opt, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream out;
    for (const Entry& e : entries) {
        std::string lhs = "[" + key_name(space, e.a, fmt) + ", " +
                          key_name(space, e.b, fmt) + "]";
        out << lhs << " = " << cochain_string(e.value, fmt) << "\n";
    }
    emit(opt, out.str());
    return kExitOk;
}

int cmd_cohomology(const Options& opt, const JobConfig& cfg) {
    Format fmt = pick_format(opt, cfg);
    ArityWindow window = pick_window(opt, cfg, ArityWindow(1, 6));
    Cochain d = plain_differential(cfg);
    CohomologyData H = cohomology(d, window);

    if (fmt == Format::structured) {
        json j = header(window, cfg.effective_truncation());
        j["kind"] = "cohomology";
        json arities = json::array();
        for (int n = window.lo; n <= window.hi; ++n) {
            json a;
            a["arity"] = n;
            a["exact"] = H.arity_exact(n);
            a["cocycles"] = H.cocycle_dim_at(n);
            a["coboundaries"] = H.coboundary_dim_at(n);
            a["homology"] = H.homology_dim_at(n);
            arities.push_back(a);
        }
        j["arities"] = arities;
        json deltas = json::array();
        for (int i = 0; i < H.homology_dim(); ++i)
            deltas.push_back(
                cochain_string(H.delta_cochain(i), Format::plain));
        j["delta_basis"] = deltas;
        j["homology_dim"] = H.homology_dim();
        emit(opt, j.dump(2) + "\n");
        return kExitOk;
    }

    std::ostringstream out;
    out << "differential: " << cochain_string(d, fmt) << "\n";
    for (int n = window.lo; n <= window.hi; ++n) {
        out << "arity " << n << ": dim Z = " << H.cocycle_dim_at(n)
            << ", dim B = " << H.coboundary_dim_at(n)
            << ", dim H = " << H.homology_dim_at(n);
        if (!H.arity_exact(n)) out << " (beyond the exact window)";
        out << "\n";
    }
    out << "homology dimension within the window: " << H.homology_dim()
        << "\n";
    if (H.homology_dim() > 0) {
        out << "delta basis:\n";
        for (int i = 0; i < H.homology_dim(); ++i)
            out << "  " << cochain_string(H.delta_cochain(i), fmt) << "\n";
    }
    if (!H.coboundaries().empty()) {
        out << "coboundary basis (with preimages):\n";
        for (int i = 0; i < static_cast<int>(H.coboundaries().size()); ++i)
            out << "  " << cochain_string(H.coboundary_cochain(i), fmt)
                << "  = D(" << key_name(cfg.space, H.coboundary_preimages()[i], fmt)
                << ")\n";
    }
    emit(opt, out.str());
    return kExitOk;
}

int cmd_deform(const Options& opt, const JobConfig& cfg) {
    Format fmt = pick_format(opt, cfg);
    int max_order = opt.order > 0 ? opt.order : cfg.max_order;
    ArityWindow window =
        pick_window(opt, cfg, ArityWindow(1, max_order + 3));
    Cochain d = plain_differential(cfg);
    Deformation defm =
        miniversal(d, max_order, window, cfg.effective_truncation());

    std::string body = fmt == Format::structured
                           ? deformation_structured(defm)
                           : deformation_string(defm, fmt);
    emit(opt, body);
    return defm.status == DeformStatus::miniversal ? kExitOk
                                                   : kExitTruncated;
}

int cmd_transport(const Options& opt, const JobConfig& cfg) {
    Format fmt = pick_format(opt, cfg);
    ArityWindow window = pick_window(opt, cfg, ArityWindow(1, 6));
    if (!cfg.morphism)
        throw Error("transport needs a 'morphism:' block in the config");
    int trunc = cfg.effective_truncation();

    ParamCochain d = cfg.differential;
    if (!cfg.ring_map.empty()) {
        std::map<std::string, ParamPoly> images = cfg.ring_map;
        // unmapped generators stay fixed
        for (int i = 0; i < cfg.ring->even_count(); ++i)
            if (!images.count(cfg.ring->even_name(i)))
                images.emplace(cfg.ring->even_name(i),
                               ParamPoly::gen(cfg.ring, cfg.ring->even_name(i)));
        for (int j = 0; j < cfg.ring->odd_count(); ++j)
            if (!images.count(cfg.ring->odd_name(j)))
                images.emplace(cfg.ring->odd_name(j),
                               ParamPoly::gen(cfg.ring, cfg.ring->odd_name(j)));
        RingMorphism lam(cfg.ring, cfg.ring, images, trunc);
        d = lam.apply(d);
    }
    ParamCochain result = transport(d, *cfg.morphism, window, trunc);

    if (fmt == Format::structured) {
        emit(opt, param_cochain_structured(result, window, trunc));
        return kExitOk;
    }
    std::ostringstream out;
    out << "g*(d) = " << param_cochain_string(result, fmt) << "\n";
    emit(opt, out.str());
    return kExitOk;
}

int cmd_check(const Options& opt, const JobConfig& cfg) {
    Format fmt = pick_format(opt, cfg);
    int default_hi =
        std::max(1, 2 * std::max(1, [&] {
                     int mx = 1;
                     for (const auto& [k, p] : cfg.differential.terms())
                         mx = std::max(mx, k.input.degree());
                     return mx;
                 }()) - 1);
    ArityWindow window = pick_window(opt, cfg, ArityWindow(1, default_hi));

    ParamCochain sq =
        param_bracket(cfg.differential, cfg.differential, window);
    bool parity_ok = cfg.differential.is_zero() ||
                     cfg.differential.total_parity() == Parity::odd;
    bool ok = parity_ok && sq.is_zero();

    if (fmt == Format::structured) {
        json j = header(window, cfg.effective_truncation());
        j["kind"] = "check";
        j["codifferential"] = ok;
        j["parity_ok"] = parity_ok;
        j["certificate"] = json::array();
        for (const auto& [k, p] : sq.terms()) {
            json t;
            t["cochain"] = key_name(cfg.space, k, Format::plain);
            t["coeff"] = poly_string(p, Format::plain);
            j["certificate"].push_back(t);
        }
        emit(opt, j.dump(2) + "\n");
        return ok ? kExitOk : kExitPrecondition;
    }

    std::ostringstream out;
    if (ok) {
        out << "codifferential: yes ([d, d] = 0 within window "
            << window.lo << ".." << window.hi << ")\n";
    } else if (!parity_ok) {
        out << "codifferential: no (the differential is not odd)\n";
    } else {
        out << "codifferential: no; nonzero terms of [d, d]:\n";
        for (const auto& [k, p] : sq.terms())
            out << "  " << key_name(cfg.space, k, fmt) << " * ("
                << poly_string(p, fmt) << ")\n";
    }
    emit(opt, out.str());
    return ok ? kExitOk : kExitPrecondition;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation computations for small graded structures"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "configuration file")
            ->required();
        sub->add_option("--format", opt.format,
                        "plain, latex or structured");
        sub->add_option("--window", opt.window, "arity window A:B");
        sub->add_option("--order", opt.order, "maximum deformation order");
        sub->add_option("--out", opt.out_path, "output file (atomic write)");
        sub->add_option("--workers", opt.workers,
                        "worker threads for the bracket table");
    };
    CLI::App* btab = app.add_subcommand("bracket-table",
                                        "pairwise brackets of basis cochains");
    CLI::App* coh = app.add_subcommand("cohomology",
                                       "cocycles, coboundaries, delta basis");
    CLI::App* def = app.add_subcommand("deform",
                                       "construct the miniversal deformation");
    CLI::App* tra = app.add_subcommand("transport",
                                       "conjugate by a coalgebra morphism");
    CLI::App* chk = app.add_subcommand("check",
                                       "verify the codifferential condition");
    for (CLI::App* sub : {btab, coh, def, tra, chk}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        JobConfig cfg = parse_config(slurp(opt.config_path));
        if (app.got_subcommand(btab)) return cmd_bracket_table(opt, cfg);
        if (app.got_subcommand(coh)) return cmd_cohomology(opt, cfg);
        if (app.got_subcommand(def)) return cmd_deform(opt, cfg);
        if (app.got_subcommand(tra)) return cmd_transport(opt, cfg);
        if (app.got_subcommand(chk)) return cmd_check(opt, cfg);
        return kExitInternal;
    } catch (const ParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitParse;
    } catch (const WindowError& e) {
        std::cerr << "window error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
