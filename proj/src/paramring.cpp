#include "linf/paramring.hpp"

#include "linf/exactla.hpp"

#include <algorithm>
#include <set>

namespace linf {

ParamRing::ParamRing(std::vector<std::string> even_names,
                     std::vector<std::string> odd_names)
    : even_names_(std::move(even_names)), odd_names_(std::move(odd_names)) {
    std::set<std::string> seen;
    for (const auto& lst : {even_names_, odd_names_})
        for (const auto& n : lst) {
            if (n.empty()) throw NameError("empty parameter name");
            if (!seen.insert(n).second)
                throw NameError("duplicate parameter name '" + n + "'");
        }
}

std::pair<bool, int> ParamRing::generator(const std::string& name) const {
    for (int i = 0; i < even_count(); ++i)
        if (even_names_[i] == name) return {false, i};
    for (int j = 0; j < odd_count(); ++j)
        if (odd_names_[j] == name) return {true, j};
    throw NameError("unknown parameter '" + name + "'");
}

bool ParamRing::has_generator(const std::string& name) const {
    for (const auto& n : even_names_)
        if (n == name) return true;
    for (const auto& n : odd_names_)
        if (n == name) return true;
    return false;
}

ParamMonomial ParamMonomial::one(const ParamRing& ring) {
    ParamMonomial m;
    m.even_exps.assign(ring.even_count(), 0);
    m.odd_present.assign(ring.odd_count(), 0);
    return m;
}

int ParamMonomial::degree() const {
    int d = 0;
    for (int e : even_exps) d += e;
    for (char b : odd_present) d += b;
    return d;
}

Parity ParamMonomial::parity() const {
    int odd = 0;
    for (char b : odd_present) odd += b;
    return odd % 2 == 0 ? Parity::even : Parity::odd;
}

ParamPoly ParamPoly::constant(RingPtr ring, const Rat& c) {
    ParamPoly p(ring);
    p.add_term(ParamMonomial::one(*ring), c);
    return p;
}

ParamPoly ParamPoly::even_gen(RingPtr ring, int i) {
    ParamPoly p(ring);
    ParamMonomial m = ParamMonomial::one(*ring);
    m.even_exps.at(i) = 1;
    p.add_term(m, 1);
    return p;
}

ParamPoly ParamPoly::odd_gen(RingPtr ring, int j) {
    ParamPoly p(ring);
    ParamMonomial m = ParamMonomial::one(*ring);
    m.odd_present.at(j) = 1;
    p.add_term(m, 1);
    return p;
}

ParamPoly ParamPoly::gen(RingPtr ring, const std::string& name) {
    auto [is_odd, idx] = ring->generator(name);
    return is_odd ? odd_gen(ring, idx) : even_gen(ring, idx);
}

int ParamPoly::min_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        int md = m.degree();
        if (d < 0 || md < d) d = md;
    }
    return d;
}

int ParamPoly::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Parity ParamPoly::parity() const {
    if (terms_.empty()) return Parity::even;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p)
            throw ParityError("parameter polynomial is not parity homogeneous");
    return p;
}

bool ParamPoly::parity_homogeneous() const {
    if (terms_.empty()) return true;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return false;
    return true;
}

void ParamPoly::add_term(const ParamMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (!(*ring_ == *o.ring_)) throw MismatchError("parameter rings differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (!(*ring_ == *o.ring_)) throw MismatchError("parameter rings differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

namespace {

/// Merge two odd-generator subsets; zero on a repeat. The sign counts
/// the transpositions needed to interleave the sorted lists.
bool merge_odd(const std::vector<char>& a, const std::vector<char>& b,
               std::vector<char>& out, int& sign) {
    const int n = static_cast<int>(a.size());
    out.assign(n, 0);
    sign = 1;
    int a_after = 0;
    for (int i = 0; i < n; ++i) a_after += a[i];
    // Walk generators in ring order; a b-generator at position i crosses
    // every a-generator with index > i.
    for (int i = 0; i < n; ++i) {
        if (a[i]) --a_after;
        if (a[i] && b[i]) return false;
        if (b[i] && (a_after % 2)) sign = -sign;
        out[i] = a[i] | b[i];
    }
    return true;
}

}  // namespace

ParamPoly poly_mul(const ParamPoly& a, const ParamPoly& b) {
    if (!(*a.ring() == *b.ring()))
        throw MismatchError("parameter rings differ");
    ParamPoly out(a.ring());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            ParamMonomial m;
            int sign = 1;
            if (!merge_odd(ma.odd_present, mb.odd_present, m.odd_present, sign))
                continue;
            m.even_exps.resize(ma.even_exps.size());
            for (size_t i = 0; i < m.even_exps.size(); ++i)
                m.even_exps[i] = ma.even_exps[i] + mb.even_exps[i];
            out.add_term(m, sign * ca * cb);
        }
    }
    return out;
}

ParamPoly truncate(const ParamPoly& p, int degree) {
    ParamPoly out(p.ring());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= degree) out.add_term(m, c);
    return out;
}

Rat augment(const ParamPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (m.is_one()) return c;
    return 0;
}

ParamPoly invert_unit(const ParamPoly& p, int truncation_degree) {
    Rat c0 = augment(p);
    if (c0 == 0) throw DegreeError("cannot invert a non-unit (zero constant term)");
    // p = c0 (1 + q), inverse = c0^{-1} sum (-q)^k
    ParamPoly q = p;
    q *= Rat(1) / c0;
    q.add_term(ParamMonomial::one(*p.ring()), -1);
    q = truncate(q, truncation_degree);
    ParamPoly result = ParamPoly::constant(p.ring(), 1);
    ParamPoly power = ParamPoly::constant(p.ring(), 1);
    for (int k = 1; k <= truncation_degree; ++k) {
        power = truncate(poly_mul(power, q), truncation_degree);
        if (power.is_zero()) break;
        if (k % 2 == 0)
            result += power;
        else
            result -= power;
    }
    result *= Rat(1) / c0;
    return result;
}

ParamPoly koszul_flip(const ParamPoly& p, Parity crossing) {
    if (crossing == Parity::even) return p;
    ParamPoly out(p.ring());
    for (const auto& [m, c] : p.terms())
        out.add_term(m, m.parity() == Parity::odd ? -c : c);
    return out;
}

RelationIdeal::RelationIdeal(RingPtr r, std::vector<ParamPoly> gens, int trunc)
    : ring(std::move(r)), truncation_degree(trunc) {
    if (trunc < 1) throw DegreeError("truncation degree must be positive");
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!(*g.ring() == *ring)) throw MismatchError("generator ring differs");
        if (g.min_degree() < 2)
            throw DegreeError("relation generators lie in the square of the maximal ideal");
        generators.push_back(std::move(g));
    }
}

std::vector<ParamMonomial> enumerate_param_monomials(const ParamRing& ring,
                                                     int bound) {
    std::vector<ParamMonomial> out;
    ParamMonomial cur = ParamMonomial::one(ring);
    auto rec_even = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == ring.even_count()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur.even_exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur.even_exps[pos] = 0;
    };
    auto rec_odd = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == ring.odd_count()) {
            rec_even(rec_even, 0, remaining);
            return;
        }
        cur.odd_present[pos] = 0;
        self(self, pos + 1, remaining);
        if (remaining > 0) {
            cur.odd_present[pos] = 1;
            self(self, pos + 1, remaining - 1);
            cur.odd_present[pos] = 0;
        }
    };
    rec_odd(rec_odd, 0, bound);
    std::sort(out.begin(), out.end(), ParamMonoOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

/// Row space of the truncated ideal span, as an rref'd coordinate matrix
/// over the monomial basis of degree <= truncation_degree.
struct SpanBasis {
    std::vector<ParamMonomial> monos;
    std::map<ParamMonomial, int, ParamMonoOrder> index;
    RatMatrix reduced;
    std::vector<int> pivots;

    SpanBasis(const RelationIdeal& ideal)
        : monos(enumerate_param_monomials(*ideal.ring, ideal.truncation_degree)),
          reduced(0, 0) {
        for (int i = 0; i < static_cast<int>(monos.size()); ++i)
            index.emplace(monos[i], i);
        std::vector<ParamPoly> products;
        for (const ParamPoly& g : ideal.generators) {
            int room = ideal.truncation_degree - g.min_degree();
            for (const ParamMonomial& mu :
                 enumerate_param_monomials(*ideal.ring, room)) {
                ParamPoly m(ideal.ring);
                m.add_term(mu, 1);
                ParamPoly prod =
                    truncate(poly_mul(g, m), ideal.truncation_degree);
                if (!prod.is_zero()) products.push_back(std::move(prod));
            }
        }
        RatMatrix rows(static_cast<int>(products.size()),
                       static_cast<int>(monos.size()));
        for (int r = 0; r < static_cast<int>(products.size()); ++r)
            for (const auto& [m, c] : products[r].terms())
                rows.set(r, index.at(m), c);
        RrefResult rr = rref(rows);
        reduced = rr.matrix;
        pivots = rr.pivot_cols;
    }
};

}  // namespace

ParamPoly reduce_mod(const ParamPoly& p, const RelationIdeal& ideal) {
    if (!(*p.ring() == *ideal.ring))
        throw MismatchError("polynomial ring differs from ideal ring");
    if (p.max_degree() > ideal.truncation_degree)
        throw DegreeError(
            "degree exceeds the ideal truncation; raise truncation_degree");
    SpanBasis span(ideal);
    std::vector<Rat> v(span.monos.size(), 0);
    for (const auto& [m, c] : p.terms()) v[span.index.at(m)] = c;
    for (int i = 0; i < static_cast<int>(span.pivots.size()); ++i) {
        const Rat& coeff = v[span.pivots[i]];
        if (coeff == 0) continue;
        Rat f = coeff;  // pivot entries are 1 after rref
        for (const auto& [c, val] : span.reduced.row(i)) v[c] -= f * val;
    }
    ParamPoly out(p.ring());
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (v[i] != 0) out.add_term(span.monos[i], v[i]);
    return out;
}

bool ideal_equal(const RelationIdeal& a, const RelationIdeal& b) {
    if (!(*a.ring == *b.ring)) throw MismatchError("ideal rings differ");
    if (a.truncation_degree != b.truncation_degree)
        throw MismatchError("ideal truncation degrees differ");
    for (const ParamPoly& g : a.generators)
        if (!reduce_mod(g, b).is_zero()) return false;
    for (const ParamPoly& g : b.generators)
        if (!reduce_mod(g, a).is_zero()) return false;
    return true;
}

}  // namespace linf
