#include "linf/symw.hpp"

#include <algorithm>
#include <numeric>

namespace linf {

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

Parity Monomial::parity(const GradedSpace& space) const {
    int odd = 0;
    for (int i = space.even_dim(); i < space.dim(); ++i) odd += exps[i];
    return odd % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<int> Monomial::word() const {
    std::vector<int> w;
    for (int i = 0; i < static_cast<int>(exps.size()); ++i)
        for (int r = 0; r < exps[i]; ++r) w.push_back(i);
    return w;
}

Monomial make_monomial(const GradedSpace& space,
                       const std::vector<std::pair<int, int>>& index_exps) {
    Monomial m;
    m.exps.assign(space.dim(), 0);
    for (auto [i, e] : index_exps) {
        if (i < 0 || i >= space.dim())
            throw NameError("basis index out of range in monomial");
        if (e < 0) throw DegreeError("negative exponent");
        m.exps[i] += e;
    }
    for (int i = space.even_dim(); i < space.dim(); ++i)
        if (m.exps[i] > 1)
            throw DegreeError("odd basis vector '" + space.name(i) +
                              "' squared");
    if (m.degree() < 1)
        throw DegreeError("monomials of the reduced symmetric algebra have degree >= 1");
    return m;
}

void add_term(SignedMonomialSum& sum, const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = sum.find(m);
    if (it == sum.end()) {
        sum.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) sum.erase(it);
    }
}

Rat even_factorial_norm(const GradedSpace& space, const Monomial& m) {
    Rat norm = 1;
    for (int i = 0; i < space.even_dim(); ++i) norm *= factorial(m.exps[i]);
    return norm;
}

std::vector<Monomial> enumerate_monomials(const GradedSpace& space,
                                          int degree) {
    if (degree < 1)
        throw DegreeError("reduced symmetric algebra has no degree-" +
                          std::to_string(degree) + " part");
    std::vector<Monomial> out;
    Monomial cur;
    cur.exps.assign(space.dim(), 0);
    // Recurse over basis positions, assigning the remaining degree.
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == space.dim()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int cap = (space.parity(pos) == Parity::odd) ? 1 : remaining;
        for (int e = std::min(cap, remaining); e >= 0; --e) {
            cur.exps[pos] = e;
            self(self, pos + 1, remaining - e);
        }
        cur.exps[pos] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), MonoOrder{});
    return out;
}

std::vector<Unshuffle> unshuffles(int k, int n) {
    if (k < 0 || k > n)
        throw DegreeError("unshuffle type (" + std::to_string(k) + "," +
                          std::to_string(n - k) + ") invalid");
    std::vector<Unshuffle> out;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        Unshuffle u;
        u.left = pick;
        std::vector<bool> in_left(n, false);
        for (int i : pick) in_left[i] = true;
        for (int i = 0; i < n; ++i)
            if (!in_left[i]) u.right.push_back(i);
        out.push_back(std::move(u));
        // next k-combination of {0..n-1}
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

int koszul_sign(const std::vector<Parity>& parities,
                const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    if (n != static_cast<int>(parities.size()))
        throw DegreeError("permutation length does not match word length");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p])
            throw DegreeError("invalid permutation index");
        seen[p] = true;
    }
    int sign = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j] && parities[perm[i]] == Parity::odd &&
                parities[perm[j]] == Parity::odd)
                sign = -sign;
    return sign;
}

int koszul_sign(const std::vector<Parity>& parities, const Unshuffle& u) {
    std::vector<int> perm = u.left;
    perm.insert(perm.end(), u.right.begin(), u.right.end());
    return koszul_sign(parities, perm);
}

std::optional<std::pair<Rat, Monomial>> monomial_product(
    const GradedSpace& space, const Monomial& a, const Monomial& b) {
    Monomial prod;
    prod.exps.assign(space.dim(), 0);
    for (int i = 0; i < space.dim(); ++i) {
        prod.exps[i] = a.exps[i] + b.exps[i];
        if (space.parity(i) == Parity::odd && prod.exps[i] > 1)
            return std::nullopt;
    }
    // Sorting the concatenated word a.b moves each odd letter of b past
    // every later odd letter of a.
    long long inversions = 0;
    for (int i = space.even_dim(); i < space.dim(); ++i)
        for (int j = space.even_dim(); j < i; ++j)
            inversions += static_cast<long long>(a.exps[i]) * b.exps[j];
    Rat sign = (inversions % 2 == 0) ? 1 : -1;
    return std::make_pair(sign, prod);
}

Monomial monomial_from_positions(const GradedSpace& space,
                                 const std::vector<int>& word,
                                 const std::vector<int>& positions) {
    Monomial m;
    m.exps.assign(space.dim(), 0);
    for (int p : positions) m.exps[word[p]] += 1;
    return m;
}

std::vector<std::tuple<Rat, Monomial, Monomial>> coproduct(
    const GradedSpace& space, const Monomial& m) {
    const std::vector<int> w = m.word();
    const int n = static_cast<int>(w.size());
    std::vector<Parity> parities;
    parities.reserve(n);
    for (int i : w) parities.push_back(space.parity(i));

    std::map<std::pair<Monomial, Monomial>, Rat,
             bool (*)(const std::pair<Monomial, Monomial>&,
                      const std::pair<Monomial, Monomial>&)>
        acc([](const std::pair<Monomial, Monomial>& a,
               const std::pair<Monomial, Monomial>& b) {
            MonoOrder lt;
            if (lt(a.first, b.first)) return true;
            if (lt(b.first, a.first)) return false;
            return lt(a.second, b.second);
        });
    for (int k = 1; k <= n - 1; ++k) {
        for (const Unshuffle& u : unshuffles(k, n)) {
            int sign = koszul_sign(parities, u);
            Monomial left = monomial_from_positions(space, w, u.left);
            Monomial right = monomial_from_positions(space, w, u.right);
            acc[{left, right}] += sign;
        }
    }
    std::vector<std::tuple<Rat, Monomial, Monomial>> out;
    for (const auto& [pair, c] : acc)
        if (c != 0) out.emplace_back(c, pair.first, pair.second);
    return out;
}

}  // namespace linf
