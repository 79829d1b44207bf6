#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "linf/gspace.hpp"

namespace linf {

/// A basis word of the reduced symmetric algebra S(W), stored as an
/// exponent vector over the canonical basis order. Odd exponents are 0
/// or 1 and the total degree is at least 1.
struct Monomial {
    std::vector<int> exps;

    int degree() const;
    Parity parity(const GradedSpace& space) const;

    /// Canonical word: basis indices in global order, with multiplicity.
    std::vector<int> word() const;

    bool operator==(const Monomial& o) const { return exps == o.exps; }
    bool operator<(const Monomial& o) const { return exps < o.exps; }
};

Monomial make_monomial(const GradedSpace& space,
                       const std::vector<std::pair<int, int>>& index_exps);

/// Graded-lexicographic order: lower degree first, then exponent vectors
/// compared lexicographically with the larger leading exponent first
/// (so e^k precedes e^{k-1}f).
struct MonoOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps > b.exps;
    }
};

using SignedMonomialSum = std::map<Monomial, Rat, MonoOrder>;

void add_term(SignedMonomialSum& sum, const Monomial& m, const Rat& c);

/// Product of the factorials of the even exponents; the normalization
/// carried by basis cochains.
Rat even_factorial_norm(const GradedSpace& space, const Monomial& m);

/// All monomials of the given degree, in canonical order. Degree 0 is
/// rejected: the symmetric algebra here is reduced.
std::vector<Monomial> enumerate_monomials(const GradedSpace& space, int degree);

/// A permutation increasing on its first k and last n-k positions,
/// stored as the two sorted index blocks (0-based).
struct Unshuffle {
    std::vector<int> left;
    std::vector<int> right;
};

std::vector<Unshuffle> unshuffles(int k, int n);

/// Sign from reordering a word of graded letters: -1 for every inverted
/// odd-odd pair, so that w_{sigma(1)}...w_{sigma(n)} = sign * w_1...w_n.
/// `perm` lists sigma(1..n) as 0-based positions into `parities`.
int koszul_sign(const std::vector<Parity>& parities,
                const std::vector<int>& perm);

int koszul_sign(const std::vector<Parity>& parities, const Unshuffle& u);

/// Canonical-form product with the Koszul sign incurred by sorting;
/// empty when an odd exponent would exceed 1.
std::optional<std::pair<Rat, Monomial>> monomial_product(
    const GradedSpace& space, const Monomial& a, const Monomial& b);

/// The reduced coproduct: all (k, n-k) splittings with Koszul signs,
/// coefficients merged per (left, right) pair. Degree-1 monomials have
/// an empty coproduct.
std::vector<std::tuple<Rat, Monomial, Monomial>> coproduct(
    const GradedSpace& space, const Monomial& m);

Monomial monomial_from_positions(const GradedSpace& space,
                                 const std::vector<int>& word,
                                 const std::vector<int>& positions);

}  // namespace linf
