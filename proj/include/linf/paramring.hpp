#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "linf/gspace.hpp"

namespace linf {

/// The graded-commutative parameter ring K[[t's]] (x) Lambda[theta's],
/// handled as truncated polynomials. Even generators commute with
/// everything; odd generators anticommute and square to zero.
class ParamRing {
public:
    ParamRing(std::vector<std::string> even_names,
              std::vector<std::string> odd_names);

    int even_count() const { return static_cast<int>(even_names_.size()); }
    int odd_count() const { return static_cast<int>(odd_names_.size()); }

    const std::string& even_name(int i) const { return even_names_.at(i); }
    const std::string& odd_name(int j) const { return odd_names_.at(j); }

    /// Generator lookup by name; returns (is_odd, index) or throws.
    std::pair<bool, int> generator(const std::string& name) const;
    bool has_generator(const std::string& name) const;

    bool operator==(const ParamRing& o) const {
        return even_names_ == o.even_names_ && odd_names_ == o.odd_names_;
    }

private:
    std::vector<std::string> even_names_;
    std::vector<std::string> odd_names_;
};

using RingPtr = std::shared_ptr<const ParamRing>;

/// A monomial in the parameters: exponents for the even generators and a
/// subset of the odd generators, kept in ring order. Reordering signs are
/// absorbed into coefficients.
struct ParamMonomial {
    std::vector<int> even_exps;
    std::vector<char> odd_present;

    static ParamMonomial one(const ParamRing& ring);

    int degree() const;
    Parity parity() const;
    bool is_one() const { return degree() == 0; }

    bool operator==(const ParamMonomial& o) const {
        return even_exps == o.even_exps && odd_present == o.odd_present;
    }
};

struct ParamMonoOrder {
    bool operator()(const ParamMonomial& a, const ParamMonomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.odd_present != b.odd_present) return a.odd_present > b.odd_present;
        return a.even_exps > b.even_exps;
    }
};

/// Element of the parameter ring over exact rationals.
class ParamPoly {
public:
    explicit ParamPoly(RingPtr ring) : ring_(std::move(ring)) {}
    static ParamPoly constant(RingPtr ring, const Rat& c);
    static ParamPoly even_gen(RingPtr ring, int i);
    static ParamPoly odd_gen(RingPtr ring, int j);
    static ParamPoly gen(RingPtr ring, const std::string& name);

    const RingPtr& ring() const { return ring_; }
    const std::map<ParamMonomial, Rat, ParamMonoOrder>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;
    int max_degree() const;
    /// Homogeneous parity if every monomial agrees; throws otherwise.
    Parity parity() const;
    bool parity_homogeneous() const;

    void add_term(const ParamMonomial& m, const Rat& c);

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rat& c);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const Rat& c, ParamPoly a) { return a *= c; }

    bool operator==(const ParamPoly& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }

private:
    RingPtr ring_;
    std::map<ParamMonomial, Rat, ParamMonoOrder> terms_;
};

/// Graded-commutative product; theta * theta = 0 for a repeated odd
/// generator.
ParamPoly poly_mul(const ParamPoly& a, const ParamPoly& b);

/// Drop all monomials of total degree above `degree`.
ParamPoly truncate(const ParamPoly& p, int degree);

/// Constant term: the augmentation sending every generator to 0.
Rat augment(const ParamPoly& p);

/// Multiplicative inverse of a unit (nonzero constant term), as a
/// truncated series.
ParamPoly invert_unit(const ParamPoly& p, int truncation_degree);

/// Negate the coefficients of the odd-parity monomials; the Koszul sign
/// a parameter picks up when crossing an odd element.
ParamPoly koszul_flip(const ParamPoly& p, Parity crossing);

struct RelationIdeal {
    RingPtr ring;
    std::vector<ParamPoly> generators;  ///< nonzero, lying in m^2
    int truncation_degree = 1;

    RelationIdeal(RingPtr r, std::vector<ParamPoly> gens, int trunc);
};

/// Canonical representative of p modulo the degree-truncated span of
/// {g * mu : g a generator, mu a parameter monomial}; zero iff p lies in
/// the ideal modulo m^{truncation_degree + 1}.
ParamPoly reduce_mod(const ParamPoly& p, const RelationIdeal& ideal);

bool ideal_equal(const RelationIdeal& a, const RelationIdeal& b);

/// All parameter monomials of total degree <= bound, in canonical order.
std::vector<ParamMonomial> enumerate_param_monomials(const ParamRing& ring,
                                                     int bound);

}  // namespace linf
