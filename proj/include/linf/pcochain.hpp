#pragma once

#include "linf/cochain.hpp"
#include "linf/paramring.hpp"

namespace linf {

/// A sum of monomials of S(W) with parameter-polynomial coefficients,
/// written monomial-then-parameter. Multiplication moves a parameter
/// past a monomial with the Koszul sign.
class ParamMonoSum {
public:
    ParamMonoSum(GradedSpace space, RingPtr ring)
        : space_(std::move(space)), ring_(std::move(ring)) {}

    const GradedSpace& space() const { return space_; }
    const RingPtr& ring() const { return ring_; }
    const std::map<Monomial, ParamPoly, MonoOrder>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    void add(const Monomial& m, const ParamPoly& p);
    ParamMonoSum& operator+=(const ParamMonoSum& o);

    /// Append a parameter factor on the right of every coefficient.
    ParamMonoSum rmul(const ParamPoly& q) const;

    ParamMonoSum mul(const ParamMonoSum& o) const;

    ParamMonoSum truncated(int degree) const;

    bool operator==(const ParamMonoSum& o) const {
        return space_ == o.space_ && *ring_ == *o.ring_ && terms_ == o.terms_;
    }

private:
    GradedSpace space_;
    RingPtr ring_;
    std::map<Monomial, ParamPoly, MonoOrder> terms_;
};

/// An element of L (x) A: cochain terms with parameter coefficients,
/// written cochain-then-parameter and stored on the normalized basis
/// cochains. Total parity (cochain plus parameter) is homogeneous.
class ParamCochain {
public:
    ParamCochain(GradedSpace space, RingPtr ring)
        : space_(std::move(space)), ring_(std::move(ring)) {}

    static ParamCochain from_cochain(const Cochain& c, RingPtr ring);

    const GradedSpace& space() const { return space_; }
    const RingPtr& ring() const { return ring_; }
    const std::map<CochainKey, ParamPoly, KeyOrder>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    Parity total_parity() const { return total_parity_.value_or(Parity::even); }

    /// Coefficient polynomial of a normalized basis cochain.
    ParamPoly coefficient(const CochainKey& k) const;

    void add_term(const CochainKey& k, const ParamPoly& p);
    void add_cochain(const Cochain& c, const ParamPoly& p);

    ParamCochain& operator+=(const ParamCochain& o);
    ParamCochain& operator-=(const ParamCochain& o);
    friend ParamCochain operator+(ParamCochain a, const ParamCochain& b) {
        return a += b;
    }
    friend ParamCochain operator-(ParamCochain a, const ParamCochain& b) {
        return a -= b;
    }

    ParamCochain truncated(int degree) const;

    /// Send every parameter to zero.
    Cochain augmented() const;

    /// Evaluate on a plain monomial. The result carries the Koszul sign
    /// (-1)^{|p||m|} for each term's parameter crossing the input.
    std::map<int, ParamPoly> eval(const Monomial& m) const;

    /// Coderivation-lift evaluation on a monomial, same sign rule.
    ParamMonoSum tilde_eval(const Monomial& m) const;
    ParamMonoSum tilde_eval(const ParamMonoSum& s) const;

    bool operator==(const ParamCochain& o) const {
        return space_ == o.space_ && *ring_ == *o.ring_ && terms_ == o.terms_;
    }

private:
    GradedSpace space_;
    RingPtr ring_;
    std::map<CochainKey, ParamPoly, KeyOrder> terms_;
    std::optional<Parity> total_parity_;
};

/// Bilinear extension of the cochain bracket:
/// [x p, y q] = (-1)^{|p||y|} [x, y] (p q).
ParamCochain param_bracket(const ParamCochain& a, const ParamCochain& b,
                           const ArityWindow& window);

/// Reconstruct a ParamCochain from an evaluation table m -> W (x) A,
/// inverting the Koszul crossing sign.
ParamCochain pcochain_from_eval(
    const GradedSpace& space, RingPtr ring,
    const std::map<Monomial, std::map<int, ParamPoly>, MonoOrder>& table);

}  // namespace linf
