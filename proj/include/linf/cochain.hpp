#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linf/symw.hpp"

namespace linf {

/// Truncation window on arities. L = Hom(S(W), W) is an infinite direct
/// product whenever W has an even part, so every bracket and cohomology
/// computation is carried out inside a window.
struct ArityWindow {
    int lo = 1;
    int hi = 1;

    ArityWindow() = default;
    ArityWindow(int l, int h) : lo(l), hi(h) {
        if (l < 1 || h < l) throw WindowError("invalid arity window");
    }
    bool contains(int n) const { return n >= lo && n <= hi; }
};

/// An element of L = Hom(S(W), W): an exact-rational sparse map from
/// monomials to vectors of W, homogeneous in parity. Stored values are
/// the actual function values (basis-cochain normalizations included).
class Cochain {
public:
    explicit Cochain(GradedSpace space) : space_(std::move(space)) {}

    /// The cochain sending `input` to norm * `output` where norm is the
    /// product of the factorials of the even exponents of `input`.
    static Cochain basis(const GradedSpace& space, const Monomial& input,
                         int output_index);
    static Cochain basis(const GradedSpace& space, const Monomial& input,
                         const std::string& output_name);

    const GradedSpace& space() const { return space_; }

    void add_value(const Monomial& m, int target, const Rat& c);
    const std::map<int, Rat>* value(const Monomial& m) const;

    bool is_zero() const { return terms_.empty(); }
    /// Zero cochains carry the conventional parity "even" and are accepted
    /// wherever either parity is required.
    Parity parity() const { return parity_.value_or(Parity::even); }
    bool has_definite_parity() const { return parity_.has_value(); }

    std::vector<int> arities() const;
    int max_arity() const;

    const std::map<Monomial, std::map<int, Rat>, MonoOrder>& terms() const {
        return terms_;
    }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Rat& c);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rat& c, Cochain a) { return a *= c; }

    bool operator==(const Cochain& o) const {
        return space_ == o.space_ && terms_ == o.terms_;
    }

private:
    GradedSpace space_;
    std::map<Monomial, std::map<int, Rat>, MonoOrder> terms_;
    std::optional<Parity> parity_;
};

/// Identifies a normalized basis cochain: input monomial and output
/// basis index. Ordered by (arity, monomial, output).
struct CochainKey {
    Monomial input;
    int output = 0;

    bool operator==(const CochainKey& o) const {
        return input == o.input && output == o.output;
    }
};

struct KeyOrder {
    bool operator()(const CochainKey& a, const CochainKey& b) const {
        MonoOrder lt;
        if (lt(a.input, b.input)) return true;
        if (lt(b.input, a.input)) return false;
        return a.output < b.output;
    }
};

Parity key_parity(const GradedSpace& space, const CochainKey& k);

/// Canonical basis of L_n, ordered by (monomial, output).
std::vector<CochainKey> cochain_basis_keys(const GradedSpace& space, int arity);

/// Coordinates with respect to the normalized basis cochains.
std::map<CochainKey, Rat, KeyOrder> cochain_coords(const Cochain& c);
Cochain cochain_from_coords(const GradedSpace& space,
                            const std::map<CochainKey, Rat, KeyOrder>& coords);

/// The coderivation associated to phi, evaluated on one monomial:
/// sum over unshuffles of Koszul sign times phi(first block) * rest.
SignedMonomialSum tilde_apply(const Cochain& phi, const Monomial& m);

/// Apply a cochain to a signed sum of monomials, landing in W.
std::map<int, Rat> apply_to_sum(const Cochain& phi,
                                const SignedMonomialSum& sum);

/// The bracket [a, b] = a o tilde(b) - (-1)^{|a||b|} b o tilde(a),
/// restricted to output arities inside the window.
Cochain bracket(const Cochain& a, const Cochain& b, const ArityWindow& window);

/// D(phi) = [d, phi].
Cochain differential(const Cochain& d, const Cochain& phi,
                     const ArityWindow& window);

struct CodifferentialCheck {
    bool ok = false;
    bool parity_ok = false;
    Cochain residual;  ///< nonzero terms of [d, d]: the failure certificate

    explicit CodifferentialCheck(const GradedSpace& s) : residual(s) {}
};

/// True iff d is odd and [d, d] vanishes within the window; on failure
/// the nonzero bracket terms are returned as the certificate.
CodifferentialCheck check_codifferential(const Cochain& d,
                                         const ArityWindow& window);

/// For an all-odd space and d concentrated in arity 2: whether the
/// induced binary bracket [a,b] := d(ab) satisfies the Jacobi identity
/// on all basis triples. Agrees with [d,d] = 0 by construction.
bool jacobi_correspondence(const Cochain& d);

}  // namespace linf
