#pragma once

#include <optional>
#include <string>

#include "linf/morph.hpp"
#include "linf/render.hpp"

namespace linf {

/// A parsed job description: the space, the codifferential (possibly
/// with parameter coefficients), window/order/truncation settings and
/// the optional morphism and ring-map blocks.
struct JobConfig {
    GradedSpace space;
    RingPtr ring;  ///< declared parameters; empty ring when none
    ParamCochain differential;
    std::optional<ArityWindow> window;
    int max_order = 6;
    int truncation_degree = -1;  ///< -1: derive from max_order
    std::optional<MorphismData> morphism;
    std::map<std::string, ParamPoly> ring_map;  ///< endomorphism images
    std::optional<Format> format;

    JobConfig(GradedSpace s, RingPtr r)
        : space(std::move(s)), ring(std::move(r)), differential(space, ring) {}

    int effective_truncation() const {
        return truncation_degree > 0 ? truncation_degree : max_order + 2;
    }
};

/// Parse a configuration document. Diagnostics carry line and column.
///
/// Grammar (one directive per line, '#' comments):
///   space even: e1 e2          space odd: f1 f2
///   params even: t1 t2         params odd: th1 th2
///   diff: <monomial> -> <vector-expr>
///   window: A..B               max-order: N
///   truncation-degree: N       format: plain|latex|structured
///   morphism: <monomial> -> <vector-expr>
///   ring-map: <param> -> <coeff-expr>
/// where <monomial> is like "e^2 f", <vector-expr> is a +/- sum of
/// terms "coeff * basis", "basis * coeff" or "basis", and <coeff-expr>
/// admits integers, parameters, + - * / ^ and parentheses (division by
/// a unit is series inversion at the truncation degree).
JobConfig parse_config(const std::string& text);

}  // namespace linf
