#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "linf/cochain.hpp"

namespace linf::testing {

inline GradedSpace sp10() { return build_space({"e"}, {}); }
inline GradedSpace sp01() { return build_space({}, {"f"}); }
inline GradedSpace sp02() { return build_space({}, {"f1", "f2"}); }
inline GradedSpace sp03() { return build_space({}, {"f1", "f2", "f3"}); }
inline GradedSpace sp11() { return build_space({"e"}, {"f"}); }
inline GradedSpace sp20() { return build_space({"e1", "e2"}, {}); }

/// Parse "e^2 f" style monomials against a space.
inline Monomial mono(const GradedSpace& space, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::pair<int, int>> parts;
    while (in >> tok) {
        auto caret = tok.find('^');
        std::string name = tok.substr(0, caret);
        int e = caret == std::string::npos
                    ? 1
                    : std::stoi(tok.substr(caret + 1));
        parts.emplace_back(space.index_of(name), e);
    }
    return make_monomial(space, parts);
}

inline Cochain bc(const GradedSpace& space, const std::string& input,
                  const std::string& output) {
    return Cochain::basis(space, mono(space, input), output);
}

// 1|0 space: phi_k(e^k) = k! e
inline Cochain phi_k(const GradedSpace& s, int k) {
    return bc(s, "e^" + std::to_string(k), "e");
}

// 1|1 space basis, paper naming
inline Cochain phie(const GradedSpace& s, int k) {
    return bc(s, "e^" + std::to_string(k), "e");
}
inline Cochain psif(const GradedSpace& s, int k) {
    return bc(s, "e^" + std::to_string(k), "f");
}
inline Cochain psie(const GradedSpace& s, int k) {
    return k == 1 ? bc(s, "f", "e")
                  : bc(s, "e^" + std::to_string(k - 1) + " f", "e");
}
inline Cochain phif(const GradedSpace& s, int k) {
    return k == 1 ? bc(s, "f", "f")
                  : bc(s, "e^" + std::to_string(k - 1) + " f", "f");
}
inline Cochain hk(const GradedSpace& s, int k, int L) {
    return phie(s, k) + Rat(k - L + 1) * phif(s, k);
}

// 0|2 space
inline Cochain phi_ij(const GradedSpace& s, int i, int j) {
    return bc(s, "f" + std::to_string(i), "f" + std::to_string(j));
}
inline Cochain psi_i(const GradedSpace& s, int i) {
    return bc(s, "f1 f2", "f" + std::to_string(i));
}

inline Rat rand_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    return Rat(num(rng), den(rng));
}

}  // namespace linf::testing
