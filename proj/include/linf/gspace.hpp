#pragma once

#include <string>
#include <vector>

#include "linf/errors.hpp"
#include "linf/rational.hpp"

namespace linf {

enum class Parity : unsigned char { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

inline Parity opposite(Parity p) { return p + Parity::odd; }

inline int sign_pow(Parity a, Parity b) {
    return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

inline const char* parity_name(Parity p) {
    return p == Parity::even ? "even" : "odd";
}

/// A finite m|n-dimensional Z2-graded vector space with named basis
/// vectors. The canonical global order lists all even basis vectors in
/// declaration order, then all odd ones; every downstream matrix layout
/// and tie-break follows this order.
class GradedSpace {
public:
    GradedSpace(std::vector<std::string> even_names,
                std::vector<std::string> odd_names);

    int even_dim() const { return static_cast<int>(even_names_.size()); }
    int odd_dim() const { return static_cast<int>(odd_names_.size()); }
    int dim() const { return even_dim() + odd_dim(); }

    Parity parity(int index) const {
        check_index(index);
        return index < even_dim() ? Parity::even : Parity::odd;
    }

    const std::string& name(int index) const;
    int index_of(const std::string& name) const;
    bool has_name(const std::string& name) const;

    bool operator==(const GradedSpace& o) const {
        return even_names_ == o.even_names_ && odd_names_ == o.odd_names_;
    }

private:
    void check_index(int index) const;
    std::vector<std::string> even_names_;
    std::vector<std::string> odd_names_;
};

inline GradedSpace build_space(std::vector<std::string> even_names,
                               std::vector<std::string> odd_names) {
    return GradedSpace(std::move(even_names), std::move(odd_names));
}

}  // namespace linf
