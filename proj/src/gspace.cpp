#include "linf/gspace.hpp"

#include <algorithm>
#include <set>

namespace linf {

GradedSpace::GradedSpace(std::vector<std::string> even_names,
                         std::vector<std::string> odd_names)
    : even_names_(std::move(even_names)), odd_names_(std::move(odd_names)) {
    if (even_names_.empty() && odd_names_.empty())
        throw NameError("graded space needs at least one basis vector");
    std::set<std::string> seen;
    for (const auto& lst : {even_names_, odd_names_})
        for (const auto& n : lst) {
            if (n.empty()) throw NameError("empty basis name");
            if (!seen.insert(n).second)
                throw NameError("duplicate basis name '" + n + "'");
        }
}

void GradedSpace::check_index(int index) const {
    if (index < 0 || index >= dim())
        throw NameError("basis index " + std::to_string(index) +
                        " out of range");
}

const std::string& GradedSpace::name(int index) const {
    check_index(index);
    return index < even_dim() ? even_names_[index]
                              : odd_names_[index - even_dim()];
}

int GradedSpace::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (this->name(i) == name) return i;
    throw NameError("unknown basis name '" + name + "'");
}

bool GradedSpace::has_name(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (this->name(i) == name) return true;
    return false;
}

}  // namespace linf
