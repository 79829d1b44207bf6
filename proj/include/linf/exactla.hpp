#pragma once

#include <map>
#include <variant>
#include <vector>

#include "linf/errors.hpp"
#include "linf/rational.hpp"

namespace linf {

/// Sparse matrix over the exact rationals.
class RatMatrix {
public:
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int r, int c) const;
    void set(int r, int c, const Rat& v);
    void add(int r, int c, const Rat& v) { set(r, c, at(r, c) + v); }

    const std::map<int, Rat>& row(int r) const { return data_[r]; }

    std::vector<Rat> apply(const std::vector<Rat>& x) const;
    RatMatrix transposed() const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<std::map<int, Rat>> data_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<int> pivot_cols;
};

/// Exact reduced row echelon form with pivot columns in increasing order.
RrefResult rref(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Exact basis of the null space; each vector carries a 1 in its free
/// column and the count equals cols - rank.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// The canonical solution of m x = b with zeros in all free-variable
/// positions, or an inconsistency report naming a witness row.
std::variant<std::vector<Rat>, InconsistentSystem> solve_particular(
    const RatMatrix& m, const std::vector<Rat>& b);

}  // namespace linf
