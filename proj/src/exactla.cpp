#include "linf/exactla.hpp"

namespace linf {

namespace {
const Rat kZero = 0;

void check_dims(int r, int c, int rows, int cols) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw DegreeError("matrix index out of range");
}
}  // namespace

const Rat& RatMatrix::at(int r, int c) const {
    check_dims(r, c, rows_, cols_);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? kZero : it->second;
}

void RatMatrix::set(int r, int c, const Rat& v) {
    check_dims(r, c, rows_, cols_);
    if (v == 0)
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw DegreeError("matrix-vector dimension mismatch");
    std::vector<Rat> y(rows_, 0);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.set(c, r, v);
    return t;
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot_row = -1;
        for (int r = row; r < a.rows(); ++r)
            if (a.at(r, col) != 0) {
                pivot_row = r;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != row) {
            // swap rows via full copies; matrices here stay small
            for (int c = 0; c < a.cols(); ++c) {
                Rat tmp = a.at(row, c);
                a.set(row, c, a.at(pivot_row, c));
                a.set(pivot_row, c, tmp);
            }
        }
        Rat inv = Rat(1) / a.at(row, col);
        if (inv != 1) {
            std::vector<std::pair<int, Rat>> scaled(a.row(row).begin(),
                                                    a.row(row).end());
            for (auto& [c, v] : scaled) a.set(row, c, v * inv);
        }
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row) continue;
            Rat f = a.at(r, col);
            if (f == 0) continue;
            std::vector<std::pair<int, Rat>> prow(a.row(row).begin(),
                                                  a.row(row).end());
            for (const auto& [c, v] : prow) a.set(r, c, a.at(r, c) - f * v);
        }
        pivots.push_back(col);
        ++row;
    }
    return {a, pivots};
}

int rank(const RatMatrix& m) {
    return static_cast<int>(rref(m).pivot_cols.size());
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : r.pivot_cols) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols(), 0);
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(r.pivot_cols.size()); ++i)
            v[r.pivot_cols[i]] = -r.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::variant<std::vector<Rat>, InconsistentSystem> solve_particular(
    const RatMatrix& m, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw DegreeError("right-hand side length does not match row count");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
        aug.set(r, m.cols(), b[r]);
    }
    RrefResult red = rref(aug);
    for (int i = 0; i < static_cast<int>(red.pivot_cols.size()); ++i)
        if (red.pivot_cols[i] == m.cols())
            return InconsistentSystem("inconsistent linear system", i);
    std::vector<Rat> x(m.cols(), 0);
    for (int i = 0; i < static_cast<int>(red.pivot_cols.size()); ++i)
        x[red.pivot_cols[i]] = red.matrix.at(i, m.cols());
    return x;
}

}  // namespace linf
