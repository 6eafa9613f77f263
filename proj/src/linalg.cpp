#include "hopfbundle/linalg.hpp"

#include <numeric>

#include "hopfbundle/errors.hpp"

namespace hopfbundle {

LinearSystem::LinearSystem(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, CycloNum()) {}

LinearSystem::LinearSystem(std::size_t rows, std::size_t cols, std::vector<CycloNum> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw InvalidArgument("LinearSystem: entry count does not match dimensions");
    align_conductors();
}

void LinearSystem::set(std::size_t r, std::size_t c, CycloNum value) {
    entries_[r * cols_ + c] = std::move(value);
}

void LinearSystem::align_conductors() {
    long l = 1;
    for (const auto& e : entries_) l = std::lcm(l, e.conductor());
    for (auto& e : entries_) e = e.promoted(l);
}

namespace {

struct Reduced {
    std::vector<std::vector<CycloNum>> m;  // RREF rows
    std::vector<std::size_t> pivot_cols;
    long conductor = 1;
};

Reduced rref(const LinearSystem& sys) {
    Reduced out;
    long l = 1;
    for (std::size_t r = 0; r < sys.rows(); ++r)
        for (std::size_t c = 0; c < sys.cols(); ++c) l = std::lcm(l, sys.at(r, c).conductor());
    out.conductor = l;
    out.m.reserve(sys.rows());
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        std::vector<CycloNum> row;
        row.reserve(sys.cols());
        for (std::size_t c = 0; c < sys.cols(); ++c) row.push_back(sys.at(r, c).promoted(l));
        out.m.push_back(std::move(row));
    }

    std::size_t next_row = 0;
    for (std::size_t col = 0; col < sys.cols() && next_row < out.m.size(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < out.m.size() && out.m[pivot][col].is_zero()) ++pivot;
        if (pivot == out.m.size()) continue;
        std::swap(out.m[next_row], out.m[pivot]);
        CycloNum inv = out.m[next_row][col].inv();
        for (std::size_t c = col; c < sys.cols(); ++c)
            out.m[next_row][c] = out.m[next_row][c] * inv;
        for (std::size_t r = 0; r < out.m.size(); ++r) {
            if (r == next_row || out.m[r][col].is_zero()) continue;
            CycloNum factor = out.m[r][col];
            for (std::size_t c = col; c < sys.cols(); ++c)
                out.m[r][c] = out.m[r][c] - factor * out.m[next_row][c];
        }
        out.pivot_cols.push_back(col);
        ++next_row;
    }
    return out;
}

}  // namespace

std::vector<std::vector<CycloNum>> nullspace(const LinearSystem& sys) {
    Reduced red = rref(sys);
    const CycloCtx& ctx = CycloCtx::get(red.conductor);

    std::vector<bool> is_pivot(sys.cols(), false);
    for (std::size_t c : red.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<CycloNum>> basis;
    for (std::size_t free_col = 0; free_col < sys.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<CycloNum> v(sys.cols(), CycloNum::zero(ctx));
        v[free_col] = CycloNum::one(ctx);
        for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
            v[red.pivot_cols[i]] = -red.m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const LinearSystem& sys) { return rref(sys).pivot_cols.size(); }

}  // namespace hopfbundle
