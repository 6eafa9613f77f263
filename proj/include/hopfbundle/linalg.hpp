#pragma once

#include <cstddef>
#include <vector>

#include "hopfbundle/cyclo.hpp"

namespace hopfbundle {

/// Rectangular exact matrix over one cyclotomic field, row-major. The
/// constructor promotes every entry to the lcm of all entry conductors.
class LinearSystem {
  public:
    LinearSystem(std::size_t rows, std::size_t cols);
    LinearSystem(std::size_t rows, std::size_t cols, std::vector<CycloNum> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycloNum& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, CycloNum value);

    /// Re-promotes all entries to one common conductor.
    void align_conductors();

  private:
    std::size_t rows_, cols_;
    std::vector<CycloNum> entries_;
};

/// Basis of {x : sys * x = 0} by exact Gauss-Jordan elimination. Pivot rule:
/// scan columns left to right, take the first row (in index order) with a
/// nonzero entry — deterministic, so bases are reproducible across runs.
/// Each basis vector has a 1 in its free column.
std::vector<std::vector<CycloNum>> nullspace(const LinearSystem& sys);

/// Rank via the same elimination.
std::size_t rank(const LinearSystem& sys);

}  // namespace hopfbundle
