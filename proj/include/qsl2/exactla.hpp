#pragma once

// Dense exact linear algebra over Q(zeta_N).

#include <optional>
#include <utility>
#include <vector>

#include "qsl2/cyclo.hpp"

namespace qsl2 {

class ExactMatrix {
public:
    ExactMatrix(const CycloField& field, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(const CycloField& field, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CycloField& field() const { return *field_; }

    Cyclotomic& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Cyclotomic& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& x) const;

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    const CycloField* field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Cyclotomic> entries_;
};

struct RrefResult {
    ExactMatrix matrix;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination, first nonzero pivot scanning down.  Pivots are
/// only taken in the first pivot_limit columns (all columns by default);
/// the remaining columns are carried along as right-hand sides.
RrefResult rref(ExactMatrix m, std::optional<std::size_t> pivot_limit = std::nullopt);

/// A solution with free variables set to zero, or nullopt if inconsistent.
std::optional<std::vector<Cyclotomic>> solve(const ExactMatrix& m, const std::vector<Cyclotomic>& rhs);

std::vector<std::vector<Cyclotomic>> nullspace(const ExactMatrix& m);

}  // namespace qsl2
