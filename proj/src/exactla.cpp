#include "qsl2/exactla.hpp"

namespace qsl2 {

ExactMatrix::ExactMatrix(const CycloField& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), entries_(rows * cols, Cyclotomic::zero(field))
{
}

ExactMatrix ExactMatrix::identity(const CycloField& field, std::size_t n)
{
    ExactMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Cyclotomic::one(field);
    return m;
}

std::vector<Cyclotomic> ExactMatrix::apply(const std::vector<Cyclotomic>& x) const
{
    if (x.size() != cols_)
        throw DomainError("matrix-vector product: dimension mismatch");
    std::vector<Cyclotomic> out(rows_, Cyclotomic::zero(*field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !x[c].is_zero())
                out[r] += at(r, c) * x[c];
    return out;
}

RrefResult rref(ExactMatrix m, std::optional<std::size_t> pivot_limit)
{
    const std::size_t limit = std::min(pivot_limit.value_or(m.cols()), m.cols());
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m.at(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m.at(pr, c), m.at(row, c));

        const Cyclotomic scale = m.at(row, col).inverse();
        std::vector<std::size_t> support;
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (m.at(row, c).is_zero())
                continue;
            m.at(row, c) *= scale;
            support.push_back(c);
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero())
                continue;
            const Cyclotomic factor = m.at(r, col);
            for (std::size_t c : support)
                m.at(r, c) -= factor * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::optional<std::vector<Cyclotomic>> solve(const ExactMatrix& m, const std::vector<Cyclotomic>& rhs)
{
    if (rhs.size() != m.rows())
        throw DomainError("solve: right-hand side has " + std::to_string(rhs.size())
                          + " entries, matrix has " + std::to_string(m.rows()) + " rows");
    ExactMatrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = rhs[r];
    }
    RrefResult red = rref(std::move(aug), m.cols());
    for (std::size_t r = red.rank(); r < m.rows(); ++r)
        if (!red.matrix.at(r, m.cols()).is_zero())
            return std::nullopt;
    std::vector<Cyclotomic> x(m.cols(), Cyclotomic::zero(m.field()));
    for (std::size_t i = 0; i < red.pivots.size(); ++i)
        x[red.pivots[i]] = red.matrix.at(i, m.cols());
    return x;
}

std::vector<std::vector<Cyclotomic>> nullspace(const ExactMatrix& m)
{
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : red.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Cyclotomic> v(m.cols(), Cyclotomic::zero(m.field()));
        v[free] = Cyclotomic::one(m.field());
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            v[red.pivots[i]] = -red.matrix.at(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qsl2
