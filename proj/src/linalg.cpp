#include "cblock/linalg.hpp"

#include <map>

namespace cblock {

namespace {

// Fraction-free Bareiss elimination; entries stay integral and bounded by
// minors of the input, avoiding the coefficient blow-up of naive elimination.
int rank_bareiss(std::vector<std::vector<mpz_class>>& m) {
    if (m.empty()) return 0;
    const int nrows = static_cast<int>(m.size());
    const int ncols = static_cast<int>(m[0].size());
    mpz_class prev(1);
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int pivot = -1;
        for (int r = rank; r < nrows; ++r) {
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < nrows; ++r) {
            for (int c = col + 1; c < ncols; ++c) {
                mpz_class t = m[r][c] * m[rank][col] - m[r][col] * m[rank][c];
                mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<mpz_class>> clear_denominators(const std::vector<QRow>& rows) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        mpz_class lcm(1);
        for (const auto& q : row) {
            if (sgn(q) == 0) continue;
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        }
        std::vector<mpz_class> r;
        r.reserve(row.size());
        for (const auto& q : row) {
            mpz_class scaled = q.get_num() * (lcm / q.get_den());
            r.push_back(scaled);
        }
        out.push_back(std::move(r));
    }
    return out;
}

// Rational reduced row echelon form; returns pivot column per reduced row.
std::vector<int> rref(std::vector<QRow>& rows, int ncols) {
    std::vector<int> pivots;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int p = -1;
        for (int i = r; i < nrows; ++i) {
            if (sgn(rows[i][col]) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        Rational inv = Rational(1) / rows[r][col];
        for (int c = col; c < static_cast<int>(rows[r].size()); ++c) rows[r][c] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || sgn(rows[i][col]) == 0) continue;
            Rational f = rows[i][col];
            for (int c = col; c < static_cast<int>(rows[i].size()); ++c)
                rows[i][c] -= f * rows[r][c];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

} // namespace

int rank_rational(std::vector<QRow> rows) {
    if (rows.empty()) return 0;
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.size());
    for (auto& r : rows) r.resize(width, Rational(0));
    auto m = clear_denominators(rows);
    return rank_bareiss(m);
}

int rank_of_polys(const std::vector<QPoly>& polys) {
    std::map<Monomial, int> columns;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, 0);
    int idx = 0;
    for (auto& [m, col] : columns) col = idx++;
    std::vector<QRow> rows;
    rows.reserve(polys.size());
    for (const auto& p : polys) {
        QRow row(columns.size(), Rational(0));
        for (const auto& [m, c] : p.terms()) row[columns[m]] = c;
        rows.push_back(std::move(row));
    }
    return rank_rational(std::move(rows));
}

int kernel_dimension(const std::vector<QRow>& rows, int ncols) {
    if (rows.empty()) return ncols;
    std::vector<QRow> padded = rows;
    for (auto& r : padded) r.resize(ncols, Rational(0));
    return ncols - rank_rational(std::move(padded));
}

std::vector<QRow> kernel_basis(std::vector<QRow> rows, int ncols) {
    for (auto& r : rows) r.resize(ncols, Rational(0));
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<QRow> basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        QRow v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

SolveStatus solve_exact(std::vector<QRow> a, QRow b, QRow& solution) {
    const int nrows = static_cast<int>(a.size());
    int ncols = 0;
    for (const auto& r : a) ncols = std::max(ncols, static_cast<int>(r.size()));
    for (int i = 0; i < nrows; ++i) {
        a[i].resize(ncols, Rational(0));
        a[i].push_back(b[i]);
    }
    std::vector<int> pivots = rref(a, ncols);
    // Inconsistency: a zero row of A with nonzero augmented entry.
    for (int i = static_cast<int>(pivots.size()); i < nrows; ++i) {
        if (sgn(a[i][ncols]) != 0) return SolveStatus::Inconsistent;
    }
    if (static_cast<int>(pivots.size()) < ncols) return SolveStatus::Underdetermined;
    solution.assign(ncols, Rational(0));
    for (int r = 0; r < ncols; ++r) solution[pivots[r]] = a[r][ncols];
    return SolveStatus::Unique;
}

} // namespace cblock
