#include "magb/ratlin.hpp"

namespace magb {

namespace {

// reduced row echelon; returns pivot columns
std::vector<int> rref(std::vector<std::vector<Rat>>& rows, int ncols) {
    std::vector<int> pivots;
    int rank = 0;
    for (int c = 0; c < ncols && rank < (int)rows.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        Rat inv = Rat(1) / rows[rank][c];
        for (auto& x : rows[rank]) x *= inv;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c];
            for (std::size_t j = 0; j < rows[r].size(); ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    return pivots;  // rows 0..rank-1 are the pivot rows, the rest are zero rows
}

}  // namespace

std::vector<std::vector<Rat>> rat_kernel(std::vector<std::vector<Rat>> rows, int ncols) {
    for (auto& r : rows) r.resize(ncols, Rat(0));
    std::vector<int> pivots = rref(rows, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (int c : pivots) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int fc = 0; fc < ncols; ++fc) {
        if (is_piv[fc]) continue;
        std::vector<Rat> sol(ncols, Rat(0));
        sol[fc] = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p) sol[pivots[p]] = -rows[p][fc];
        basis.push_back(std::move(sol));
    }
    return basis;
}

std::optional<std::vector<Rat>> rat_solve(std::vector<std::vector<Rat>> rows, std::vector<Rat> b) {
    int ncols = rows.empty() ? 0 : (int)rows[0].size();
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
    std::vector<int> pivots = rref(rows, ncols);  // eliminate only real columns
    std::vector<Rat> x(ncols, Rat(0));
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = rows[p][ncols];
    // consistency: rows with zero coefficients must have zero rhs
    for (std::size_t r = pivots.size(); r < rows.size(); ++r)
        if (rows[r][ncols] != 0) return std::nullopt;
    return x;
}

}  // namespace magb
