#include "binform/matrix.hpp"

#include <utility>

#include "binform/errors.hpp"

namespace binform {

namespace {

void require_square(const PolyMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ShapeError("determinant requires a non-empty square matrix");
}

Polynomial cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    Polynomial acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Polynomial& pivot = m.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        std::size_t removed = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        Polynomial minor = cofactor_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), removed);
        Polynomial contrib = pivot * minor;
        if (k % 2 == 1) contrib = -contrib;
        acc += contrib;
    }
    return acc;
}

}  // namespace

Polynomial determinant_cofactor(const PolyMatrix& m) {
    require_square(m);
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cofactor_rec(m, cols, 0);
}

Polynomial determinant_bareiss(PolyMatrix m) {
    require_square(m);
    const std::size_t n = m.rows();
    bool negate = false;
    Polynomial prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Polynomial();  // zero column, singular
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
            negate = !negate;
        }
        const std::ptrdiff_t lo = static_cast<std::ptrdiff_t>(k) + 1;
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n);
        std::exception_ptr failure = nullptr;
#pragma omp parallel for collapse(2) schedule(dynamic) if (kernels::parallel_enabled() && hi - lo > 1)
        for (std::ptrdiff_t i = lo; i < hi; ++i)
            for (std::ptrdiff_t j = lo; j < hi; ++j) {
                try {
                    const std::size_t ii = static_cast<std::size_t>(i), jj = static_cast<std::size_t>(j);
                    m.at(ii, jj) =
                        exact_quotient(m.at(k, k) * m.at(ii, jj) - m.at(ii, k) * m.at(k, jj), prev);
                } catch (...) {
#pragma omp critical(binform_bareiss_failure)
                    failure = std::current_exception();
                }
            }
        if (failure) std::rethrow_exception(failure);
        prev = m.at(k, k);
    }
    Polynomial det = std::move(m.at(n - 1, n - 1));
    return negate ? -det : det;
}

Polynomial determinant(const PolyMatrix& m) {
    require_square(m);
    if (m.rows() <= 4) return determinant_cofactor(m);
    return determinant_bareiss(m);
}

Polynomial determinant_block_laplace(const PolyMatrix& m, std::size_t top_rows) {
    require_square(m);
    const std::size_t n = m.rows();
    if (top_rows == 0 || top_rows >= n) return determinant(m);
    const std::size_t t = top_rows, b = n - t;

    std::vector<std::size_t> comb(t);
    for (std::size_t i = 0; i < t; ++i) comb[i] = i;
    Polynomial acc;
    while (true) {
        std::vector<bool> selected(n, false);
        for (std::size_t c : comb) selected[c] = true;

        bool feasible = true;
        for (std::size_t r = 0; r < t && feasible; ++r) {
            bool nonzero = false;
            for (std::size_t c : comb) nonzero = nonzero || !m.at(r, c).is_zero();
            feasible = nonzero;
        }
        for (std::size_t r = t; r < n && feasible; ++r) {
            bool nonzero = false;
            for (std::size_t c = 0; c < n; ++c)
                if (!selected[c] && !m.at(r, c).is_zero()) nonzero = true;
            feasible = nonzero;
        }
        if (feasible) {
            PolyMatrix top(t, t), bottom(b, b);
            std::size_t tc = 0, bc = 0;
            std::size_t col_sum = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (selected[c]) {
                    for (std::size_t r = 0; r < t; ++r) top.at(r, tc) = m.at(r, c);
                    col_sum += c;
                    ++tc;
                } else {
                    for (std::size_t r = 0; r < b; ++r) bottom.at(r, bc) = m.at(t + r, c);
                    ++bc;
                }
            }
            Polynomial top_det = determinant(top);
            if (!top_det.is_zero()) {
                Polynomial term = top_det * determinant(bottom);
                if ((col_sum + t * (t - 1) / 2) % 2 == 1) term = -term;
                acc += term;
            }
        }

        // next t-combination of {0..n-1} in lexicographic order
        std::size_t i = t;
        while (i > 0 && comb[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) break;
        ++comb[i - 1];
        for (std::size_t j = i; j < t; ++j) comb[j] = comb[j - 1] + 1;
    }
    return acc;
}

}  // namespace binform
