#include "pdnf/lattice.hpp"

#include "pdnf/errors.hpp"
#include "pdnf/matrix.hpp"

#include <utility>

namespace pdnf {

namespace {

void check_width(const IntMatrix& rows, std::size_t n) {
    for (const auto& r : rows) {
        if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "integer row has the wrong length");
    }
}

// Floor division for the reduction step (GMP's fdiv).
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

std::size_t integer_rank(const IntMatrix& rows, std::size_t n) {
    check_width(rows, n);
    if (rows.empty()) return 0;
    Matrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(Rational(rows[i][j]));
    }
    return m.rank();
}

IntMatrix hermite_normal_form(const IntMatrix& rows, std::size_t n) {
    check_width(rows, n);
    IntMatrix h = rows;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < n && pivot_row < h.size(); ++col) {
        // Euclid on the column until a single nonzero entry remains at pivot_row.
        while (true) {
            std::size_t best = h.size();
            for (std::size_t i = pivot_row; i < h.size(); ++i) {
                if (sgn(h[i][col]) == 0) continue;
                if (best == h.size() || abs(h[i][col]) < abs(h[best][col])) best = i;
            }
            if (best == h.size()) break;
            std::swap(h[pivot_row], h[best]);
            bool reduced = true;
            for (std::size_t i = pivot_row + 1; i < h.size(); ++i) {
                if (sgn(h[i][col]) == 0) continue;
                const Integer q = h[i][col] / h[pivot_row][col];
                for (std::size_t j = col; j < n; ++j) h[i][j] -= q * h[pivot_row][j];
                if (sgn(h[i][col]) != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (pivot_row >= h.size() || sgn(h[pivot_row][col]) == 0) continue;
        if (sgn(h[pivot_row][col]) < 0) {
            for (auto& v : h[pivot_row]) v = -v;
        }
        const Integer& p = h[pivot_row][col];
        for (std::size_t i = 0; i < pivot_row; ++i) {
            const Integer q = floor_div(h[i][col], p);
            if (sgn(q) == 0) continue;
            for (std::size_t j = col; j < n; ++j) h[i][j] -= q * h[pivot_row][j];
        }
        ++pivot_row;
    }
    h.resize(pivot_row);
    return h;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t n) {
    check_width(rows, n);
    // Shrink the constraint system first; the lattice it spans has the same kernel.
    IntMatrix a = hermite_normal_form(rows, n);
    IntMatrix u(n, IntVector(n, Integer(0)));
    for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;  // columns of u are tracked as u[.][col]

    auto combine = [&](std::size_t p, std::size_t q, const Integer& x, const Integer& y, const Integer& s,
                       const Integer& t) {
        // col_p <- x col_p + y col_q ; col_q <- s col_p + t col_q
        for (auto& row : a) {
            const Integer vp = row[p], vq = row[q];
            row[p] = x * vp + y * vq;
            row[q] = s * vp + t * vq;
        }
        for (auto& row : u) {
            const Integer vp = row[p], vq = row[q];
            row[p] = x * vp + y * vq;
            row[q] = s * vp + t * vq;
        }
    };

    std::size_t k = 0;
    for (std::size_t i = 0; i < a.size() && k < n; ++i) {
        bool any = false;
        for (std::size_t j = k; j < n; ++j) {
            if (sgn(a[i][j]) != 0) any = true;
        }
        if (!any) continue;
        // Move a nonzero entry to column k, then clear the rest of the row.
        for (std::size_t j = k; j < n; ++j) {
            if (sgn(a[i][j]) != 0) {
                if (j != k) combine(k, j, 0, 1, 1, 0);
                break;
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (sgn(a[i][j]) == 0) continue;
            const Integer av = a[i][k], bv = a[i][j];
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
            const Integer s = -bv / g, t = av / g;
            combine(k, j, x, y, s, t);
        }
        ++k;
    }
    IntMatrix basis;
    for (std::size_t col = k; col < n; ++col) {
        IntVector v(n);
        for (std::size_t r = 0; r < n; ++r) v[r] = u[r][col];
        basis.push_back(std::move(v));
    }
    for (const auto& v : basis) {
        for (const auto& row : rows) {
            Integer dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += row[j] * v[j];
            if (sgn(dot) != 0) throw Error(ErrorKind::InternalFault, "integer kernel vector fails a constraint");
        }
    }
    return hermite_normal_form(basis, n);
}

}  // namespace pdnf
