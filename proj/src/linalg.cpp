#include "looprep/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace looprep {

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Mat zero_mat(std::size_t rows, std::size_t cols) {
    return Mat(rows, zero_vec(cols));
}

Mat identity_mat(std::size_t n) {
    Mat m = zero_mat(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Vec add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == Rat(0); });
}

Mat transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat t = zero_mat(m[0].size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    assert(!a.empty() && !b.empty() && a[0].size() == b.size());
    Mat r = zero_mat(a.size(), b[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == Rat(0)) continue;
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    assert(!m.empty() && m[0].size() == v.size());
    Vec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

Rat det(Mat m) {
    const std::size_t n = m.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == Rat(0)) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == Rat(0)) continue;
            Rat f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return d;
}

Mat inverse(Mat m) {
    const std::size_t n = m.size();
    Mat inv = identity_mat(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == Rat(0)) ++piv;
        if (piv == n) throw std::domain_error("matrix is singular");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == Rat(0)) continue;
            Rat f = m[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= f * m[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<Vec> solve_columns(const Mat& a, const Vec& b) {
    assert(!a.empty());
    const std::size_t rows = a.size(), cols = a[0].size();
    assert(b.size() == rows);
    // augmented [A | b], row elimination
    Mat aug = zero_mat(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<std::size_t> pivot_row(cols, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && aug[piv][c] == Rat(0)) ++piv;
        if (piv == rows) continue;
        std::swap(aug[piv], aug[r]);
        Rat p = aug[r][c];
        for (std::size_t j = c; j <= cols; ++j) aug[r][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][c] == Rat(0)) continue;
            Rat f = aug[i][c];
            for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    // inconsistent if a zero row has nonzero rhs
    for (std::size_t i = r; i < rows; ++i)
        if (aug[i][cols] != Rat(0)) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_row[c] == rows) throw std::domain_error("columns are linearly dependent");
        x[c] = aug[pivot_row[c]][cols];
    }
    return x;
}

IMat hnf_columns(IMat m) {
    if (m.empty()) return m;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    auto col_axpy = [&](std::size_t dst, long long q, std::size_t src) {
        for (std::size_t i = 0; i < rows; ++i) m[i][dst] -= q * m[i][src];
    };
    auto col_negate = [&](std::size_t c) {
        for (std::size_t i = 0; i < rows; ++i) m[i][c] = -m[i][c];
    };

    std::size_t r = 0; // next pivot column slot
    std::vector<std::size_t> pivot_rows;
    for (std::size_t i = 0; i < rows && r < cols; ++i) {
        // gcd-reduce row i across columns r..cols-1 until one nonzero remains
        for (;;) {
            std::size_t best = cols;
            for (std::size_t j = r; j < cols; ++j)
                if (m[i][j] != 0 && (best == cols || std::llabs(m[i][j]) < std::llabs(m[i][best])))
                    best = j;
            if (best == cols) break; // row is zero past r
            if (best != r) col_swap(best, r);
            bool cleared = true;
            for (std::size_t j = r + 1; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                long long q = m[i][j] / m[i][r];
                col_axpy(j, q, r);
                if (m[i][j] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[i][r] == 0) continue;
        if (m[i][r] < 0) col_negate(r);
        // reduce entries to the left of the pivot into [0, pivot)
        for (std::size_t j = 0; j < r; ++j) {
            long long q = m[i][j] / m[i][r];
            if (m[i][j] - q * m[i][r] < 0) --q;
            col_axpy(j, q, r);
        }
        pivot_rows.push_back(i);
        ++r;
    }
    for (auto& row : m) row.resize(r);
    return m;
}

long long lcm_of_denominators(const Mat& m) {
    long long l = 1;
    for (const auto& row : m)
        for (const auto& x : row) l = std::lcm(l, den(x));
    return l;
}

} // namespace looprep
