#include "hurwitz/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hurwitz {

namespace {

// Row echelon form in place; returns pivot column per pivot row.
std::vector<int> echelon(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        for (int i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int mat_rank(QMat m) { return static_cast<int>(echelon(m).size()); }

Rat mat_det(QMat m) {
    int n = static_cast<int>(m.size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("mat_det: not square");
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rat f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<QVec> mat_solve(QMat m, QVec rhs) {
    int rows = static_cast<int>(m.size());
    if (rows != static_cast<int>(rhs.size())) throw std::invalid_argument("mat_solve: size mismatch");
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    std::vector<int> pivots = echelon(m);
    // inconsistent iff a pivot lands in the augmented column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    QVec x(cols, Rat(0));
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        int c = pivots[r];
        Rat v = m[r][cols];
        for (int j = c + 1; j < cols; ++j) v -= m[r][j] * x[j];
        x[c] = v / m[r][c];
    }
    return x;
}

QVec mat_nullvector(QMat m, int ncols) {
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != ncols)
            throw std::invalid_argument("mat_nullvector: column mismatch");
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < ncols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) throw std::invalid_argument("mat_nullvector: trivial nullspace");
    QVec x(ncols, Rat(0));
    x[free_col] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
        int c = pivots[r];
        Rat v = 0;
        for (int j = c + 1; j < ncols; ++j) v -= m[r][j] * x[j];
        x[c] = v / m[r][c];
    }
    return x;
}

ZVec primitive_vector(const QVec& v) {
    Int lcm = 1;
    for (const auto& q : v) lcm = boost::multiprecision::lcm(lcm, Int(denominator(q)));
    ZVec z(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        z[i] = Int(numerator(v[i])) * (lcm / Int(denominator(v[i])));
        g = boost::multiprecision::gcd(g, z[i]);
    }
    if (g == 0) throw std::invalid_argument("primitive_vector: zero vector");
    for (auto& e : z) e /= g;
    return z;
}

Rat dot(const ZVec& a, const QVec& x) {
    if (a.size() != x.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * x[i];
    return s;
}

bool RowReducer::add(QVec v) {
    if (static_cast<int>(v.size()) != ncols_) throw std::invalid_argument("RowReducer: size mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        int c = pivot_[r];
        if (v[c] == 0) continue;
        Rat f = v[c] / rows_[r][c];
        for (int j = c; j < ncols_; ++j) v[j] -= f * rows_[r][j];
    }
    int p = -1;
    for (int j = 0; j < ncols_; ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p < 0) return false;
    // keep pivot columns strictly increasing
    size_t pos = 0;
    while (pos < pivot_.size() && pivot_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivot_.insert(pivot_.begin() + pos, p);
    return true;
}

LatticeForm row_lattice_form(std::vector<ZVec> rows, int cols) {
    LatticeForm out;
    int nrows = static_cast<int>(rows.size());
    int r = 0;
    for (int c = 0; c < cols && r < nrows; ++c) {
        // chain gcd steps until at most one row below r has a nonzero in column c
        while (true) {
            int p = -1;
            for (int i = r; i < nrows; ++i)
                if (rows[i][c] != 0 && (p < 0 || abs(rows[i][c]) < abs(rows[p][c]))) p = i;
            if (p < 0) break;
            bool reduced_all = true;
            for (int i = r; i < nrows; ++i) {
                if (i == p || rows[i][c] == 0) continue;
                Int q = rows[i][c] / rows[p][c];
                for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[p][j];
                if (rows[i][c] != 0) reduced_all = false;
            }
            if (reduced_all) {
                std::swap(rows[r], rows[p]);
                break;
            }
        }
        if (rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (int j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
            ++r;
        }
    }
    out.rank = r;
    if (r == cols) {
        Int idx = 1;
        // pivots sit on the staircase; with rank == cols each column has one
        for (int i = 0; i < r; ++i) idx *= rows[i][i];
        out.index = abs(idx);
    }
    return out;
}

}  // namespace hurwitz
