// Small dense linear algebra: kernels over finite fields (elements given by a
// FiniteRing), integer Smith normal form, and kernels mod n derived from it.
#ifndef RINGLAB_LINALG_HPP
#define RINGLAB_LINALG_HPP

#include <vector>

#include "ringlab/errors.hpp"
#include "ringlab/finring.hpp"
#include "ringlab/ints.hpp"

namespace ringlab {

// Kernel basis of the rows x cols matrix M over a finite field F:
// all v with M v = 0, one generator per free column after RREF.
inline std::vector<std::vector<int>> field_kernel(const FiniteRing& F,
                                                  std::vector<std::vector<int>> M, int cols) {
    // multiplicative inverses by table scan
    std::vector<int> inv(F.cardinality(), -1);
    for (int a = 1; a < F.cardinality(); ++a)
        for (int b = 1; b < F.cardinality(); ++b)
            if (F.mul(a, b) == F.one()) {
                inv[a] = b;
                break;
            }
    int rows = static_cast<int>(M.size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != F.zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[r], M[pr]);
        if (inv[M[r][c]] < 0) throw error("field_kernel: non-invertible pivot (not a field?)");
        int s = inv[M[r][c]];
        for (int j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], s);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == F.zero()) continue;
            int f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<int>> kernel;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> v(cols, F.zero());
        v[c] = F.one();
        for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
            v[pivot_col[i]] = F.neg(M[i][c]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Smith normal form: returns (diag, V) with U M V = diag(d1..dr, 0..) for some
// unimodular U (not returned) and unimodular V (cols x cols).
struct SmithResult {
    std::vector<Int> diag;                // length min(rows, cols)
    std::vector<std::vector<Int>> V;      // cols x cols, unimodular
};

inline SmithResult smith_normal_form(std::vector<std::vector<Int>> M) {
    int rows = static_cast<int>(M.size());
    int cols = rows > 0 ? static_cast<int>(M[0].size()) : 0;
    SmithResult res;
    res.V.assign(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i) res.V[i][i] = 1;
    if (rows == 0 || cols == 0) return res;

    auto swap_rows = [&](int a, int b) { std::swap(M[a], M[b]); };
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        for (int i = 0; i < cols; ++i) std::swap(res.V[i][a], res.V[i][b]);
    };
    auto add_row = [&](int dst, int src, const Int& k) {
        for (int j = 0; j < cols; ++j) M[dst][j] += k * M[src][j];
    };
    auto add_col = [&](int dst, int src, const Int& k) {
        for (int i = 0; i < rows; ++i) M[i][dst] += k * M[i][src];
        for (int i = 0; i < cols; ++i) res.V[i][dst] += k * res.V[i][src];
    };

    int t = 0;
    int steps = std::min(rows, cols);
    for (; t < steps; ++t) {
        // find a nonzero pivot of minimal absolute value in the trailing block
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (M[i][j] != 0 && (pi < 0 || int_abs(M[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = int_abs(M[i][j]);
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i)
                if (M[i][t] != 0) {
                    Int q = M[i][t] / M[t][t];
                    add_row(i, t, -q);
                    if (M[i][t] != 0) {  // remainder smaller in absolute value
                        swap_rows(t, i);
                        clean = false;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                if (M[t][j] != 0) {
                    Int q = M[t][j] / M[t][t];
                    add_col(j, t, -q);
                    if (M[t][j] != 0) {
                        swap_cols(t, j);
                        clean = false;
                    }
                }
        }
        if (M[t][t] < 0) {
            for (int j = t; j < cols; ++j) M[t][j] = -M[t][j];
        }
    }
    // divisibility chain is not needed by the kernel computation; skip it
    for (int i = 0; i < std::min(rows, cols); ++i) res.diag.push_back(M[i][i]);
    return res;
}

// Generators of { v : M v = 0 mod n } derived from the Smith normal form.
inline std::vector<std::vector<Int>> kernel_mod_n(const std::vector<std::vector<Int>>& M, const Int& n) {
    int cols = M.empty() ? 0 : static_cast<int>(M[0].size());
    SmithResult snf = smith_normal_form(M);
    std::vector<std::vector<Int>> gens;
    for (int i = 0; i < cols; ++i) {
        Int d = i < static_cast<int>(snf.diag.size()) ? snf.diag[i] : Int(0);
        Int mult = d == 0 ? Int(1) : n / int_gcd(d, n);
        if (mod_pos(mult, n) == 0) continue;  // kernel generator vanishes mod n
        std::vector<Int> v(cols);
        for (int r = 0; r < cols; ++r) v[r] = mod_pos(snf.V[r][i] * mult, n);
        gens.push_back(std::move(v));
    }
    return gens;
}

}  // namespace ringlab

#endif
