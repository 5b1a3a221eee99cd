// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace masklab {

// Dense row-major matrix (vectors are 1 x n). The only container the model
// layer uses; math stays in free functions below so loops vectorize.
template <class S>
struct Tensor {
    int rows = 0;
    int cols = 0;
    std::vector<S> v;

    Tensor() = default;
    Tensor(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * c, S(0)) {}

    static Tensor zeros(int r, int c) { return Tensor(r, c); }

    size_t size() const { return v.size(); }
    S* row(int i) { return v.data() + static_cast<size_t>(i) * cols; }
    const S* row(int i) const { return v.data() + static_cast<size_t>(i) * cols; }
    S& at(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
    S at(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }

    void zero() { std::fill(v.begin(), v.end(), S(0)); }

    bool finite() const {
        for (S x : v)
            if (!std::isfinite(static_cast<double>(x))) return false;
        return true;
    }

    double sq_norm() const {
        double s = 0.0;
        for (S x : v) s += static_cast<double>(x) * static_cast<double>(x);
        return s;
    }
};

// C (m x n) += A (m x k) * B (k x n)
template <class S>
void matmul_acc(const Tensor<S>& a, const Tensor<S>& b, Tensor<S>& c) {
    if (a.cols != b.rows || c.rows != a.rows || c.cols != b.cols)
        throw std::logic_error("matmul_acc: shape mismatch");
    const int m = a.rows, k = a.cols, n = b.cols;
    for (int i = 0; i < m; ++i) {
        const S* ai = a.row(i);
        S* ci = c.row(i);
        for (int p = 0; p < k; ++p) {
            const S aip = ai[p];
            const S* bp = b.row(p);
            for (int j = 0; j < n; ++j) ci[j] += aip * bp[j];
        }
    }
}

// C (m x n) += A^T (m x k stored k x m) * B (k x n)
template <class S>
void matmul_tn_acc(const Tensor<S>& a, const Tensor<S>& b, Tensor<S>& c) {
    if (a.rows != b.rows || c.rows != a.cols || c.cols != b.cols)
        throw std::logic_error("matmul_tn_acc: shape mismatch");
    const int k = a.rows, m = a.cols, n = b.cols;
    for (int p = 0; p < k; ++p) {
        const S* ap = a.row(p);
        const S* bp = b.row(p);
        for (int i = 0; i < m; ++i) {
            const S api = ap[i];
            S* ci = c.row(i);
            for (int j = 0; j < n; ++j) ci[j] += api * bp[j];
        }
    }
}

// C (m x n) += A (m x k) * B^T (n x k)
template <class S>
void matmul_nt_acc(const Tensor<S>& a, const Tensor<S>& b, Tensor<S>& c) {
    if (a.cols != b.cols || c.rows != a.rows || c.cols != b.rows)
        throw std::logic_error("matmul_nt_acc: shape mismatch");
    const int m = a.rows, k = a.cols, n = b.rows;
    for (int i = 0; i < m; ++i) {
        const S* ai = a.row(i);
        S* ci = c.row(i);
        for (int j = 0; j < n; ++j) {
            const S* bj = b.row(j);
            S s = 0;
            for (int p = 0; p < k; ++p) s += ai[p] * bj[p];
            ci[j] += s;
        }
    }
}

template <class S>
void add_row_broadcast(Tensor<S>& x, const Tensor<S>& bias) {
    if (bias.rows != 1 || bias.cols != x.cols) throw std::logic_error("add_row_broadcast: shape mismatch");
    for (int i = 0; i < x.rows; ++i) {
        S* xi = x.row(i);
        const S* b = bias.row(0);
        for (int j = 0; j < x.cols; ++j) xi[j] += b[j];
    }
}

}  // namespace masklab
