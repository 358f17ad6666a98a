// Copyright 2026 The DDQCL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference implementations used only by tests. They share no code with the
// library: gates are dense matrices built by Kronecker products and the
// divergences are written out term by term in long double.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix identity(std::size_t dim) {
    Matrix m(dim, std::vector<double>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Matrix multiply(const Matrix &a, const Matrix &b) {
    const std::size_t n = a.size();
    const std::size_t k = b.size();
    const std::size_t m = b[0].size();
    Matrix out(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t j = 0; j < m; ++j) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    Matrix out(ra * rb, std::vector<double>(ca * cb, 0.0));
    for (std::size_t i = 0; i < ra; ++i) {
        for (std::size_t j = 0; j < ca; ++j) {
            for (std::size_t k = 0; k < rb; ++k) {
                for (std::size_t l = 0; l < cb; ++l) {
                    out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline std::vector<double> apply(const Matrix &m, const std::vector<double> &v) {
    std::vector<double> out(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline Matrix ry(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, -s}, {s, c}};
}

/// Single-qubit gate `g` on `qubit` of `n`; qubit 0 is the leftmost tensor factor.
inline Matrix embed(const Matrix &g, std::size_t qubit, std::size_t n) {
    Matrix out = {{1.0}};
    for (std::size_t q = 0; q < n; ++q) {
        out = kron(out, q == qubit ? g : identity(2));
    }
    return out;
}

inline Matrix cz(std::size_t a, std::size_t b, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix out = identity(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const bool ba = (i >> (n - 1 - a)) & 1U;
        const bool bb = (i >> (n - 1 - b)) & 1U;
        if (ba && bb) {
            out[i][i] = -1.0;
        }
    }
    return out;
}

inline std::vector<double> basis(std::size_t dim, std::size_t index) {
    std::vector<double> v(dim, 0.0);
    v[index] = 1.0;
    return v;
}

inline std::vector<double> squares(const std::vector<double> &amps) {
    std::vector<double> p(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[i] = amps[i] * amps[i];
    }
    return p;
}

/// sum_i x_i ln(x_i / max(m_i, eps)), skipping x_i == 0.
inline double kl(const std::vector<double> &x, const std::vector<double> &m, double eps = 1e-8) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) {
            const long double mi = m[i] > eps ? m[i] : eps;
            acc += static_cast<long double>(x[i]) * std::log(static_cast<long double>(x[i]) / mi);
        }
    }
    return static_cast<double>(acc);
}

inline double js(const std::vector<double> &p, const std::vector<double> &q) {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const long double m = 0.5L * (static_cast<long double>(p[i]) + q[i]);
        if (p[i] > 0.0) {
            acc += 0.5L * p[i] * std::log(p[i] / m);
        }
        if (q[i] > 0.0) {
            acc += 0.5L * q[i] * std::log(q[i] / m);
        }
    }
    return static_cast<double>(acc);
}

/// The six 2x2 bars-and-stripes bitstrings, uniform.
inline std::vector<double> bas22() {
    std::vector<double> t(16, 0.0);
    for (unsigned v : {0b0000U, 0b1111U, 0b1100U, 0b0011U, 0b1010U, 0b0101U}) {
        t[v] = 1.0 / 6.0;
    }
    return t;
}

} // namespace oracle
