#pragma once

// Test-side trivariate polynomial helpers: products of real linear forms
// (a x + b y + z) and the substitution z -> z + beta x + gamma y. Kept apart
// from the library so expected values come from an independent expansion.

#include <vector>

#include "hrnr/trivariate_poly.hpp"

namespace polytest {

using hrnr::TrivariatePoly;

/// Expands prod_t (a_t x + b_t y + z).
inline TrivariatePoly linear_product(const std::vector<std::pair<double, double>>& forms) {
    TrivariatePoly p(0);
    p.set_coeff(0, 0, 0, 1.0);
    for (const auto& [a, b] : forms) {
        TrivariatePoly q(p.degree() + 1);
        const int n = p.degree();
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j) {
                const double c = p.coeff(i, j, n - i - j);
                if (c == 0.0) continue;
                const int k = n - i - j;
                q.set_coeff(i + 1, j, k, q.coeff(i + 1, j, k) + a * c);
                q.set_coeff(i, j + 1, k, q.coeff(i, j + 1, k) + b * c);
                q.set_coeff(i, j, k + 1, q.coeff(i, j, k + 1) + c);
            }
        p = q;
    }
    return p;
}

/// p(x, y, z + beta x + gamma y), expanded by the multinomial theorem.
inline TrivariatePoly shift_z(const TrivariatePoly& p, double beta, double gamma) {
    const int n = p.degree();
    TrivariatePoly out(n);
    // binomial table
    std::vector<std::vector<double>> ch(n + 1, std::vector<double>(n + 1, 0.0));
    for (int i = 0; i <= n; ++i) {
        ch[i][0] = 1.0;
        for (int j = 1; j <= i; ++j)
            ch[i][j] = ch[i - 1][j - 1] + (j <= i - 1 ? ch[i - 1][j] : 0.0);
    }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j) {
            const int k = n - i - j;
            const double c = p.coeff(i, j, k);
            if (c == 0.0) continue;
            // (z + beta x + gamma y)^k = sum_{u+v+w=k} k!/(u!v!w!) beta^u gamma^v x^u y^v z^w
            for (int u = 0; u <= k; ++u)
                for (int v = 0; v <= k - u; ++v) {
                    const int w = k - u - v;
                    double coef = ch[k][u] * ch[k - u][v];
                    double bu = 1.0, gv = 1.0;
                    for (int t = 0; t < u; ++t) bu *= beta;
                    for (int t = 0; t < v; ++t) gv *= gamma;
                    const double add = c * coef * bu * gv;
                    out.set_coeff(i + u, j + v, w, out.coeff(i + u, j + v, w) + add);
                }
        }
    return out;
}

}  // namespace polytest
