// backhaul-lab — outage analysis for multi-hop hybrid THz/FSO backhaul networks
// Copyright (C) 2026 the backhaul-lab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Double-exponential (tanh-sinh / exp-sinh) quadrature.  Every integrand in
// this project has power-law endpoint behaviour (fading PDFs near zero,
// convolution kernels at both ends), which the DE transform absorbs without
// subdivision heuristics.

#ifndef BACKHAUL_QUADRATURE_HPP
#define BACKHAUL_QUADRATURE_HPP

#include <cmath>
#include <limits>

namespace backhaul {
namespace quad {

// Integrate f over the finite interval (a, b).  Integrable endpoint
// singularities (x^{-c}, c < 1) are fine; f is never evaluated at a or b.
template <typename F>
double tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-10) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    if (half == 0.0) return 0.0;

    const double pi_half = 1.5707963267948966;
    double sum = pi_half * f(mid);  // t = 0 node, weight pi/2
    if (!std::isfinite(sum)) sum = 0.0;
    double h = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= 11; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1;; k += 2) {
            const double t = k * h;
            const double u = pi_half * std::sinh(t);
            if (u > 340.0) break;
            const double ch = std::cosh(u);
            const double w = pi_half * std::cosh(t) / (ch * ch);
            const double d = half / (0.5 * (1.0 + std::exp(2.0 * u)));  // half*(1 - tanh u)
            double fp = f(b - d);
            double fm = f(a + d);
            if (!std::isfinite(fp)) fp = 0.0;
            if (!std::isfinite(fm)) fm = 0.0;
            add += w * (fp + fm);
            if (t > 6.5) break;
        }
        sum = 0.5 * sum + add;  // halving h re-uses all previous nodes
        const double value = sum * h * half;
        if (level >= 4 && std::abs(value - prev) <= rel_tol * std::abs(value)) return value;
        prev = value;
    }
    return prev;
}

// Integrate f over (a, +inf); f must decay fast enough to be integrable and
// may have an integrable singularity at a.
template <typename F>
double exp_sinh(F&& f, double a, double rel_tol = 1e-10) {
    const double pi_half = 1.5707963267948966;
    auto g = [&](double t) {
        const double u = pi_half * std::sinh(t);
        if (u > 700.0 || u < -700.0) return 0.0;
        const double ex = std::exp(u);
        double v = f(a + ex);
        if (!std::isfinite(v)) v = 0.0;
        return v * ex * pi_half * std::cosh(t);
    };
    double sum = g(0.0);
    double h = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= 11; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (int k = 1;; k += 2) {
            const double t = k * h;
            add += g(t) + g(-t);
            if (t > 6.8) break;
        }
        sum = 0.5 * sum + add;
        const double value = sum * h;
        if (level >= 4 && std::abs(value - prev) <= rel_tol * std::abs(value)) return value;
        prev = value;
    }
    return prev;
}

}  // namespace quad
}  // namespace backhaul

#endif  // BACKHAUL_QUADRATURE_HPP
