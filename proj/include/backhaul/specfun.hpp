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

#ifndef BACKHAUL_SPECFUN_HPP
#define BACKHAUL_SPECFUN_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace backhaul {
namespace specfun {

// Thrown when a Meijer-G instance falls outside the supported shape classes.
struct unsupported_instance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a parameter combination admits no convergent evaluation path.
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// log Gamma(x), x > 0.  Lanczos approximation, relative error below 1e-13.
double ln_gamma(double x);

// log |Gamma(x)| for any non-pole real x; *sign receives the sign of Gamma(x).
double log_abs_gamma(double x, int* sign);

// Gamma(x) for any real x that is not a non-positive integer.
double gamma_fn(double x);

double erf(double x);

// Beta(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), a, b > 0.
double beta(double a, double b);

enum class GammaKind { upper, lower };

// Un-regularized incomplete gamma: Gamma(a,x) (upper) or gamma(a,x) (lower).
// Requires a > 0, x >= 0.  The two kinds sum to Gamma(a).
double incomplete_gamma(GammaKind kind, double a, double x);

// Upper incomplete gamma extended to any real `a` (including negative
// non-integers), x > 0.  The THz SNR distribution needs this whenever the
// misalignment exponent exceeds the fading exponent.
double upper_inc_gamma_ext(double a, double x);

// log of upper_inc_gamma_ext (the value is positive for x > 0).  Safe for
// parameter ranges where the plain value under/overflows.
double log_upper_inc_gamma_ext(double a, double x);

// Modified Bessel function of the second kind K_nu(x), x > 0, symmetric in nu.
double bessel_k(double nu, double x);

// log Gamma(z) for complex z (principal value up to multiples of 2*pi*i in
// the imaginary part, which callers remove by exponentiating).
std::complex<double> ln_gamma_complex(std::complex<double> z);

// Meijer-G instance descriptor.  `a` holds the p numerator parameters
// (a_1..a_n "top-left", a_{n+1}..a_p "top-right"), `b` the q denominator
// parameters (b_1..b_m "bottom-left", b_{m+1}..b_q "bottom-right").
struct MeijerGSpec {
    int m = 0, n = 0, p = 0, q = 0;
    std::vector<double> a;
    std::vector<double> b;
};

enum class MeijerGMethod {
    automatic,      // Slater series with fallback to the contour integral
    slater,         // residue series (requires convergence and low cancellation)
    mellin_barnes,  // numerical contour integral (the oracle path)
};

// Evaluate G^{m,n}_{p,q}[z | a ; b] for z > 0 within the supported shape
// classes: G^{3,0}_{1,3}, G^{3,1}_{2,4}, G^{6,1}_{3,7}, G^{2,1}_{2,3},
// G^{1,0}_{0,1}, G^{2,0}_{0,2}.
double meijer_g(const MeijerGSpec& spec, double z,
                MeijerGMethod method = MeijerGMethod::automatic);

// Shift members of `b` that collide (pairwise difference within `tol` of an
// integer) by k*1e-9, k = 1-based collision index.  Keeps the Slater residue
// series away from its logarithmic cases.
void perturb_integer_collisions(std::vector<double>& b, double tol = 1e-6);

}  // namespace specfun
}  // namespace backhaul

#endif  // BACKHAUL_SPECFUN_HPP
