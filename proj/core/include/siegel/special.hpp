#pragma once

#include <complex>

namespace siegel {

using Complex = std::complex<double>;

// Principal branch of log Gamma (Lanczos, reflection for Re z < 1/2).
Complex log_gamma(Complex z);
Complex gamma(Complex z);
// Riemann zeta by Euler-Maclaurin summation; s != 1.
Complex zeta(Complex s);
// xi(s) = pi^{-s/2} Gamma(s/2) zeta(s).
Complex xi(Complex s);

}  // namespace siegel
