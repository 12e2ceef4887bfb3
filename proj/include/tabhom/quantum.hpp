#pragma once

#include "tabhom/laurent_poly.hpp"

namespace tabhom {

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
LaurentPoly quantum_int(int n);

/// [n]! = [1][2]...[n]; [0]! = 1.
LaurentPoly quantum_factorial(int n);

/// Gaussian binomial coefficient as a polynomial in q; zero when r < 0 or
/// r > n.  Built from B(n,r) = B(n-1,r-1) + q^r B(n-1,r), never by division.
/// Results are memoised in a process-wide table (thread-safe).
LaurentPoly quantum_binomial(int n, int r);

}  // namespace tabhom
