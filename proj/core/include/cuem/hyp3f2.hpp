#pragma once

#include "cuem/rational.hpp"

namespace cuem {

// Terminating 3F2(a1,a2,a3; b1,b2; z) as an exact finite Pochhammer sum. At
// least one upper parameter must be a non-positive integer; a lower parameter
// hitting a non-positive integer before the terminating index is a pole.
BigRational hyp3f2_exact(const BigRational& a1, const BigRational& a2, const BigRational& a3,
                         const BigRational& b1, const BigRational& b2, const BigRational& z);

// Forward summation in double precision with compensated accumulation, for
// z in [0,1]. Stops when the next term contributes < 1e-16 relative or the
// series terminates; at z = 1 a non-terminating series needs
// b1+b2-a1-a2-a3 > 0.
double hyp3f2_numeric(double a1, double a2, double a3, double b1, double b2, double z);

}  // namespace cuem
