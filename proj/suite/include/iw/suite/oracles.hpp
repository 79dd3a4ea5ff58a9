#pragma once

// Reference computations that share no code path with the library routines they check.

#include "iw/eisenstein.hpp"

namespace iw::oracle {

/// Generalized Bernoulli number B_{k,psi} read off sum_a psi(a) t e^{at} / (e^{Nt} - 1).
Cyclo generalized_bernoulli(long k, const DirichletCharacter& psi);

/// L(1 - k, psi) = -B_{k,psi} / k with psi taken as a function on Z / NZ.
Cyclo L_value(long k, const DirichletCharacter& psi);

/// sum_{d | n} psi(d) d^{k-1}.
Cyclo divisor_sum(long n, long k, const DirichletCharacter& psi);

/// The Euler factor product typed in directly from its case table.
Cyclo euler_factor(const EulerInputs& in);

/// Rational Bernoulli numbers from the Akiyama-Tanigawa algorithm (B_1 = +1/2 there, flipped here).
Q bernoulli(long n);

}  // namespace iw::oracle
