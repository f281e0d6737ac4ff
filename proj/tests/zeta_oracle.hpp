#pragma once

// Euler-Maclaurin for zeta in binary128 with a longer partial sum and fifteen
// Bernoulli corrections. Shares nothing with the library's evaluator.

#include <quadmath.h>

#include <cmath>
#include <complex>

namespace oracle {

inline std::complex<double> zeta_quad(double sigma_d, double t_d) {
  static const long double kB[15][2] = {
      {1, 6},       {-1, 30},          {1, 42},          {-1, 30},    {5, 66},         {-691, 2730},
      {7, 6},       {-3617, 510},      {43867, 798},     {-174611, 330}, {854513, 138}, {-236364091, 2730},
      {8553103, 6}, {-23749461029.0L, 870}, {8615841276005.0L, 14322}};
  const __float128 sigma = sigma_d, t = t_d;
  const long N = 60 + static_cast<long>(std::fabs(t_d));
  __complex128 s;
  __real__ s = sigma;
  __imag__ s = t;
  __complex128 sum = 0;
  for (long n = 1; n < N; ++n) sum += cexpq(-s * logq(static_cast<__float128>(n)));
  const __float128 Nq = N;
  const __complex128 Ns = cexpq(-s * logq(Nq));
  sum += Ns * Nq / (s - 1) + Ns / 2;
  __complex128 rising = s, power = Ns / Nq;
  __float128 fact = 2;  // (2k)!
  for (int k = 0; k < 15; ++k) {
    const __float128 b = static_cast<__float128>(kB[k][0]) / static_cast<__float128>(kB[k][1]);
    sum += b / fact * rising * power;
    rising *= (s + (2 * k + 1)) * (s + (2 * k + 2));
    power /= Nq * Nq;
    fact *= static_cast<__float128>((2 * k + 3)) * (2 * k + 4);
  }
  return {static_cast<double>(crealq(sum)), static_cast<double>(cimagq(sum))};
}

}  // namespace oracle
