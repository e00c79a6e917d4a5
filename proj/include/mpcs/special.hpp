#pragma once

namespace mpcs {

// upper regularized incomplete gamma Q(a,x), a > 0, x >= 0
double igamc(double a, double x);

// complementary error function built on igamc
double erfc(double x);

}  // namespace mpcs
