#pragma once

namespace bergtop {

// Generalized exponential integral E_n(x) = int_1^inf exp(-x u) u^(-n) du
// for integer n >= 2 and real x >= 0.
//
// Evaluation: E_n(0) = 1/(n-1) exactly; a modified Lentz continued fraction
// for x >= 1; the classical power series (with the logarithmic term) for
// 0 < x < 1.  Should either iteration fail to converge, the definition is
// integrated directly as a fallback.  Relative accuracy is ~1e-14 over the
// supported range.
//
// Throws std::invalid_argument for n < 2 or x < 0 or non-finite x.
double expint_en(int n, double x);

}  // namespace bergtop
