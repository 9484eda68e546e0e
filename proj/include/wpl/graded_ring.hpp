#pragma once

#include <string>

#include "wpl/grading.hpp"

namespace wpl {

/// The base parameter of the coordinate ring. It is kept strictly symbolic:
/// the relations are x3^2 = x1^2 + x2^2 and x4^2 = x2^2 + lambda*x1^2, and
/// every computation in this library is valid for any value of lambda other
/// than 0 and 1. No code path ever substitutes a number for it.
struct FormalLambda {
    std::string name{"lambda"};
};

/// Dimension of the homogeneous component of the coordinate ring in degree x.
///
/// A component is nonzero exactly when x is effective, and its dimension then
/// depends only on the c-part of the normal form: reduced monomials of degree
/// x are x1^a * x2^b * x3^e3 * x4^e4 with e3, e4 in {0,1}, the e's and the
/// parities of a, b pinned by the bits of x, and a+b filling up the rest.
/// That leaves exactly l+1 choices where l is the c-coefficient of x.
inline long long dim_s(const GradedElement& x) {
    return x.effective() ? x.c_coeff() + 1 : 0;
}

} // namespace wpl
