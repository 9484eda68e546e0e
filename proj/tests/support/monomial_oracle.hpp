#pragma once

#include <wpl/grading.hpp>

namespace wpl::testing {

/// Independent dimension count for a homogeneous component of the section
/// ring, used to cross-check the closed-form dim_s.
///
/// Works directly with monomials: every monomial of group degree x has total
/// exponent delta(x), so the oracle enumerates all exponent vectors of that
/// total degree, keeps the ones of group degree x, and rewrites each one
/// modulo the two defining quadric relations
///
///     t3^2 -> t1^2 + t2^2,      t4^2 -> t2^2 + lambda * t1^2
///
/// into a combination of reduced monomials (third and fourth exponents at
/// most one) with coefficients in the polynomial ring over the symbolic
/// parameter. The rewriting terminates because each step lowers the combined
/// third/fourth exponent, and the two left-hand sides do not overlap, so
/// normal forms are unique. Every reduced monomial of degree x occurs among
/// the enumerated monomials and rewrites to itself, so the rows span the
/// full space of reduced monomials of degree x; the oracle verifies that
/// unit-row property and returns the number of distinct reduced monomials.
///
/// Throws std::invalid_argument when delta(x) exceeds the bound, to keep
/// enumeration sizes intentional. Negative delta(x) gives 0.
long long dim_s_oracle(const GradedElement& x, long long bound);

} // namespace wpl::testing
