#pragma once

#include <array>
#include <string>

#include "wpl/grading.hpp"
#include "wpl/rational.hpp"

namespace wpl {

/// Class in the Grothendieck lattice, written over the ordered basis
/// B = ([O(0)], [O(x1)], [O(x2)], [O(x3)], [O(x4)], [O(c)]).
struct K0Class {
    std::array<long long, 6> coeff{};

    friend bool operator==(const K0Class&, const K0Class&) = default;

    K0Class& operator+=(const K0Class& o);
    K0Class& operator-=(const K0Class& o);
    friend K0Class operator+(K0Class a, const K0Class& b) { return a += b; }
    friend K0Class operator-(K0Class a, const K0Class& b) { return a -= b; }
    K0Class operator-() const;
    friend K0Class operator*(long long s, K0Class a);

    bool is_zero() const { return *this == K0Class{}; }
};

/// rank is additive and equals 1 on every line-bundle class, so on B it is
/// the coefficient sum.
long long rank(const K0Class& a);

/// degree is the additive functional with deg [O(x)] = delta(x), so on B it
/// pairs with (0, 1, 1, 1, 1, 2).
long long degree(const K0Class& a);

/// degree/rank; infinity for nonzero classes of rank 0.
/// Throws std::domain_error for the zero class.
Slope slope(const K0Class& a);

/// The Euler form matrix over B: entry (i,j) is <b_i, b_j>.
std::array<std::array<long long, 6>, 6> euler_gram();

/// <a, b> = hom - ext1 between classes (the derived pairing).
long long euler_form(const K0Class& a, const K0Class& b);

/// Class of the line bundle O(x), reduced to the basis B.
K0Class line_bundle_class(const GradedElement& x);

/// The twist [F] -> [F(w)] induced by the Auslander-Reiten translation;
/// an involution on the lattice.
K0Class tau(const K0Class& a);

/// Class of the simple sheaf concentrated at the i-th ramified point:
/// parity 0 gives [S_i] = [O(x_i)] - [O(0)], parity 1 gives
/// [S_i'] = [O(c)] - [O(x_i)].
K0Class exceptional_simple_class(int i, int parity);

/// Class of a full fiber of a tube: [O(c)] - [O(0)], of rank 0 and degree 2.
K0Class tube_fiber_class();

/// Text form over B, e.g. "[O(0)]+2*[O(x1)]-[O(c)]"; zero prints as "0".
std::string to_string(const K0Class& a);

/// Parses an integer combination of terms "[O(<element>)]"; the elements are
/// reduced to B on the fly. "0" is accepted for the zero class.
/// Throws std::invalid_argument on malformed input.
K0Class parse_class_expr(const std::string& text);

} // namespace wpl
