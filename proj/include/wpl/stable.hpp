#pragma once

#include <optional>
#include <string>

#include "wpl/bundles.hpp"
#include "wpl/rational.hpp"

namespace wpl {

namespace detail {
// Raw branch formulas for the shift maps, exposed so tests can check that
// the two branches of each map agree on the shared boundary. Callers pass
// mu = n + q/p with 0 <= q/p < 1 and gcd(p,q) = 1.
Rational down_branch_low(long long n, long long q, long long p);  // 3q <= p
Rational down_branch_high(long long n, long long q, long long p); // 3q >= p
Rational up_branch_low(long long n, long long q, long long p);    // 3q <= 2p
Rational up_branch_high(long long n, long long q, long long p);   // 3q >= 2p
} // namespace detail

/// Slope of the shift [-1] of an object of the given slope.
/// Throws std::domain_error for an infinite slope.
Slope shift_slope_down(const Slope& mu);

/// Slope of the shift [1]; inverse of shift_slope_down.
Slope shift_slope_up(const Slope& mu);

/// n-fold iteration (down for negative n).
Slope shift_slope_iter(Slope mu, long long n);

/// A bundle placed in the stable category with a formal shift applied.
struct StableObject {
    BundleExpr base;
    long long shift{0};

    friend bool operator==(const StableObject&, const StableObject&) = default;
};

inline StableObject stable_object(const BundleExpr& b, long long n = 0) {
    return StableObject{b, n};
}

Slope slope(const StableObject& obj);

/// One catalogued realization step of the shift: a bundle isomorphic to
/// b[sign] in the stable category, when the catalogue provides one.
///
/// Extension bundles step by a branch twist b[1] = b(xj) with j != i; the
/// step prefers the smallest j whose bit is absent from the base (present,
/// when stepping down), so iterated steps walk through distinct branches.
/// A rank-three bundle steps up to an Auslander bundle. Other kinds, and
/// rank-three stepping down, have no catalogued realization.
std::optional<BundleExpr> realize_step(const BundleExpr& b, int sign);

/// Applies realize_step toward shift 0 as far as the catalogue allows;
/// the leftover shift stays symbolic (slope still tracked exactly).
StableObject shift_bundle(const BundleExpr& b, long long n);

/// Text form "<bundle>[n]", with "[n]" omitted when the shift is 0.
std::string to_string(const StableObject& obj);
StableObject parse_stable_object(const std::string& text);

} // namespace wpl
