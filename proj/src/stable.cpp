#include "wpl/stable.hpp"

#include <cctype>
#include <stdexcept>

namespace wpl {

namespace detail {

Rational down_branch_low(long long n, long long q, long long p) {
    return Rational(n) - Rational(4 * p - 11 * q, 3 * p - 8 * q);
}

Rational down_branch_high(long long n, long long q, long long p) {
    return Rational(n) + Rational(q, p - 4 * q);
}

Rational up_branch_low(long long n, long long q, long long p) {
    return Rational(n) + Rational(4 * p - 5 * q, 3 * p - 4 * q);
}

Rational up_branch_high(long long n, long long q, long long p) {
    return Rational(n) + Rational(12 * p - 19 * q, 5 * p - 8 * q);
}

namespace {

// Splits mu as n + q/p with 0 <= q/p < 1; the Rational invariant keeps
// gcd(p, q) = 1 and p > 0.
struct SlopeParts {
    long long n, q, p;
};

SlopeParts split(const Slope& mu, const char* op) {
    if (mu.infinite()) throw std::domain_error(std::string(op) + " of infinite slope");
    const Rational& v = mu.value();
    long long n = v.floor();
    Rational frac = v - Rational(n);
    return SlopeParts{n, frac.num, frac.den};
}

} // namespace

} // namespace detail

Slope shift_slope_down(const Slope& mu) {
    auto [n, q, p] = detail::split(mu, "shift [-1]");
    if (3 * q <= p) return Slope::finite(detail::down_branch_low(n, q, p));
    return Slope::finite(detail::down_branch_high(n, q, p));
}

Slope shift_slope_up(const Slope& mu) {
    auto [n, q, p] = detail::split(mu, "shift [1]");
    if (3 * q <= 2 * p) return Slope::finite(detail::up_branch_low(n, q, p));
    return Slope::finite(detail::up_branch_high(n, q, p));
}

Slope shift_slope_iter(Slope mu, long long n) {
    for (; n > 0; --n) mu = shift_slope_up(mu);
    for (; n < 0; ++n) mu = shift_slope_down(mu);
    return mu;
}

Slope slope(const StableObject& obj) { return shift_slope_iter(slope(obj.base), obj.shift); }

std::optional<BundleExpr> realize_step(const BundleExpr& b, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("realize_step sign must be +1 or -1");
    switch (b.kind) {
        case BundleKind::extension: {
            // b[1] = b(xj) for any branch j != i; prefer a j not yet present
            // in the base so iterated steps match the multi-branch twists.
            int wanted_bit = (sign == 1) ? 0 : 1;
            int j = 0;
            for (int cand = 1; cand <= 4; ++cand) {
                if (cand == b.index) continue;
                if (b.base.bit(cand) == wanted_bit) { j = cand; break; }
            }
            if (j == 0) j = (b.index == 1) ? 2 : 1;
            GradedElement xj = GradedElement::generator(j);
            GradedElement next = (sign == 1) ? b.base + xj : b.base - xj;
            return extension_bundle(next, b.index);
        }
        case BundleKind::rank_three: {
            if (sign != 1) return std::nullopt;
            GradedElement up = GradedElement::dualizing() + GradedElement::canonical() + b.base;
            return auslander_bundle(up);
        }
        default:
            return std::nullopt;
    }
}

StableObject shift_bundle(const BundleExpr& b, long long n) {
    StableObject obj{b, n};
    while (obj.shift != 0) {
        int sign = obj.shift > 0 ? 1 : -1;
        auto stepped = realize_step(obj.base, sign);
        if (!stepped) break;
        obj.base = *stepped;
        obj.shift -= sign;
    }
    return obj;
}

std::string to_string(const StableObject& obj) {
    std::string out = to_string(obj.base);
    if (obj.shift != 0) out += "[" + std::to_string(obj.shift) + "]";
    return out;
}

StableObject parse_stable_object(const std::string& text) {
    std::string s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    long long shift = 0;
    if (!s.empty() && s.back() == ']') {
        size_t open = s.rfind('[');
        if (open == std::string::npos)
            throw std::invalid_argument("bad stable object '" + text + "': unmatched ']'");
        std::string inner = s.substr(open + 1, s.size() - open - 2);
        try {
            size_t used = 0;
            shift = std::stoll(inner, &used);
            if (used != inner.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad stable object '" + text + "': bad shift '" + inner + "'");
        }
        s = s.substr(0, open);
    }
    return StableObject{parse_bundle(s), shift};
}

} // namespace wpl
