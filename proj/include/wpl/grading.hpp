#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace wpl {

/// Raw integer word in the generators x1..x4 and c, before normalization.
struct RawElement {
    std::array<long long, 4> a{};
    long long m{0};
};

/// Element of the rank-one grading group generated by x1..x4 and c with the
/// relations 2*x1 = 2*x2 = 2*x3 = 2*x4 = c.
///
/// Every element has a unique normal form sum(l_i * x_i) + l*c with
/// l_i in {0,1} and l an arbitrary integer; only that normal form is stored.
class GradedElement {
public:
    GradedElement() = default;

    static GradedElement from_raw(const RawElement& raw);
    /// x_i, 1 <= i <= 4.
    static GradedElement generator(int i);
    /// c = 2*x_i.
    static GradedElement canonical();
    /// w = 2c - x1 - x2 - x3 - x4; satisfies 2w = 0.
    static GradedElement dualizing();

    const std::array<int, 4>& bits() const { return bits_; }
    int bit(int i) const { return bits_[static_cast<size_t>(i - 1)]; }
    long long c_coeff() const { return lc_; }

    /// Degree under the homomorphism sending each x_i to 1 (and c to 2).
    long long delta() const { return bits_[0] + bits_[1] + bits_[2] + bits_[3] + 2 * lc_; }

    /// x >= 0 in the partial order induced by the positive cone.
    bool effective() const { return lc_ >= 0; }

    friend GradedElement operator+(const GradedElement& x, const GradedElement& y);
    friend GradedElement operator-(const GradedElement& x, const GradedElement& y);
    GradedElement operator-() const;

    friend bool operator==(const GradedElement&, const GradedElement&) = default;
    friend std::strong_ordering operator<=>(const GradedElement&, const GradedElement&) = default;

private:
    std::array<int, 4> bits_{};
    long long lc_{0};
};

inline long long delta(const GradedElement& x) { return x.delta(); }
inline bool is_effective(const GradedElement& x) { return x.effective(); }

/// x <= y in the partial order, i.e. y - x is effective.
inline bool leq(const GradedElement& x, const GradedElement& y) { return (y - x).effective(); }

/// All normal forms of a given delta-degree. The fiber always has exactly
/// eight elements: the eight bit patterns whose bit sum matches d modulo 2.
std::vector<GradedElement> delta_fiber(long long d);

/// Text form, e.g. "x1+x3-2*c"; the zero element prints as "0".
std::string to_string(const GradedElement& x);

/// Parses ["-"] term {("+"|"-") term} with term = [int "*"] gen and
/// gen in {x1, x2, x3, x4, c, w}; "0" is accepted for the zero element.
/// Throws std::invalid_argument on malformed input.
GradedElement parse_element(const std::string& text);

struct GradedElementHash {
    size_t operator()(const GradedElement& x) const {
        size_t h = std::hash<long long>{}(x.c_coeff());
        for (int i = 1; i <= 4; ++i) h = h * 31 + static_cast<size_t>(x.bit(i));
        return h;
    }
};

} // namespace wpl
