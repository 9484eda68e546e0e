#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpl/grading.hpp"
#include "wpl/k0.hpp"
#include "wpl/rational.hpp"

namespace wpl {

enum class BundleKind {
    line,         // O(x)
    auslander,    // rank-2 middle term of the almost-split sequence ending in O(L)
    extension,    // rank-2 non-split extension of O(L+xi) by O(L+w)
    quasi_simple, // rank-2 w-fixed non-split extension of O(L+c) by O(L+w)
    rank_three,   // rank-3 non-split extension of Auslander(w+xj+t) by O(w+t)
};

/// Which tube of the stable translation quiver an object lives in, when the
/// catalogue pins it down. Only distinctness is ever consumed, and the
/// assignment stays deliberately conservative: kinds whose tube the
/// catalogue does not need are left unknown rather than inferred.
struct TubeId {
    enum class Kind { unknown, exceptional, homogeneous };
    Kind kind{Kind::unknown};
    int index{0}; // ramified point 1..4 when kind == exceptional

    friend bool operator==(const TubeId&, const TubeId&) = default;
};

/// A catalogued bundle. `base` is the line twist x for line bundles, the
/// base L for the rank-2 kinds, and the twist t for rank_three; `index` is
/// the branch i for extension bundles and the arm j for rank_three.
struct BundleExpr {
    BundleKind kind{BundleKind::line};
    GradedElement base;
    int index{0};

    friend bool operator==(const BundleExpr&, const BundleExpr&) = default;
};

BundleExpr line_bundle(const GradedElement& x);
BundleExpr auslander_bundle(const GradedElement& L);
BundleExpr extension_bundle(const GradedElement& L, int i);
/// Canonicalizes the base to min(L, L+w): the object is w-fixed, so both
/// bases name the same bundle.
BundleExpr quasi_simple_bundle(const GradedElement& L);
BundleExpr rank_three_bundle(int j = 1, const GradedElement& t = GradedElement{});

/// b(x), the line-bundle twist of b; quasi-simple bases re-canonicalize.
BundleExpr twist(const BundleExpr& b, const GradedElement& x);

long long rank(const BundleExpr& b);
K0Class k0_class(const BundleExpr& b);
long long degree(const BundleExpr& b);
Slope slope(const BundleExpr& b);
TubeId tube(const BundleExpr& b);

/// The catalogued non-split exact sequence 0 -> sub -> b -> quotient -> 0;
/// nullopt for line bundles. `sub` is always a line bundle.
struct DefiningSequence {
    BundleExpr sub;
    BundleExpr quotient;
};
std::optional<DefiningSequence> defining_sequence(const BundleExpr& b);

/// Direct sum of line bundles, reported by its twists.
struct CoverReport {
    std::vector<GradedElement> summands;
    long long total_rank() const { return static_cast<long long>(summands.size()); }
    long long total_degree() const;
};

/// Minimal projective cover in the distinguished exact structure.
/// Throws std::invalid_argument ("no cover formula") for kinds without a
/// catalogued formula (line, rank_three).
CoverReport projective_cover(const BundleExpr& b);

/// Minimal injective hull; catalogued for all kinds except line bundles.
/// Throws std::invalid_argument ("no cover formula") for line bundles.
CoverReport injective_hull(const BundleExpr& b);

/// Exceptionality test: Auslander bundles always; otherwise rank must equal
/// the denominator of the (non-integral) slope in lowest terms.
bool is_exceptional(const BundleExpr& b);

/// Grammar: O(<elt>) | E(<elt>) | E<<elt>;<i>> | Q(<elt>) | F(<j>,<elt>).
std::string to_string(const BundleExpr& b);
BundleExpr parse_bundle(const std::string& text);

} // namespace wpl
