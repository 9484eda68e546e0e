#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wpl/bundles.hpp"
#include "wpl/stable.hpp"

namespace wpl {

/// One applied inference step. `rule` is the fixed rule name, `anchor` the
/// mathematical fact the step rests on, `detail` the instance data; steps
/// that close a value carry it in `value`.
struct TraceStep {
    std::string rule;
    std::string anchor;
    std::string detail;
    std::optional<long long> value;
};

/// Outcome of a dimension query. Unknown (no value) is a legal result: the
/// engine only reports what its rules close, it never guesses.
struct HomResult {
    std::optional<long long> value;
    std::vector<TraceStep> trace;

    bool closed() const { return value.has_value(); }
};

/// Rule-based calculator for Hom dimensions in the sheaf category and the
/// stable category. Queries are pure; the engine only caches closed values,
/// so independent engines always agree.
///
/// Sheaf-level rules, in fixed precedence:
///   R0 line-line base case        dim Hom(O(x),O(y)) = dim S_{y-x}
///   R1 slope gap                  mu(X) > mu(Y) forces 0
///   R2 tube orthogonality         equal slope, distinct known tubes
///   R3 Serre flip                 Ext1(X,Y) = D Hom(Y, X(w))
///   R4 Euler closure              hom = <[X],[Y]> + ext1 when ext1 closes
///   R5 Auslander degree count     Hom out of / into an Auslander bundle
///   R6 tube hammock               self-Hom and Hom to the w-twist
///   R7 long exact Hom sequence    along a catalogued non-split sequence
///
/// Stable-level rules:
///   S0 line summands vanish; shift normalization and catalogued shift
///   realization; S1 slope gap after shifting; S2 the two distinguished
///   four-term sequences relating uHom to sheaf Homs; S4 one Serre flip.
class HomEngine {
public:
    HomResult hom(const BundleExpr& x, const BundleExpr& y);
    HomResult ext1(const BundleExpr& x, const BundleExpr& y);
    HomResult stable_hom(const StableObject& x, const StableObject& y);

    HomResult stable_hom(const BundleExpr& x, const BundleExpr& y) {
        return stable_hom(StableObject{x, 0}, StableObject{y, 0});
    }

private:
    HomResult hom_impl(const BundleExpr& x, const BundleExpr& y, int depth);
    HomResult hom_rules(const BundleExpr& x, const BundleExpr& y, int depth);
    HomResult ext1_impl(const BundleExpr& x, const BundleExpr& y, int depth);
    HomResult stable_impl(StableObject x, StableObject y, int depth, bool flipped);

    std::unordered_map<std::string, long long> memo_;
    std::unordered_map<std::string, long long> stable_memo_;
    std::unordered_set<std::string> busy_;

    static constexpr int depth_cap = 80;
};

} // namespace wpl
