#pragma once

#include <array>
#include <string>
#include <vector>

#include "wpl/graded_ring.hpp"
#include "wpl/hom_engine.hpp"

namespace wpl {

/// The two candidate tilting objects: T = E + E1..E4 + F and
/// Tprime = F(w)[-1] + E + E1..E4, where E is the Auslander bundle of O,
/// Ei the branch extensions of O, and F the rank-three bundle.
enum class TiltingKind { T, Tprime };

struct MatrixCell {
    int from{0};
    int to{0};
    long long n{0};
    HomResult result;
};

/// Per-pair vanishing certificate for the shifts outside the window: at the
/// first off-window shift the relevant slope gap already holds, and each
/// further shift moves the slopes monotonically apart.
struct SlopeCertificate {
    int from{0};
    int to{0};
    std::string side;            // "positive" or "negative"
    long long first_off_window{0};
    std::string detail;
    bool holds{false};
};

/// Dimension skeleton of the expected endomorphism algebra.
struct CanonicalAlgebraSpec {
    std::array<int, 4> weights{2, 2, 2, 2};
    int vertices{6};
    int arrows{0};
    int relation_count{0};
    int independent_two_paths{0};
    std::string relation_note;

    long long total_dimension() const {
        return vertices + arrows + independent_two_paths;
    }
};

CanonicalAlgebraSpec canonical_algebra_spec(TiltingKind kind,
                                            const FormalLambda& lambda = FormalLambda{});

struct TiltingReport {
    TiltingKind kind{TiltingKind::T};
    std::vector<StableObject> summands;
    long long window{0};
    std::vector<MatrixCell> cells;
    std::array<std::array<long long, 6>, 6> endo{};
    std::vector<SlopeCertificate> certificates;
    std::string verdict; // "verified" | "failed" | "inconclusive"
    std::vector<std::string> problems;
    std::string relation_note;

    bool verified() const { return verdict == "verified"; }
    long long endo_total() const;
};

/// Checks uHom(Ti, Tj[n]) over |n| <= window against the expected pattern
/// (identity diagonal, the arrow/relation counts at n = 0, zero elsewhere)
/// and certifies vanishing beyond the window. Throws std::invalid_argument
/// for window < 2 (certificates need at least that much room).
TiltingReport verify_tilting(TiltingKind kind, long long window = 5);

/// The expected n=0 dimension table for the given object, in summand order.
std::array<std::array<long long, 6>, 6> expected_endo_table(TiltingKind kind);

struct ScanReport {
    long long twist_window{0};
    long long bundle_count{0};
    long long pair_count{0};
    long long closed_count{0};
    long long unknown_count{0};
    std::vector<std::string> violations; // closed pairs with dim > 1
    std::vector<std::string> unknown_samples;

    double unknown_rate() const {
        return pair_count == 0 ? 0.0
                               : static_cast<double>(unknown_count) / static_cast<double>(pair_count);
    }
};

/// Enumerates the catalogued rank-two bundles over all base twists L with
/// |delta(L)| <= K and |c-coefficient| <= K and checks dim uHom <= 1 on
/// every ordered pair the engine closes.
ScanReport rank_two_scan(long long twist_window);

struct SlopeNormalization {
    long long n1{0};
    Slope normalized;
};

/// Finds n1 with shift_slope_iter(mu, n1) in [0, 4/3). Each up step from a
/// negative slope and each down step from a slope >= 4/3 moves by at least 1
/// toward the window, so the loop terminates within 4*(|floor(mu)| + 2)
/// steps. Throws std::domain_error for an infinite slope.
SlopeNormalization slope_normalize(const Slope& mu);

std::string to_string(TiltingKind kind);

} // namespace wpl
