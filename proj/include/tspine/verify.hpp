#pragma once

// Numerical certification of the quantitative statements about the length
// functions, constants, spine arcs and the group action. Every claim is a
// floating point check at a stated tolerance, not an interval proof.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tspine/domain.hpp"
#include "tspine/geometry.hpp"

namespace tspine {

enum class ClaimStatus { Passed, Failed, Inconclusive };

std::string_view to_string(ClaimStatus s) noexcept;

struct ClaimResult {
    std::string claim_id;
    /// Empty for claims that range over several genera at once.
    std::optional<int> genus;
    bool passed = false;
    /// Failed region claims whose violation is below the grid resolution are
    /// reported as Inconclusive rather than Failed.
    ClaimStatus status = ClaimStatus::Failed;
    double worst_residual = 0.0;
    std::optional<CTPair> witness;
    std::string details;
};

struct VerifyConfig {
    std::vector<int> genus_list{2, 3, 5};
    /// Side of the region grids. Property grids use grid_n / 2 per side.
    int grid_n = 200;
    unsigned long long seed = 0;

    /// Throws std::invalid_argument on grid_n < 8, empty genus list or genus < 2.
    void validate() const;
};

class UnknownClaimError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Registered claim ids in report order.
std::vector<std::string> claim_ids();

/// Whether a claim is evaluated for genus g. Genus-independent claims report
/// true for every genus but run once.
bool claim_applies(std::string_view claim_id, int g);

/// Runs one claim for every applicable genus of cfg.genus_list (once for
/// genus-independent claims). Throws UnknownClaimError for unregistered ids.
std::vector<ClaimResult> run_claim(std::string_view claim_id, const VerifyConfig& cfg);

/// Runs one claim for one genus.
ClaimResult run_claim(std::string_view claim_id, Genus g, const VerifyConfig& cfg);

/// Every registered claim, ordered by claim id and then genus.
std::vector<ClaimResult> run_all(const VerifyConfig& cfg);

namespace sampling {

/// A point of F0 at distance > margin from its edges in both coordinate
/// systems, with c in [0.3, 3].
CTPair random_F0_interior(Genus g, std::mt19937_64& rng, double margin = 1e-3);

/// Uniform length in [0, max_len], letters uniform over the six generators.
MCGWord random_word(std::mt19937_64& rng, int max_len);

double uniform(std::mt19937_64& rng, double lo, double hi);

}  // namespace sampling

}  // namespace tspine
