#ifndef BLOCKSPEC_VERIFY_HPP
#define BLOCKSPEC_VERIFY_HPP

#include "blockspec/block_graph.hpp"
#include "blockspec/order.hpp"
#include "blockspec/spectral.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blockspec {

enum class ClaimStatus { Pass, Fail, Undecided, Skip };

const char* to_string(ClaimStatus s);

struct ClaimResult {
    std::string claim;  // max-star, min-path, path-dominates, lower-bound, identity:<name>
    int q = 0;
    int b = 0;
    int n = 0;
    long graphs = 0;  // class size, or instances for identities
    ClaimStatus status = ClaimStatus::Pass;
    std::string detail;
    std::optional<BlockGraph> witness;
};

struct VerifyConfig {
    std::vector<int> qs{2, 3, 4};
    std::vector<int> bs{1, 2, 3, 4};
    Rational width = default_width();
    int jobs = 1;
    std::uint64_t seed = 1;
    int identity_samples = 5;  // 0 skips the identity suite
    int order_budget = kDefaultOrderBudget;
};

struct VerifyReport {
    VerifyConfig config;
    std::vector<ClaimResult> claims;

    // 0 all pass, 2 some claim fails, 3 some claim undecided (and none fails).
    int exit_code() const;
};

inline constexpr int kVerifyCsvVersion = 1;

// The four class claims for one (q, b): unique maximizer S(n, q), unique
// minimizer P^q_b with margin > 1e-8, G < P^q_b for every other member, and
// rho >= lower_bound(q) - 1e-9 when n - 1 > q.
std::vector<ClaimResult> verify_class(int q, int b, const Rational& width, int jobs = 1,
                                      int order_budget = kDefaultOrderBudget);

// Every identity on `samples` random instances drawn from one generator
// seeded with `seed`.
std::vector<ClaimResult> verify_identities(std::uint64_t seed, int samples);

VerifyReport run_verify(const VerifyConfig& config);

std::string render_csv(const VerifyReport& report);
std::string render_json(const VerifyReport& report);
std::string render_text(const VerifyReport& report);

}  // namespace blockspec

#endif  // BLOCKSPEC_VERIFY_HPP
