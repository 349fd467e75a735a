#pragma once

#include "gradecs/endoscopy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradecs {

struct VerificationRecord {
    std::string case_key;
    std::string claim;
    std::string subject;  // e.g. "chi_2" or "chi(z)=1/2"; empty for whole-case checks
    CheckStatus status = CheckStatus::unchecked;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    int rank_bound = 8;
    std::int64_t weyl_oracle_bound = 500000;
    std::string claim_prefix;             // empty selects every claim
    std::optional<GradingDescriptor> only_case;
    unsigned workers = 0;                 // 0: hardware concurrency
};

// Bound for the brute-force Weyl oracle: GRADECS_MAX_WEYL_ORACLE if set, else the fallback.
std::int64_t weyl_oracle_bound_from_env(std::int64_t fallback = 500000);

// Claim id prefixes understood by run_verification, in output order.
const std::vector<std::string>& claim_catalog();
bool claim_selected(const std::string& prefix, const std::string& claim);

// Stable gradings covered by the sweep: classical types up to the bound plus the exceptional rows.
std::vector<GradingDescriptor> verification_sweep(int rank_bound);

// Records in a fixed order independent of the worker count.
std::vector<VerificationRecord> run_verification(const VerifyOptions& opt);

struct VerificationSummary {
    std::size_t pass = 0, fail = 0, unchecked = 0;
};
VerificationSummary summarize(const std::vector<VerificationRecord>& records);

} // namespace gradecs
