#pragma once

/**
 * @file claims.hpp
 * @brief Static registry of checkable claims and the ClaimReport format.
 *
 * Every claim id maps to a handler, a table of default parameters and an
 * anchor string naming the statement it verifies. Reports are deterministic
 * given the parameters apart from elapsed_ms.
 */

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ufdlab/caps.hpp"
#include "ufdlab/constructions.hpp"

namespace ufdlab {

#ifndef UFDLAB_VERSION
#define UFDLAB_VERSION "0.0.0"
#endif

/// Unknown claim id or invalid parameters; maps to CLI exit code 3.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Result of a handler before timing and bookkeeping are attached.
struct ClaimOutcome {
    Verdict status = Verdict::Unknown;
    nlohmann::json witness;
    /// Search bound behind an unknown or truncated verdict.
    std::optional<long long> bound;
};

struct ClaimInfo {
    std::string id;
    /// The statement checked, in words.
    std::string anchor;
    /// Parameter names with their defaults; other keys are rejected.
    nlohmann::json defaults;
    std::function<ClaimOutcome(const nlohmann::json&)> handler;
};

struct ClaimReport {
    std::string claim_id;
    nlohmann::json params;
    Verdict status = Verdict::Unknown;
    /// Integer bound, or "timeout".
    std::optional<std::variant<long long, std::string>> bound;
    nlohmann::json witness;
    long long elapsed_ms = 0;
    std::string tool_version = UFDLAB_VERSION;

    nlohmann::json to_json() const;
};

const std::vector<ClaimInfo>& claim_registry();
/// Throws UsageError for unknown ids.
const ClaimInfo& find_claim(const std::string& id);

struct RunOptions {
    /// Per-claim wall-clock budget; nullopt disables the deadline.
    std::optional<std::chrono::milliseconds> timeout = std::chrono::seconds(60);
};

/**
 * Merges `params` over the claim defaults and runs the handler.
 * Unknown ids, unknown parameter names and parameter errors raised by the
 * library throw UsageError with the original message. Cap overruns give
 * unknown with the cap as bound; an expired deadline gives unknown with
 * bound "timeout".
 */
ClaimReport run_claim(const std::string& id, const nlohmann::json& params, const RunOptions& options = {});

/// 0 all verified, 1 any refuted, 2 any unknown (none refuted).
int exit_code(const std::vector<ClaimReport>& reports);

}  // namespace ufdlab
