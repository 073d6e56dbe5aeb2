#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pernull/corpus.hpp"
#include "pernull/graph.hpp"

namespace pernull {

/// One theorem or invariant evaluated graph by graph.
struct CheckInfo {
    std::string_view name;
    std::string_view description;
};

/// Registered checks, in reporting order.
const std::vector<CheckInfo>& available_checks();

/// Verdict of a single check on a single graph. Checks whose hypotheses the
/// graph does not meet (wrong shape, or beyond an oracle's size guard) skip.
struct CheckOutcome {
    enum class Status { Pass, Fail, Skip } status = Status::Skip;
    std::string expected;
    std::string got;

    static CheckOutcome pass() { return {Status::Pass, {}, {}}; }
    static CheckOutcome skip() { return {Status::Skip, {}, {}}; }
    static CheckOutcome fail(std::string expected, std::string got) {
        return {Status::Fail, std::move(expected), std::move(got)};
    }
};

/// Runs one named check. Throws ArgumentError for unknown names.
CheckOutcome run_check(std::string_view name, const Graph& g);

struct CheckTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct Failure {
    std::string graph;  // graph6, or an edge list above 62 vertices
    std::string check;
    std::string expected;
    std::string got;

    friend auto operator<=>(const Failure&, const Failure&) = default;
};

inline constexpr std::size_t kFailureCap = 100;

struct VerifyResult {
    CorpusSpec corpus;
    std::size_t graphs = 0;
    std::map<std::string, CheckTally> checks;
    std::vector<Failure> failures;  // sorted, at most kFailureCap
    std::size_t failure_total = 0;
    bool truncated = false;

    bool ok() const noexcept { return failure_total == 0; }
};

struct VerifyOptions {
    std::size_t threads = 1;
    std::size_t batch = 2048;
};

/// Streams the corpus and applies every named check to every graph. An empty
/// check list means all checks. Counts and failures do not depend on thread
/// count: failures are sorted and the first kFailureCap kept.
VerifyResult run_verification(const CorpusSpec& spec, const std::vector<std::string>& checks,
                              const VerifyOptions& options = {});

/// Human-readable summary table.
std::string format_table(const VerifyResult& result);

}  // namespace pernull
