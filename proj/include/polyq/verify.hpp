#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace polyq {

enum class ExecMode { Serial, Parallel };

struct VerificationFailure {
    std::string check;  // which law or comparison broke
    std::string tree;   // canonical form, empty when not tree-bound
    std::vector<int> input;
    std::string expected;
    std::string got;

    bool operator<(const VerificationFailure& o) const;
    bool operator==(const VerificationFailure& o) const = default;
};

// Deterministic verdict: same bounds, same report, byte for byte, regardless
// of execution mode or rerun. wall_seconds is the one nondeterministic field,
// so the canonical form leaves it out.
struct VerificationReport {
    std::string scope;
    int max_leaves = 0;
    int max_label = 0;
    long long tree_classes = 0;
    long long checks_run = 0;
    std::vector<VerificationFailure> failures;  // sorted; first is minimal
    double wall_seconds = 0.0;

    bool pass() const { return failures.empty(); }
    nlohmann::json to_json(bool include_timing = true) const;
};

// The headline check: for every trivalent tree with up to max_leaves leaves
// and every boundary tuple (d; c) in {0..max_label}^{n+1}, the labeling count
// and the tensor multiplicity agree exactly. Serial mode is the reference
// implementation; Parallel fans the (tree, input) grid out across OpenMP
// threads and merges failures deterministically.
VerificationReport check_agreement(int max_leaves, int max_label,
                                   ExecMode mode = ExecMode::Parallel);

// operad laws on elements built from the Clebsch-Gordan rule and small
// labeling-count images: the three composition associativity cases, both
// unit laws, and the matching grafting identities on trees
VerificationReport check_operad_laws(int max_label = 3);

// caterpillar counts: recurrence vs direct evaluation for 4 <= n <= max_n,
// 0 <= i <= n+2, plus the one-step expansion through the arity-2 kernel
// [|i-1| <= k <= i+1]
VerificationReport check_recurrence(int max_n);

}  // namespace polyq
