#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biquat/convention.hpp"

namespace biquat {

enum class Verdict { pass, fail, indeterminate };

std::string to_string(Verdict v);

/// Pass below 1e-9, fail above 1e-3; the enforced gap keeps sampling noise
/// from flipping cells. Anything in between is indeterminate and fails CI.
Verdict verdict_of(double residual);

struct AuditClaim {
    std::string id;
    std::string description;
};

/// The registered claims, in evaluation order: the anti-automorphism and
/// involution laws, reversed-system compatibility, current closure,
/// field-tensor antisymmetry, source-form equivalence, and parity typing.
const std::vector<AuditClaim>& registered_claims();

struct AuditCell {
    double residual = 0.0;
    Verdict verdict = Verdict::pass;
    std::string witness;  // empty on pass; max-residual sample otherwise
};

struct AuditReport {
    std::uint64_t seed = 0;
    std::vector<ConventionAssignment> assignments;       // all 32
    std::vector<std::vector<AuditCell>> cells;           // [assignment][claim]
    std::vector<std::size_t> full_pass;                  // indices into assignments
    std::optional<ConventionAssignment> selected;        // least full-pass, else max-pass
    bool partial = false;                                // no assignment passed everything

    const AuditCell& cell(const ConventionAssignment& a, const std::string& claim_id) const;
};

/// Evaluates every claim on every assignment. Failures are data, not errors.
AuditReport run_audit(std::uint64_t seed);

/// One cell's residual, recomputed from scratch (replayability check).
double evaluate_claim(const std::string& claim_id, const ConventionAssignment& a,
                      std::uint64_t seed, std::string* witness = nullptr);

/// Witness of a cell; lookup error on unknown ids.
std::string explain(const AuditReport& report, const ConventionAssignment& a,
                    const std::string& claim_id);

std::string audit_report_json(const AuditReport& report);

}  // namespace biquat
