#ifndef FRACBURGERS_RULES_HPP
#define FRACBURGERS_RULES_HPP

#include "fracburgers/power_sum.hpp"

#include <string>
#include <vector>

namespace fracburgers {

struct RuleCheck {
    std::string id;          // "i".."vi"
    std::string description;
    double maxViolation = 0.0;
    bool asserted = false;   // true: must be ~0; false: reported as data
    long pairsSkipped = 0;   // product-rule pairs outside the operator domain
};

struct RuleAuditReport {
    FracOrders orders;
    std::vector<RuleCheck> rules;
    // D applied directly to the squared power versus through the chain rule;
    // equals 2 Gamma(1+b)^2 / Gamma(1+2b) (1 exactly when b = 1).
    double chainOverDirectRatio = 1.0;
};

// Audits the calculus rules on the given samples, treated as functions of x
// with derivative order beta.  The inverse-pair rules (round trip, power
// rule, integral normalization) are asserted exact; the product and chain
// rules are quantified only.
RuleAuditReport audit_jumarie_rules(const FracOrders& orders, const std::vector<GenPowerSum>& samples,
                                    const std::vector<double>& evalPoints = {0.5, 1.0, 2.0});

} // namespace fracburgers

#endif
