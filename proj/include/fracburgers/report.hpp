#ifndef FRACBURGERS_REPORT_HPP
#define FRACBURGERS_REPORT_HPP

#include "fracburgers/lie.hpp"
#include "fracburgers/rules.hpp"
#include "fracburgers/subspace.hpp"
#include "fracburgers/verify.hpp"

#include <string>

namespace fracburgers {
namespace report {

enum class Format { json, csv };

Format format_from_string(const std::string& name);

// %.17g with classic-locale formatting; all serializers below are
// deterministic byte-for-byte for fixed inputs (sorted keys, fixed float
// formatting, LF line endings).
std::string format_double(double v);

// Formats a decomposition in span{V1..V6} like "2*V4 - V3" (coefficients
// within 1e-9 of an integer print as integers).
std::string format_span_combination(const std::array<double, 6>& coeffs);

std::string render(const verify::ResidualReport& r, Format f);
std::string render(const verify::DiscrepancyReport& r, Format f);
std::string render(const lie::BracketAudit& r, Format f);
std::string render(const RuleAuditReport& r, Format f);
std::string render(const lie::DeterminingReport& r, Format f);
std::string render(const lie::FlowComparison& r, Format f);
std::string render(const subspace::SpanWitness& w, Format f);

} // namespace report
} // namespace fracburgers

#endif
