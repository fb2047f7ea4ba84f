#include "fracburgers/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fracburgers {
namespace report {

namespace {

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        default: out += c;
        }
    }
    return out;
}

std::string quoted(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string grid_json(const verify::GridSpec& g)
{
    return "{\"nt\":" + std::to_string(g.nt) + ",\"nx\":" + std::to_string(g.nx)
           + ",\"t0\":" + format_double(g.t0) + ",\"t1\":" + format_double(g.t1)
           + ",\"x0\":" + format_double(g.x0) + ",\"x1\":" + format_double(g.x1) + "}";
}

std::string bool_json(bool b) { return b ? "true" : "false"; }

} // namespace

Format format_from_string(const std::string& name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    throw std::invalid_argument("unknown report format '" + name + "'");
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_span_combination(const std::array<double, 6>& coeffs)
{
    std::string out;
    for (int i = 0; i < 6; ++i) {
        double c = coeffs[i];
        if (std::fabs(c) <= 1e-9)
            continue;
        const double r = std::round(c);
        const bool integral = std::fabs(c - r) <= 1e-9;
        if (integral)
            c = r;
        if (out.empty()) {
            if (c < 0.0)
                out += "-";
        } else {
            out += c < 0.0 ? " - " : " + ";
        }
        const double mag = std::fabs(c);
        if (integral && mag == 1.0) {
            // coefficient 1 prints bare
        } else if (integral) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.0f*", mag);
            out += buf;
        } else {
            out += format_double(mag) + "*";
        }
        out += "V" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

std::string render(const verify::ResidualReport& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"composedSecondDerivative\":" + bool_json(r.composedSecondDerivative);
        out += ",\"grid\":" + grid_json(r.grid);
        out += ",\"l2\":" + format_double(r.l2);
        out += ",\"maxAbs\":" + format_double(r.maxAbs);
        out += ",\"mode\":" + quoted(verify::to_string(r.mode));
        if (!r.perPoint.empty()) {
            out += ",\"perPoint\":[";
            for (std::size_t i = 0; i < r.perPoint.size(); ++i) {
                if (i)
                    out += ",";
                out += format_double(r.perPoint[i]);
            }
            out += "]";
        }
        out += ",\"solutionId\":" + quoted(r.solutionId);
        out += ",\"worstPoint\":{\"t\":" + format_double(r.worstT) + ",\"x\":" + format_double(r.worstX)
               + "}";
        out += "}\n";
        return out;
    }
    std::string out = "solutionId,mode,x0,x1,nx,t0,t1,nt,maxAbs,l2,worstX,worstT\n";
    out += r.solutionId + "," + verify::to_string(r.mode) + "," + format_double(r.grid.x0) + ","
           + format_double(r.grid.x1) + "," + std::to_string(r.grid.nx) + "," + format_double(r.grid.t0)
           + "," + format_double(r.grid.t1) + "," + std::to_string(r.grid.nt) + ","
           + format_double(r.maxAbs) + "," + format_double(r.l2) + "," + format_double(r.worstX) + ","
           + format_double(r.worstT) + "\n";
    if (!r.perPoint.empty()) {
        out += "i,j,x,t,residual\n";
        std::size_t idx = 0;
        for (int j = 0; j < r.grid.nt; ++j)
            for (int i = 0; i < r.grid.nx; ++i, ++idx)
                out += std::to_string(i) + "," + std::to_string(j) + "," + format_double(r.grid.x_at(i))
                       + "," + format_double(r.grid.t_at(j)) + "," + format_double(r.perPoint[idx])
                       + "\n";
    }
    return out;
}

std::string render(const verify::DiscrepancyReport& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"consistent\":" + bool_json(r.consistent);
        out += ",\"grid\":" + grid_json(r.grid);
        out += ",\"modes\":[";
        for (std::size_t i = 0; i < r.modes.size(); ++i) {
            if (i)
                out += ",";
            out += "{\"maxAbs\":" + format_double(r.modes[i].maxAbs) + ",\"mode\":"
                   + quoted(verify::to_string(r.modes[i].mode))
                   + ",\"spatialOnly\":" + bool_json(r.modes[i].spatialOnly) + "}";
        }
        out += "]";
        if (r.hasSpatialRatio) {
            out += ",\"spatialSecondDerivativeRatio\":{\"max\":" + format_double(r.ratioMax)
                   + ",\"median\":" + format_double(r.ratioMedian) + ",\"min\":" + format_double(r.ratioMin)
                   + "}";
        }
        out += ",\"solutionId\":" + quoted(r.solutionId);
        out += ",\"threshold\":" + format_double(r.threshold);
        out += "}\n";
        return out;
    }
    std::string out = "solutionId,mode,maxAbs,spatialOnly\n";
    for (const auto& m : r.modes)
        out += r.solutionId + "," + verify::to_string(m.mode) + "," + format_double(m.maxAbs) + ","
               + (m.spatialOnly ? "true" : "false") + "\n";
    if (r.hasSpatialRatio)
        out += "spatialSecondDerivativeRatio,median," + format_double(r.ratioMedian) + ",\n";
    out += "consistent,," + std::string(r.consistent ? "true" : "false") + ",\n";
    return out;
}

std::string render(const lie::BracketAudit& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"alpha\":" + format_double(r.orders.alpha);
        out += ",\"beta\":" + format_double(r.orders.beta);
        out += ",\"entries\":[";
        for (std::size_t e = 0; e < r.entries.size(); ++e) {
            const auto& entry = r.entries[e];
            if (e)
                out += ",";
            out += "{\"computed\":" + quoted(format_span_combination(entry.computed));
            out += ",\"i\":" + std::to_string(entry.i);
            out += ",\"j\":" + std::to_string(entry.j);
            out += ",\"match\":" + bool_json(entry.match);
            out += ",\"printed\":" + quoted(format_span_combination(entry.reference)) + "}";
        }
        out += "]";
        out += ",\"jacobiMaxResidual\":" + format_double(r.jacobiMaxResidual);
        out += ",\"maxAntisymmetryDefect\":" + format_double(r.maxAntisymmetryDefect);
        out += ",\"maxFitResidual\":" + format_double(r.maxFitResidual);
        out += ",\"mismatchCount\":" + std::to_string(r.mismatches.size());
        out += "}\n";
        return out;
    }
    std::string out = "i,j,computed,printed,match\n";
    for (const auto& entry : r.entries)
        out += std::to_string(entry.i) + "," + std::to_string(entry.j) + ","
               + format_span_combination(entry.computed) + "," + format_span_combination(entry.reference)
               + "," + (entry.match ? "true" : "false") + "\n";
    return out;
}

std::string render(const RuleAuditReport& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"alpha\":" + format_double(r.orders.alpha);
        out += ",\"beta\":" + format_double(r.orders.beta);
        out += ",\"chainOverDirectRatio\":" + format_double(r.chainOverDirectRatio);
        out += ",\"rules\":[";
        for (std::size_t i = 0; i < r.rules.size(); ++i) {
            const auto& rule = r.rules[i];
            if (i)
                out += ",";
            out += "{\"asserted\":" + bool_json(rule.asserted);
            out += ",\"description\":" + quoted(rule.description);
            out += ",\"id\":" + quoted(rule.id);
            out += ",\"maxViolation\":" + format_double(rule.maxViolation);
            out += ",\"pairsSkipped\":" + std::to_string(rule.pairsSkipped) + "}";
        }
        out += "]}\n";
        return out;
    }
    std::string out = "rule,asserted,maxViolation,pairsSkipped\n";
    for (const auto& rule : r.rules)
        out += rule.id + "," + (rule.asserted ? "true" : "false") + "," + format_double(rule.maxViolation)
               + "," + std::to_string(rule.pairsSkipped) + "\n";
    out += "chainOverDirectRatio,," + format_double(r.chainOverDirectRatio) + ",\n";
    return out;
}

std::string render(const lie::DeterminingReport& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{\"equations\":[";
        for (std::size_t i = 0; i < r.equations.size(); ++i) {
            if (i)
                out += ",";
            out += "{\"id\":" + quoted(r.equations[i].id) + ",\"maxAbs\":"
                   + format_double(r.equations[i].maxAbs) + "}";
        }
        out += "],\"separatedScalingF\":" + format_double(r.separatedScalingF);
        out += ",\"separatedScalingG\":" + format_double(r.separatedScalingG);
        out += "}\n";
        return out;
    }
    std::string out = "equation,maxAbs\n";
    for (const auto& e : r.equations)
        out += e.id + "," + format_double(e.maxAbs) + "\n";
    out += "separated_scaling_g," + format_double(r.separatedScalingG) + "\n";
    out += "separated_scaling_f," + format_double(r.separatedScalingF) + "\n";
    return out;
}

std::string render(const lie::FlowComparison& r, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"epsilon\":" + format_double(r.epsilon);
        out += ",\"generator\":" + std::to_string(r.index);
        out += ",\"maxDevT\":" + format_double(r.maxDevT);
        out += ",\"maxDevU\":" + format_double(r.maxDevU);
        out += ",\"maxDevX\":" + format_double(r.maxDevX);
        out += "}\n";
        return out;
    }
    std::string out = "generator,epsilon,maxDevX,maxDevT,maxDevU\n";
    out += std::to_string(r.index) + "," + format_double(r.epsilon) + "," + format_double(r.maxDevX) + ","
           + format_double(r.maxDevT) + "," + format_double(r.maxDevU) + "\n";
    return out;
}

std::string render(const subspace::SpanWitness& w, Format f)
{
    if (f == Format::json) {
        std::string out = "{";
        out += "\"claimedQuadratic\":" + quoted(w.claimedQuadratic.to_string());
        out += ",\"constantComponent\":" + quoted(w.constantComponent.to_string());
        out += ",\"linearComponent\":" + quoted(w.linearComponent.to_string());
        out += ",\"offBasisRemainder\":" + quoted(w.offBasisRemainder.to_string());
        out += ",\"quadraticComponent\":" + quoted(w.quadraticComponent.to_string());
        out += "}\n";
        return out;
    }
    std::string out = "component,value\n";
    out += "constant," + w.constantComponent.to_string() + "\n";
    out += "linear," + w.linearComponent.to_string() + "\n";
    out += "quadratic," + w.quadraticComponent.to_string() + "\n";
    out += "claimedQuadratic," + w.claimedQuadratic.to_string() + "\n";
    out += "offBasisRemainder," + w.offBasisRemainder.to_string() + "\n";
    return out;
}

} // namespace report
} // namespace fracburgers
