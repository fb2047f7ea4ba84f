#ifndef FRACBURGERS_SELFCHECK_HPP
#define FRACBURGERS_SELFCHECK_HPP

#include <string>
#include <vector>

namespace fracburgers {
namespace selfcheck {

struct CheckResult {
    std::string name;
    int criterion = 0; // acceptance criterion number; 0 = supporting check
    bool pass = false;
    std::string detail;
};

// Runs the embedded acceptance checks (criteria 1-9 plus the gamma table
// and report determinism).  `filter` keeps checks whose name contains the
// substring; empty runs everything.
std::vector<CheckResult> run_selfcheck(const std::string& filter = "");

} // namespace selfcheck
} // namespace fracburgers

#endif
