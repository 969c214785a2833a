#ifndef CENTROIDKIT_SUITES_HPP
#define CENTROIDKIT_SUITES_HPP

#include <string>
#include <vector>

namespace ck {

struct SuiteLine {
    std::string instance;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::string statement;   // the result being checked
    std::vector<SuiteLine> lines;
    bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::size_t window = 5);

}  // namespace ck

#endif
