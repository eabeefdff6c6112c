#ifndef PW_TOOLS_SELFTEST_HPP
#define PW_TOOLS_SELFTEST_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pw::tools {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;
    std::size_t invariant_failures = 0;
    double millis = 0.0;
    std::string first_failure;
};

/// Runs the randomized property suites; `jobs` > 1 spreads cases across threads.
std::vector<SuiteResult> run_selftest(std::size_t cases, std::uint64_t seed, unsigned jobs);

}  // namespace pw::tools

#endif  // PW_TOOLS_SELFTEST_HPP
