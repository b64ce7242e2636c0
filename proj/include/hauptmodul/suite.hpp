#ifndef HAUPTMODUL_SUITE_HPP
#define HAUPTMODUL_SUITE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hauptmodul/serialize.hpp"
#include "hauptmodul/triangle.hpp"

namespace hauptmodul
{

struct SuiteConfig {
    std::optional<TriangleType> triangle;
    std::optional<unsigned long> prime;
    std::size_t order = 60;
    // Enables suites whose runtime is in minutes rather than seconds.
    bool long_tests = false;
};

struct SuiteCell {
    std::string label;
    bool passed;
    Json detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCell> cells;

    bool passed() const;
    Json to_json() const;
};

// Suites: dwork, schwarz, cross-route, generators, lemma2, euler, halphen,
// classifier, dieudonne, remark183 (needs long_tests).
// Missing inputs raise InvalidArgument; verification failures are reported as
// failed cells, not thrown.
SuiteReport run_suite(std::string_view name, const SuiteConfig &config);

const std::vector<std::string> &suite_names();

} // namespace hauptmodul

#endif
