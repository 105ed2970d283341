#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pimshort {

// One line of a verification report.
struct Check {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string observed;
    std::string expected;
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

// sequences, convolution, density-cross, lemma2, lemma3, theorem
const std::vector<std::string>& verify_suite_names();

// Runs one suite, or every suite for "all". LookupError on an unknown name.
std::vector<Check> run_verify_suite(std::string_view suite,
                                    const VerifyOptions& opts = {});

} // namespace pimshort
