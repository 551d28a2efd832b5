#pragma once

#include <stdexcept>
#include <string>

namespace assortnet {

// Malformed or inconsistent input data. CLI exit code 2.
struct data_error : std::runtime_error {
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// A statistic that has no defined value on the given input where the caller
// required one (e.g. assortativity of a regular graph). CLI exit code 3.
struct undefined_statistic_error : std::runtime_error {
    explicit undefined_statistic_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace assortnet
