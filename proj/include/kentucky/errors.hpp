#pragma once

#include <stdexcept>
#include <string>

namespace kentucky {

// An operation was asked to search past its configured exhaustive budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check that is mathematically guaranteed failed at runtime.
struct invariant_error : std::logic_error {
    explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace kentucky
