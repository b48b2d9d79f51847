#pragma once

#include <string>
#include <vector>

namespace isodual
{

//! Outcome of one verified property, with a witness on failure.
struct Check
{
    std::string name;
    bool passed = false;
    std::string detail;
};

inline bool all_passed(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

} // namespace isodual
