#pragma once

#include "isodual/check.hpp"
#include "isodual/group_spec.hpp"

#include <cstdint>

namespace isodual
{

struct VerifyOptions
{
    std::uint64_t seed = 20240607;
    //! Quotients larger than this are skipped by the representation checks.
    int max_order = 2048;
    //! Random trials per identity.
    int samples = 10;
};

//! Runs the invariant suite of every module; stops after spec violations.
std::vector<Check> verify_group(const GroupSpec& spec, const VerifyOptions& options = {});

//! First failing check, or nullptr.
const Check* first_failure(const std::vector<Check>& checks);

} // namespace isodual
