#pragma once

#include <cstdint>
#include <iosfwd>

namespace ffclass {

struct AcceptanceOptions {
    std::uint64_t seed = 24301;
};

/// Seed from the FFCLASS_SEED environment variable, or the fixed default.
std::uint64_t default_seed();

/// Runs the full acceptance suite, one PASS/FAIL line per criterion.
/// Returns true iff every criterion passed.
bool run_acceptance(std::ostream& out, const AcceptanceOptions& options = {});

} // namespace ffclass
