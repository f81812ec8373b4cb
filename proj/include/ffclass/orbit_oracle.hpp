#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ffclass/quadform.hpp"

namespace ffclass {

struct OracleOptions {
    /// Rerun at degree_bound + 1 and warn when the counts disagree.
    bool self_check = false;
    /// Alternative closure schedule; the partition must not depend on it.
    bool reverse_schedule = false;
};

struct OrbitSummary {
    QuadForm min_rep;        // least member under form_less
    std::size_t size;        // members inside the degree box
    std::size_t fixed_points; // reduced-shaped members; 1 for a class orbit
};

/// Partition of the bounded-degree forms of determinant alpha into orbits
/// under elementary determinant-1 moves, with no use of reduction theory.
struct OrbitReport {
    Poly alpha;
    int degree_bound;
    std::size_t enumerated = 0; // forms inside the degree box
    std::size_t escaped = 0;    // generator applications that left the box
    /// Orbits containing a reduced-shaped form, i.e. the positive classes.
    std::size_t orbit_count = 0;
    std::vector<QuadForm> orbit_reps; // min_rep of each counted orbit
    std::vector<OrbitSummary> orbits; // every orbit, counted ones first
    std::size_t multi_fixed_orbits = 0; // orbits with >= 2 fixed points (bug if nonzero)
    std::vector<std::string> warnings;

    OrbitReport(Poly alpha_, int bound) : alpha(std::move(alpha_)), degree_bound(bound) {}
};

/// Enumerate all primitive (a, b, c) with neg_det_b = alpha and
/// deg a, deg b, deg c <= degree_bound, then close under translations,
/// the swap and unit scalings while results stay inside the box.
/// Requires degree_bound >= deg alpha.
OrbitReport orbit_classes(const Poly& alpha, int degree_bound, const OracleOptions& options = {});

} // namespace ffclass
