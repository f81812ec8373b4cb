#pragma once

#include <iosfwd>
#include <json.hpp>

#include "ffclass/classgroup.hpp"
#include "ffclass/elliptic.hpp"
#include "ffclass/genus.hpp"
#include "ffclass/orbit_oracle.hpp"

namespace ffclass {

/// Everything the classify command reports about one discriminant.
struct Classification {
    ClassGroupTable table;
    GenusPartition genera;
    std::vector<std::vector<int>> merged; // improper classes
    bool inherits;                        // merged set keeps the group law

    explicit Classification(ClassGroupTable t);
};

Classification classify(const Poly& alpha);

nlohmann::json classification_json(const Classification& result);
void print_classification(std::ostream& out, const Classification& result);

struct EllipticReport {
    EllipticCurve curve;
    std::vector<ProjPoint> points;
    std::vector<std::int64_t> orders;
    std::vector<MumfordIdeal> ideals;
    IsomorphismReport isomorphism;
};

EllipticReport elliptic_report(const EllipticCurve& curve);
nlohmann::json elliptic_json(const EllipticReport& report);
void print_elliptic(std::ostream& out, const EllipticReport& report);

nlohmann::json oracle_json(const OrbitReport& report);
void print_oracle(std::ostream& out, const OrbitReport& report);

} // namespace ffclass
