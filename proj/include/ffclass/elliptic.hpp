#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffclass/mumford.hpp"
#include "ffclass/poly.hpp"

namespace ffclass {

/// Projective curve Y^2 Z = homogenized alpha(X, Z) for a monic squarefree
/// cubic alpha; smooth by the squarefree assumption.
class EllipticCurve {
  public:
    EllipticCurve(const PrimeField& field, Poly alpha);

    PrimeField field() const { return field_; }
    const Poly& alpha() const noexcept { return alpha_; }

  private:
    PrimeField field_;
    Poly alpha_;
};

/// Normalized projective point: either Z = 1 (affine) or (0 : 1 : 0).
struct ProjPoint {
    std::int64_t X, Y, Z;

    static ProjPoint infinity() { return {0, 1, 0}; }
    static ProjPoint affine(std::int64_t x, std::int64_t y) { return {x, y, 1}; }

    bool is_infinity() const noexcept { return Z == 0; }

    bool operator==(const ProjPoint& o) const noexcept {
        return X == o.X && Y == o.Y && Z == o.Z;
    }
    bool operator!=(const ProjPoint& o) const noexcept { return !(*this == o); }

    std::string to_string() const;
};

/// Normalize arbitrary projective coordinates (throws on (0:0:0)).
ProjPoint normalize_point(std::int64_t X, std::int64_t Y, std::int64_t Z, const PrimeField& field);

bool on_curve(const ProjPoint& P, const EllipticCurve& E);

/// Chord-tangent sum; throws when an operand is off the curve.
ProjPoint add(const ProjPoint& P, const ProjPoint& Q, const EllipticCurve& E);
ProjPoint negate_point(const ProjPoint& P, const EllipticCurve& E);

std::int64_t point_order(const ProjPoint& P, const EllipticCurve& E);

/// Infinity first, then affine points by (x, y).
std::vector<ProjPoint> enumerate_points(const EllipticCurve& E);

/// Abel-Jacobi on ideals: infinity -> (1, 0), (x0, y0) -> (x - x0, y0).
MumfordIdeal point_to_class(const ProjPoint& P, const EllipticCurve& E);

struct IsomorphismReport {
    std::size_t point_count = 0;
    std::size_t class_count = 0;
    bool bijective = false;
    bool homomorphism = false;
    std::vector<std::string> violations;

    bool pass() const { return bijective && homomorphism && violations.empty(); }
};

/// Checks that point_to_class is a bijective homomorphism onto the class
/// list of alpha, over all point pairs. Failures become report entries.
IsomorphismReport verify_isomorphism(const EllipticCurve& E);

} // namespace ffclass
