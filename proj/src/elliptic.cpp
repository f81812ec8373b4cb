#include "ffclass/elliptic.hpp"

#include <algorithm>

#include "ffclass/classgroup.hpp"

namespace ffclass {

EllipticCurve::EllipticCurve(const PrimeField& field, Poly alpha)
    : field_(field), alpha_(std::move(alpha)) {
    if (alpha_.modulus() != field.modulus())
        throw math_error("curve polynomial over a different field");
    if (alpha_.degree() != 3 || !alpha_.is_monic())
        throw math_error("curve needs a monic cubic");
    if (!is_squarefree(alpha_))
        throw math_error("not squarefree");
}

std::string ProjPoint::to_string() const {
    return "(" + std::to_string(X) + ":" + std::to_string(Y) + ":" + std::to_string(Z) + ")";
}

ProjPoint normalize_point(std::int64_t X, std::int64_t Y, std::int64_t Z,
                          const PrimeField& field) {
    X = field.reduce(X);
    Y = field.reduce(Y);
    Z = field.reduce(Z);
    if (Z != 0) {
        const std::int64_t zi = field.inv(Z);
        return ProjPoint::affine(field.mul(X, zi), field.mul(Y, zi));
    }
    if (Y == 0)
        throw math_error("invalid projective point");
    return ProjPoint::infinity();
}

bool on_curve(const ProjPoint& P, const EllipticCurve& E) {
    const PrimeField f = E.field();
    if (P.is_infinity())
        return P == ProjPoint::infinity();
    if (P.Z != 1)
        return false;
    // Affine check y^2 = alpha(x) suffices for normalized points.
    return f.reduce(P.Y * P.Y) == E.alpha().eval(P.X).value();
}

namespace {

void require_on_curve(const ProjPoint& P, const EllipticCurve& E) {
    if (!on_curve(P, E))
        throw math_error("point not on curve");
}

} // namespace

ProjPoint add(const ProjPoint& P, const ProjPoint& Q, const EllipticCurve& E) {
    require_on_curve(P, E);
    require_on_curve(Q, E);
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;
    const PrimeField f = E.field();
    if (P.X == Q.X && f.add(P.Y, Q.Y) == 0)
        return ProjPoint::infinity();

    std::int64_t slope;
    if (P.X == Q.X) {
        // Tangent: 2y y' = alpha'(x).
        slope = f.mul(E.alpha().derivative().eval(P.X).value(), f.inv(f.mul(2, P.Y)));
    } else {
        slope = f.mul(f.sub(Q.Y, P.Y), f.inv(f.sub(Q.X, P.X)));
    }
    // x1 + x2 + x3 = slope^2 - a2 for y^2 = x^3 + a2 x^2 + a1 x + a0.
    const std::int64_t a2 = E.alpha().coeff_value(2);
    std::int64_t x3 = f.sub(f.sub(f.sub(f.mul(slope, slope), a2), P.X), Q.X);
    std::int64_t y3 = f.sub(f.mul(slope, f.sub(P.X, x3)), P.Y);
    return ProjPoint::affine(x3, y3);
}

ProjPoint negate_point(const ProjPoint& P, const EllipticCurve& E) {
    require_on_curve(P, E);
    if (P.is_infinity())
        return P;
    return ProjPoint::affine(P.X, E.field().neg(P.Y));
}

std::int64_t point_order(const ProjPoint& P, const EllipticCurve& E) {
    require_on_curve(P, E);
    ProjPoint acc = P;
    std::int64_t n = 1;
    while (!acc.is_infinity()) {
        acc = add(acc, P, E);
        ++n;
    }
    return n;
}

std::vector<ProjPoint> enumerate_points(const EllipticCurve& E) {
    const PrimeField f = E.field();
    std::vector<ProjPoint> points;
    points.push_back(ProjPoint::infinity());
    for (std::int64_t x = 0; x < f.modulus(); ++x) {
        const FieldElement rhs = E.alpha().eval(x);
        auto root = square_root(rhs);
        if (!root)
            continue;
        if (root->is_zero()) {
            points.push_back(ProjPoint::affine(x, 0));
        } else {
            const std::int64_t y = root->value();
            const std::int64_t y2 = f.neg(y);
            points.push_back(ProjPoint::affine(x, std::min(y, y2)));
            points.push_back(ProjPoint::affine(x, std::max(y, y2)));
        }
    }
    return points;
}

MumfordIdeal point_to_class(const ProjPoint& P, const EllipticCurve& E) {
    require_on_curve(P, E);
    const PrimeField f = E.field();
    if (P.is_infinity())
        return MumfordIdeal::identity(E.alpha());
    Poly u(f, {f.neg(P.X), 1});
    Poly v = Poly::constant(f, P.Y);
    return MumfordIdeal(std::move(u), std::move(v), E.alpha());
}

IsomorphismReport verify_isomorphism(const EllipticCurve& E) {
    IsomorphismReport report;
    const std::vector<ProjPoint> points = enumerate_points(E);
    const ClassGroupTable table = enumerate_classes(E.alpha());
    report.point_count = points.size();
    report.class_count = table.class_number();

    std::vector<int> image;
    image.reserve(points.size());
    for (const ProjPoint& P : points) {
        int idx = table.index_of(point_to_class(P, E));
        if (idx < 0)
            report.violations.push_back("image of " + P.to_string() + " is not a reduced class");
        image.push_back(idx);
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    report.bijective = report.point_count == report.class_count &&
                       std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                       (sorted.empty() || sorted.front() >= 0);

    report.homomorphism = true;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i; j < points.size(); ++j) {
            const MumfordIdeal lhs = point_to_class(add(points[i], points[j], E), E);
            const MumfordIdeal rhs =
                compose(point_to_class(points[i], E), point_to_class(points[j], E));
            if (lhs != rhs) {
                report.homomorphism = false;
                report.violations.push_back("homomorphism fails at " + points[i].to_string() +
                                            " + " + points[j].to_string());
            }
        }
    return report;
}

} // namespace ffclass
