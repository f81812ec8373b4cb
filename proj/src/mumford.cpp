#include "ffclass/mumford.hpp"

namespace ffclass {

void validate_discriminant(const Poly& alpha) {
    if (alpha.is_zero() || !alpha.is_monic())
        throw math_error("not monic");
    if (alpha.degree() % 2 == 0)
        throw math_error("even degree");
    if (alpha.degree() < 3)
        throw math_error("degree too small");
    if (!is_squarefree(alpha))
        throw math_error("not squarefree");
}

int genus_of(const Poly& alpha) {
    validate_discriminant(alpha);
    return (alpha.degree() - 1) / 2;
}

MumfordIdeal::MumfordIdeal(Poly u, Poly v, Poly alpha)
    : u_(std::move(u)), v_(std::move(v)), alpha_(std::move(alpha)) {
    if (u_.modulus() != v_.modulus() || u_.modulus() != alpha_.modulus())
        throw math_error("polynomials over different fields");
}

MumfordIdeal MumfordIdeal::identity(const Poly& alpha) {
    const PrimeField f = alpha.field();
    return MumfordIdeal(Poly::constant(f, 1), Poly(f), alpha);
}

bool is_valid(const MumfordIdeal& ideal) {
    const Poly& u = ideal.u();
    const Poly& v = ideal.v();
    if (u.is_zero() || !u.is_monic())
        return false;
    if (v.degree() >= u.degree())
        return false;
    return divides(u, v * v - ideal.alpha());
}

MumfordIdeal reduce(Poly u, Poly v, const Poly& alpha) {
    const int g = genus_of(alpha);
    if (u.is_zero() || !u.is_monic())
        throw math_error("reduction needs a monic u");
    v = v % u;
    if (!divides(u, v * v - alpha))
        throw math_error("u does not divide v^2 - alpha");
    while (u.degree() > g) {
        Poly next_u = (alpha - v * v) / u;
        next_u = next_u.monicize().first;
        v = (-v) % next_u;
        u = next_u;
    }
    return MumfordIdeal(std::move(u), std::move(v), alpha);
}

namespace {

// d = c1*u1 + c2*u2 + c3*w via two nested two-term extended gcds.
struct Xgcd3 {
    Poly d, c1, c2, c3;
};

Xgcd3 xgcd3(const Poly& u1, const Poly& u2, const Poly& w) {
    XgcdResult inner = xgcd(u1, u2); // inner.d = s*u1 + t*u2
    XgcdResult outer = xgcd(inner.d, w);
    return {outer.d, outer.s * inner.s, outer.s * inner.t, outer.t};
}

} // namespace

MumfordIdeal compose(const MumfordIdeal& lhs, const MumfordIdeal& rhs) {
    if (lhs.alpha() != rhs.alpha())
        throw math_error("mismatched alpha");
    if (!is_valid(lhs) || !is_valid(rhs))
        throw math_error("compose needs valid ideals");
    const Poly& alpha = lhs.alpha();

    Xgcd3 e = xgcd3(lhs.u(), rhs.u(), lhs.v() + rhs.v());
    Poly u3 = (lhs.u() * rhs.u()) / (e.d * e.d);
    Poly numerator =
        e.c1 * lhs.u() * rhs.v() + e.c2 * rhs.u() * lhs.v() + e.c3 * (lhs.v() * rhs.v() + alpha);
    auto [v3, rem] = divmod(numerator, e.d);
    if (!rem.is_zero())
        throw math_error("composition divisibility failed"); // guards corruption
    v3 = v3 % u3;
    return reduce(std::move(u3), std::move(v3), alpha);
}

MumfordIdeal inverse(const MumfordIdeal& ideal) {
    if (!is_valid(ideal))
        throw math_error("inverse needs a valid ideal");
    return MumfordIdeal(ideal.u(), (-ideal.v()) % ideal.u(), ideal.alpha());
}

std::int64_t order_of(const MumfordIdeal& ideal) {
    if (!is_valid(ideal))
        throw math_error("order needs a valid ideal");
    MumfordIdeal acc = ideal;
    std::int64_t n = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, ideal);
        ++n;
        if (n > 1000000)
            throw math_error("order exceeds supported bound");
    }
    return n;
}

bool ideal_less(const MumfordIdeal& a, const MumfordIdeal& b) {
    if (a.u() != b.u())
        return poly_less(a.u(), b.u());
    return poly_less(a.v(), b.v());
}

} // namespace ffclass
