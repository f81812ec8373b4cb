#include "ffclass/quadform.hpp"

namespace ffclass {

QuadForm::QuadForm(Poly a_, Poly b_, Poly c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.modulus() != b.modulus() || a.modulus() != c.modulus())
        throw math_error("polynomials over different fields");
}

Poly QuadForm::operator()(const Poly& s, const Poly& t) const {
    return a * s * s + b * s * t + c * t * t;
}

bool form_less(const QuadForm& lhs, const QuadForm& rhs) {
    if (lhs.a != rhs.a)
        return poly_less(lhs.a, rhs.a);
    if (lhs.b != rhs.b)
        return poly_less(lhs.b, rhs.b);
    return poly_less(lhs.c, rhs.c);
}

Mat2 Mat2::identity(const PrimeField& field) {
    Poly one = Poly::constant(field, 1);
    Poly zero = Poly(field);
    return {one, zero, zero, one};
}

Mat2 Mat2::translation(const Poly& m) {
    const PrimeField field = m.field();
    Poly one = Poly::constant(field, 1);
    return {one, m, Poly(field), one};
}

Mat2 Mat2::swap(const PrimeField& field) {
    Poly one = Poly::constant(field, 1);
    Poly zero = Poly(field);
    return {zero, one, -one, zero};
}

Mat2 Mat2::scaling(const FieldElement& s) {
    const PrimeField field = s.field();
    Poly zero = Poly(field);
    return {Poly::constant(field, s.value()), zero, zero,
            Poly::constant(field, s.inverse().value())};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11, m10 * o.m00 + m11 * o.m10,
            m10 * o.m01 + m11 * o.m11};
}

Poly Mat2::det() const { return m00 * m11 - m01 * m10; }

Poly disc(const QuadForm& q) {
    const PrimeField f = q.field();
    return q.b * q.b - q.a * q.c * Poly::constant(f, 4);
}

Poly neg_det_b(const QuadForm& q) {
    const PrimeField f = q.field();
    const FieldElement quarter = f.element(4).inverse();
    return q.b * q.b * quarter - q.a * q.c;
}

bool is_primitive(const QuadForm& q) {
    if (q.is_zero())
        throw math_error("primitivity of zero form");
    Poly g = q.a;
    if (g.is_zero())
        g = q.b;
    else if (!q.b.is_zero())
        g = gcd(g, q.b);
    if (g.is_zero())
        g = q.c;
    else if (!q.c.is_zero())
        g = gcd(g, q.c);
    return g.is_unit();
}

QuadForm apply(const QuadForm& q, const Mat2& A) {
    if (A.det().is_zero())
        throw math_error("singular change of variables");
    Poly a2 = q(A.m00, A.m10);
    Poly c2 = q(A.m01, A.m11);
    const Poly two = Poly::constant(q.field(), 2);
    Poly b2 = two * q.a * A.m00 * A.m01 + q.b * (A.m00 * A.m11 + A.m01 * A.m10) +
              two * q.c * A.m10 * A.m11;
    return QuadForm(std::move(a2), std::move(b2), std::move(c2));
}

QuadForm opposite(const QuadForm& q) { return QuadForm(q.a, -q.b, q.c); }

bool is_reduced(const QuadForm& q, const Poly& alpha) {
    const int g = genus_of(alpha);
    if (q.a.is_zero() || !q.a.is_monic() || q.a.degree() > g)
        return false;
    if (q.b.degree() >= q.a.degree())
        return false;
    return neg_det_b(q) == alpha;
}

namespace {

// Translation step: replace b by b mod 2a (and fix c), accumulating into T.
void translate_step(QuadForm& q, Mat2& T) {
    if (q.b.degree() < q.a.degree())
        return;
    const Poly two_a = q.a + q.a;
    auto [quo, rem] = divmod(q.b, two_a);
    Poly m = -quo;
    // c' = a m^2 + b m + c with the old b.
    q.c = q.a * m * m + q.b * m + q.c;
    q.b = std::move(rem);
    T = T * Mat2::translation(m);
}

void swap_step(QuadForm& q, Mat2& T) {
    QuadForm swapped(q.c, -q.b, q.a);
    q = std::move(swapped);
    T = T * Mat2::swap(q.field());
}

// Determinant-1 moves only: translate until deg b < deg a, swap while
// deg a > g. Terminates because deg a strictly drops at each swap.
QuadForm reduce_raw(QuadForm q, int g, Mat2& T) {
    if (q.a.is_zero())
        throw math_error("degenerate form: a = 0");
    translate_step(q, T);
    while (q.a.degree() > g) {
        swap_step(q, T);
        translate_step(q, T);
    }
    return q;
}

} // namespace

ReduceResult reduce(const QuadForm& q, const Poly& alpha) {
    validate_discriminant(alpha);
    if (neg_det_b(q) != alpha)
        throw math_error("wrong determinant");
    if (!is_primitive(q))
        throw math_error("form not primitive");
    const int g = genus_of(alpha);
    Mat2 T = Mat2::identity(q.field());
    QuadForm r = reduce_raw(q, g, T);
    FieldElement lc = r.a.leading();
    if (!lc.is_one()) {
        auto root = square_root(lc.inverse());
        if (!root)
            throw math_error("not positive w.r.t. alpha");
        Mat2 S = Mat2::scaling(*root);
        r = apply(r, S);
        T = T * S;
    }
    return {std::move(r), std::move(T)};
}

bool is_positive(const QuadForm& q, const Poly& alpha) {
    validate_discriminant(alpha);
    Poly beta = neg_det_b(q);
    if (beta.is_zero() || beta.degree() != alpha.degree() || beta.monicize().first != alpha ||
        !is_square(beta.leading()))
        throw math_error("discriminant mismatch");
    if (!is_primitive(q))
        throw math_error("form not primitive");
    const int g = genus_of(alpha);
    Mat2 T = Mat2::identity(q.field());
    QuadForm r = reduce_raw(q, g, T);
    return is_square(r.a.leading());
}

bool proper_equivalent(const QuadForm& q1, const QuadForm& q2, const Poly& alpha) {
    return reduce(q1, alpha).form == reduce(q2, alpha).form;
}

MumfordIdeal to_mumford(const QuadForm& q, const Poly& alpha) {
    if (!is_reduced(q, alpha))
        throw math_error("reduce first");
    const PrimeField f = q.field();
    const FieldElement half = f.element(2).inverse();
    Poly v = (q.b * half) % q.a;
    return MumfordIdeal(q.a, std::move(v), alpha);
}

QuadForm from_mumford(const MumfordIdeal& ideal) {
    if (!is_valid(ideal))
        throw math_error("invalid ideal");
    const Poly& u = ideal.u();
    const Poly& v = ideal.v();
    auto [c, rem] = divmod(v * v - ideal.alpha(), u);
    if (!rem.is_zero())
        throw math_error("invalid ideal");
    return QuadForm(u, v + v, std::move(c));
}

} // namespace ffclass
