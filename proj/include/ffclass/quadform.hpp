#pragma once

#include "ffclass/mumford.hpp"
#include "ffclass/poly.hpp"

namespace ffclass {

/// Binary quadratic form a*X^2 + b*X*Y + c*Y^2 over F_p[x].
struct QuadForm {
    Poly a, b, c;

    QuadForm(Poly a_, Poly b_, Poly c_);

    PrimeField field() const { return a.field(); }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero(); }

    /// Value q(s, t).
    Poly operator()(const Poly& s, const Poly& t) const;

    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }
};

bool form_less(const QuadForm& lhs, const QuadForm& rhs);

/// 2x2 matrix over F_p[x], acting on forms by change of variables.
struct Mat2 {
    Poly m00, m01, m10, m11;

    static Mat2 identity(const PrimeField& field);
    /// (X, Y) -> (X + m*Y, Y).
    static Mat2 translation(const Poly& m);
    /// The determinant-1 swap taking (a, b, c) to (c, -b, a).
    static Mat2 swap(const PrimeField& field);
    /// diag(s, s^-1).
    static Mat2 scaling(const FieldElement& s);

    Mat2 operator*(const Mat2& o) const;
    Poly det() const;
};

Poly disc(const QuadForm& q);      // b^2 - 4ac
Poly neg_det_b(const QuadForm& q); // b^2/4 - ac = disc/4

/// gcd(a, b, c) is a unit; throws on the zero form.
bool is_primitive(const QuadForm& q);

/// q composed with the change of variables A: the form with matrix
/// A^t * B_q * A, i.e. q'(w) = q(A*w). Throws on singular A.
QuadForm apply(const QuadForm& q, const Mat2& A);

/// (a, -b, c); represents the inverse class.
QuadForm opposite(const QuadForm& q);

/// a monic, deg b < deg a <= g (b = 0 when a = 1) and neg_det_b = alpha.
bool is_reduced(const QuadForm& q, const Poly& alpha);

struct ReduceResult {
    QuadForm form;
    Mat2 transform; // form == apply(input, transform), det 1
};

/// Reduction to the unique reduced representative of the proper class.
/// Requires neg_det_b(q) == alpha exactly ("wrong determinant" otherwise);
/// throws "not positive w.r.t. alpha" when the class is not positive.
ReduceResult reduce(const QuadForm& q, const Poly& alpha);

/// Whether q is positive with respect to alpha: reduction reaches a form
/// whose leading a-coefficient is a square. Accepts neg_det_b in
/// alpha * (F_p^x)^2; throws "discriminant mismatch" outside that class.
bool is_positive(const QuadForm& q, const Poly& alpha);

/// Equality of reduced representatives. Both forms must be positive with
/// neg_det_b = alpha exactly; errors propagate from reduce().
bool proper_equivalent(const QuadForm& q1, const QuadForm& q2, const Poly& alpha);

/// Gauss correspondence on reduced objects: (a, b, c) <-> (u, v) = (a, b/2).
/// to_mumford throws "reduce first" on non-reduced input.
MumfordIdeal to_mumford(const QuadForm& q, const Poly& alpha);
QuadForm from_mumford(const MumfordIdeal& ideal);

} // namespace ffclass
