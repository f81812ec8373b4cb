#include "ffclass/field.hpp"

namespace ffclass {

namespace {

bool is_prime_trial(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.modulus() != b.modulus())
        throw math_error("field elements from different fields");
}

} // namespace

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p < 3 || p >= (std::int64_t(1) << 31))
        throw math_error("modulus out of range [3, 2^31)");
    if (p % 2 == 0 || !is_prime_trial(p))
        throw math_error("modulus is not an odd prime");
}

std::int64_t PrimeField::pow(std::int64_t base, std::int64_t exponent) const noexcept {
    std::int64_t result = 1 % p_;
    base = reduce(base);
    while (exponent > 0) {
        if (exponent & 1)
            result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

std::int64_t PrimeField::inv(std::int64_t a) const {
    a = reduce(a);
    if (a == 0)
        throw math_error("inverse of zero");
    return pow(a, p_ - 2);
}

FieldElement PrimeField::element(std::int64_t value) const { return FieldElement(reduce(value), *this); }
FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1, *this); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field().add(v_, o.v_), field());
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field().sub(v_, o.v_), field());
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field().mul(v_, o.v_), field());
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    require_same_field(*this, o);
    return FieldElement(field().mul(v_, field().inv(o.v_)), field());
}

FieldElement FieldElement::operator-() const { return FieldElement(field().neg(v_), field()); }

FieldElement FieldElement::inverse() const { return FieldElement(field().inv(v_), field()); }

FieldElement FieldElement::pow(std::int64_t exponent) const {
    return FieldElement(field().pow(v_, exponent), field());
}

bool is_square(const FieldElement& x) {
    if (x.is_zero())
        return true;
    const PrimeField f = x.field();
    return f.pow(x.value(), (f.modulus() - 1) / 2) == 1;
}

namespace {

// Tonelli-Shanks for odd prime p, assuming x is a nonzero square.
std::int64_t tonelli_shanks(const PrimeField& f, std::int64_t x) {
    const std::int64_t p = f.modulus();
    if (p % 4 == 3)
        return f.pow(x, (p + 1) / 4);
    std::int64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::int64_t z = 2;
    while (f.pow(z, (p - 1) / 2) != p - 1)
        ++z;
    std::int64_t m = s;
    std::int64_t c = f.pow(z, q);
    std::int64_t t = f.pow(x, q);
    std::int64_t r = f.pow(x, (q + 1) / 2);
    while (t != 1) {
        std::int64_t i = 0;
        std::int64_t t2 = t;
        while (t2 != 1) {
            t2 = f.mul(t2, t2);
            ++i;
        }
        std::int64_t b = c;
        for (std::int64_t j = 0; j < m - i - 1; ++j)
            b = f.mul(b, b);
        m = i;
        c = f.mul(b, b);
        t = f.mul(t, c);
        r = f.mul(r, b);
    }
    return r;
}

} // namespace

std::optional<FieldElement> square_root(const FieldElement& x) {
    const PrimeField f = x.field();
    if (x.is_zero())
        return f.zero();
    if (!is_square(x))
        return std::nullopt;
    std::int64_t root;
    if (f.modulus() < 10000) {
        root = 0;
        for (std::int64_t y = 1; y < f.modulus(); ++y)
            if (f.mul(y, y) == x.value()) {
                root = y;
                break;
            }
    } else {
        root = tonelli_shanks(f, x.value());
    }
    std::int64_t other = f.neg(root);
    return f.element(root < other ? root : other);
}

FieldElement smallest_nonsquare(const PrimeField& field) {
    for (std::int64_t v = 2; v < field.modulus(); ++v)
        if (!is_square(field.element(v)))
            return field.element(v);
    throw math_error("no nonsquare found"); // unreachable for p >= 3
}

} // namespace ffclass
