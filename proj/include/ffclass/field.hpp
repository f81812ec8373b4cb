#pragma once

#include <cstdint>
#include <optional>

#include "ffclass/errors.hpp"

namespace ffclass {

class FieldElement;

/// The odd prime field F_p, 3 <= p < 2^31. Primality is checked at
/// construction so downstream arithmetic never divides by a zero divisor.
class PrimeField {
  public:
    explicit PrimeField(std::int64_t p);

    std::int64_t modulus() const noexcept { return p_; }

    /// Canonical residue of value in [0, p).
    std::int64_t reduce(std::int64_t value) const noexcept {
        std::int64_t r = value % p_;
        return r < 0 ? r + p_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const noexcept { return (a + b) % p_; }
    std::int64_t sub(std::int64_t a, std::int64_t b) const noexcept {
        std::int64_t r = a - b;
        return r < 0 ? r + p_ : r;
    }
    std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept { return (a * b) % p_; }
    std::int64_t neg(std::int64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::int64_t pow(std::int64_t base, std::int64_t exponent) const noexcept;
    std::int64_t inv(std::int64_t a) const; // throws math_error on 0

    FieldElement element(std::int64_t value) const;
    FieldElement zero() const;
    FieldElement one() const;

    bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const noexcept { return p_ != o.p_; }

  private:
    std::int64_t p_;
};

/// Immutable element of F_p; carries its modulus so values from different
/// fields cannot be mixed silently.
class FieldElement {
  public:
    FieldElement() : v_(0), p_(0) {}
    FieldElement(std::int64_t canonical_value, const PrimeField& field)
        : v_(canonical_value), p_(field.modulus()) {}

    std::int64_t value() const noexcept { return v_; }
    std::int64_t modulus() const noexcept { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool is_zero() const noexcept { return v_ == 0; }
    bool is_one() const noexcept { return v_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(std::int64_t exponent) const;

    bool operator==(const FieldElement& o) const noexcept { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const FieldElement& o) const noexcept { return !(*this == o); }

  private:
    std::int64_t v_;
    std::int64_t p_;
};

/// Euler criterion x^((p-1)/2); zero counts as a square.
bool is_square(const FieldElement& x);

/// Some y with y*y = x, or nullopt. When both roots exist the smaller
/// canonical representative is returned. Exhaustive search for p < 10^4,
/// Tonelli-Shanks above.
std::optional<FieldElement> square_root(const FieldElement& x);

/// Least representative in [2, p) that is not a square.
FieldElement smallest_nonsquare(const PrimeField& field);

} // namespace ffclass
