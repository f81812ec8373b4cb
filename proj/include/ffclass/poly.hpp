#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffclass/field.hpp"

namespace ffclass {

/// Dense univariate polynomial over F_p. Coefficients are stored by
/// ascending power in canonical form: the highest stored coefficient is
/// nonzero and the zero polynomial is the empty sequence (degree -1).
class Poly {
  public:
    explicit Poly(const PrimeField& field) : p_(field.modulus()) {}
    Poly(const PrimeField& field, std::vector<std::int64_t> coeffs);

    static Poly constant(const PrimeField& field, std::int64_t c);
    static Poly monomial(const PrimeField& field, std::int64_t c, int degree);
    static Poly x(const PrimeField& field) { return monomial(field, 1, 1); }

    PrimeField field() const { return PrimeField(p_); }
    std::int64_t modulus() const noexcept { return p_; }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    /// Nonzero constant.
    bool is_unit() const noexcept { return c_.size() == 1; }

    std::int64_t coeff_value(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    FieldElement coeff(int i) const { return field().element(coeff_value(i)); }
    FieldElement leading() const; // throws on zero polynomial
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

    FieldElement eval(const FieldElement& at) const;
    FieldElement eval(std::int64_t at) const { return eval(field().element(at)); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const FieldElement& s) const;

    Poly derivative() const;

    /// (lc^-1 * f, lc); throws on the zero polynomial.
    std::pair<Poly, FieldElement> monicize() const;

    bool operator==(const Poly& o) const noexcept { return p_ == o.p_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const noexcept { return !(*this == o); }

  private:
    void trim();

    std::int64_t p_;
    std::vector<std::int64_t> c_;
};

/// (quotient, remainder) with deg r < deg g; throws "zero divisor" on g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
bool divides(const Poly& d, const Poly& f);

/// Monic gcd; throws "gcd of zeros" when both inputs vanish.
Poly gcd(const Poly& f, const Poly& g);

struct XgcdResult {
    Poly d; // monic gcd
    Poly s;
    Poly t; // d = s*f + t*g
};
XgcdResult xgcd(const Poly& f, const Poly& g);

/// true iff gcd(f, f') is a unit; throws on f = 0.
bool is_squarefree(const Poly& f);

struct PolyFactor {
    Poly prime; // monic irreducible
    int multiplicity;
};

/// Monic irreducible factorization, sorted by (degree, ascending coefficient
/// order); lc(f) * prod prime^multiplicity == f. Throws on constants.
std::vector<PolyFactor> factor(const Poly& f);

bool is_irreducible(const Poly& f);

/// All monic irreducibles of exactly the given degree, sorted; cached per
/// (p, degree), populated once and read-only afterwards.
const std::vector<Poly>& monic_irreducibles(const PrimeField& field, int degree);

Poly powmod(const Poly& base, std::int64_t exponent, const Poly& modulus);

/// Quadratic residue symbol of v in the residue field F_p[x]/(P):
/// 0 when P | v, else +1/-1 as v is a square or not. P must be irreducible.
int residue_symbol(const Poly& v, const Poly& P);

/// Total order: by degree, then by coefficients from the constant term up.
bool poly_less(const Poly& a, const Poly& b);

} // namespace ffclass
