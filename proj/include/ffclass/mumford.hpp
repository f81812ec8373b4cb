#pragma once

#include <cstdint>

#include "ffclass/poly.hpp"

namespace ffclass {

/// Checks that alpha is a valid discriminant for the orders handled here:
/// monic, squarefree, odd degree >= 3. Throws "not monic" / "even degree" /
/// "not squarefree" otherwise.
void validate_discriminant(const Poly& alpha);

/// g = (deg alpha - 1) / 2.
int genus_of(const Poly& alpha);

/// Ideal of F_p[x][sqrt(alpha)] in two-generator form (u, v - sqrt(alpha)),
/// u monic, deg v < deg u, u | v^2 - alpha. Reduced when deg u <= g.
class MumfordIdeal {
  public:
    MumfordIdeal(Poly u, Poly v, Poly alpha);

    static MumfordIdeal identity(const Poly& alpha);

    const Poly& u() const noexcept { return u_; }
    const Poly& v() const noexcept { return v_; }
    const Poly& alpha() const noexcept { return alpha_; }

    bool is_identity() const { return u_.is_one(); }

    bool operator==(const MumfordIdeal& o) const {
        return u_ == o.u_ && v_ == o.v_ && alpha_ == o.alpha_;
    }
    bool operator!=(const MumfordIdeal& o) const { return !(*this == o); }

  private:
    Poly u_, v_, alpha_;
};

/// u monic, deg v < deg u, u | v^2 - alpha. No exception; constructing the
/// ideal does not validate so invalid candidates can be probed.
bool is_valid(const MumfordIdeal& ideal);

/// Reduction to the unique representative with deg u <= g:
/// repeat u <- monic((alpha - v^2)/u), v <- (-v) mod u.
MumfordIdeal reduce(Poly u, Poly v, const Poly& alpha);

/// Cantor composition followed by reduction; throws "mismatched alpha" when
/// the operands live over different discriminants.
MumfordIdeal compose(const MumfordIdeal& lhs, const MumfordIdeal& rhs);

/// (u, (-v) mod u); the class inverse.
MumfordIdeal inverse(const MumfordIdeal& ideal);

/// Least n >= 1 with ideal^n = identity, by repeated composition.
std::int64_t order_of(const MumfordIdeal& ideal);

/// Total order consistent with class enumeration: (deg u, u, v).
bool ideal_less(const MumfordIdeal& a, const MumfordIdeal& b);

} // namespace ffclass
