#include "ffclass/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ffclass {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus())
        throw math_error("polynomials over different fields");
}

} // namespace

Poly::Poly(const PrimeField& field, std::vector<std::int64_t> coeffs)
    : p_(field.modulus()), c_(std::move(coeffs)) {
    for (auto& c : c_)
        c = field.reduce(c);
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::constant(const PrimeField& field, std::int64_t c) { return Poly(field, {c}); }

Poly Poly::monomial(const PrimeField& field, std::int64_t c, int degree) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(field, std::move(v));
}

FieldElement Poly::leading() const {
    if (is_zero())
        throw math_error("leading coefficient of zero polynomial");
    return field().element(c_.back());
}

FieldElement Poly::eval(const FieldElement& at) const {
    const PrimeField f = field();
    std::int64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = f.add(f.mul(acc, at.value()), *it);
    return f.element(acc);
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(*this, o);
    const PrimeField f = field();
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(f, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(*this, o);
    const PrimeField f = field();
    std::vector<std::int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
    return Poly(f, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    require_same_field(*this, o);
    const PrimeField f = field();
    if (is_zero() || o.is_zero())
        return Poly(f);
    std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    }
    return Poly(f, std::move(r));
}

Poly Poly::operator-() const {
    const PrimeField f = field();
    std::vector<std::int64_t> r(c_);
    for (auto& c : r)
        c = f.neg(c);
    return Poly(f, std::move(r));
}

Poly Poly::operator*(const FieldElement& s) const {
    const PrimeField f = field();
    std::vector<std::int64_t> r(c_);
    for (auto& c : r)
        c = f.mul(c, s.value());
    return Poly(f, std::move(r));
}

Poly Poly::derivative() const {
    const PrimeField f = field();
    if (c_.size() <= 1)
        return Poly(f);
    std::vector<std::int64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = f.mul(c_[i], static_cast<std::int64_t>(i % f.modulus()));
    return Poly(f, std::move(r));
}

std::pair<Poly, FieldElement> Poly::monicize() const {
    if (is_zero())
        throw math_error("monicize zero polynomial");
    FieldElement lc = leading();
    return {*this * lc.inverse(), lc};
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero())
        throw math_error("zero divisor");
    const PrimeField field = f.field();
    if (f.degree() < g.degree())
        return {Poly(field), f};
    std::vector<std::int64_t> rem(f.coeffs());
    std::vector<std::int64_t> quo(static_cast<std::size_t>(f.degree() - g.degree()) + 1, 0);
    const std::int64_t inv_lead = field.inv(g.coeff_value(g.degree()));
    for (int k = f.degree() - g.degree(); k >= 0; --k) {
        std::int64_t q = field.mul(rem[static_cast<std::size_t>(k + g.degree())], inv_lead);
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0)
            continue;
        for (int i = 0; i <= g.degree(); ++i) {
            auto& r = rem[static_cast<std::size_t>(k + i)];
            r = field.sub(r, field.mul(q, g.coeff_value(i)));
        }
    }
    rem.resize(static_cast<std::size_t>(std::max(g.degree(), 0)));
    return {Poly(field, std::move(quo)), Poly(field, std::move(rem))};
}

Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

Poly gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero())
        throw math_error("gcd of zeros");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monicize().first;
}

XgcdResult xgcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero())
        throw math_error("gcd of zeros");
    const PrimeField field = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::constant(field, 1), s1 = Poly(field);
    Poly t0 = Poly(field), t1 = Poly::constant(field, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = r1;
        r1 = r;
        Poly s = s0 - q * s1;
        s0 = s1;
        s1 = s;
        Poly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    FieldElement lc = r0.leading();
    FieldElement il = lc.inverse();
    return {r0 * il, s0 * il, t0 * il};
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero())
        throw math_error("squarefree test of zero polynomial");
    if (f.is_constant())
        return true;
    Poly d = f.derivative();
    if (d.is_zero())
        return false; // p-th power
    return gcd(f, d).is_unit();
}

namespace {

std::mutex irreducible_cache_mutex;
std::map<std::pair<std::int64_t, int>, std::vector<Poly>> irreducible_cache;

// All monic polynomials of exactly the given degree, by ascending
// coefficient order (constant term varies slowest).
std::vector<Poly> all_monic(const PrimeField& field, int degree) {
    const std::int64_t p = field.modulus();
    std::vector<Poly> out;
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(degree) + 1, 0);
    coeffs.back() = 1;
    while (true) {
        out.push_back(Poly(field, coeffs));
        int i = degree - 1;
        while (i >= 0 && coeffs[static_cast<std::size_t>(i)] == p - 1)
            coeffs[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            break;
        ++coeffs[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

std::vector<Poly> compute_irreducibles(const PrimeField& field, int degree) {
    std::vector<Poly> out;
    for (const Poly& f : all_monic(field, degree)) {
        bool reducible = false;
        for (int d = 1; d <= degree / 2 && !reducible; ++d)
            for (const Poly& q : monic_irreducibles(field, d))
                if (divides(q, f)) {
                    reducible = true;
                    break;
                }
        if (!reducible)
            out.push_back(f);
    }
    return out;
}

} // namespace

const std::vector<Poly>& monic_irreducibles(const PrimeField& field, int degree) {
    if (degree < 1)
        throw math_error("irreducibles need degree >= 1");
    const auto key = std::make_pair(field.modulus(), degree);
    {
        std::lock_guard<std::mutex> lock(irreducible_cache_mutex);
        auto it = irreducible_cache.find(key);
        if (it != irreducible_cache.end())
            return it->second;
    }
    // Compute outside the lock; lower degrees recurse through this function.
    std::vector<Poly> value = compute_irreducibles(field, degree);
    std::lock_guard<std::mutex> lock(irreducible_cache_mutex);
    return irreducible_cache.emplace(key, std::move(value)).first->second;
}

std::vector<PolyFactor> factor(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw math_error("no prime factors");
    const PrimeField field = f.field();
    Poly rest = f.monicize().first;
    std::vector<PolyFactor> out;
    for (int d = 1; d <= rest.degree() / 2; ++d) {
        for (const Poly& q : monic_irreducibles(field, d)) {
            if (rest.degree() < 2 * d)
                break;
            int m = 0;
            while (divides(q, rest)) {
                rest = rest / q;
                ++m;
            }
            if (m > 0)
                out.push_back({q, m});
        }
    }
    if (rest.degree() >= 1)
        out.push_back({rest, 1}); // remaining factor is irreducible
    std::sort(out.begin(), out.end(),
              [](const PolyFactor& a, const PolyFactor& b) { return poly_less(a.prime, b.prime); });
    return out;
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        return false;
    for (int d = 1; d <= f.degree() / 2; ++d)
        for (const Poly& q : monic_irreducibles(f.field(), d))
            if (divides(q, f))
                return false;
    return true;
}

Poly powmod(const Poly& base, std::int64_t exponent, const Poly& modulus) {
    if (modulus.degree() < 1)
        throw math_error("powmod needs modulus of degree >= 1");
    const PrimeField field = base.field();
    Poly result = Poly::constant(field, 1);
    Poly b = base % modulus;
    while (exponent > 0) {
        if (exponent & 1)
            result = (result * b) % modulus;
        b = (b * b) % modulus;
        exponent >>= 1;
    }
    return result;
}

int residue_symbol(const Poly& v, const Poly& P) {
    if (!is_irreducible(P))
        throw math_error("modulus not prime");
    const PrimeField field = v.field();
    Poly r = v % P;
    if (r.is_zero())
        return 0;
    // v^((p^d - 1)/2) mod P equals legendre(Norm(v)) where the norm is the
    // product of the d Frobenius conjugates, a value in F_p.
    const int d = P.degree();
    Poly conj = r;
    Poly norm = r;
    for (int i = 1; i < d; ++i) {
        conj = powmod(conj, field.modulus(), P);
        norm = (norm * conj) % P;
    }
    if (!norm.is_constant() || norm.is_zero())
        throw math_error("norm computation failed; modulus not prime?");
    return is_square(norm.coeff(0)) ? 1 : -1;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff_value(i) != b.coeff_value(i))
            return a.coeff_value(i) < b.coeff_value(i);
    }
    return false;
}

} // namespace ffclass
