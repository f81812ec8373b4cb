#include <doctest.h>

#include <set>

#include "ffclass/poly.hpp"
#include "helpers.hpp"

using namespace ffclass;
using test_helpers::P;

TEST_CASE("canonical form and basics") {
    PrimeField f3(3);
    Poly zero(f3);
    CHECK(zero.degree() == -1);
    CHECK(Poly(f3, {1, 0, 3}).degree() == 0); // 3 reduces to 0
    CHECK(Poly(f3, {0, 0, 0}).is_zero());
    CHECK(P("x^3+x+1", 3).coeffs() == std::vector<std::int64_t>({1, 1, 0, 1}));
    CHECK(P("x^3+x+1", 3).eval(1).value() == 0);
}

TEST_CASE("division with remainder") {
    // (x - 1) divides x^3 + x + 1 over F_3
    auto [q, r] = divmod(P("x^3+x+1", 3), P("x+2", 3));
    CHECK(q == P("x^2+x+2", 3));
    CHECK(r.is_zero());
    CHECK_THROWS_WITH_AS(divmod(P("x", 3), Poly(PrimeField(3))), "zero divisor", math_error);
}

TEST_CASE("derivative drops p-th powers") {
    CHECK(P("x^3+x+1", 3).derivative() == P("1", 3)); // 3x^2 vanishes
    CHECK(P("x^3+x", 5).eval(2).value() == 0);
}

TEST_CASE("divmod round-trip on random inputs") {
    auto gen = test_helpers::rng();
    for (int n = 0; n < 300; ++n) {
        PrimeField field(n % 2 ? 5 : 7);
        Poly f = test_helpers::random_poly(field, 6, gen);
        Poly g = test_helpers::random_nonzero_poly(field, 4, gen);
        auto [q, r] = divmod(f, g);
        CHECK(f == q * g + r);
        CHECK(r.degree() < g.degree());
    }
}

TEST_CASE("gcd and the Bezout identity") {
    CHECK(gcd(P("x^3+x+1", 3), P("1", 3)).is_one());
    CHECK(gcd(P("x^3+x+1", 3), P("x^3+x+1", 3).derivative()).is_one());
    CHECK(gcd(P("x^2", 5), P("x^2+x", 5)) == P("x", 5));
    CHECK_THROWS_WITH_AS(gcd(Poly(PrimeField(3)), Poly(PrimeField(3))), "gcd of zeros", math_error);

    auto gen = test_helpers::rng();
    for (int n = 0; n < 300; ++n) {
        PrimeField field(n % 2 ? 3 : 11);
        Poly f = test_helpers::random_nonzero_poly(field, 5, gen);
        Poly g = test_helpers::random_poly(field, 5, gen);
        auto [d, s, t] = xgcd(f, g);
        CHECK(d == s * f + t * g);
        CHECK(d == gcd(f, g));
        if (!g.is_zero())
            CHECK(gcd(f, g) == gcd(g, f));
    }
}

TEST_CASE("squarefree detection") {
    CHECK(is_squarefree(P("x^3+x+1", 3)));
    CHECK_FALSE(is_squarefree(P("x^2", 3)));
    CHECK(is_squarefree(P("x^3+x", 5)));
    CHECK_THROWS_AS(is_squarefree(Poly(PrimeField(3))), math_error);
}

TEST_CASE("factorization into monic irreducibles") {
    auto fs = factor(P("x^3+x+1", 3));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].prime == P("x+2", 3));
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[1].prime == P("x^2+x+2", 3));

    fs = factor(P("x^3+x", 5));
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].prime == P("x", 5));
    CHECK(fs[1].prime == P("x+2", 5));
    CHECK(fs[2].prime == P("x+3", 5));

    fs = factor(P("x^2", 3));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].prime == P("x", 3));
    CHECK(fs[0].multiplicity == 2);

    CHECK_THROWS_WITH_AS(factor(P("2", 3)), "no prime factors", math_error);
}

TEST_CASE("factorization re-multiplies, exhaustively for monic cubics") {
    for (std::int64_t p : {3, 5}) {
        PrimeField field(p);
        for (std::int64_t a2 = 0; a2 < p; ++a2)
            for (std::int64_t a1 = 0; a1 < p; ++a1)
                for (std::int64_t a0 = 0; a0 < p; ++a0) {
                    Poly f(field, {a0, a1, a2, 1});
                    Poly product = Poly::constant(field, 1);
                    for (const auto& [prime, multiplicity] : factor(f)) {
                        CHECK(is_irreducible(prime));
                        for (int e = 0; e < multiplicity; ++e)
                            product = product * prime;
                    }
                    CHECK(product == f);
                }
    }
}

TEST_CASE("residue symbols in residue fields") {
    CHECK(residue_symbol(P("2", 3), P("x+2", 3)) == -1);
    CHECK(residue_symbol(P("x+2", 3), P("x^2+x+2", 3)) == 1);
    CHECK(residue_symbol(P("x", 3), P("x^2+x+2", 3)) == -1);
    CHECK(residue_symbol(P("x+2", 3), P("x+2", 3)) == 0);
    CHECK_THROWS_WITH_AS(residue_symbol(P("x", 3), P("x^2+2x+1", 3)), "modulus not prime",
                         math_error);
}

TEST_CASE("residue symbol matches exhaustive square tables") {
    for (std::int64_t p : {3, 5, 7}) {
        PrimeField field(p);
        for (int d = 1; d <= 2; ++d) {
            for (const Poly& prime : monic_irreducibles(field, d)) {
                std::set<std::vector<std::int64_t>> squares;
                std::vector<std::int64_t> rc(static_cast<std::size_t>(d), 0);
                while (true) {
                    Poly r(field, rc);
                    squares.insert(((r * r) % prime).coeffs());
                    std::size_t i = 0;
                    while (i < rc.size() && rc[i] == p - 1)
                        rc[i++] = 0;
                    if (i == rc.size())
                        break;
                    ++rc[i];
                }
                std::vector<std::int64_t> vc(static_cast<std::size_t>(d), 0);
                while (true) {
                    Poly v(field, vc);
                    int expected = v.is_zero() ? 0 : (squares.count(v.coeffs()) ? 1 : -1);
                    CHECK(residue_symbol(v, prime) == expected);
                    std::size_t i = 0;
                    while (i < vc.size() && vc[i] == p - 1)
                        vc[i++] = 0;
                    if (i == vc.size())
                        break;
                    ++vc[i];
                }
            }
        }
    }
}

TEST_CASE("residue symbol is multiplicative") {
    auto gen = test_helpers::rng();
    for (int n = 0; n < 400; ++n) {
        PrimeField field(n % 2 ? 3 : 7);
        const auto& primes = monic_irreducibles(field, n % 3 ? 2 : 3);
        std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
        const Poly& prime = primes[pick(gen)];
        Poly v = test_helpers::random_nonzero_poly(field, 4, gen);
        Poly w = test_helpers::random_nonzero_poly(field, 4, gen);
        if (divides(prime, v) || divides(prime, w))
            continue;
        CHECK(residue_symbol(v * w, prime) == residue_symbol(v, prime) * residue_symbol(w, prime));
    }
}

TEST_CASE("irreducible enumeration is deterministic and complete") {
    PrimeField f3(3);
    const auto& linear = monic_irreducibles(f3, 1);
    REQUIRE(linear.size() == 3);
    CHECK(linear[0] == P("x", 3));
    CHECK(linear[1] == P("x+1", 3));
    CHECK(linear[2] == P("x+2", 3));
    // #monic irreducibles of degree 2 over F_p is p(p-1)/2
    CHECK(monic_irreducibles(f3, 2).size() == 3);
    CHECK(monic_irreducibles(PrimeField(5), 2).size() == 10);
    // and of degree 3: (p^3 - p)/3
    CHECK(monic_irreducibles(f3, 3).size() == 8);
}
