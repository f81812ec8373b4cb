#include <doctest.h>

#include "ffclass/field.hpp"

using namespace ffclass;

TEST_CASE("prime field construction validates the modulus") {
    CHECK_NOTHROW(PrimeField(3));
    CHECK_NOTHROW(PrimeField(5));
    CHECK_NOTHROW(PrimeField(2147483647)); // 2^31 - 1
    CHECK_THROWS_AS(PrimeField(1), math_error);
    CHECK_THROWS_AS(PrimeField(2), math_error);
    CHECK_THROWS_AS(PrimeField(9), math_error);
    CHECK_THROWS_AS(PrimeField(91), math_error); // 7 * 13
    CHECK_THROWS_AS(PrimeField(std::int64_t(1) << 31), math_error);
}

TEST_CASE("field arithmetic basics") {
    PrimeField f(7);
    CHECK(f.element(10).value() == 3);
    CHECK(f.element(-1).value() == 6);
    CHECK((f.element(3) + f.element(5)).value() == 1);
    CHECK((f.element(3) * f.element(5)).value() == 1);
    CHECK((f.element(3) - f.element(5)).value() == 5);
    CHECK(f.element(3).inverse().value() == 5);
    CHECK((f.element(2) / f.element(3)).value() == 3);
    CHECK(f.element(3).pow(6).value() == 1);
    CHECK_THROWS_AS(f.zero().inverse(), math_error);
    CHECK_THROWS_AS(PrimeField(5).element(1) + f.element(1), math_error);
}

TEST_CASE("square detection by the Euler criterion") {
    CHECK(is_square(PrimeField(3).element(1)));
    CHECK_FALSE(is_square(PrimeField(3).element(2)));
    CHECK(is_square(PrimeField(5).element(4)));
    CHECK(is_square(PrimeField(5).zero()));
}

TEST_CASE("square roots pick the smaller representative") {
    CHECK(square_root(PrimeField(5).element(4))->value() == 2);
    CHECK(square_root(PrimeField(3).element(0))->value() == 0);
    CHECK_FALSE(square_root(PrimeField(3).element(2)).has_value());
}

TEST_CASE("square roots via Tonelli-Shanks for large p") {
    for (std::int64_t p : {10007, 1000003, 2147483647}) {
        PrimeField f(p);
        CHECK(square_root(f.element(4))->value() == 2);
        for (std::int64_t x : {3, 17, 12345}) {
            FieldElement sq = f.element(x) * f.element(x);
            auto root = square_root(sq);
            REQUIRE(root.has_value());
            CHECK((*root) * (*root) == sq);
            CHECK(root->value() <= f.neg(root->value()));
        }
    }
}

TEST_CASE("smallest nonsquare") {
    CHECK(smallest_nonsquare(PrimeField(3)).value() == 2);
    CHECK(smallest_nonsquare(PrimeField(5)).value() == 2);
    CHECK(smallest_nonsquare(PrimeField(7)).value() == 3); // 2 = 3^2 mod 7
}

TEST_CASE("square-class structure, exhaustively for p <= 100") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
                           71, 73, 79, 83, 89, 97}) {
        PrimeField f(p);
        FieldElement lambda = smallest_nonsquare(f);
        std::int64_t squares = 0;
        for (std::int64_t x = 1; x < p; ++x) {
            FieldElement e = f.element(x);
            if (is_square(e))
                ++squares;
            // multiplying by a nonsquare flips the square class
            CHECK(is_square(e) != is_square(e * lambda));
            auto root = square_root(e);
            CHECK(root.has_value() == is_square(e));
            if (root)
                CHECK((*root) * (*root) == e);
        }
        CHECK(squares == (p - 1) / 2);
    }
}
