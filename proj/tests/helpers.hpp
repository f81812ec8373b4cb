#pragma once

#include <cstdlib>
#include <random>
#include <string_view>

#include "ffclass/poly_text.hpp"

namespace test_helpers {

/// Seed for randomized checks; FFCLASS_SEED overrides the fixed default.
inline std::uint64_t seed() {
    if (const char* env = std::getenv("FFCLASS_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 24301;
}

inline std::mt19937_64 rng() { return std::mt19937_64(seed()); }

inline ffclass::Poly P(std::string_view text, std::int64_t p) {
    return ffclass::parse_poly(text, ffclass::PrimeField(p));
}

inline ffclass::QuadForm F(std::string_view text, std::int64_t p) {
    return ffclass::parse_form(text, ffclass::PrimeField(p));
}

inline ffclass::Poly random_poly(const ffclass::PrimeField& field, int max_degree,
                                 std::mt19937_64& gen) {
    std::uniform_int_distribution<std::int64_t> coeff(0, field.modulus() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg(gen)) + 1);
    for (auto& x : c)
        x = coeff(gen);
    return ffclass::Poly(field, std::move(c));
}

inline ffclass::Poly random_nonzero_poly(const ffclass::PrimeField& field, int max_degree,
                                         std::mt19937_64& gen) {
    while (true) {
        ffclass::Poly f = random_poly(field, max_degree, gen);
        if (!f.is_zero())
            return f;
    }
}

} // namespace test_helpers
