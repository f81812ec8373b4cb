#include <iostream>

#include "ffclass/acceptance.hpp"

int main() {
    ffclass::AcceptanceOptions options;
    options.seed = ffclass::default_seed();
    const bool ok = ffclass::run_acceptance(std::cout, options);
    return ok ? 0 : 1;
}
