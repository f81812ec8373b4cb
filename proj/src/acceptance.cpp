#include "ffclass/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ffclass/classgroup.hpp"
#include "ffclass/elliptic.hpp"
#include "ffclass/genus.hpp"
#include "ffclass/orbit_oracle.hpp"
#include "ffclass/poly_text.hpp"
#include "ffclass/report.hpp"

namespace ffclass {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("FFCLASS_SEED"))
        return std::strtoull(env, nullptr, 10);
    return AcceptanceOptions{}.seed;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << message;
        }
    }
};

std::vector<Poly> squarefree_monic_cubics(const PrimeField& field) {
    const std::int64_t p = field.modulus();
    std::vector<Poly> out;
    for (std::int64_t a2 = 0; a2 < p; ++a2)
        for (std::int64_t a1 = 0; a1 < p; ++a1)
            for (std::int64_t a0 = 0; a0 < p; ++a0) {
                Poly alpha(field, {a0, a1, a2, 1});
                if (is_squarefree(alpha))
                    out.push_back(std::move(alpha));
            }
    return out;
}

Poly random_squarefree_monic(const PrimeField& field, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(0, field.modulus() - 1);
    while (true) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1);
        for (int i = 0; i < degree; ++i)
            c[static_cast<std::size_t>(i)] = coeff(rng);
        c.back() = 1;
        Poly alpha(field, std::move(c));
        if (is_squarefree(alpha))
            return alpha;
    }
}

Poly random_poly(const PrimeField& field, int max_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(0, field.modulus() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c)
        x = coeff(rng);
    return Poly(field, std::move(c));
}

// --- criterion 1: benchmark class table over F_3 ------------------------

Criterion criterion_benchmark_table() {
    Criterion crit;
    const auto start = Clock::now();
    const PrimeField f3(3);
    const Poly alpha = parse_poly("x^3+x+1", f3);
    const Classification result = classify(alpha);
    const double secs = elapsed_seconds(start);

    crit.require(result.table.class_number() == 4,
                 "expected 4 classes, got " + std::to_string(result.table.class_number()));

    std::vector<QuadForm> expected = {
        parse_form("x+2,0,2x^2+2x+1", f3),
        parse_form("x,2,2x^2+2", f3),
        parse_form("x,1,2x^2+2", f3),
        parse_form("1,0,2x^3+2x+2", f3),
    };
    std::vector<QuadForm> actual = result.table.forms;
    std::sort(expected.begin(), expected.end(), form_less);
    std::sort(actual.begin(), actual.end(), form_less);
    crit.require(expected == actual, "reduced-form set mismatch");

    std::multiset<std::int64_t> orders(result.table.orders.begin(), result.table.orders.end());
    crit.require(orders == std::multiset<std::int64_t>({1, 2, 4, 4}), "order multiset mismatch");
    crit.require(result.table.invariant_factors == std::vector<std::int64_t>{4},
                 "invariant factors != [4]");
    crit.require(secs < 1.0, "took " + std::to_string(secs) + "s (limit 1s)");
    return crit;
}

// --- criterion 2: composition laws ---------------------------------------

Criterion criterion_composition_laws() {
    Criterion crit;
    const PrimeField f3(3);
    const Poly alpha = parse_poly("x^3+x+1", f3);
    const MumfordIdeal a = parse_ideal("x;2", f3, alpha);
    const MumfordIdeal b = parse_ideal("x;1", f3, alpha);
    crit.require(compose(a, b) == MumfordIdeal::identity(alpha),
                 "(x;2) * (x;1) is not the identity");
    crit.require(compose(a, a) == parse_ideal("x+2;0", f3, alpha), "(x;2)^2 != (x+2;0)");
    return crit;
}

// --- criterion 3: improper quotient --------------------------------------

Criterion criterion_improper_quotient() {
    Criterion crit;
    const PrimeField f3(3);
    const Classification ex1 = classify(parse_poly("x^3+x+1", f3));
    crit.require(ex1.merged.size() == 3,
                 "F_3 merged classes: expected 3, got " + std::to_string(ex1.merged.size()));
    crit.require(!ex1.inherits, "F_3 quotient unexpectedly keeps a group law");

    const PrimeField f5(5);
    const Classification ex2 = classify(parse_poly("x^3+x", f5));
    crit.require(ex2.merged.size() == 4,
                 "F_5 merged classes: expected 4, got " + std::to_string(ex2.merged.size()));
    crit.require(ex2.table.invariant_factors == std::vector<std::int64_t>({2, 2}),
                 "F_5 invariant factors != [2, 2]");
    crit.require(ex2.inherits, "F_5 quotient should keep the group law");
    return crit;
}

// --- criterion 4: genus suite ---------------------------------------------

Criterion criterion_genus_suite() {
    Criterion crit;
    const PrimeField f3(3);
    const Classification ex1 = classify(parse_poly("x^3+x+1", f3));
    crit.require(ex1.genera.count() == 2, "F_3: expected 2 genera");
    {
        const auto& principal =
            ex1.genera.genera[static_cast<std::size_t>(ex1.genera.principal_index)];
        std::set<int> got(principal.begin(), principal.end());
        std::set<int> want = {ex1.table.identity_index(),
                              ex1.table.index_of(parse_ideal("x+2;0", f3, ex1.table.alpha))};
        crit.require(got == want, "F_3 principal genus mismatch");
    }

    const PrimeField f5(5);
    const Classification ex2 = classify(parse_poly("x^3+x", f5));
    crit.require(ex2.genera.count() == 4, "F_5: expected 4 genera");
    {
        const auto& principal =
            ex2.genera.genera[static_cast<std::size_t>(ex2.genera.principal_index)];
        crit.require(principal.size() == 1 && principal[0] == ex2.table.identity_index(),
                     "F_5 principal genus should be the identity alone");
    }

    // Sweep: squares land in the principal genus and the genera count is
    // 2^(r-1), for every squarefree monic cubic over F_3 and F_5.
    for (std::int64_t p : {3, 5}) {
        const PrimeField field(p);
        for (const Poly& alpha : squarefree_monic_cubics(field)) {
            const Classification result = classify(alpha);
            const std::size_t r = ramified_primes(alpha).size();
            if (result.genera.count() != (std::size_t(1) << (r - 1))) {
                crit.require(false, "genera count != 2^(r-1) for " + to_string(alpha) + " over F_" +
                                        std::to_string(p));
                continue;
            }
            const auto& identity_vector =
                result.genera.vectors[static_cast<std::size_t>(result.table.identity_index())];
            for (std::size_t i = 0; i < result.table.class_number(); ++i) {
                const int sq = result.table.mul[i][i];
                if (result.genera.vectors[static_cast<std::size_t>(sq)] != identity_vector) {
                    crit.require(false, "square not principal for " + to_string(alpha) + " over F_" +
                                            std::to_string(p));
                    break;
                }
            }
        }
    }
    return crit;
}

// --- criterion 5: elliptic sweep -------------------------------------------

Criterion criterion_elliptic_sweep(std::uint64_t seed) {
    Criterion crit;
    const auto start = Clock::now();
    std::mt19937_64 rng(seed);

    auto check_curve = [&](const PrimeField& field, const Poly& alpha) {
        const EllipticCurve curve(field, alpha);
        const IsomorphismReport report = verify_isomorphism(curve);
        const std::int64_t p = field.modulus();
        const std::int64_t diff =
            static_cast<std::int64_t>(report.point_count) - (p + 1);
        if (diff * diff > 4 * p)
            crit.require(false, "Hasse bound fails for " + to_string(alpha) + " over F_" +
                                    std::to_string(p));
        if (report.point_count != report.class_count || !report.pass())
            crit.require(false, "isomorphism fails for " + to_string(alpha) + " over F_" +
                                    std::to_string(p));
    };

    for (std::int64_t p : {3, 5, 7}) {
        const PrimeField field(p);
        for (const Poly& alpha : squarefree_monic_cubics(field))
            check_curve(field, alpha);
    }
    for (std::int64_t p : {11, 13}) {
        const PrimeField field(p);
        const auto all = squarefree_monic_cubics(field);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int i = 0; i < 12; ++i)
            check_curve(field, all[pick(rng)]);
    }

    const double secs = elapsed_seconds(start);
    crit.require(secs < 60.0, "took " + std::to_string(secs) + "s (limit 60s)");
    return crit;
}

// --- criterion 6: oracle cross-check ---------------------------------------

Criterion criterion_oracle_crosscheck() {
    Criterion crit;
    for (std::int64_t p : {3, 5}) {
        const PrimeField field(p);
        for (const Poly& alpha : squarefree_monic_cubics(field)) {
            const OrbitReport report = orbit_classes(alpha, 3);
            const std::size_t h = enumerate_classes(alpha).class_number();
            if (report.orbit_count != h) {
                crit.require(false, "orbit count " + std::to_string(report.orbit_count) + " != " +
                                        std::to_string(h) + " classes for " + to_string(alpha) +
                                        " over F_" + std::to_string(p));
            }
            if (report.multi_fixed_orbits != 0)
                crit.require(false, "orbit with several reduced members for " + to_string(alpha) +
                                        " over F_" + std::to_string(p));
        }
    }
    return crit;
}

// --- criterion 7: property suites ------------------------------------------

struct TablePool {
    std::vector<ClassGroupTable> tables;

    const ClassGroupTable& pick(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::size_t> d(0, tables.size() - 1);
        return tables[d(rng)];
    }
    const MumfordIdeal& pick_class(const ClassGroupTable& table, std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::size_t> d(0, table.classes.size() - 1);
        return table.classes[d(rng)];
    }
};

TablePool build_pool(std::mt19937_64& rng) {
    TablePool pool;
    const std::int64_t primes[] = {3, 5, 7, 11, 13};
    for (int i = 0; i < 18; ++i) {
        const PrimeField field(primes[static_cast<std::size_t>(i) % 5]);
        const int degree = (i % 3 == 2) ? 5 : 3;
        pool.tables.push_back(enumerate_classes(random_squarefree_monic(field, degree, rng)));
    }
    return pool;
}

Criterion criterion_properties(std::uint64_t seed) {
    Criterion crit;
    std::mt19937_64 rng(seed);
    const TablePool pool = build_pool(rng);
    const int cases = 1200;

    // Cantor output validity and discriminant preservation.
    for (int n = 0; n < cases; ++n) {
        const ClassGroupTable& table = pool.pick(rng);
        const MumfordIdeal composed =
            compose(pool.pick_class(table, rng), pool.pick_class(table, rng));
        if (!is_valid(composed) || composed.u().degree() > genus_of(table.alpha)) {
            crit.require(false, "invalid Cantor output for " + to_string(table.alpha));
            break;
        }
        if (neg_det_b(from_mumford(composed)) != table.alpha) {
            crit.require(false, "composition changed the discriminant");
            break;
        }
    }

    // Identity and inverse laws.
    for (int n = 0; n < cases; ++n) {
        const ClassGroupTable& table = pool.pick(rng);
        const MumfordIdeal& ideal = pool.pick_class(table, rng);
        if (compose(ideal, MumfordIdeal::identity(table.alpha)) != ideal ||
            compose(ideal, inverse(ideal)) != MumfordIdeal::identity(table.alpha)) {
            crit.require(false, "identity/inverse law fails for " + to_string(table.alpha));
            break;
        }
    }

    // Reduction: idempotence and orbit invariance under unimodular words.
    for (int n = 0; n < cases; ++n) {
        const ClassGroupTable& table = pool.pick(rng);
        std::uniform_int_distribution<std::size_t> pick_idx(0, table.classes.size() - 1);
        const QuadForm& reduced = table.forms[pick_idx(rng)];
        const PrimeField field = table.alpha.field();

        const ReduceResult again = reduce(reduced, table.alpha);
        if (again.form != reduced || again.transform.det() != Poly::constant(field, 1)) {
            crit.require(false, "reduction not idempotent over " + to_string(table.alpha));
            break;
        }

        QuadForm moved = reduced;
        std::uniform_int_distribution<int> word_length(1, 6), kind(0, 2);
        std::uniform_int_distribution<std::int64_t> unit(1, field.modulus() - 1);
        const int length = word_length(rng);
        for (int w = 0; w < length; ++w) {
            switch (kind(rng)) {
            case 0:
                moved = apply(moved, Mat2::translation(random_poly(field, 2, rng)));
                break;
            case 1:
                moved = apply(moved, Mat2::swap(field));
                break;
            default:
                moved = apply(moved, Mat2::scaling(field.element(unit(rng))));
                break;
            }
        }
        if (reduce(moved, table.alpha).form != reduced) {
            crit.require(false, "reduction not orbit-invariant over " + to_string(table.alpha));
            break;
        }
    }

    // Residue symbol vs exhaustive square tables, deg P <= 2, p <= 7.
    int table_cases = 0;
    for (std::int64_t p : {3, 5, 7}) {
        const PrimeField field(p);
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
                    const int expected = v.is_zero() ? 0 : (squares.count(v.coeffs()) ? 1 : -1);
                    if (residue_symbol(v, prime) != expected) {
                        crit.require(false, "residue symbol disagrees with the square table at " +
                                                to_string(prime) + " over F_" + std::to_string(p));
                    }
                    ++table_cases;
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
    crit.require(table_cases >= 1000, "square-table comparison covered too few cases");

    // Residue symbol multiplicativity.
    for (int n = 0; n < cases; ++n) {
        std::uniform_int_distribution<int> pick_p(0, 2);
        const std::int64_t ps[] = {3, 5, 7};
        const PrimeField field(ps[pick_p(rng)]);
        std::uniform_int_distribution<int> pick_d(1, 2);
        const auto& primes = monic_irreducibles(field, pick_d(rng));
        std::uniform_int_distribution<std::size_t> pick_prime(0, primes.size() - 1);
        const Poly& prime = primes[pick_prime(rng)];
        const Poly v = random_poly(field, 3, rng);
        const Poly w = random_poly(field, 3, rng);
        if (divides(prime, v) || divides(prime, w))
            continue;
        if (residue_symbol(v * w, prime) != residue_symbol(v, prime) * residue_symbol(w, prime)) {
            crit.require(false, "residue symbol not multiplicative at " + to_string(prime));
            break;
        }
    }

    // Character well-definedness across represented values.
    for (int n = 0; n < cases; ++n) {
        const ClassGroupTable& table = pool.pick(rng);
        std::uniform_int_distribution<std::size_t> pick_idx(0, table.classes.size() - 1);
        const QuadForm& form = table.forms[pick_idx(rng)];
        const PrimeField field = table.alpha.field();
        const Poly s = random_poly(field, 2, rng);
        const Poly t = random_poly(field, 2, rng);
        const Poly value = form(s, t);
        if (value.is_zero())
            continue;
        const auto primes = ramified_primes(table.alpha);
        const auto raw = raw_characters(form, table.alpha);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            const int symbol = residue_symbol(value, primes[i]);
            if (symbol != 0 && symbol != raw[i]) {
                crit.require(false, "character differs across represented values over " +
                                        to_string(table.alpha));
                break;
            }
        }
        if (!crit.pass)
            break;
    }

    return crit;
}

} // namespace

bool run_acceptance(std::ostream& out, const AcceptanceOptions& options) {
    bool all = true;
    int index = 0;
    auto report = [&](const char* name, Criterion crit, double secs) {
        ++index;
        all = all && crit.pass;
        out << (crit.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name;
        if (!crit.pass)
            out << " -- " << crit.detail.str();
        out << " [" << secs << "s]\n";
    };

    auto timed = [&](const char* name, auto&& fn) {
        const auto start = Clock::now();
        Criterion crit = fn();
        report(name, std::move(crit), elapsed_seconds(start));
    };

    timed("benchmark class table over F_3", [] { return criterion_benchmark_table(); });
    timed("composition laws", [] { return criterion_composition_laws(); });
    timed("improper quotient", [] { return criterion_improper_quotient(); });
    timed("genus suite", [] { return criterion_genus_suite(); });
    timed("elliptic isomorphism sweep",
          [&] { return criterion_elliptic_sweep(options.seed); });
    timed("orbit oracle cross-check", [] { return criterion_oracle_crosscheck(); });
    timed("property suites", [&] { return criterion_properties(options.seed); });

    out << (all ? "all criteria passed" : "ACCEPTANCE FAILURE") << "\n";
    return all;
}

} // namespace ffclass
