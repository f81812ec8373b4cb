#include "ffclass/orbit_oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace ffclass {

namespace {

struct UnionFind {
    std::vector<int> parent;
    std::vector<int> rank_;

    explicit UnionFind(std::size_t n) : parent(n), rank_(n, 0) {
        for (std::size_t i = 0; i < n; ++i)
            parent[i] = static_cast<int>(i);
    }

    int find(int i) {
        while (parent[static_cast<std::size_t>(i)] != i) {
            parent[static_cast<std::size_t>(i)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
            i = parent[static_cast<std::size_t>(i)];
        }
        return i;
    }

    void unite(int i, int j) {
        i = find(i);
        j = find(j);
        if (i == j)
            return;
        if (rank_[static_cast<std::size_t>(i)] < rank_[static_cast<std::size_t>(j)])
            std::swap(i, j);
        parent[static_cast<std::size_t>(j)] = i;
        if (rank_[static_cast<std::size_t>(i)] == rank_[static_cast<std::size_t>(j)])
            ++rank_[static_cast<std::size_t>(i)];
    }
};

std::string form_key(const QuadForm& q) {
    std::string key;
    for (const Poly* p : {&q.a, &q.b, &q.c}) {
        for (std::int64_t c : p->coeffs()) {
            key += std::to_string(c);
            key += ',';
        }
        key += '|';
    }
    return key;
}

bool in_box(const QuadForm& q, int bound) {
    return q.a.degree() <= bound && q.b.degree() <= bound && q.c.degree() <= bound &&
           !q.a.is_zero() && !q.c.is_zero();
}

// Reduced-shaped member: the unique canonical representative of a positive
// class. Detected syntactically, without running any reduction.
bool is_fixed_point(const QuadForm& q, int genus) {
    return q.a.is_monic() && q.a.degree() <= genus && q.b.degree() < q.a.degree();
}

// All monic divisors of n from its factorization, degree <= bound.
std::vector<Poly> bounded_monic_divisors(const Poly& n, int bound) {
    const std::vector<PolyFactor> factors = factor(n);
    std::vector<Poly> divisors{Poly::constant(n.field(), 1)};
    for (const auto& pf : factors) {
        const std::size_t existing = divisors.size();
        Poly power = pf.prime;
        for (int e = 1; e <= pf.multiplicity; ++e) {
            for (std::size_t i = 0; i < existing; ++i) {
                Poly d = divisors[i] * power;
                if (d.degree() <= bound)
                    divisors.push_back(std::move(d));
            }
            power = power * pf.prime;
        }
    }
    return divisors;
}

struct Universe {
    std::vector<QuadForm> forms;
    std::unordered_map<std::string, int> index;

    int lookup(const QuadForm& q) const {
        auto it = index.find(form_key(q));
        return it == index.end() ? -1 : it->second;
    }
};

Universe enumerate_universe(const Poly& alpha, int bound) {
    const PrimeField field = alpha.field();
    const std::int64_t p = field.modulus();
    const FieldElement quarter = field.element(4).inverse();

    Universe uni;
    // Iterate b over all polynomials of degree <= bound, then split
    // n = b^2/4 - alpha into a*c over the unit choices.
    std::vector<std::int64_t> bc(static_cast<std::size_t>(bound) + 1, 0);
    while (true) {
        Poly b(field, bc);
        Poly n = b * b * quarter - alpha; // nonzero: deg alpha is odd
        for (const Poly& d : bounded_monic_divisors(n, bound)) {
            Poly cofactor = n / d;
            if (cofactor.degree() > bound)
                continue;
            for (std::int64_t unit = 1; unit < p; ++unit) {
                QuadForm q(d * field.element(unit), b, cofactor * field.element(unit).inverse());
                if (!is_primitive(q))
                    continue;
                auto [it, inserted] = uni.index.emplace(form_key(q), static_cast<int>(uni.forms.size()));
                if (inserted)
                    uni.forms.push_back(std::move(q));
            }
        }
        std::size_t i = 0;
        while (i < bc.size() && bc[i] == p - 1)
            bc[i++] = 0;
        if (i == bc.size())
            break;
        ++bc[i];
    }
    return uni;
}

// Generator results for one form: monomial translations, the swap, and unit
// scalings. Monomial translations connect exactly what arbitrary bounded
// translations connect, through in-box intermediates.
void neighbors(const QuadForm& q, int bound, const PrimeField& field, bool reverse,
               std::vector<QuadForm>& out, std::size_t& escaped) {
    out.clear();
    const std::int64_t p = field.modulus();
    // swap
    out.push_back(QuadForm(q.c, -q.b, q.a));
    // diag(s, 1/s)
    for (std::int64_t s = 2; s < p; ++s) {
        const FieldElement se = field.element(s);
        const FieldElement s2 = se * se;
        out.push_back(QuadForm(q.a * s2, q.b, q.c * s2.inverse()));
    }
    // translations by lambda * x^j
    for (int j = 0; j <= bound; ++j) {
        for (std::int64_t lambda = 1; lambda < p; ++lambda) {
            Poly m = Poly::monomial(field, lambda, j);
            Poly b2 = q.b + q.a * m * Poly::constant(field, 2);
            Poly c2 = q.a * m * m + q.b * m + q.c;
            QuadForm t(q.a, std::move(b2), std::move(c2));
            if (in_box(t, bound))
                out.push_back(std::move(t));
            else
                ++escaped;
        }
    }
    if (reverse)
        std::reverse(out.begin(), out.end());
}

OrbitReport run_closure(const Poly& alpha, int bound, bool reverse_schedule) {
    const int g = genus_of(alpha);
    if (bound < alpha.degree())
        throw math_error("degree bound below deg alpha");

    Universe uni = enumerate_universe(alpha, bound);
    const PrimeField field = alpha.field();

    OrbitReport report(alpha, bound);
    report.enumerated = uni.forms.size();

    UnionFind uf(uni.forms.size());
    std::vector<QuadForm> scratch;
    const std::size_t count = uni.forms.size();
    for (std::size_t step = 0; step < count; ++step) {
        const std::size_t i = reverse_schedule ? count - 1 - step : step;
        neighbors(uni.forms[i], bound, field, reverse_schedule, scratch, report.escaped);
        for (const QuadForm& t : scratch) {
            int j = uni.lookup(t);
            if (j >= 0)
                uf.unite(static_cast<int>(i), j);
            else
                ++report.escaped; // left the box (or a filtered shape)
        }
    }

    // Gather orbits in enumeration order.
    std::unordered_map<int, std::size_t> slot_of_root;
    std::vector<OrbitSummary> orbits;
    for (std::size_t i = 0; i < uni.forms.size(); ++i) {
        const int root = uf.find(static_cast<int>(i));
        auto [it, inserted] = slot_of_root.emplace(root, orbits.size());
        if (inserted)
            orbits.push_back({uni.forms[i], 0, 0});
        OrbitSummary& orbit = orbits[it->second];
        ++orbit.size;
        if (form_less(uni.forms[i], orbit.min_rep))
            orbit.min_rep = uni.forms[i];
        if (is_fixed_point(uni.forms[i], g))
            ++orbit.fixed_points;
    }
    std::stable_sort(orbits.begin(), orbits.end(), [](const OrbitSummary& a, const OrbitSummary& b) {
        if ((a.fixed_points > 0) != (b.fixed_points > 0))
            return a.fixed_points > 0;
        return form_less(a.min_rep, b.min_rep);
    });
    for (const OrbitSummary& orbit : orbits) {
        if (orbit.fixed_points > 0) {
            ++report.orbit_count;
            report.orbit_reps.push_back(orbit.min_rep);
        }
        if (orbit.fixed_points > 1)
            ++report.multi_fixed_orbits;
    }
    report.orbits = std::move(orbits);
    return report;
}

} // namespace

OrbitReport orbit_classes(const Poly& alpha, int degree_bound, const OracleOptions& options) {
    validate_discriminant(alpha);
    OrbitReport report = run_closure(alpha, degree_bound, options.reverse_schedule);
    if (report.multi_fixed_orbits > 0)
        report.warnings.push_back("orbit with multiple reduced members: reduction not unique?");
    if (options.self_check) {
        OrbitReport wider = run_closure(alpha, degree_bound + 1, options.reverse_schedule);
        if (wider.orbit_count != report.orbit_count)
            report.warnings.push_back(
                "degree bound too small: counts " + std::to_string(report.orbit_count) + " vs " +
                std::to_string(wider.orbit_count) + " at bound " +
                std::to_string(degree_bound + 1));
    }
    return report;
}

} // namespace ffclass
