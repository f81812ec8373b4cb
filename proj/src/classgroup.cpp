#include "ffclass/classgroup.hpp"

#include <algorithm>
#include <numeric>

namespace ffclass {

int ClassGroupTable::identity_index() const {
    return index_of(MumfordIdeal::identity(alpha));
}

int ClassGroupTable::index_of(const MumfordIdeal& ideal) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == ideal)
            return static_cast<int>(i);
    return -1;
}

int ClassGroupTable::inverse_index(int i) const {
    int j = index_of(inverse(classes[static_cast<std::size_t>(i)]));
    if (j < 0)
        throw math_error("inverse missing from class list");
    return j;
}

ClassGroupTable enumerate_classes(const Poly& alpha) {
    const int g = genus_of(alpha); // validates alpha
    const PrimeField field = alpha.field();
    const std::int64_t p = field.modulus();

    ClassGroupTable table(alpha);
    table.classes.push_back(MumfordIdeal::identity(alpha));

    // Monic u of degree 1..g, then all v with deg v < deg u, u | v^2 - alpha.
    for (int du = 1; du <= g; ++du) {
        std::vector<std::int64_t> uc(static_cast<std::size_t>(du) + 1, 0);
        uc.back() = 1;
        std::vector<Poly> us;
        while (true) {
            us.push_back(Poly(field, uc));
            int i = du - 1;
            while (i >= 0 && uc[static_cast<std::size_t>(i)] == p - 1)
                uc[static_cast<std::size_t>(i--)] = 0;
            if (i < 0)
                break;
            ++uc[static_cast<std::size_t>(i)];
        }
        std::sort(us.begin(), us.end(), poly_less);
        for (const Poly& u : us) {
            std::vector<MumfordIdeal> found;
            std::vector<std::int64_t> vc(static_cast<std::size_t>(du), 0);
            while (true) {
                Poly v(field, vc);
                if (divides(u, v * v - alpha))
                    found.push_back(MumfordIdeal(u, v, alpha));
                int i = static_cast<int>(vc.size()) - 1;
                while (i >= 0 && vc[static_cast<std::size_t>(i)] == p - 1)
                    vc[static_cast<std::size_t>(i--)] = 0;
                if (i < 0)
                    break;
                ++vc[static_cast<std::size_t>(i)];
            }
            std::sort(found.begin(), found.end(), ideal_less);
            for (auto& ideal : found)
                table.classes.push_back(std::move(ideal));
        }
    }

    table.forms.reserve(table.classes.size());
    for (const auto& ideal : table.classes)
        table.forms.push_back(from_mumford(ideal));

    const int h = static_cast<int>(table.classes.size());
    table.mul.assign(static_cast<std::size_t>(h), std::vector<int>(static_cast<std::size_t>(h), -1));
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) {
            MumfordIdeal prod = compose(table.classes[static_cast<std::size_t>(i)],
                                        table.classes[static_cast<std::size_t>(j)]);
            int k = table.index_of(prod);
            if (k < 0)
                throw math_error("composition left the enumerated classes");
            table.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = k;
            table.mul[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = k;
        }

    const int id = table.identity_index();
    if (id < 0)
        throw math_error("identity missing from class list");
    table.orders.reserve(table.classes.size());
    for (int i = 0; i < h; ++i) {
        int acc = i;
        std::int64_t n = 1;
        while (acc != id) {
            acc = table.mul[static_cast<std::size_t>(acc)][static_cast<std::size_t>(i)];
            ++n;
        }
        table.orders.push_back(n);
    }

    table.invariant_factors = group_structure(table);
    return table;
}

namespace {

struct IndexGroup {
    std::vector<int> elements;            // canonical representatives
    std::vector<std::vector<int>> mul;    // by position in elements
    int identity;                         // position
};

std::vector<std::int64_t> invariant_factors_of(const IndexGroup& grp) {
    const int n = static_cast<int>(grp.elements.size());
    if (n == 1)
        return {};

    std::vector<std::int64_t> ord(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int acc = i;
        std::int64_t k = 1;
        while (acc != grp.identity) {
            acc = grp.mul[static_cast<std::size_t>(acc)][static_cast<std::size_t>(i)];
            ++k;
        }
        ord[static_cast<std::size_t>(i)] = k;
    }
    int gen = static_cast<int>(
        std::max_element(ord.begin(), ord.end()) - ord.begin());
    std::int64_t e = ord[static_cast<std::size_t>(gen)];

    // Cosets of <gen>; quotient multiplication through representatives.
    std::vector<int> cyclic;
    {
        int acc = grp.identity;
        do {
            cyclic.push_back(acc);
            acc = grp.mul[static_cast<std::size_t>(acc)][static_cast<std::size_t>(gen)];
        } while (acc != grp.identity);
    }
    std::vector<int> coset_of(static_cast<std::size_t>(n), -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (coset_of[static_cast<std::size_t>(i)] >= 0)
            continue;
        int rep = static_cast<int>(reps.size());
        reps.push_back(i);
        for (int c : cyclic) {
            int member = grp.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            coset_of[static_cast<std::size_t>(member)] = rep;
        }
    }
    IndexGroup quotient;
    quotient.elements.resize(reps.size());
    std::iota(quotient.elements.begin(), quotient.elements.end(), 0);
    quotient.identity = coset_of[static_cast<std::size_t>(grp.identity)];
    quotient.mul.assign(reps.size(), std::vector<int>(reps.size(), -1));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j) {
            int prod = grp.mul[static_cast<std::size_t>(reps[i])][static_cast<std::size_t>(reps[j])];
            quotient.mul[i][j] = coset_of[static_cast<std::size_t>(prod)];
        }

    std::vector<std::int64_t> factors = invariant_factors_of(quotient);
    factors.push_back(e);
    return factors;
}

} // namespace

std::vector<std::int64_t> group_structure(const ClassGroupTable& table) {
    if (table.mul.empty())
        throw math_error("table incomplete");
    IndexGroup grp;
    grp.elements.resize(table.classes.size());
    std::iota(grp.elements.begin(), grp.elements.end(), 0);
    grp.mul = table.mul;
    grp.identity = table.identity_index();
    return invariant_factors_of(grp);
}

std::vector<std::vector<int>> improper_classes(const ClassGroupTable& table) {
    std::vector<std::vector<int>> merged;
    std::vector<bool> seen(table.classes.size(), false);
    for (int i = 0; i < static_cast<int>(table.classes.size()); ++i) {
        if (seen[static_cast<std::size_t>(i)])
            continue;
        int j = table.inverse_index(i);
        seen[static_cast<std::size_t>(i)] = true;
        seen[static_cast<std::size_t>(j)] = true;
        if (j == i)
            merged.push_back({i});
        else
            merged.push_back({std::min(i, j), std::max(i, j)});
    }
    return merged;
}

bool inherits_group_structure(const ClassGroupTable& table) {
    for (std::int64_t d : table.invariant_factors)
        if (d > 2)
            return false;
    return true;
}

std::int64_t h1_order(const ClassGroupTable& table) {
    return 2 * static_cast<std::int64_t>(table.classes.size());
}

} // namespace ffclass
