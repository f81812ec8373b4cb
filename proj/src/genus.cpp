#include "ffclass/genus.hpp"

#include <algorithm>
#include <set>

namespace ffclass {

std::vector<Poly> ramified_primes(const Poly& alpha) {
    validate_discriminant(alpha);
    std::vector<Poly> primes;
    for (const auto& f : factor(alpha))
        primes.push_back(f.prime); // squarefree: multiplicity 1
    return primes;
}

std::vector<int> twist_vector(const Poly& alpha) {
    const FieldElement lambda = smallest_nonsquare(alpha.field());
    const Poly lambda_poly = Poly::constant(alpha.field(), lambda.value());
    std::vector<int> tau;
    for (const Poly& prime : ramified_primes(alpha))
        tau.push_back(residue_symbol(lambda_poly, prime));
    return tau;
}

bool GenusVector::operator<(const GenusVector& o) const {
    // +1 encodes 0, -1 encodes 1.
    for (std::size_t i = 0; i < std::min(chars.size(), o.chars.size()); ++i) {
        if (chars[i] != o.chars[i])
            return chars[i] > o.chars[i];
    }
    return chars.size() < o.chars.size();
}

std::string GenusVector::label() const {
    std::string s;
    for (int c : chars)
        s.push_back(c > 0 ? '+' : '-');
    return s;
}

std::vector<int> raw_characters(const QuadForm& q, const Poly& alpha) {
    if (!is_primitive(q))
        throw math_error("form not primitive");
    const Poly candidates[3] = {q.a, q.c, q.a + q.b + q.c}; // q(1,0), q(0,1), q(1,1)
    std::vector<int> chars;
    for (const Poly& prime : ramified_primes(alpha)) {
        int symbol = 0;
        for (const Poly& value : candidates) {
            symbol = residue_symbol(value, prime);
            if (symbol != 0)
                break;
        }
        if (symbol == 0)
            throw math_error("form not primitive"); // unreachable for primitive q
        chars.push_back(symbol);
    }
    return chars;
}

namespace {

GenusVector normalize(std::vector<int> raw, const std::vector<int>& tau) {
    std::vector<int> twisted(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        twisted[i] = raw[i] * tau[i];
    GenusVector a{std::move(raw)};
    GenusVector b{std::move(twisted)};
    return a < b ? a : b;
}

} // namespace

GenusVector genus_of_form(const QuadForm& q, const Poly& alpha) {
    return normalize(raw_characters(q, alpha), twist_vector(alpha));
}

bool is_principal_genus(const QuadForm& q, const Poly& alpha) {
    const PrimeField f = alpha.field();
    QuadForm identity(Poly::constant(f, 1), Poly(f), -alpha);
    return genus_of_form(q, alpha) == genus_of_form(identity, alpha);
}

GenusPartition genus_partition(const ClassGroupTable& table) {
    const std::vector<int> tau = twist_vector(table.alpha);
    const std::size_t r = tau.size();

    GenusPartition partition;
    partition.vectors.reserve(table.classes.size());
    for (const QuadForm& form : table.forms)
        partition.vectors.push_back(normalize(raw_characters(form, table.alpha), tau));

    std::vector<GenusVector> distinct;
    for (std::size_t i = 0; i < partition.vectors.size(); ++i) {
        auto it = std::find(distinct.begin(), distinct.end(), partition.vectors[i]);
        std::size_t slot;
        if (it == distinct.end()) {
            slot = distinct.size();
            distinct.push_back(partition.vectors[i]);
            partition.genera.emplace_back();
        } else {
            slot = static_cast<std::size_t>(it - distinct.begin());
        }
        partition.genera[slot].push_back(static_cast<int>(i));
    }

    const int id = table.identity_index();
    partition.principal_index = -1;
    for (std::size_t gi = 0; gi < partition.genera.size(); ++gi)
        if (partition.vectors[static_cast<std::size_t>(id)] == distinct[gi])
            partition.principal_index = static_cast<int>(gi);

    // Consistency gates; a violation here means the characters are broken.
    const std::size_t expected = std::size_t(1) << (r - 1);
    if (partition.genera.size() != expected)
        throw math_error("genus partition: expected " + std::to_string(expected) + " genera, got " +
                         std::to_string(partition.genera.size()));
    for (const auto& genus : partition.genera)
        if (genus.size() != partition.genera.front().size())
            throw math_error("genus partition: genera of unequal size");
    std::set<int> squares;
    for (std::size_t i = 0; i < table.classes.size(); ++i)
        squares.insert(table.mul[i][i]);
    const auto& principal = partition.genera[static_cast<std::size_t>(partition.principal_index)];
    if (squares != std::set<int>(principal.begin(), principal.end()))
        throw math_error("genus partition: principal genus is not the subgroup of squares");

    return partition;
}

} // namespace ffclass
