#pragma once

#include <string>
#include <vector>

#include "ffclass/classgroup.hpp"
#include "ffclass/quadform.hpp"

namespace ffclass {

/// The sorted monic irreducible factors of alpha (the finite ramified primes).
std::vector<Poly> ramified_primes(const Poly& alpha);

/// tau_i = residue_symbol(lambda, P_i) for the smallest nonsquare unit
/// lambda: the action of the unit twist on character vectors.
std::vector<int> twist_vector(const Poly& alpha);

/// Character vector of a genus, normalized modulo the unit twist: of the
/// orbit {chars, chars * tau} the lexicographically smaller one is kept
/// (encoding +1 -> 0, -1 -> 1).
struct GenusVector {
    std::vector<int> chars; // entries +1 / -1

    bool operator==(const GenusVector& o) const { return chars == o.chars; }
    bool operator!=(const GenusVector& o) const { return !(*this == o); }
    bool operator<(const GenusVector& o) const;

    std::string label() const; // "+-" style rendering
};

/// Raw character vector of a primitive positive form: for each ramified
/// prime, the residue symbol of the first represented value among
/// q(1,0), q(0,1), q(1,1) not divisible by it.
std::vector<int> raw_characters(const QuadForm& q, const Poly& alpha);

GenusVector genus_of_form(const QuadForm& q, const Poly& alpha);

/// Same genus as the identity form (1, 0, -alpha)?
bool is_principal_genus(const QuadForm& q, const Poly& alpha);

struct GenusPartition {
    std::vector<GenusVector> vectors;    // one per class, table order
    std::vector<std::vector<int>> genera; // class indices grouped by vector
    int principal_index;                  // position of the principal genus
    std::size_t count() const { return genera.size(); }
};

/// Partition of the class list into genera. Checks and enforces:
/// count == 2^(r-1), equal genus sizes, principal genus == the subgroup of
/// squares; any violation raises a diagnostic error.
GenusPartition genus_partition(const ClassGroupTable& table);

} // namespace ffclass
