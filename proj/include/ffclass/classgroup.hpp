#pragma once

#include <cstdint>
#include <vector>

#include "ffclass/mumford.hpp"
#include "ffclass/quadform.hpp"

namespace ffclass {

/// Complete list of reduced ideal classes for one discriminant, with the
/// composition table and the abelian group structure.
struct ClassGroupTable {
    Poly alpha;
    std::vector<MumfordIdeal> classes; // deterministic order: (deg u, u, v)
    std::vector<QuadForm> forms;       // forms[i] = from_mumford(classes[i])
    std::vector<std::int64_t> orders;  // element orders
    std::vector<std::int64_t> invariant_factors; // d_1 | d_2 | ... ; empty for trivial group
    std::vector<std::vector<int>> mul;           // composition table by class index

    ClassGroupTable(Poly alpha_) : alpha(std::move(alpha_)) {}

    std::size_t class_number() const { return classes.size(); }
    int identity_index() const; // index of (1, 0)
    int index_of(const MumfordIdeal& ideal) const; // -1 when absent
    int inverse_index(int i) const;
};

/// Brute-force enumeration of all reduced (u, v) with u | v^2 - alpha,
/// deg u <= g; fills classes, forms, orders, composition table and
/// invariant factors. Throws the validate_discriminant errors.
ClassGroupTable enumerate_classes(const Poly& alpha);

/// Invariant factor decomposition d_1 | ... | d_k (ascending divisibility,
/// d_k = group exponent), by extracting a maximal-order element and
/// recursing on the quotient.
std::vector<std::int64_t> group_structure(const ClassGroupTable& table);

/// Classes merged in pairs {I, I^-1}; self-inverse classes stay singletons.
/// Each merged class is a sorted list of class indices.
std::vector<std::vector<int>> improper_classes(const ClassGroupTable& table);

/// true iff every invariant factor is <= 2, i.e. the improper quotient
/// still carries the group law.
bool inherits_group_structure(const ClassGroupTable& table);

/// 2 * class number: the unit twist doubles every class.
std::int64_t h1_order(const ClassGroupTable& table);

} // namespace ffclass
