#pragma once

#include "weakhopf/algebra.hpp"

#include <string>
#include <vector>

namespace weakhopf {

class InvalidGroupoid : public Error {
public:
    using Error::Error;
};

/// Finite group as a multiplication table; element 0 is the identity.
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<std::size_t>> table;

    std::size_t order() const { return table.size(); }
};

/// Every group of order at most 9, one per isomorphism class.
const std::vector<FiniteGroup>& small_groups();

/**
 * Morphism g has source[g] and target[g]; compose[g][h] is g∘h when
 * source[g] == target[h] and -1 otherwise.
 */
struct GroupoidPresentation {
    std::string name;
    std::size_t objects = 0;
    std::vector<std::string> labels;
    std::vector<std::size_t> source, target;
    std::vector<std::vector<long>> compose;
    std::vector<std::size_t> identity;  // per object
    std::vector<std::size_t> inverse;

    std::size_t size() const { return source.size(); }
};

/// Category axioms and invertibility; throws InvalidGroupoid.
void validate(const GroupoidPresentation& G);

/// n objects, vertex group G; morphisms (i, x, j): j → i, ordered by (i, j, x).
GroupoidPresentation connected_groupoid(std::size_t n, const FiniteGroup& G);
/// g_ij for 0 ≤ i, j < n, ordered g_00, g_01, ...
GroupoidPresentation pair_groupoid(std::size_t n);
GroupoidPresentation group_groupoid(const FiniteGroup& G);
/// Objects only.
GroupoidPresentation discrete_groupoid(std::size_t n);
GroupoidPresentation disjoint_union(const std::vector<GroupoidPresentation>& parts);

/// One groupoid per isomorphism class with at most max_objects objects and max_morphisms morphisms.
std::vector<GroupoidPresentation> enumerate_groupoids(std::size_t max_objects, std::size_t max_morphisms);

/// Basis = morphisms, Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹. Validated.
WeakHopfAlgebra groupoid_algebra(const GroupoidPresentation& G, const FieldSpec& field);

}  // namespace weakhopf
