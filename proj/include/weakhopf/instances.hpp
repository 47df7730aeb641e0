#pragma once

#include "weakhopf/crossed.hpp"
#include "weakhopf/groupoid.hpp"

#include <random>
#include <string>
#include <vector>

namespace weakhopf {

/// A groupoid algebra acting on the functions on its objects, with a normal cocycle.
struct SmashInstance {
    std::string name;
    GroupoidPresentation groupoid;
    WeakHopfAlgebra H;
    AlgebraData A;
    LinMap rho;
    LinMap f;

    WeakMeasure measure() const { return WeakMeasure::create(H, A, rho, H.antipode()); }
};

/**
 * A = k^objects with idempotents z_x, ρ(g⊗z_x) = [s(g) = x] z_{t(g)} and
 * f(g⊗h) = [s(g) = t(h)] σ(g,h) z_{t(g)} with σ(g,h) = τ(g)τ(h)/τ(gh).
 * An empty tau means τ = 1, so f = u₂.
 */
SmashInstance groupoid_smash(const GroupoidPresentation& G, const FieldSpec& field,
                             const std::vector<Scalar>& tau = {});

/// Pair groupoid on two objects, f = u₂.
SmashInstance pair_groupoid_smash(const FieldSpec& field);
/// ℚ[ℤ/2] acting trivially on k, f = ε⊗ε.
SmashInstance hopf_trivial_smash(const FieldSpec& field);

/// Random groupoid with at most 3 objects and 9 morphisms and a random coboundary twist.
SmashInstance random_smash(std::mt19937_64& rng, const FieldSpec& field);

/// Random nonzero scalar with numerator and denominator of absolute value at most bound.
Scalar random_unit(std::mt19937_64& rng, const FieldSpec& field, int bound = 3);

/// φ(g) = λ(g) z_{t(g)} and the cocycle f′ = f·λ(gh)/(λ(g)λ(h)) it relates f to.
struct PhiPerturbation {
    LinMap phi;
    LinMap f_prime;
};
/// λ is 1 on identities and random elsewhere.
PhiPerturbation random_phi(std::mt19937_64& rng, const SmashInstance& inst);

}  // namespace weakhopf
