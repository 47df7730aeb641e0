#pragma once

#include "weakhopf/errors.hpp"
#include "weakhopf/ir.hpp"
#include "weakhopf/linalg.hpp"
#include "weakhopf/report.hpp"

#include <optional>
#include <string>

namespace weakhopf {

/// Raised by validating constructors; carries the failing report.
class InvalidStructure : public Error {
public:
    InvalidStructure(const std::string& what, VerdictReport report) : Error(what), report(std::move(report)) {}
    VerdictReport report;
};

struct AlgebraData {
    LinMap mu;   // X⊗X → X
    LinMap eta;  // K → X

    const ObjectWord& object() const { return eta.cod(); }
    Index dim() const { return eta.rows(); }
    const FieldSpec& field() const { return mu.field(); }
};

struct CoalgebraData {
    LinMap delta;  // X → X⊗X
    LinMap eps;    // X → K

    const ObjectWord& object() const { return eps.dom(); }
    Index dim() const { return eps.cols(); }
    const FieldSpec& field() const { return delta.field(); }
};

/// assoc, unit.left, unit.right
VerdictReport check_algebra(const AlgebraData& A);
/// coassoc, counit.left, counit.right
VerdictReport check_coalgebra(const CoalgebraData& C);

/// Δ_{C^{⊗n}} = (shuffle)∘(Δ⊗…⊗Δ), with ε^{⊗n}; n = 1 returns C.
CoalgebraData tensor_power(const CoalgebraData& C, std::size_t n);

/// μ_A∘(α⊗β)∘Δ_C
LinMap convolve(const LinMap& alpha, const LinMap& beta, const CoalgebraData& C, const AlgebraData& A);
/// η_A∘ε_C
LinMap convolution_unit(const CoalgebraData& C, const AlgebraData& A);

/// Solves g∗x = u, x∗g = u, x∗u = x jointly. Throws RegularityPreconditionFailed if g∗u ≠ g.
std::optional<LinMap> conv_inverse(const LinMap& g, const LinMap& u, const CoalgebraData& C, const AlgebraData& A);
/// Two-sided variant: g∗x = u_left, x∗g = u_right, x∗u_left = x. Requires g∗u_right = g.
std::optional<LinMap> conv_inverse(const LinMap& g, const LinMap& u_left, const LinMap& u_right,
                                   const CoalgebraData& C, const AlgebraData& A);

enum class ProjKind { L, R, Lbar, Rbar };

class WeakBialgebra {
public:
    /// Validates every axiom; throws InvalidStructure on failure.
    static WeakBialgebra create(const AlgebraData& alg, const CoalgebraData& coalg);
    /// No validation; for building counterexamples.
    static WeakBialgebra unchecked(const AlgebraData& alg, const CoalgebraData& coalg);

    const FieldSpec& field() const { return alg_.field(); }
    const ObjectWord& object() const { return alg_.object(); }
    Index dim() const { return alg_.dim(); }
    const AlgebraData& algebra() const { return alg_; }
    const CoalgebraData& coalgebra() const { return coalg_; }
    const LinMap& mu() const { return alg_.mu; }
    const LinMap& eta() const { return alg_.eta; }
    const LinMap& delta() const { return coalg_.delta; }
    const LinMap& eps() const { return coalg_.eps; }
    const LinMap& projection(ProjKind k) const;

    /// Environment with mu, eta, Delta, eps, PiL, PiR, PiLb, PiRb, DeltaH2, DeltaH3 bound.
    Env env() const;

protected:
    WeakBialgebra(AlgebraData a, CoalgebraData c);

private:
    AlgebraData alg_;
    CoalgebraData coalg_;
    LinMap pi_[4];
    LinMap delta2_, delta3_;
};

class WeakHopfAlgebra : public WeakBialgebra {
public:
    static WeakHopfAlgebra create(const WeakBialgebra& H, const LinMap& S);
    static WeakHopfAlgebra unchecked(const WeakBialgebra& H, const LinMap& S);

    const LinMap& antipode() const { return S_; }
    /// Adds S to WeakBialgebra::env().
    Env env() const;

private:
    WeakHopfAlgebra(const WeakBialgebra& H, LinMap S) : WeakBialgebra(H), S_(std::move(S)) {}
    LinMap S_;
};

/// Candidate data for check_bialgebra_axioms.
VerdictReport check_bialgebra_axioms(const AlgebraData& alg, const CoalgebraData& coalg);
VerdictReport check_antipode(const WeakBialgebra& H, const LinMap& S);
/// S-dependent entries are skipped when S is null.
VerdictReport projection_identity_suite(const WeakBialgebra& H, const LinMap* S = nullptr);

struct BaseSubalgebra {
    AlgebraData algebra;
    LinMap inj;
    LinMap proj;
    VerdictReport report;
};

BaseSubalgebra base_subalgebra(const WeakBialgebra& H, ProjKind side);

}  // namespace weakhopf
