#pragma once

#include "weakhopf/algebra.hpp"

#include <optional>

namespace weakhopf {

class HypothesisFailed : public Error {
public:
    HypothesisFailed(const std::string& id, std::optional<Witness> witness, VerdictReport report)
        : Error("hypothesis '" + id + "' fails"), id(id), witness(std::move(witness)), report(std::move(report)) {}
    std::string id;
    std::optional<Witness> witness;
    VerdictReport report;
};

class NotInvertible : public Error {
public:
    using Error::Error;
};

class NotAnEquivalence : public Error {
public:
    explicit NotAnEquivalence(const std::string& id) : Error("not an equivalence: '" + id + "' fails"), id(id) {}
    std::string id;
};

/// ρ: H⊗A → A with the derived χ, ∇ and the idempotents u_n, v_n (n = 1, 2, 3).
class WeakMeasure {
public:
    /// Checks the measure axiom; throws InvalidStructure.
    static WeakMeasure create(const WeakBialgebra& H, const AlgebraData& A, const LinMap& rho,
                              const std::optional<LinMap>& S = std::nullopt);
    static WeakMeasure unchecked(const WeakBialgebra& H, const AlgebraData& A, const LinMap& rho,
                                 const std::optional<LinMap>& S = std::nullopt);

    const WeakBialgebra& H() const { return H_; }
    const AlgebraData& A() const { return A_; }
    const std::optional<LinMap>& antipode() const { return S_; }
    const LinMap& rho() const { return rho_; }
    const LinMap& chi() const { return chi_; }
    const LinMap& nabla() const { return nabla_; }
    const LinMap& u(int n) const { return u_.at(n - 1); }
    const LinMap& v(int n) const { return v_.at(n - 1); }
    const FieldSpec& field() const { return A_.field(); }

    /// H-level names plus muA, etaA, rho, chi, nabla, u1..u3, v1..v3 and S when present.
    Env env() const;

private:
    WeakMeasure(const WeakBialgebra& H, const AlgebraData& A, const LinMap& rho, const std::optional<LinMap>& S);

    WeakBialgebra H_;
    AlgebraData A_;
    std::optional<LinMap> S_;
    LinMap rho_, chi_, nabla_;
    std::vector<LinMap> u_, v_;
};

/// Measure axiom, twisted space law, (A⊗ε)χ = ρ, ∇ idempotent, ∇χ = χ.
VerdictReport measure_report(const WeakMeasure& m);
VerdictReport check_weak_module_algebra(const WeakMeasure& m);

struct Twisting {
    LinMap chi;
    VerdictReport report;
};
Twisting twisting(const WeakMeasure& m);

/// F_f = (f⊗μ)∘Δ_{H⊗H}
LinMap cocycle_F(const WeakMeasure& m, const LinMap& f);
VerdictReport cocycle_report(const WeakMeasure& m, const LinMap& f);

/// The unitary crossed product on the image of ∇.
class CrossedProduct {
public:
    const WeakMeasure& measure() const { return m_; }
    const LinMap& f() const { return f_; }
    const LinMap& F() const { return F_; }
    const LinMap& nu() const { return nu_; }
    const LinMap& mu_AH() const { return muAH_; }
    const LinMap& i() const { return i_; }
    const LinMap& p() const { return p_; }
    const LinMap& muE() const { return muE_; }
    const LinMap& etaE() const { return etaE_; }
    const LinMap& jp() const { return jp_; }
    const LinMap& j() const { return j_; }
    const LinMap& gamma() const { return gamma_; }
    const LinMap& deltaE() const { return deltaE_; }
    std::size_t dim() const { return etaE_.rows(); }
    AlgebraData algebra() const { return {muE_, etaE_}; }
    /// Report of the construction hypotheses.
    const VerdictReport& hypotheses() const { return hyp_; }

    /// Measure names plus f, F, nu, muAH, i, p, muE, etaE, jp, j, gamma, deltaE.
    Env env() const;

    friend CrossedProduct build_crossed_product(const WeakMeasure& m, const LinMap& f);

private:
    explicit CrossedProduct(const WeakMeasure& m) : m_(m) {}
    WeakMeasure m_;
    LinMap f_, F_, nu_, muAH_, i_, p_, muE_, etaE_, jp_, j_, gamma_, deltaE_;
    VerdictReport hyp_;
};

/// Throws HypothesisFailed naming the first failing hypothesis.
CrossedProduct build_crossed_product(const WeakMeasure& m, const LinMap& f);

VerdictReport crossed_product_law_suite(const CrossedProduct& E);
/// Every entry is skipped when the measure is not a weak module algebra.
VerdictReport module_algebra_suite(const CrossedProduct& E);

struct CocycleInverse {
    LinMap finv;
    VerdictReport report;
};
/// Throws PreconditionFailed if the cocycle report fails, NotInvertible if no inverse exists.
CocycleInverse invert_cocycle(const WeakMeasure& m, const LinMap& f);

struct GammaInverse {
    LinMap gammainv;
    VerdictReport report;
};
/// Needs an antipode; throws PreconditionFailed otherwise.
GammaInverse gamma_inverse(const CrossedProduct& E, const LinMap& finv);

/// Kernel of δ − (X⊗Π^L)∘δ compared with the image of j.
VerdictEntry equalizer_check(const std::string& id, const LinMap& delta, const LinMap& PiL, const LinMap& j);

struct EquivalenceResult {
    std::optional<LinMap> Phi;  // E → E′, present iff conditions (1)-(5) hold
    LinMap phiinv;              // empty map when condition (2) has no solution
    VerdictReport report;
};
EquivalenceResult equivalence_from_phi(const CrossedProduct& E, const CrossedProduct& E2, const LinMap& phi);

struct PhiFromIso {
    LinMap phi;
    VerdictReport report;
};
/// Throws NotAnEquivalence if Phi is not a unital, multiplicative, A-linear, colinear isomorphism.
PhiFromIso phi_from_iso(const CrossedProduct& E, const CrossedProduct& E2, const LinMap& Phi);

/// Same matrix with every factor named `from` renamed to `to`.
LinMap rename_object(const LinMap& m, const std::string& from, const std::string& to);

}  // namespace weakhopf
