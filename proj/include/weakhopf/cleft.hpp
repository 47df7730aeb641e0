#pragma once

#include "weakhopf/crossed.hpp"

#include <optional>

namespace weakhopf {

class FactorizationFailed : public Error {
public:
    explicit FactorizationFailed(const std::string& what) : Error("does not factor through j: " + what) {}
};

/// Right H-comodule algebra (B, δ_B). The antipode is optional.
struct ComoduleAlgebra {
    WeakBialgebra H;
    std::optional<LinMap> S;
    AlgebraData B;
    LinMap deltaB;  // B -> B,H
};

struct Extension {
    ComoduleAlgebra C;
    AlgebraData A;
    LinMap j;  // A -> B
};

struct CleavingData {
    LinMap gamma;     // H -> B
    LinMap gammainv;  // H -> B
};

VerdictReport comodule_algebra_report(const ComoduleAlgebra& C);
/// Equalizer of δ_B and (B⊗Π^L)∘δ_B, j multiplicative, unital and injective.
VerdictReport extension_check(const Extension& X);
VerdictReport cleaving_check(const Extension& X, const CleavingData& c);

struct Decomposition {
    LinMap Upsilon;  // H,B -> B,H
    LinMap q;        // B -> B
    LinMap pB;       // B -> A with q = j∘pB
    LinMap w;        // A,H -> B
    LinMap wt;       // B -> A,H
    LinMap Omega;    // A,H -> A,H
    VerdictReport report;
};
/// Throws FactorizationFailed when q does not land in the image of j.
Decomposition decomposition(const Extension& X, const CleavingData& c);

struct Reconstruction {
    Decomposition d;
    LinMap mut;  // A,H,A,H -> A,H
    LinMap nut;  // -> A,H
    LinMap rho;
    LinMap f;
    VerdictReport report;
};
Reconstruction reconstruct(const Extension& X, const CleavingData& c);

struct RecoveredInverse {
    LinMap sigma;
    LinMap sigmainv;
    LinMap finv;
    VerdictReport report;
};
/// Throws FactorizationFailed when σ⁻¹ does not land in the image of j.
RecoveredInverse recover_inverse_cocycle(const Extension& X, const CleavingData& c, const Reconstruction& r);
RecoveredInverse recover_inverse_cocycle(const Extension& X, const CleavingData& c);

struct CleftIso {
    LinMap Phi;  // E_rebuilt -> B
    VerdictReport report;
};
/// Rebuilds A×_ρ^f H from the reconstruction; requires an antipode.
CleftIso cleft_to_crossed_iso(const Extension& X, const CleavingData& c, const Reconstruction& r);
CleftIso cleft_to_crossed_iso(const Extension& X, const CleavingData& c);

/// The crossed product seen as an extension of A, with B named "B".
Extension extension_of(const CrossedProduct& E);
CleavingData cleaving_of(const CrossedProduct& E, const LinMap& gammainv);

}  // namespace weakhopf
