#include "weakhopf/corpus.hpp"

#include "weakhopf/errors.hpp"

namespace weakhopf {

namespace {

// Reading convention: "x ; y" applies x first, "x * y" is the tensor product.

IdentityTable bialgebra() {
    return {"bialgebra",
            {
                {"assoc", "mu * id(H) ; mu", "id(H) * mu ; mu"},
                {"unit.left", "eta * id(H) ; mu", "id(H)"},
                {"unit.right", "id(H) * eta ; mu", "id(H)"},
                {"coassoc", "Delta ; Delta * id(H)", "Delta ; id(H) * Delta"},
                {"counit.left", "Delta ; eps * id(H)", "id(H)"},
                {"counit.right", "Delta ; id(H) * eps", "id(H)"},
                {"WB1", "mu ; Delta", "Delta * Delta ; id(H) * swap(H,H) * id(H) ; mu * mu"},
                {"WB2.a", "mu * id(H) ; mu ; eps", "id(H) * Delta * id(H) ; (mu ; eps) * (mu ; eps)"},
                {"WB2.b", "mu * id(H) ; mu ; eps",
                 "id(H) * (Delta ; swap(H,H)) * id(H) ; (mu ; eps) * (mu ; eps)"},
                {"WB3.a", "eta ; Delta ; Delta * id(H)", "(eta ; Delta) * (eta ; Delta) ; id(H) * mu * id(H)"},
                {"WB3.b", "eta ; Delta ; Delta * id(H)",
                 "(eta ; Delta) * (eta ; Delta) ; id(H) * (swap(H,H) ; mu) * id(H)"},
            }};
}

IdentityTable antipode() {
    return {"antipode",
            {
                {"axiom.1", "Delta ; id(H) * S ; mu", "PiL"},
                {"axiom.2", "Delta ; S * id(H) ; mu", "PiR"},
                {"axiom.3", "Delta ; Delta * id(H) ; S * id(H) * S ; mu * id(H) ; mu", "S"},
                {"unit", "eta ; S", "eta"},
                {"counit", "S ; eps", "eps"},
                {"antimultiplicative", "mu ; S", "swap(H,H) ; S * S ; mu"},
                {"anticomultiplicative", "S ; Delta", "Delta ; S * S ; swap(H,H)"},
            }};
}

IdentityTable projections() {
    IdentityTable t{"projections", {}};
    for (const char* p : {"PiL", "PiR", "PiLb", "PiRb"}) {
        std::string P = p;
        t.items.push_back({"idempotent." + P, P + " ; " + P, P});
        t.items.push_back({"unitary." + P, "eta ; " + P, "eta"});
        t.items.push_back({"counitary." + P, P + " ; eps", "eps"});
    }
    std::vector<IdentityDef> rest = {
        {"compositions.1", "PiR ; PiLb", "PiR"},
        {"compositions.2", "PiL ; PiRb", "PiL"},
        {"compositions.3", "PiLb ; PiR", "PiLb"},
        {"id_conv_PiR", "Delta ; id(H) * PiR ; mu", "id(H)"},
        {"PiL_conv_id", "Delta ; PiL * id(H) ; mu", "id(H)"},
        {"delta_eta.1", "eta ; Delta", "eta ; Delta ; id(H) * PiL"},
        {"delta_eta.2", "eta ; Delta", "eta ; Delta ; PiR * id(H)"},
        {"delta_eta.3", "eta ; Delta", "eta ; Delta ; PiR * PiL"},
        {"delta_eta.4", "eta ; Delta", "eta ; Delta ; id(H) * PiRb"},
        {"delta_eta.5", "eta ; Delta", "eta ; Delta ; PiLb * id(H)"},
        {"delta_eta.6", "eta ; Delta", "eta ; Delta ; PiLb * PiRb"},
        {"subalgebra.L.1", "PiL * PiL ; mu", "PiL * PiL ; mu ; PiL"},
        {"subalgebra.L.2", "PiL * PiL ; mu", "PiL * id(H) ; mu ; PiL"},
        {"subalgebra.R.1", "PiR * PiR ; mu", "PiR * PiR ; mu ; PiR"},
        {"subalgebra.R.2", "PiR * PiR ; mu", "id(H) * PiR ; mu ; PiR"},
        {"weak_commutativity", "PiL * PiR ; swap(H,H) ; mu", "PiL * PiR ; mu"},
        {"mu_Pi.L", "id(H) * PiL ; mu", "Delta * id(H) ; id(H) * swap(H,H) ; (mu ; eps) * id(H)"},
        {"mu_Pi.R", "PiR * id(H) ; mu", "id(H) * Delta ; swap(H,H) * id(H) ; id(H) * (mu ; eps)"},
        {"delta_Pi.L", "Delta ; id(H) * PiL", "(eta ; Delta) * id(H) ; id(H) * swap(H,H) ; mu * id(H)"},
        {"delta_Pi.R", "Delta ; PiR * id(H)", "id(H) * (eta ; Delta) ; swap(H,H) * id(H) ; id(H) * mu"},
        {"mu_delta_Pi.1", "mu ; PiL", "id(H) * PiL ; mu ; PiL"},
        {"mu_delta_Pi.2", "PiL ; Delta", "PiL ; Delta ; id(H) * PiL"},
        {"mu_delta_Pi.3", "mu ; PiR", "PiR * id(H) ; mu ; PiR"},
        {"mu_delta_Pi.4", "PiR ; Delta", "PiR ; Delta ; PiR * id(H)"},
        {"delta_PiR.1.a", "Delta * id(H) ; PiL * (mu ; eps)", "mu ; PiL"},
        {"delta_PiR.1.b", "mu ; PiL", "Delta * id(H) ; id(H) * swap(H,H) ; (mu ; eps) * PiL"},
        {"delta_PiR.2.a", "id(H) * Delta ; (mu ; eps) * PiR", "mu ; PiR"},
        {"delta_PiR.2.b", "mu ; PiR", "id(H) * Delta ; swap(H,H) * id(H) ; PiR * (mu ; eps)"},
        {"delta_PiR.3.a", "PiL * (eta ; Delta) ; mu * id(H)", "PiL ; Delta"},
        {"delta_PiR.3.b", "PiL ; Delta", "(eta ; Delta) * PiL ; id(H) * swap(H,H) ; mu * id(H)"},
        {"delta_PiR.4.a", "(eta ; Delta) * PiR ; id(H) * mu", "PiR ; Delta"},
        {"delta_PiR.4.b", "PiR ; Delta", "PiR * (eta ; Delta) ; swap(H,H) * id(H) ; id(H) * mu"},
        {"delta_mu_Pi.1", "PiR * id(H) ; mu ; Delta", "PiR * Delta ; swap(H,H) * id(H) ; id(H) * mu"},
        {"delta_mu_Pi.2", "id(H) * PiR ; mu ; Delta", "Delta * PiR ; id(H) * mu"},
        {"delta_mu_Pi.3", "id(H) * PiL ; mu ; Delta", "Delta * PiL ; id(H) * swap(H,H) ; mu * id(H)"},
        {"delta_mu_Pi.4", "PiL * id(H) ; mu ; Delta", "PiL * Delta ; mu * id(H)"},
        {"S_Pi.1", "S ; PiRb", "PiL", true},
        {"S_Pi.2", "PiLb ; S", "PiL", true},
        {"S_Pi.3", "S ; PiLb", "PiR", true},
        {"S_Pi.4", "PiRb ; S", "PiR", true},
        {"delta_eta_S.1", "id(H) * (eta ; Delta) ; mu * S", "Delta ; id(H) * PiR", true},
        {"delta_eta_S.2", "(eta ; Delta) * id(H) ; S * mu", "Delta ; PiL * id(H)", true},
    };
    t.items.insert(t.items.end(), rest.begin(), rest.end());
    return t;
}

IdentityTable measure() {
    return {"measure",
            {
                {"measure", "id(H) * muA ; rho",
                 "Delta * id(A) * id(A) ; id(H) * swap(H,A) * id(A) ; rho * rho ; muA"},
                {"twisted_space", "id(H) * muA ; chi", "chi * id(A) ; id(A) * chi ; muA * id(H)"},
                {"chi_counit", "chi ; id(A) * eps", "rho"},
                {"nabla_idempotent", "nabla ; nabla", "nabla"},
                {"nabla_chi", "chi ; nabla", "chi"},
                {"nabla_formula", "nabla", "id(A) * Delta * etaA ; id(A) * id(H) * swap(H,A) ; id(A) * rho * id(H) ; muA * id(H)"},
                {"chi_comult", "chi ; id(A) * Delta", "Delta * id(A) ; id(H) * swap(H,A) ; chi * id(H)"},
                {"nabla_colinear", "nabla ; id(A) * Delta", "id(A) * Delta ; nabla * id(H)"},
            }};
}

IdentityTable weak_module() {
    return {"weak_module",
            {
                {"item.1", "eta * id(A) ; rho", "id(A)"},
                {"item.3", "mu * etaA ; rho", "id(H) * id(H) * etaA ; id(H) * rho ; rho"},
                {"item.4", "PiL * id(A) ; rho", "id(H) * etaA * id(A) ; rho * id(A) ; muA"},
                {"item.5", "PiLb * id(A) ; rho", "id(H) * etaA * id(A) ; rho * id(A) ; swap(A,A) ; muA"},
                {"item.6", "PiL * etaA ; rho", "id(H) * etaA ; rho"},
                {"item.7", "PiLb * etaA ; rho", "id(H) * etaA ; rho"},
                {"item.8", "id(H) * id(H) * etaA ; id(H) * rho ; rho",
                 "Delta * id(H) * etaA ; id(H) * mu * id(A) ; id(H) * swap(H,A) ; rho * eps"},
                {"item.9", "id(H) * id(H) * etaA ; id(H) * rho ; rho",
                 "Delta * id(H) * etaA ; id(H) * swap(H,H) * id(A) ; mu * rho ; eps * id(A)"},
                {"action_PiLb_remark", "Delta * id(A) ; PiLb * id(H) * id(A) ; id(H) * swap(H,A) ; rho * id(H)",
                 "(eta ; Delta) * id(H) * id(A) ; id(H) * mu * id(A) ; id(H) * swap(H,A) ; rho * id(H)"},
            }};
}

IdentityTable cocycle() {
    return {"cocycle",
            {
                {"equivalence.1.counit", "f", "F ; id(A) * eps"},
                {"equivalence.1.nabla", "F", "F ; nabla"},
                {"equivalence.2", "f", "F * etaA ; id(A) * rho ; muA"},
                {"twisted_module.f", "F * id(A) ; id(A) * rho ; muA", "id(H) * chi ; chi * id(H) ; id(A) * f ; muA"},
                {"cocycle.f", "id(H) * F ; chi * id(H) ; id(A) * f ; muA", "F * id(H) ; id(A) * f ; muA"},
                {"twisted_module.F", "F * id(A) ; id(A) * chi ; muA * id(H)",
                 "id(H) * chi ; chi * id(H) ; id(A) * F ; muA * id(H)"},
                {"cocycle.F", "F * id(H) ; id(A) * F ; muA * id(H)",
                 "id(H) * F ; chi * id(H) ; id(A) * F ; muA * id(H)"},
                {"aux.2", "F ; id(A) * Delta", "DeltaH2 ; F * mu"},
                {"aux.3", "DeltaH2 ; id(H) * id(H) * F", "DeltaH2 ; DeltaH2 * id(H) * id(H) ; id(H) * id(H) * f * mu"},
                {"normal.left", "eta * id(H) ; f", "u1"},
                {"normal.right", "id(H) * eta ; f", "u1"},
                {"u2_conv_f", "DeltaH2 ; u2 * f ; muA", "f"},
                {"f_conv_u2", "DeltaH2 ; f * u2 ; muA", "f"},
                {"u2_conv_f.consequence", "DeltaH2 ; (mu ; eps) * f", "f"},
                {"f_conv_u2_eq_v2_conv_f", "DeltaH2 ; f * u2 ; muA", "DeltaH2 ; v2 * f ; muA"},
                {"idempotent.u1", "Delta ; u1 * u1 ; muA", "u1"},
                {"idempotent.u2", "DeltaH2 ; u2 * u2 ; muA", "u2"},
                {"idempotent.u3", "DeltaH3 ; u3 * u3 ; muA", "u3"},
                {"idempotent.v2", "DeltaH2 ; v2 * v2 ; muA", "v2"},
                {"idempotent.v3", "DeltaH3 ; v3 * v3 ; muA", "v3"},
                {"alg_prop1.n1", "DeltaH2 ; (u1 * eps) * v2 ; muA", "v2"},
                {"alg_prop1.n2", "DeltaH3 ; (v2 * eps) * v3 ; muA", "v3"},
                {"fundamental.PiR", "id(H) * PiR * id(H) ; mu * id(H) ; f", "id(H) * PiR * id(H) ; id(H) * mu ; f"},
                {"fundamental.PiL", "id(H) * PiL * id(H) ; mu * id(H) ; f", "id(H) * PiL * id(H) ; id(H) * mu ; f"},
            }};
}

IdentityTable hypotheses() {
    return {"hypotheses",
            {
                {"hyp1", "f", "DeltaH2 * etaA ; f * mu * id(A) ; id(A) * rho ; muA"},
                {"twisted_module", "F * id(A) ; id(A) * rho ; muA", "id(H) * chi ; chi * id(H) ; id(A) * f ; muA"},
                {"cocycle", "id(H) * F ; chi * id(H) ; id(A) * f ; muA", "F * id(H) ; id(A) * f ; muA"},
                {"preunit1", "id(H) * etaA ; rho", "Delta * nu ; id(H) * swap(H,A) * id(H) ; rho * f ; muA"},
                {"preunit2", "id(H) * etaA ; rho", "nu * id(H) ; id(A) * f ; muA"},
                {"preunit3", "nu * id(A) ; id(A) * chi ; muA * id(H)", "id(A) * nu ; muA * id(H)"},
            }};
}

IdentityTable preunit() {
    return {"preunit",
            {
                {"nu.forms", "etaA * eta ; nabla", "eta * etaA ; chi"},
                {"nu.PiL", "nu", "nu ; id(A) * PiL"},
                {"nu.comult.a", "nu ; id(A) * Delta", "nu * eta ; id(A) * id(H) * Delta ; id(A) * mu * id(H)"},
                {"nu.comult.b", "nu ; id(A) * Delta",
                 "nu * eta ; id(A) * id(H) * Delta ; id(A) * swap(H,H) * id(H) ; id(A) * mu * id(H)"},
                {"crossed_system.preunit1", "id(H) * nu ; chi * id(H) ; id(A) * F ; muA * id(H)", "etaA * id(H) ; nabla"},
                {"crossed_system.preunit2", "nu * id(H) ; id(A) * F ; muA * id(H)", "etaA * id(H) ; nabla"},
            }};
}

IdentityTable crossed_product() {
    const std::string rr = "(id(A) * chi ; muA * id(H))";  // right A-action on A⊗H
    return {"crossed_product",
            {
                {"split.ip", "p ; i", "nabla"},
                {"split.pi", "i ; p", "id(E)"},
                {"muAH.assoc", "muAH * id(A) * id(H) ; muAH", "id(A) * id(H) * muAH ; muAH"},
                {"muAH.left_linear", "muA * id(H) * id(A) * id(H) ; muAH", "id(A) * muAH ; muA * id(H)"},
                {"muAH.right_linear", "id(A) * id(H) * " + rr + " ; muAH", "muAH * id(A) ; " + rr},
                {"muAH.normalized", "muAH ; nabla", "muAH"},
                {"muAH.normalized.left", "nabla * id(A) * id(H) ; muAH", "muAH"},
                {"muAH.normalized.right", "id(A) * id(H) * nabla ; muAH", "muAH"},
                {"nu.preunit.central", "id(A) * id(H) * nu ; muAH", "nu * id(A) * id(H) ; muAH"},
                {"nu.preunit.idempotent", "nu * nu ; muAH", "nu"},
                {"nu.nabla_nu", "nu ; nabla", "nu"},
                {"nabla_nu_eq_nabla", "id(A) * id(H) * nu ; muAH", "nabla"},
                {"muE.assoc", "muE * id(E) ; muE", "id(E) * muE ; muE"},
                {"muE.unit.left", "etaE * id(E) ; muE", "id(E)"},
                {"muE.unit.right", "id(E) * etaE ; muE", "id(E)"},
                {"muE.left_linear", "j * muE ; muE", "j * id(E) * id(E) ; muE * id(E) ; muE"},
                {"i.multiplicative", "muE ; i", "i * i ; muAH"},
                {"p.multiplicative", "muAH ; p", "p * p ; muE"},
                {"jp.multiplicative", "muA ; jp", "jp * jp ; muAH"},
                {"jp.left_linear", "muA ; jp", "id(A) * jp ; muA * id(H)"},
                {"jp.right_linear", "muA ; jp", "jp * id(A) ; " + rr},
                {"jp.nabla", "jp ; nabla", "jp"},
                {"j.multiplicative", "muA ; j", "j * j ; muE"},
                {"j.unitary", "etaA ; j", "etaE"},
                {"j.left_action", "j * id(E) ; muE", "id(A) * i ; muA * id(H) ; p"},
                {"j.right_action", "id(E) * j ; muE", "i * id(A) ; " + rr + " ; p"},
                {"chi.from_muAH", "etaA * id(H) * jp ; muAH", "chi"},
                {"F.from_muAH", "etaA * id(H) * etaA * id(H) ; muAH", "F"},
                {"chi.from_muE", "gamma * j ; muE ; i", "chi"},
                {"F.from_muE", "gamma * gamma ; muE ; i", "F"},
                {"gamma.unit", "eta ; gamma", "etaE"},
                {"ij_eq_jp", "j ; i", "jp"},
                {"jp.counit", "jp ; id(A) * eps", "id(A) * eta * etaA ; id(A) * rho ; muA"},
                {"j_gamma_eq_p", "j * gamma ; muE", "p"},
                {"gamma_j", "gamma * j ; muE", "chi ; j * gamma ; muE"},
                {"gamma_gamma", "gamma * gamma ; muE", "F ; j * gamma ; muE"},
                {"i_gamma.chi", "gamma ; i", "id(H) * etaA ; chi"},
                {"i_gamma.nabla", "gamma ; i", "etaA * id(H) ; nabla"},
                {"coaction.coassoc", "deltaE ; deltaE * id(H)", "deltaE ; id(E) * Delta"},
                {"coaction.counit", "deltaE ; id(E) * eps", "id(E)"},
                {"deltaE.formula", "deltaE", "i ; id(A) * Delta ; p * id(H)"},
                {"muAH.colinear", "muAH ; id(A) * Delta",
                 "id(A) * Delta * id(A) * Delta ; id(A) * id(H) * swap(H | A, H) * id(H) ; "
                 "id(A) * id(H) * id(A) * id(H) * mu ; muAH * id(H)"},
                {"muE.colinear", "muE ; deltaE",
                 "deltaE * deltaE ; id(E) * swap(H,E) * id(H) ; id(E) * id(E) * mu ; muE * id(H)"},
                {"comodule_algebra", "etaE ; deltaE ; id(E) * Delta", "etaE * eta ; deltaE * Delta ; id(E) * mu * id(H)"},
            }};
}

IdentityTable module_algebra() {
    return {"module_algebra",
            {
                {"gamma_PiL", "PiL ; gamma", "id(H) * etaA ; rho ; j"},
                {"gamma_i_commute", "PiR * id(A) ; gamma * j ; muE", "swap(H,A) ; id(A) * PiR ; j * gamma ; muE"},
                {"mult_gamma.1", "id(H) * PiL ; gamma * gamma ; muE", "id(H) * PiL ; mu ; gamma"},
                {"mult_gamma.2", "PiL * id(H) ; gamma * gamma ; muE", "PiL * id(H) ; mu ; gamma"},
                {"mult_gamma.3", "id(H) * PiR ; gamma * gamma ; muE", "id(H) * PiR ; mu ; gamma"},
                {"mult_gamma.4", "PiR * id(H) ; gamma * gamma ; muE", "PiR * id(H) ; mu ; gamma"},
                {"gamma_conv.left", "Delta ; (PiL ; gamma) * gamma ; muE", "gamma"},
                {"gamma_conv.right", "Delta ; gamma * (PiR ; gamma) ; muE", "gamma"},
                {"gamma.from_nu.right", "etaA * id(H) * nu ; muAH ; p", "gamma"},
                {"gamma.from_nu.left", "nu * etaA * id(H) ; muAH ; p", "gamma"},
                {"nabla_nu_formula", "nabla", "eta * id(A) * id(H) ; Delta * id(A) * id(H) ; id(H) * swap(H,A) * id(H) ; rho * mu"},
                {"special_case.1", "gamma * gamma ; muE",
                 "id(H) * (eta ; Delta) * id(H) ; id(H) * S * id(H) * id(H) ; mu * mu ; gamma * gamma ; muE", true},
                {"special_case.2", "gamma * gamma ; muE",
                 "id(H) * (eta ; Delta) * id(H) ; id(H) * id(H) * S * id(H) ; mu * mu ; gamma * gamma ; muE", true},
                {"auxiliar3.1", "gamma * j * gamma ; id(E) * muE ; muE",
                 "id(H) * (eta ; Delta) * id(A) * id(H) ; id(H) * id(H) * S * id(A) * id(H) ; "
                 "mu * swap(H,A) * id(H) ; id(H) * id(A) * mu ; gamma * j * gamma ; id(E) * muE ; muE",
                 true},
                {"auxiliar3.2", "gamma * j * gamma ; id(E) * muE ; muE",
                 "id(H) * (eta ; Delta) * id(A) * id(H) ; id(H) * S * id(H) * id(A) * id(H) ; "
                 "mu * swap(H,A) * id(H) ; id(H) * id(A) * mu ; gamma * j * gamma ; id(E) * muE ; muE",
                 true},
            }};
}

IdentityTable inverse_cocycle() {
    auto conv3 = [](const std::string& x, const std::string& y) { return "DeltaH3 ; " + x + " * " + y + " ; muA"; };
    return {"inverse_cocycle",
            {
                {"finv.right", "DeltaH2 ; f * finv ; muA", "u2"},
                {"finv.left", "DeltaH2 ; finv * f ; muA", "u2"},
                {"finv.normalized", "DeltaH2 ; finv * u2 ; muA", "finv"},
                {"g_conv_u.f", "DeltaH2 ; f * u2 ; muA", "DeltaH2 ; u2 * f ; muA"},
                {"g_conv_u.finv", "DeltaH2 ; finv * u2 ; muA", "DeltaH2 ; u2 * finv ; muA"},
                {"F1.u3.right", conv3("F1", "u3"), "F1"},
                {"F1.u3.left", conv3("u3", "F1"), "F1"},
                {"F2.u3.right", conv3("F2", "u3"), "F2"},
                {"F2.u3.left", conv3("u3", "F2"), "F2"},
                {"Frho.u3.right", conv3("Frho", "u3"), "Frho"},
                {"Frho.u3.left", conv3("u3", "Frho"), "Frho"},
                {"F1.inverse.right", conv3("F1", "F1inv"), "u3"},
                {"F1.inverse.left", conv3("F1inv", "F1"), "u3"},
                {"F2.inverse.right", conv3("F2", "F2inv"), "u3"},
                {"F2.inverse.left", conv3("F2inv", "F2"), "u3"},
                {"Frho.inverse.right", conv3("Frho", "Frhoinv"), "u3"},
                {"Frho.inverse.left", conv3("Frhoinv", "Frho"), "u3"},
                {"Feps.u3.right", conv3("Feps", "u3"), "id(H) * id(H) * PiL ; id(H) * mu ; f"},
                {"Feps.u3.left", conv3("u3", "Feps"), "id(H) * id(H) * PiL ; id(H) * mu ; f"},
                {"vale", "id(H) * id(H) * PiL ; id(H) * mu ; f", "id(H) * id(H) * PiLb ; id(H) * mu ; f"},
                {"Feps.inverse.right", conv3("Feps", "Fepsinv"), "u2 * eps"},
                {"Feps.inverse.left", conv3("Fepsinv", "Feps"), "u2 * eps"},
                {"Fhat.inverse.right", conv3("Fhat", "Fhatinv"), "u3"},
                {"Fhat.inverse.left", conv3("Fhatinv", "Fhat"), "u3"},
                {"cocycle_equivalent_form", conv3("F2", "F1inv"), conv3("Frhoinv", "Fhat")},
                {"finv.normal.left", "eta * id(H) ; finv", "u1"},
                {"finv.normal.right", "id(H) * eta ; finv", "u1"},
                {"finv.fundamental.PiR", "id(H) * PiR * id(H) ; mu * id(H) ; finv",
                 "id(H) * PiR * id(H) ; id(H) * mu ; finv"},
                {"finv.fundamental.PiL", "id(H) * PiL * id(H) ; mu * id(H) ; finv",
                 "id(H) * PiL * id(H) ; id(H) * mu ; finv"},
            }};
}

IdentityTable gamma_inverse() {
    return {"gamma_inverse",
            {
                {"Q.alternative", "Q", "Delta ; swap(H,H) ; (Delta ; S * id(H) ; finv) * S"},
                {"inverse.left", "Delta ; gammainv * gamma ; muE", "PiR ; gamma"},
                {"inverse.right", "Delta ; gamma * gammainv ; muE", "PiL ; gamma"},
                {"inverse.absorb", "Delta ; (PiR ; gamma) * gammainv ; muE", "gammainv"},
                {"property4", "swap(H,A) ; j * gammainv ; muE", "Delta * id(A) ; id(H) * rho ; gammainv * j ; muE"},
                {"gamma_PiL.coinvariant", "PiL ; gamma ; deltaE", "PiL ; gamma ; deltaE ; id(E) * PiL"},
                {"gamma.colinear", "gamma ; deltaE", "Delta ; gamma * id(H)"},
                {"gamma.total", "eta ; gamma", "etaE"},
            }};
}

IdentityTable comodule() {
    return {"comodule",
            {
                {"coaction.coassoc", "deltaB ; deltaB * id(H)", "deltaB ; id(B) * Delta"},
                {"coaction.counit", "deltaB ; id(B) * eps", "id(B)"},
                {"algebra.assoc", "muB * id(B) ; muB", "id(B) * muB ; muB"},
                {"algebra.unit.left", "etaB * id(B) ; muB", "id(B)"},
                {"algebra.unit.right", "id(B) * etaB ; muB", "id(B)"},
                {"mult.colinear", "muB ; deltaB",
                 "deltaB * deltaB ; id(B) * swap(H,B) * id(H) ; id(B) * id(B) * mu ; muB * id(H)"},
                {"item.1", "etaB ; deltaB ; id(B) * Delta", "etaB * eta ; deltaB * Delta ; id(B) * mu * id(H)"},
                {"item.2", "etaB ; deltaB ; id(B) * Delta",
                 "etaB * eta ; deltaB * Delta ; id(B) * swap(H,H) * id(H) ; id(B) * mu * id(H)"},
                {"item.3", "deltaB ; id(B) * PiRb", "id(B) * etaB ; id(B) * deltaB ; muB * id(H)"},
                {"item.4", "deltaB ; id(B) * PiL", "etaB * id(B) ; deltaB * id(B) ; id(B) * swap(H,B) ; muB * id(H)"},
                {"item.5", "etaB ; deltaB ; id(B) * PiRb", "etaB ; deltaB"},
                {"item.6", "etaB ; deltaB ; id(B) * PiL", "etaB ; deltaB"},
            }};
}

IdentityTable cleaving() {
    return {"cleaving",
            {
                {"gamma.colinear", "gamma ; deltaB", "Delta ; gamma * id(H)"},
                {"gamma.total", "eta ; gamma", "etaB"},
                {"inverse.left", "Delta ; gammainv * gamma ; muB", "PiR ; gamma"},
                {"inverse.right", "Delta ; gamma * gammainv ; muB", "PiL ; gamma"},
                {"inverse.absorb", "Delta ; (PiR ; gamma) * gammainv ; muB", "gammainv"},
            }};
}

IdentityTable decomposition() {
    return {"decomposition",
            {
                {"equality0", "gamma ; q", "Delta ; gamma * gammainv ; muB"},
                {"equality1", "j * id(B) ; muB ; deltaB", "j * deltaB ; muB * id(H)"},
                {"w_wt_id", "wt ; w", "id(B)"},
                {"Omega.idempotent", "Omega ; Omega", "Omega"},
                {"w.left_linear", "muA * id(H) ; w", "id(A) * w ; j * id(B) ; muB"},
                {"w.colinear", "w ; deltaB", "id(A) * Delta ; w * id(H)"},
                {"wt.left_linear", "j * id(B) ; muB ; wt", "id(A) * wt ; muA * id(H)"},
                {"wt.colinear", "wt ; id(A) * Delta", "deltaB ; wt * id(H)"},
                {"q_mult_level1", "j * id(B) ; muB ; pB", "id(A) * pB ; muA"},
                {"p.unit", "etaB ; pB", "etaA"},
                {"p.retraction", "j ; pB", "id(A)"},
            }};
}

IdentityTable reconstruction() {
    return {"reconstruction",
            {
                {"rho.routes", "etaA * id(H) * jpt ; mut ; id(A) * eps", "gamma * j ; muB ; pB"},
                {"f.routes", "etaA * id(H) * etaA * id(H) ; mut ; id(A) * eps", "gamma * gamma ; muB ; pB"},
                {"mut.assoc", "mut * id(A) * id(H) ; mut", "id(A) * id(H) * mut ; mut"},
                {"nut.central", "id(A) * id(H) * nut ; mut", "nut * id(A) * id(H) ; mut"},
                {"nut.idempotent", "nut * nut ; mut", "nut"},
                {"Omega_eq_nabla_nut", "id(A) * id(H) * nut ; mut", "Omega"},
                {"gamma.from_w", "etaA * id(H) ; w", "gamma"},
                {"j.from_w", "j ; wt ; w", "j"},
            }};
}

IdentityTable recover_inverse() {
    return {"recover_inverse",
            {
                {"sigma_eq_jf", "sigma", "f ; j"},
                {"sigma_conv_sigmainv", "DeltaH2 ; sigma * sigmainv ; muB", "mu ; gamma ; q"},
                {"sigmainv_conv_sigma", "DeltaH2 ; sigmainv * sigma ; muB", "mu ; gamma ; q"},
                {"u2_closed_form", "mu ; gamma ; pB", "u2"},
                {"finv.right", "DeltaH2 ; f * finv ; muA", "u2"},
                {"finv.left", "DeltaH2 ; finv * f ; muA", "u2"},
            }};
}

IdentityTable equivalence() {
    return {"equivalence",
            {
                {"cond1.left", "Delta ; u1 * phi ; muA", "phi"},
                {"cond1.right", "Delta ; phi * u1_p ; muA", "phi"},
                {"cond2.right", "Delta ; phi * phiinv ; muA", "u1"},
                {"cond2.left", "Delta ; phiinv * phi ; muA", "u1_p"},
                {"cond3", "eta ; Delta ; phi * id(H)", "nu_p"},
                {"cond4", "chi ; id(A) * phi ; muA", "Delta * id(A) ; phi * rho_p ; muA"},
                {"cond5", "F ; id(A) * phi ; muA",
                 "Delta * Delta ; phi * id(H) * phi * id(H) ; id(A) * chi_p * id(H) ; muA * f_p ; muA"},
                {"L.nabla.right", "nabla ; Lphi", "Lphi"},
                {"L.nabla.left", "Lphi ; nabla_p", "Lphi"},
            }};
}

IdentityTable extension_morphism() {
    return {"extension_morphism",
            {
                {"unital", "etaE ; Phi", "etaE_p"},
                {"multiplicative", "muE ; Phi", "Phi * Phi ; muE_p"},
                {"left_linear", "j * id(E) ; muE ; Phi", "j_p * Phi ; muE_p"},
                {"colinear", "Phi ; deltaE_p", "deltaE ; Phi * id(H)"},
                {"extension", "j ; Phi", "j_p"},
            }};
}

std::vector<IdentityTable> build_corpus() {
    return {bialgebra(),      antipode(),        projections(),   measure(),         weak_module(),
            cocycle(),        hypotheses(),      preunit(),       crossed_product(), module_algebra(),
            inverse_cocycle(), gamma_inverse(),  comodule(),      cleaving(),        decomposition(),
            reconstruction(), recover_inverse(), equivalence(),   extension_morphism()};
}

}  // namespace

const std::vector<IdentityTable>& identity_corpus() {
    static const std::vector<IdentityTable> corpus = build_corpus();
    return corpus;
}

const IdentityTable& identity_table(const std::string& name) {
    for (const auto& t : identity_corpus())
        if (t.name == name) return t;
    throw Error("unknown identity table '" + name + "'");
}

const IdentityDef* find_identity(const std::string& key) {
    auto slash = key.find('/');
    for (const auto& t : identity_corpus()) {
        if (slash != std::string::npos && t.name != key.substr(0, slash)) continue;
        std::string id = slash == std::string::npos ? key : key.substr(slash + 1);
        for (const auto& d : t.items)
            if (d.id == id) return &d;
    }
    return nullptr;
}

void run_table(VerdictReport& report, const IdentityTable& table, const Env& env, bool has_antipode) {
    for (const auto& d : table.items) {
        if (d.needs_antipode && !has_antipode) {
            report.skip(d.id, "requires an antipode");
            continue;
        }
        report.add(check_identity(d.id, d.lhs, d.rhs, env));
    }
}

}  // namespace weakhopf
