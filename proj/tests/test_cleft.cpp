#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weakhopf/cleft.hpp"
#include "weakhopf/instances.hpp"

using namespace weakhopf;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long long n) { return Scalar::from_int(Q, n); }

Index g(int i, int j) { return 2 * (i - 1) + (j - 1); }

void all_pass(const VerdictReport& r) {
    if (const VerdictEntry* bad = r.first_failure()) FAIL_CHECK(bad->id);
    CHECK(r.ok());
}

struct Cleft {
    SmashInstance s;
    CrossedProduct E;
    Extension X;
    CleavingData c;
};

Cleft cleft_of(SmashInstance s) {
    WeakMeasure m = s.measure();
    CrossedProduct E = build_crossed_product(m, s.f);
    LinMap gammainv = gamma_inverse(E, invert_cocycle(m, s.f).finv).gammainv;
    Extension X = extension_of(E);
    CleavingData c = cleaving_of(E, gammainv);
    return {std::move(s), std::move(E), std::move(X), std::move(c)};
}

ComoduleAlgebra regular_comodule(const WeakHopfAlgebra& H) {
    auto b = [](const LinMap& m) { return rename_object(m, "H", "B"); };
    LinMap delta = H.delta().relabel(ObjectWord::of("B", H.dim()), ObjectWord::of("B", H.dim()) * H.object());
    return {H, H.antipode(), {b(H.mu()), b(H.eta())}, delta};
}

}  // namespace

TEST_CASE("comodule algebras") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    VerdictReport r = comodule_algebra_report(k.X.C);
    all_pass(r);
    CHECK(r.count(Status::pass) == 13);

    WeakHopfAlgebra H = groupoid_algebra(pair_groupoid(2), Q);
    all_pass(comodule_algebra_report(regular_comodule(H)));

    // δ' = (B⊗S)∘δ_B is still a coaction here but μ_B is no longer colinear
    ComoduleAlgebra twisted = k.X.C;
    twisted.deltaB = apply_at(H.antipode(), twisted.B.eta.cod(), {}, twisted.deltaB);
    VerdictReport t = comodule_algebra_report(twisted);
    CHECK_FALSE(t.passed("mult.colinear"));
    CHECK(t.passed("coaction.coassoc"));
}

TEST_CASE("extensions") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    VerdictReport r = extension_check(k.X);
    all_pass(r);
    CHECK(r.find("equalizer")->note.find("2") != std::string::npos);

    WeakHopfAlgebra H = groupoid_algebra(pair_groupoid(2), Q);
    BaseSubalgebra L = base_subalgebra(H, ProjKind::L);
    Extension base{regular_comodule(H), L.algebra, rename_object(L.inj, "H", "B")};
    all_pass(extension_check(base));

    // A = k³ mapped onto the two coinvariant idempotents, one of them twice
    ObjectWord a3 = ObjectWord::of("A", 3);
    std::vector<SparseCol> mu(9), eta(1);
    for (Index x = 0; x < 3; ++x) {
        mu[x * 3 + x].push_back({x, q(1)});
        eta[0].push_back({x, q(1)});
    }
    std::vector<SparseCol> jc(3);
    jc[0].push_back({0, q(1)});
    jc[1].push_back({3, q(1)});
    jc[2].push_back({0, q(1)});
    Extension bad{k.X.C, {LinMap::from_columns(Q, a3 * a3, a3, mu), LinMap::from_columns(Q, {}, a3, eta)},
                  LinMap::from_columns(Q, a3, k.X.C.B.eta.cod(), jc)};
    CHECK_FALSE(extension_check(bad).passed("j.injective"));
}

TEST_CASE("cleaving data") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    all_pass(cleaving_check(k.X, k.c));

    Cleft h = cleft_of(hopf_trivial_smash(Q));
    CleavingData viaS{h.c.gamma, compose(h.c.gamma, h.s.H.antipode())};
    CHECK(viaS.gammainv == h.c.gammainv);
    all_pass(cleaving_check(h.X, viaS));

    CleavingData self{k.c.gamma, k.c.gamma};
    VerdictReport r = cleaving_check(k.X, self);
    const VerdictEntry* e = r.find("inverse.left");
    REQUIRE(e);
    CHECK(e->status == Status::fail);
    REQUIRE(e->witness);
    CHECK(e->witness->col == g(1, 2));

    CleavingData scaled = k.c;
    scaled.gamma.set(0, g(1, 2), scaled.gamma.at(0, g(1, 2)) * q(2));
    scaled.gamma.set(1, g(1, 2), scaled.gamma.at(1, g(1, 2)) * q(2));
    CHECK_FALSE(cleaving_check(k.X, scaled).ok());
}

TEST_CASE("decomposition") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    Decomposition d = decomposition(k.X, k.c);
    all_pass(d.report);
    CHECK(rank(d.Omega) == 4);
    CHECK(d.Omega == k.s.measure().nabla());
    // p sends the class of z_x ⊗ g to z_x
    LinMap AepsI = apply_at(k.s.H.eps(), k.s.A.eta.cod(), {}, k.E.i());
    CHECK(d.pB == AepsI.relabel(d.pB.dom(), d.pB.cod()));

    Cleft h = cleft_of(hopf_trivial_smash(Q));
    Decomposition dh = decomposition(h.X, h.c);
    CHECK(dh.Omega == LinMap::identity(Q, dh.Omega.dom()));

    CleavingData corrupt{k.c.gamma, compose(k.c.gamma, k.s.H.projection(ProjKind::R))};
    CHECK_THROWS_AS(decomposition(k.X, corrupt), FactorizationFailed);
}

TEST_CASE("reconstruction recovers the measure and the cocycle") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    Reconstruction r = reconstruct(k.X, k.c);
    all_pass(r.report);
    CHECK(r.rho == k.s.rho.relabel(r.rho.dom(), r.rho.cod()));
    CHECK(r.f == k.s.f.relabel(r.f.dom(), r.f.cod()));

    Cleft h = cleft_of(hopf_trivial_smash(Q));
    Reconstruction rh = reconstruct(h.X, h.c);
    all_pass(rh.report);
    // ρ = ε⊗id and f = ε⊗ε on k[ℤ/2] acting on k
    for (Index c = 0; c < 2; ++c) CHECK(rh.rho.at(0, c) == q(1));
    for (Index c = 0; c < 4; ++c) CHECK(rh.f.at(0, c) == q(1));
}

TEST_CASE("inverse cocycle from the extension") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    Reconstruction rec = reconstruct(k.X, k.c);
    RecoveredInverse ri = recover_inverse_cocycle(k.X, k.c, rec);
    all_pass(ri.report);
    // f⁻¹ = u₂ with u₂(g_ij ⊗ g_kl) = [j = k] z_i
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int kk = 1; kk <= 2; ++kk)
                for (int l = 1; l <= 2; ++l)
                    for (Index x = 0; x < 2; ++x)
                        CHECK(ri.finv.at(x, g(i, j) * 4 + g(kk, l)) == q(j == kk && x == Index(i - 1) ? 1 : 0));
    CHECK(ri.report.passed("u2_closed_form"));

    Cleft h = cleft_of(hopf_trivial_smash(Q));
    RecoveredInverse rh = recover_inverse_cocycle(h.X, h.c);
    all_pass(rh.report);
    CHECK(rh.finv == h.s.f.relabel(rh.finv.dom(), rh.finv.cod()));
}

TEST_CASE("isomorphism with the rebuilt crossed product") {
    Cleft k = cleft_of(pair_groupoid_smash(Q));
    CleftIso iso = cleft_to_crossed_iso(k.X, k.c);
    all_pass(iso.report);
    CHECK(iso.Phi.rows() == 4);
    CHECK(iso.Phi.cols() == 4);
    CHECK(rank(iso.Phi) == 4);

    Cleft h = cleft_of(hopf_trivial_smash(Q));
    CleftIso ih = cleft_to_crossed_iso(h.X, h.c);
    all_pass(ih.report);
    CHECK(ih.Phi == LinMap::identity(Q, ih.Phi.dom()).relabel(ih.Phi.dom(), ih.Phi.cod()));
}

TEST_CASE("round trip on random twisted instances") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 3; ++n) {
        Cleft k = cleft_of(random_smash(rng, Q));
        all_pass(cleaving_check(k.X, k.c));
        Reconstruction rec = reconstruct(k.X, k.c);
        all_pass(rec.report);
        CHECK(rec.f == k.s.f.relabel(rec.f.dom(), rec.f.cod()));
        CHECK(rec.rho == k.s.rho.relabel(rec.rho.dom(), rec.rho.cod()));
        all_pass(recover_inverse_cocycle(k.X, k.c, rec).report);
        all_pass(cleft_to_crossed_iso(k.X, k.c, rec).report);
    }
}
