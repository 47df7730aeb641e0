#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weakhopf/instances.hpp"

using namespace weakhopf;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long long n) { return Scalar::from_int(Q, n); }

// pair groupoid basis: g11, g12, g21, g22 at 2(i-1)+(j-1); A = k{z1, z2}
Index g(int i, int j) { return 2 * (i - 1) + (j - 1); }

// u₂(g_ij ⊗ g_kl) = [j = k] z_i
LinMap pair_u2() {
    std::vector<SparseCol> cols(16);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int l = 1; l <= 2; ++l) cols[g(i, j) * 4 + g(j, l)].push_back({Index(i - 1), q(1)});
    return LinMap::from_columns(Q, ObjectWord::of("H", 4) * ObjectWord::of("H", 4), ObjectWord::of("A", 2), cols);
}

// u₂ with three composable pairs sent to zero; the first failing hypothesis is preunit2
LinMap broken_preunit_cocycle() {
    LinMap f = pair_u2();
    f.set(0, g(1, 1) * 4 + g(1, 2), q(0));
    f.set(0, g(1, 2) * 4 + g(2, 1), q(0));
    f.set(1, g(2, 1) * 4 + g(1, 2), q(0));
    return f;
}

void all_pass(const VerdictReport& r) {
    if (const VerdictEntry* bad = r.first_failure()) FAIL_CHECK(bad->id);
    CHECK(r.ok());
}

}  // namespace

TEST_CASE("pair groupoid smash: measure, cocycle and product") {
    SmashInstance s = pair_groupoid_smash(Q);
    CHECK(s.f == pair_u2());
    WeakMeasure m = s.measure();
    CHECK(m.u(2) == pair_u2());
    all_pass(measure_report(m));
    all_pass(check_weak_module_algebra(m));
    all_pass(cocycle_report(m, s.f));

    // ∇(z_x ⊗ g) = [x = t(g)] z_x ⊗ g, so the image is spanned by z1⊗g11, z1⊗g12, z2⊗g21, z2⊗g22
    LinMap nabla = m.nabla();
    for (Index c = 0; c < 8; ++c) {
        Index x = c / 4, h = c % 4;
        bool kept = (x == 0 && h < 2) || (x == 1 && h >= 2);
        CHECK(nabla.at(c, c) == q(kept ? 1 : 0));
    }
    CHECK(nabla.nnz() == 4);

    CrossedProduct E = build_crossed_product(m, s.f);
    CHECK(E.dim() == 4);
    all_pass(E.hypotheses());
    VerdictReport law = crossed_product_law_suite(E);
    all_pass(law);
    CHECK(law.count(Status::skipped) == 0);
    for (const char* id : {"muE.assoc", "muE.unit.left", "muE.unit.right", "chi.from_muE", "F.from_muE"})
        CHECK(law.passed(id));
    all_pass(module_algebra_suite(E));

    // 1_E = z1⊗g11 + z2⊗g22 and j(z_x) = z_x⊗g_xx
    LinMap unit = compose(E.i(), E.etaE());
    CHECK(unit.nnz() == 2);
    CHECK(unit.at(0, 0) == q(1));
    CHECK(unit.at(7, 0) == q(1));
    LinMap ij = compose(E.i(), E.j());
    CHECK(ij.nnz() == 2);
    CHECK(ij.at(0, 0) == q(1));
    CHECK(ij.at(7, 1) == q(1));
}

TEST_CASE("Hopf trivial smash") {
    SmashInstance s = hopf_trivial_smash(Q);
    WeakMeasure m = s.measure();
    CHECK(m.nabla() == LinMap::identity(Q, m.nabla().dom()));
    CrossedProduct E = build_crossed_product(m, s.f);
    CHECK(E.dim() == s.A.dim() * s.H.dim());
    all_pass(crossed_product_law_suite(E));
    all_pass(module_algebra_suite(E));
    CocycleInverse ci = invert_cocycle(m, s.f);
    CHECK(ci.finv == s.f);
}

TEST_CASE("cocycle inverse and gamma inverse on the pair groupoid") {
    SmashInstance s = pair_groupoid_smash(Q);
    WeakMeasure m = s.measure();
    CrossedProduct E = build_crossed_product(m, s.f);
    CocycleInverse ci = invert_cocycle(m, s.f);
    CHECK(ci.finv == pair_u2());
    all_pass(ci.report);

    GammaInverse gi = gamma_inverse(E, ci.finv);
    all_pass(gi.report);
    CHECK(gi.report.passed("is_cleft"));
    // γ⁻¹(g_ij) = z_j ⊗ g_ji
    LinMap ig = compose(E.i(), gi.gammainv);
    CHECK(ig.nnz() == 4);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(ig.at(Index(j - 1) * 4 + g(j, i), g(i, j)) == q(1));
}

TEST_CASE("hypothesis failures") {
    SmashInstance s = pair_groupoid_smash(Q);
    WeakMeasure m = s.measure();
    try {
        build_crossed_product(m, broken_preunit_cocycle());
        FAIL("expected HypothesisFailed");
    } catch (const HypothesisFailed& e) {
        CHECK(e.id == "preunit2");
        CHECK(e.report.passed("cocycle"));
        CHECK(e.report.passed("preunit1"));
    }
    LinMap zero = LinMap::from_columns(Q, s.f.dom(), s.f.cod(), std::vector<SparseCol>(16));
    CHECK_THROWS_AS(build_crossed_product(m, zero), HypothesisFailed);
    CHECK_FALSE(cocycle_report(m, broken_preunit_cocycle()).ok());
}

TEST_CASE("measure creation rejects a non-measure") {
    SmashInstance s = pair_groupoid_smash(Q);
    LinMap rho = s.rho;
    rho.set(0, 0, q(2));
    CHECK_THROWS_AS(WeakMeasure::create(s.H, s.A, rho, s.H.antipode()), InvalidStructure);
    CHECK_FALSE(measure_report(WeakMeasure::unchecked(s.H, s.A, rho)).ok());
}

TEST_CASE("equivalence: u1 gives the identity and back") {
    SmashInstance s = pair_groupoid_smash(Q);
    WeakMeasure m = s.measure();
    CrossedProduct E = build_crossed_product(m, s.f);
    EquivalenceResult eq = equivalence_from_phi(E, E, m.u(1));
    all_pass(eq.report);
    REQUIRE(eq.Phi);
    CHECK(*eq.Phi == LinMap::identity(Q, E.etaE().cod()).relabel(eq.Phi->dom(), eq.Phi->cod()));
    CHECK(eq.phiinv == m.u(1));

    PhiFromIso back = phi_from_iso(E, E, *eq.Phi);
    all_pass(back.report);
    CHECK(back.phi == m.u(1));
}

TEST_CASE("equivalence: zero phi fails condition 3") {
    SmashInstance s = pair_groupoid_smash(Q);
    CrossedProduct E = build_crossed_product(s.measure(), s.f);
    LinMap zero = LinMap::from_columns(Q, ObjectWord::of("H", 4), ObjectWord::of("A", 2), std::vector<SparseCol>(4));
    EquivalenceResult eq = equivalence_from_phi(E, E, zero);
    CHECK_FALSE(eq.Phi);
    CHECK_FALSE(eq.report.passed("cond3"));
    CHECK_FALSE(eq.report.passed("cond2.right"));
}

TEST_CASE("equivalence: random perturbations round trip") {
    std::mt19937_64 rng(11);
    SmashInstance s = pair_groupoid_smash(Q);
    WeakMeasure m = s.measure();
    CrossedProduct E = build_crossed_product(m, s.f);
    for (int k = 0; k < 3; ++k) {
        PhiPerturbation pp = random_phi(rng, s);
        CrossedProduct E2 = build_crossed_product(m, pp.f_prime);
        EquivalenceResult eq = equivalence_from_phi(E, E2, pp.phi);
        all_pass(eq.report);
        REQUIRE(eq.Phi);
        PhiFromIso back = phi_from_iso(E, E2, *eq.Phi);
        CHECK(back.phi == pp.phi.relabel(back.phi.dom(), back.phi.cod()));
        all_pass(back.report);
    }
}

TEST_CASE("a non-iso Phi is rejected") {
    SmashInstance s = pair_groupoid_smash(Q);
    CrossedProduct E = build_crossed_product(s.measure(), s.f);
    LinMap twice = LinMap::identity(Q, E.etaE().cod()).scaled(q(2));
    try {
        phi_from_iso(E, E, twice);
        FAIL("expected NotAnEquivalence");
    } catch (const NotAnEquivalence& e) {
        CHECK(e.id == "unital");
    }
}

TEST_CASE("random instances over F7") {
    const FieldSpec F7 = FieldSpec::prime(7);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 4; ++k) {
        SmashInstance s = random_smash(rng, F7);
        WeakMeasure m = s.measure();
        all_pass(cocycle_report(m, s.f));
        CrossedProduct E = build_crossed_product(m, s.f);
        all_pass(crossed_product_law_suite(E));
        CocycleInverse ci = invert_cocycle(m, s.f);
        all_pass(ci.report);
        all_pass(gamma_inverse(E, ci.finv).report);
    }
}
