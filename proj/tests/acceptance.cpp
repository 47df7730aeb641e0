// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include "weakhopf/cleft.hpp"
#include "weakhopf/cli.hpp"
#include "weakhopf/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <unistd.h>

using namespace weakhopf;

namespace {

constexpr double kCriterion1Seconds = 60.0;
constexpr double kCriterion2Seconds = 10.0;
constexpr int kRandomInstances = 20;
constexpr int kRandomPhis = 10;
constexpr int kSolverPairs = 50;

const FieldSpec Q = FieldSpec::rational();

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string first_failure_of(const VerdictReport& r) {
    const VerdictEntry* e = r.first_failure();
    return e ? e->id : std::string();
}

/// Fails the outcome with a note naming the first failing entry.
void require(Outcome& o, const VerdictReport& r, const std::string& what) {
    if (r.ok()) return;
    if (o.pass) o.detail = what + ": " + first_failure_of(r);
    o.pass = false;
}

void require(Outcome& o, bool cond, const std::string& what) {
    if (cond) return;
    if (o.pass) o.detail = what;
    o.pass = false;
}

std::vector<SmashInstance> random_instances() {
    std::mt19937_64 rng(20240611);
    std::vector<SmashInstance> out;
    for (int k = 0; k < kRandomInstances; ++k) out.push_back(random_smash(rng, Q));
    return out;
}

Outcome criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::vector<GroupoidPresentation> all = enumerate_groupoids(3, 9);
    Outcome o;
    std::size_t checked = 0, failures = 0;
    for (const FieldSpec& field : {Q, FieldSpec::prime(7)})
        for (const auto& G : all) {
            WeakHopfAlgebra H = groupoid_algebra(G, field);
            VerdictReport r = check_bialgebra_axioms(H.algebra(), H.coalgebra());
            r.merge(check_antipode(H, H.antipode()), "antipode");
            r.merge(projection_identity_suite(H, &H.antipode()), "projections");
            failures += r.count(Status::fail);
            require(o, r, G.name + " over " + field.to_string());
            ++checked;
        }
    double secs = seconds_since(start);
    require(o, secs < kCriterion1Seconds, "over the time limit");
    std::ostringstream d;
    d << checked << " algebras, " << failures << " failures, " << secs << " s";
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome criterion2() {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::size_t identities = 0;
    for (const SmashInstance& s : {pair_groupoid_smash(Q), hopf_trivial_smash(Q)}) {
        WeakMeasure m = s.measure();
        CrossedProduct E = build_crossed_product(m, s.f);
        for (const VerdictReport& r : {projection_identity_suite(s.H, &s.H.antipode()), cocycle_report(m, s.f),
                                       crossed_product_law_suite(E), module_algebra_suite(E)}) {
            require(o, r, s.name);
            require(o, r.count(Status::skipped) == 0, s.name + ": skipped entries");
            identities += r.entries().size();
        }
    }
    double secs = seconds_since(start);
    require(o, secs < kCriterion2Seconds, "over the time limit");
    std::ostringstream d;
    d << identities << " checks on 2 instances, " << secs << " s";
    if (o.pass) o.detail = d.str();
    return o;
}

Outcome criterion3() {
    Outcome o;
    SmashInstance s = pair_groupoid_smash(Q);
    CrossedProduct E = build_crossed_product(s.measure(), s.f);
    require(o, E.dim() == 4, "E_dim is " + std::to_string(E.dim()));
    VerdictReport law = crossed_product_law_suite(E);
    for (const char* id : {"muE.assoc", "muE.unit.left", "muE.unit.right", "chi.from_muE", "F.from_muE"})
        require(o, law.passed(id), id);
    if (o.pass) o.detail = "E_dim 4";
    return o;
}

Outcome criterion4(const std::vector<SmashInstance>& insts) {
    Outcome o;
    SmashInstance pair = pair_groupoid_smash(Q);
    WeakMeasure pm = pair.measure();
    require(o, invert_cocycle(pm, pair.f).finv == pm.u(2), "pair groupoid inverse is not u2");
    for (const auto& s : insts) {
        WeakMeasure m = s.measure();
        LinMap finv = invert_cocycle(m, s.f).finv;
        CoalgebraData C2 = tensor_power(s.H.coalgebra(), 2);
        const LinMap& u2 = m.u(2);
        require(o, convolve(s.f, finv, C2, m.A()) == u2, s.name + ": f*finv");
        require(o, convolve(finv, s.f, C2, m.A()) == u2, s.name + ": finv*f");
        require(o, convolve(finv, u2, C2, m.A()) == finv, s.name + ": finv*u2");
    }
    if (o.pass) o.detail = std::to_string(insts.size()) + " random instances";
    return o;
}

Outcome criterion5(const std::vector<SmashInstance>& insts) {
    Outcome o;
    for (const auto& s : insts) {
        WeakMeasure m = s.measure();
        CrossedProduct E = build_crossed_product(m, s.f);
        GammaInverse gi = gamma_inverse(E, invert_cocycle(m, s.f).finv);
        require(o, gi.report, s.name);
        for (const char* id : {"inverse.left", "inverse.right", "equalizer", "gamma_PiL.factors_through_j"})
            require(o, gi.report.passed(id), s.name + ": " + id);
    }
    if (o.pass) o.detail = std::to_string(insts.size()) + " random instances";
    return o;
}

struct CleftCase {
    SmashInstance s;
    CrossedProduct E;
    LinMap finv;
    Extension X;
    CleavingData c;
};

CleftCase cleft_case(const SmashInstance& s) {
    WeakMeasure m = s.measure();
    CrossedProduct E = build_crossed_product(m, s.f);
    LinMap finv = invert_cocycle(m, s.f).finv;
    LinMap gammainv = gamma_inverse(E, finv).gammainv;
    return {s, E, finv, extension_of(E), cleaving_of(E, gammainv)};
}

Outcome criterion6(const std::vector<SmashInstance>& insts) {
    Outcome o;
    for (const auto& s : insts) {
        CleftCase k = cleft_case(s);
        Reconstruction rec = reconstruct(k.X, k.c);
        require(o, rec.report, s.name);
        require(o, rec.rho == s.rho.relabel(rec.rho.dom(), rec.rho.cod()), s.name + ": rho differs");
        require(o, rec.f == s.f.relabel(rec.f.dom(), rec.f.cod()), s.name + ": f differs");
        CleftIso iso = cleft_to_crossed_iso(k.X, k.c, rec);
        require(o, iso.report, s.name + " iso");
    }
    if (o.pass) o.detail = std::to_string(insts.size()) + " random instances";
    return o;
}

Outcome criterion7(const std::vector<SmashInstance>& insts) {
    Outcome o;
    for (const auto& s : insts) {
        CleftCase k = cleft_case(s);
        RecoveredInverse ri = recover_inverse_cocycle(k.X, k.c);
        require(o, ri.report, s.name);
        require(o, ri.finv == k.finv.relabel(ri.finv.dom(), ri.finv.cod()), s.name + ": inverses differ");
    }
    if (o.pass) o.detail = std::to_string(insts.size()) + " random instances";
    return o;
}

Outcome criterion8() {
    Outcome o;
    SmashInstance pair = pair_groupoid_smash(Q);
    WeakMeasure pm = pair.measure();
    CrossedProduct E = build_crossed_product(pm, pair.f);
    EquivalenceResult eq = equivalence_from_phi(E, E, pm.u(1));
    require(o, eq.report, "phi = u1");
    require(o, eq.Phi && *eq.Phi == LinMap::identity(Q, eq.Phi->dom()).relabel(eq.Phi->dom(), eq.Phi->cod()),
            "Phi(u1) is not the identity");
    if (eq.Phi) require(o, phi_from_iso(E, E, *eq.Phi).phi == pm.u(1), "phi(id) is not u1");

    std::mt19937_64 rng(777);
    for (int k = 0; k < kRandomPhis; ++k) {
        SmashInstance s = random_smash(rng, Q);
        WeakMeasure m = s.measure();
        PhiPerturbation pp = random_phi(rng, s);
        CrossedProduct E1 = build_crossed_product(m, s.f);
        CrossedProduct E2 = build_crossed_product(m, pp.f_prime);
        EquivalenceResult r = equivalence_from_phi(E1, E2, pp.phi);
        require(o, r.report, s.name + " phi");
        if (!r.Phi) continue;
        PhiFromIso back = phi_from_iso(E1, E2, *r.Phi);
        require(o, back.phi == pp.phi.relabel(back.phi.dom(), back.phi.cod()), s.name + ": phi round trip");
        EquivalenceResult again = equivalence_from_phi(E1, E2, back.phi);
        require(o, again.Phi && *again.Phi == *r.Phi, s.name + ": Phi round trip");
    }
    if (o.pass) o.detail = "u1 and " + std::to_string(kRandomPhis) + " random phi";
    return o;
}

// Every map V → W over F2 for dim V = dim W = 2.
std::vector<LinMap> all_maps(const FieldSpec& F2, const ObjectWord& dom, const ObjectWord& cod) {
    std::vector<LinMap> out;
    for (int bits = 0; bits < 16; ++bits) {
        std::vector<std::vector<Scalar>> rows(2, std::vector<Scalar>(2, Scalar::zero(F2)));
        for (int e = 0; e < 4; ++e)
            if (bits >> e & 1) rows[e / 2][e % 2] = Scalar::one(F2);
        out.push_back(LinMap::from_rows(F2, dom, cod, rows));
    }
    return out;
}

Outcome criterion9() {
    Outcome o;
    const FieldSpec F2 = FieldSpec::prime(2);
    std::vector<WeakHopfAlgebra> coalgebras{groupoid_algebra(group_groupoid(small_groups()[1]), F2),
                                            groupoid_algebra(discrete_groupoid(2), F2)};
    std::vector<AlgebraData> algebras;
    for (const auto& H : coalgebras) algebras.push_back(H.algebra());
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> pick16(0, 15), pick2(0, 1);
    int accepted = 0, invertible = 0, draws = 0;
    while (accepted < kSolverPairs && draws < 100000) {
        ++draws;
        const WeakHopfAlgebra& H = coalgebras[pick2(rng)];
        const AlgebraData& A = algebras[pick2(rng)];
        std::vector<LinMap> maps = all_maps(F2, H.object(), A.object());
        const LinMap& g = maps[pick16(rng)];
        const LinMap& u = maps[pick16(rng)];
        if (convolve(g, u, H.coalgebra(), A) != g) continue;
        ++accepted;
        std::vector<const LinMap*> solutions;
        for (const auto& x : maps)
            if (convolve(g, x, H.coalgebra(), A) == u && convolve(x, g, H.coalgebra(), A) == u &&
                convolve(x, u, H.coalgebra(), A) == x)
                solutions.push_back(&x);
        std::optional<LinMap> got = conv_inverse(g, u, H.coalgebra(), A);
        require(o, got.has_value() == !solutions.empty(), "solver and enumeration disagree on existence");
        if (got) {
            ++invertible;
            bool listed = false;
            for (const LinMap* x : solutions) listed = listed || *x == *got;
            require(o, listed, "solver output is not among the enumerated inverses");
        }
    }
    require(o, accepted == kSolverPairs, "not enough admissible pairs");
    if (o.pass)
        o.detail = std::to_string(accepted) + " pairs, " + std::to_string(invertible) + " with an inverse";
    return o;
}

Outcome criterion10() {
    Outcome o;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("weakhopf_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    fs::path input = dir / "pair.json";
    write_file(input.string(), read_file(cli::corpus_dir() + "/pair_groupoid_smash.json"));
    std::string outputs[2][2];
    for (int run = 0; run < 2; ++run) {
        std::string report = (dir / ("report" + std::to_string(run) + ".json")).string();
        std::string out = (dir / ("E" + std::to_string(run) + ".json")).string();
        const char* argv[] = {"weakhopf", "build", input.c_str(), "--report", report.c_str(), "--out", out.c_str()};
        std::ostringstream sink;
        int code = cli::run(7, argv, sink, sink);
        require(o, code == 0, "build exited with " + std::to_string(code));
        outputs[run][0] = read_file(report);
        outputs[run][1] = read_file(out);
    }
    require(o, outputs[0][0] == outputs[1][0], "reports differ");
    require(o, outputs[0][1] == outputs[1][1], "matrices differ");
    fs::remove_all(dir);
    if (o.pass) o.detail = "reports and matrices byte-identical";
    return o;
}

}  // namespace

int main() {
    std::vector<SmashInstance> insts = random_instances();
    std::vector<std::function<Outcome()>> criteria{
        criterion1,
        criterion2,
        criterion3,
        [&] { return criterion4(insts); },
        [&] { return criterion5(insts); },
        [&] { return criterion6(insts); },
        [&] { return criterion7(insts); },
        criterion8,
        criterion9,
        criterion10,
    };
    bool all = true;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        Outcome o;
        try {
            o = criteria[n]();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::cout << "criterion " << n + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")"
                  << std::endl;
    }
    return all ? 0 : 1;
}
