#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weakhopf/corpus.hpp"
#include "weakhopf/groupoid.hpp"

using namespace weakhopf;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long long n) { return Scalar::from_int(Q, n); }

WeakHopfAlgebra pair2() { return groupoid_algebra(pair_groupoid(2), Q); }
WeakHopfAlgebra z2() { return groupoid_algebra(group_groupoid(small_groups()[1]), Q); }

LinMap basis_map(const ObjectWord& dom, const ObjectWord& cod, const std::vector<Index>& image) {
    std::vector<SparseCol> cols(dom.dim());
    for (Index c = 0; c < image.size(); ++c) cols[c].push_back({image[c], q(1)});
    return LinMap::from_columns(Q, dom, cod, cols);
}

}  // namespace

TEST_CASE("parser rejects malformed text with a position") {
    Env env = pair2().env();
    try {
        env.parse("mu ;;");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 5);
    }
    CHECK_THROWS_AS(env.parse("mu ; nosuch"), UnknownName);
    CHECK_THROWS_AS(env.parse("swap(H,H,H)"), SyntaxError);
}

TEST_CASE("typing") {
    Env env = pair2().env();
    MorType t = infer_type(env.parse("mu"), env.signature());
    CHECK(t.dom.to_string() == "H,H");
    CHECK(t.cod.to_string() == "H");
    t = infer_type(env.parse("eta ; Delta"), env.signature());
    CHECK(t.dom.empty());
    CHECK(t.cod.to_string() == "H,H");
    try {
        infer_type(env.parse("mu ; mu"), env.signature());
        FAIL("expected TypeError");
    } catch (const TypeError& e) {
        CHECK(e.expected == "H,H");
        CHECK(e.found == "H");
    }
}

TEST_CASE("evaluation oracles") {
    Env e2 = z2().env();
    LinMap one = evaluate("eta ; eps", e2);
    CHECK(one.rows() == 1);
    CHECK(one.cols() == 1);
    CHECK(one.at(0, 0) == q(1));
    CHECK(evaluate("id(H)", pair2().env()) == LinMap::identity(Q, ObjectWord::of("H", 4)));

    // Δ(1) = g11⊗g11 + g22⊗g22 in the basis g11, g12, g21, g22
    LinMap de = evaluate("eta ; Delta", pair2().env());
    CHECK(de.nnz() == 2);
    CHECK(de.at(0, 0) == q(1));
    CHECK(de.at(15, 0) == q(1));
}

TEST_CASE("print then parse is the identity") {
    Env env = groupoid_algebra(pair_groupoid(2), Q).env();
    env.bind("S", pair2().antipode());
    for (const char* name : {"bialgebra", "antipode", "projections"})
        for (const auto& d : identity_table(name).items)
            for (const auto& text : {d.lhs, d.rhs}) {
                ExprPtr e = env.parse(text);
                CHECK(same_ast(env.parse(print_expr(e)), e));
            }
    env.add_object("A", 2);
    ExprPtr e = env.parse("swap(H | A, H) ; id(H) * swap(A, H | K)");
    CHECK(same_ast(env.parse(print_expr(e)), e));
}

TEST_CASE("interchange law through the evaluator") {
    Env env = pair2().env();
    env.bind("S", pair2().antipode());
    CHECK(evaluate("(Delta ; mu) * (PiL ; S)", env) == evaluate("Delta * PiL ; mu * S", env));
}

TEST_CASE("weak bialgebra axioms") {
    for (const auto& H : {z2(), pair2()}) {
        VerdictReport r = check_bialgebra_axioms(H.algebra(), H.coalgebra());
        CHECK(r.ok());
        CHECK(r.count(Status::pass) == 11);
    }
    WeakHopfAlgebra H = pair2();
    CoalgebraData broken = H.coalgebra();
    broken.eps.set(0, 1, q(0));
    VerdictReport r = check_bialgebra_axioms(H.algebra(), broken);
    CHECK_FALSE(r.passed("WB2.a"));
    CHECK(r.find("WB2.a")->witness.has_value());
    CHECK_THROWS_AS(WeakBialgebra::create(H.algebra(), broken), InvalidStructure);

    AlgebraData bad = H.algebra();
    bad.mu.set(0, 0, q(2));
    VerdictReport r2 = check_bialgebra_axioms(bad, H.coalgebra());
    const VerdictEntry* wb1 = r2.find("WB1");
    REQUIRE(wb1);
    CHECK(wb1->status == Status::fail);
    REQUIRE(wb1->witness);
    CHECK(wb1->witness->col == 0);
    CHECK(wb1->witness->lhs == "2");
    CHECK(wb1->witness->rhs == "4");
}

TEST_CASE("projections") {
    WeakHopfAlgebra H = pair2();
    ObjectWord h = H.object();
    // g_ij at index 2i + j
    CHECK(H.projection(ProjKind::L) == basis_map(h, h, {0, 0, 3, 3}));
    CHECK(H.projection(ProjKind::R) == basis_map(h, h, {0, 3, 0, 3}));
    CHECK(H.projection(ProjKind::Lbar) == basis_map(h, h, {0, 0, 3, 3}));
    CHECK(H.projection(ProjKind::Rbar) == basis_map(h, h, {0, 3, 0, 3}));

    WeakHopfAlgebra G = z2();
    LinMap ee = compose(G.eta(), G.eps());
    for (auto k : {ProjKind::L, ProjKind::R, ProjKind::Lbar, ProjKind::Rbar}) CHECK(G.projection(k) == ee);

    WeakHopfAlgebra D = groupoid_algebra(discrete_groupoid(2), Q);
    CHECK(D.projection(ProjKind::L) == LinMap::identity(Q, D.object()));
}

TEST_CASE("projection suite and antipode") {
    for (const auto& H : {z2(), pair2()}) {
        VerdictReport r = projection_identity_suite(H, &H.antipode());
        CHECK(r.ok());
        CHECK(r.count(Status::skipped) == 0);
        CHECK(check_antipode(H, H.antipode()).ok());
        VerdictReport without = projection_identity_suite(H);
        CHECK(without.ok());
        CHECK(without.count(Status::skipped) == 6);
    }
    WeakHopfAlgebra H = pair2();
    VerdictReport r = check_antipode(H, LinMap::identity(Q, H.object()));
    const VerdictEntry* a1 = r.find("axiom.1");
    REQUIRE(a1);
    CHECK(a1->status == Status::fail);
    CHECK(a1->witness->col == 1);  // g12
    CHECK(a1->witness->row == 0);  // g11 coefficient: 0 vs 1
    CHECK(a1->witness->lhs == "0");
    CHECK(a1->witness->rhs == "1");
}

TEST_CASE("convolution") {
    WeakHopfAlgebra H = pair2();
    LinMap id = LinMap::identity(Q, H.object());
    CHECK(convolve(id, H.projection(ProjKind::R), H.coalgebra(), H.algebra()) == id);
    CHECK(convolve(H.projection(ProjKind::L), id, H.coalgebra(), H.algebra()) == id);
    CHECK(convolve(H.projection(ProjKind::L), H.projection(ProjKind::L), H.coalgebra(), H.algebra()) ==
          H.projection(ProjKind::L));

    WeakHopfAlgebra G = z2();
    LinMap u = convolution_unit(G.coalgebra(), G.algebra());
    LinMap gid = LinMap::identity(Q, G.object());
    CHECK(convolve(gid, u, G.coalgebra(), G.algebra()) == gid);
    auto inv = conv_inverse(gid, u, G.coalgebra(), G.algebra());
    REQUIRE(inv);
    CHECK(*inv == G.antipode());

    CHECK_THROWS_AS(conv_inverse(gid, LinMap(Q, G.object(), G.object()), G.coalgebra(), G.algebra()),
                    RegularityPreconditionFailed);

    // id∗Π^L ≠ id on the pair groupoid: g12·g11 = 0
    CHECK_THROWS_AS(conv_inverse(id, H.projection(ProjKind::L), H.coalgebra(), H.algebra()),
                    RegularityPreconditionFailed);
}

TEST_CASE("tensor powers of a coalgebra") {
    WeakHopfAlgebra H = pair2();
    Env env = H.env();
    CHECK(tensor_power(H.coalgebra(), 2).delta == evaluate("Delta * Delta ; id(H) * swap(H,H) * id(H)", env));
    CoalgebraData c3 = tensor_power(H.coalgebra(), 3);
    CHECK(check_coalgebra(c3).ok());
    CHECK(c3.delta == evaluate("Delta * Delta * Delta ; id(H) * swap(H,H) * swap(H,H) * id(H) ; "
                               "id(H) * id(H) * swap(H,H) * id(H) * id(H)",
                               env));
}

TEST_CASE("groups and groupoids") {
    const auto& groups = small_groups();
    std::vector<std::size_t> orders;
    for (const auto& g : groups) orders.push_back(g.order());
    CHECK(orders == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 4, 6, 8, 8, 8, 8, 9});
    for (const auto& g : groups) CHECK_NOTHROW(validate(group_groupoid(g)));

    auto all = enumerate_groupoids(3, 9);
    CHECK(all.size() == 91);
    for (const auto& G : all) {
        CHECK(G.objects <= 3);
        CHECK(G.size() <= 9);
    }

    GroupoidPresentation bad = pair_groupoid(2);
    bad.inverse[1] = 1;
    CHECK_THROWS_AS(validate(bad), InvalidGroupoid);
    CHECK(pair_groupoid(2).labels == std::vector<std::string>{"g11", "g12", "g21", "g22"});
}

TEST_CASE("base subalgebras") {
    BaseSubalgebra L = base_subalgebra(pair2(), ProjKind::L);
    CHECK(L.report.ok());
    CHECK(L.algebra.dim() == 2);
    CHECK(L.inj == basis_map(ObjectWord::of("HL", 2), pair2().object(), {0, 3}));
    CHECK(base_subalgebra(z2(), ProjKind::L).algebra.dim() == 1);
    BaseSubalgebra D = base_subalgebra(groupoid_algebra(discrete_groupoid(2), Q), ProjKind::L);
    CHECK(D.algebra.dim() == 2);
    CHECK(D.report.ok());
}
