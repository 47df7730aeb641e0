#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "weakhopf/errors.hpp"
#include "weakhopf/linalg.hpp"

#include <random>

using namespace weakhopf;

namespace {

const FieldSpec Q = FieldSpec::rational();

Scalar q(long long n, long long d = 1) { return Scalar::from_fraction(Q, n, d); }

ObjectWord obj(const std::string& n, std::size_t d) { return ObjectWord::of(n, d); }

LinMap random_map(std::mt19937& rng, const FieldSpec& f, const ObjectWord& dom, const ObjectWord& cod) {
    std::uniform_int_distribution<int> d(-2, 2);
    LinMap m(f, dom, cod);
    for (Index r = 0; r < cod.dim(); ++r)
        for (Index c = 0; c < dom.dim(); ++c) m.set(r, c, Scalar::from_int(f, d(rng)));
    return m;
}

}  // namespace

TEST_CASE("scalar parsing") {
    CHECK(Scalar::parse(Q, "6/4") == q(3, 2));
    CHECK(Scalar::parse(Q, "-5").to_string() == "-5");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "x"), ParseError);
    auto f7 = FieldSpec::prime(7);
    CHECK(Scalar::parse(f7, "1/2").to_string() == "4");
    CHECK(Scalar::parse(f7, "-1").to_string() == "6");
    CHECK_THROWS_AS(FieldSpec::parse("prime:8"), ParseError);
    CHECK_THROWS_AS(q(1) + Scalar::one(f7), FieldMismatch);
}

TEST_CASE("tensor product") {
    auto id2 = LinMap::identity(Q, obj("X", 2));
    auto id3 = LinMap::identity(Q, obj("Y", 3));
    auto t = tensor_product(id2, id3);
    CHECK(t == LinMap::identity(Q, obj("X", 2) * obj("Y", 3)));

    LinMap a(Q, {}, {}), b(Q, {}, {});
    a.set(0, 0, q(2));
    b.set(0, 0, q(3));
    CHECK(tensor_product(a, b).at(0, 0) == q(6));

    auto X = obj("X", 2);
    auto m = tensor_product(swap_map(Q, X, X), LinMap::identity(Q, X));
    for (Index a2 = 0; a2 < 2; ++a2)
        for (Index b2 = 0; b2 < 2; ++b2)
            for (Index c = 0; c < 2; ++c) CHECK(m.at(4 * b2 + 2 * a2 + c, 4 * a2 + 2 * b2 + c) == q(1));
    CHECK(m.nnz() == 8);
}

TEST_CASE("compose and swap") {
    auto X = obj("X", 2), Y = obj("Y", 3);
    std::mt19937 rng(11);
    auto f = random_map(rng, Q, X, Y);
    CHECK(compose(LinMap::identity(Q, Y), f) == f);
    CHECK(compose(swap_map(Q, Y, X), swap_map(Q, X, Y)) == LinMap::identity(Q, X * Y));
    CHECK(swap_map(Q, ObjectWord(), X) == LinMap::identity(Q, X));
    auto s = swap_map(Q, X, X);
    CHECK(s.at(1, 2) == q(1));
    CHECK(s.at(2, 1) == q(1));
    CHECK(s.at(0, 0) == q(1));
    CHECK_THROWS_AS(compose(f, f), ShapeError);
}

TEST_CASE("interchange law and swap naturality") {
    std::mt19937 rng(5);
    auto X = obj("X", 2), Y = obj("Y", 3), Z = obj("Z", 2), W = obj("W", 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto f1 = random_map(rng, Q, X, Y), g1 = random_map(rng, Q, Y, Z);
        auto f2 = random_map(rng, Q, Z, W), g2 = random_map(rng, Q, W, X);
        CHECK(tensor_product(compose(g1, f1), compose(g2, f2)) ==
              compose(tensor_product(g1, g2), tensor_product(f1, f2)));
        CHECK(compose(tensor_product(f2, f1), swap_map(Q, X, Z)) ==
              compose(swap_map(Q, Y, W), tensor_product(f1, f2)));
    }
}

TEST_CASE("apply_at matches explicit tensor") {
    std::mt19937 rng(3);
    auto X = obj("X", 2), Y = obj("Y", 3), Z = obj("Z", 2);
    auto F = random_map(rng, Q, Y, Z);
    auto M = random_map(rng, Q, Z, X * Y * X);
    auto expect = compose(tensor_product({LinMap::identity(Q, X), F, LinMap::identity(Q, X)}), M);
    CHECK(apply_at(F, X, X, M) == expect);
    auto S = swap_at(X, Y, X, ObjectWord(), M);
    CHECK(S == compose(tensor_product(LinMap::identity(Q, X), swap_map(Q, Y, X)), M));
}

TEST_CASE("split idempotent") {
    auto V = obj("V", 3);
    auto id = LinMap::identity(Q, V);
    auto s = split_idempotent(id, "I");
    CHECK(s.rank == 3);
    CHECK(s.inj.relabel(V, V) == id);

    auto z = split_idempotent(LinMap(Q, V, V), "I");
    CHECK(z.rank == 0);
    CHECK(z.inj.cols() == 0);

    LinMap e(Q, V, V);
    e.set(0, 0, q(1));
    e.set(2, 2, q(1));
    auto d = split_idempotent(e, "I");
    CHECK(d.rank == 2);
    CHECK(d.inj.at(0, 0) == q(1));
    CHECK(d.inj.at(2, 1) == q(1));
    CHECK(compose(d.inj, d.proj) == e);
    CHECK(compose(d.proj, d.inj) == LinMap::identity(Q, obj("I", 2)));

    // non-orthogonal projection onto span(1,1)
    auto W = obj("W", 2);
    LinMap p(Q, W, W);
    p.set(0, 0, q(1));
    p.set(1, 0, q(1));
    auto sp = split_idempotent(p, "I");
    CHECK(compose(sp.inj, sp.proj) == p);
    CHECK(compose(sp.proj, sp.inj) == LinMap::identity(Q, obj("I", 1)));

    LinMap bad(Q, W, W);
    bad.set(0, 0, q(2));
    CHECK_THROWS_AS(split_idempotent(bad, "I"), NotIdempotent);
}

TEST_CASE("solve affine") {
    auto r = solve_affine(Q, 1, {{{{0, q(2)}}, q(4)}});
    CHECK(r.kind == AffineSolution::Kind::unique);
    CHECK(r.particular[0] == q(2));

    auto f2 = FieldSpec::prime(2);
    auto one = Scalar::one(f2);
    auto a = solve_affine(f2, 2, {{{{0, one}, {1, one}}, one}});
    CHECK(a.kind == AffineSolution::Kind::affine);
    CHECK(a.nullspace.size() == 1);
    CHECK(a.particular[0] == one);
    CHECK(a.nullspace[0][0] == one);
    CHECK(a.nullspace[0][1] == one);

    auto n = solve_affine(Q, 1, {{{{0, q(1)}}, q(0)}, {{{0, q(1)}}, q(1)}});
    CHECK(n.kind == AffineSolution::Kind::no_solution);
}

TEST_CASE("solve affine substitution") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<LinearEquation> eqs;
        std::vector<Scalar> x0(5, q(0));
        for (auto& v : x0) v = q(d(rng));
        for (int k = 0; k < 4; ++k) {
            LinearEquation e{{}, q(0)};
            for (Index i = 0; i < 5; ++i) {
                auto c = q(d(rng));
                if (!c.is_zero()) e.coeffs.emplace_back(i, c);
                e.rhs += c * x0[i];
            }
            eqs.push_back(e);
        }
        auto s = solve_affine(Q, 5, eqs);
        REQUIRE(s.kind != AffineSolution::Kind::no_solution);
        for (const auto& e : eqs) {
            Scalar lhs = q(0);
            for (auto& [i, c] : e.coeffs) lhs += c * s.particular[i];
            CHECK(lhs == e.rhs);
            for (const auto& nv : s.nullspace) {
                Scalar h = q(0);
                for (auto& [i, c] : e.coeffs) h += c * nv[i];
                CHECK(h.is_zero());
            }
        }
    }
}

TEST_CASE("kernel, column space, factor_through") {
    auto X = obj("X", 3), Y = obj("Y", 2);
    LinMap m(Q, X, Y);
    m.set(0, 0, q(1));
    m.set(0, 1, q(1));
    m.set(1, 2, q(1));
    auto k = kernel_basis(m, "K0");
    CHECK(k.cols() == 1);
    CHECK(compose(m, k).is_zero());
    CHECK(rank(m) == 2);

    LinMap j(Q, Y, X);
    j.set(0, 0, q(1));
    j.set(1, 0, q(1));
    j.set(2, 1, q(2));
    auto n = compose(j, m);
    auto x = factor_through(j, n);
    REQUIRE(x.has_value());
    CHECK(compose(j, *x) == n);
    CHECK(column_space_contains(j, n));
    CHECK(same_column_space(j, compose(j, LinMap::identity(Q, Y).scaled(q(3)))));

    LinMap outside(Q, obj("U", 1), X);
    outside.set(0, 0, q(1));
    CHECK_FALSE(factor_through(j, outside).has_value());
}
