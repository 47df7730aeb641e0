#include "weakhopf/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace weakhopf {

namespace {

using Perm = std::vector<std::size_t>;

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[b[k]];
    return out;
}

Perm cycle(std::size_t degree, std::vector<std::size_t> pts) {
    Perm p(degree);
    for (std::size_t k = 0; k < degree; ++k) p[k] = k;
    for (std::size_t k = 0; k < pts.size(); ++k) p[pts[k]] = pts[(k + 1) % pts.size()];
    return p;
}

FiniteGroup generated(std::string name, std::size_t degree, const std::vector<Perm>& gens) {
    std::vector<Perm> elems{cycle(degree, {})};
    for (std::size_t k = 0; k < elems.size(); ++k)
        for (const auto& g : gens) {
            Perm next = compose_perm(g, elems[k]);
            if (std::find(elems.begin(), elems.end(), next) == elems.end()) elems.push_back(next);
        }
    FiniteGroup G{std::move(name), {}};
    G.table.assign(elems.size(), std::vector<std::size_t>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b) {
            Perm ab = compose_perm(elems[a], elems[b]);
            G.table[a][b] = std::find(elems.begin(), elems.end(), ab) - elems.begin();
        }
    return G;
}

FiniteGroup cyclic(std::size_t n) {
    std::vector<std::size_t> pts(n);
    for (std::size_t k = 0; k < n; ++k) pts[k] = k;
    return generated("C" + std::to_string(n), n, {cycle(n, pts)});
}

// Left regular action of the quaternion group on itself; element (s, u) at index 4s + u,
// units 1, i, j, k.
FiniteGroup quaternion() {
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto left = [&](std::size_t x) {
        Perm p(8);
        for (std::size_t y = 0; y < 8; ++y) {
            std::size_t s = (x / 4 + y / 4 + sign_mul[x % 4][y % 4]) % 2;
            p[y] = 4 * s + unit_mul[x % 4][y % 4];
        }
        return p;
    };
    return generated("Q8", 8, {left(1), left(2)});
}

std::string morphism_label(std::size_t i, std::size_t j, std::size_t x, std::size_t order) {
    std::string s = "g" + std::to_string(i + 1) + std::to_string(j + 1);
    if (order > 1) s += "_" + std::to_string(x);
    return s;
}

}  // namespace

const std::vector<FiniteGroup>& small_groups() {
    static const std::vector<FiniteGroup> groups = [] {
        std::vector<FiniteGroup> g;
        for (std::size_t n = 1; n <= 9; ++n) g.push_back(cyclic(n));
        g.push_back(generated("C2xC2", 4, {cycle(4, {0, 1}), cycle(4, {2, 3})}));
        g.push_back(generated("S3", 3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})}));
        g.push_back(generated("C4xC2", 6, {cycle(6, {0, 1, 2, 3}), cycle(6, {4, 5})}));
        g.push_back(generated("C2xC2xC2", 6, {cycle(6, {0, 1}), cycle(6, {2, 3}), cycle(6, {4, 5})}));
        g.push_back(generated("D4", 4, {cycle(4, {0, 1, 2, 3}), cycle(4, {0, 2})}));
        g.push_back(quaternion());
        g.push_back(generated("C3xC3", 6, {cycle(6, {0, 1, 2}), cycle(6, {3, 4, 5})}));
        return g;
    }();
    return groups;
}

void validate(const GroupoidPresentation& G) {
    const std::size_t n = G.size();
    auto fail = [&](const std::string& why) { throw InvalidGroupoid("groupoid '" + G.name + "': " + why); };
    if (G.target.size() != n || G.compose.size() != n || G.inverse.size() != n) fail("inconsistent table sizes");
    if (G.identity.size() != G.objects) fail("one identity per object required");
    for (std::size_t g = 0; g < n; ++g) {
        if (G.source[g] >= G.objects || G.target[g] >= G.objects) fail("object out of range");
        if (G.compose[g].size() != n) fail("composition table is not square");
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            long gh = G.compose[g][h];
            bool composable = G.source[g] == G.target[h];
            if (composable != (gh >= 0)) fail("composition defined exactly when source matches target");
            if (gh < 0) continue;
            if (static_cast<std::size_t>(gh) >= n) fail("composite out of range");
            if (G.source[gh] != G.source[h] || G.target[gh] != G.target[g]) fail("composite has wrong endpoints");
        }
    for (std::size_t x = 0; x < G.objects; ++x) {
        std::size_t e = G.identity[x];
        if (e >= n || G.source[e] != x || G.target[e] != x) fail("identity has wrong endpoints");
        for (std::size_t g = 0; g < n; ++g) {
            if (G.target[g] == x && G.compose[e][g] != static_cast<long>(g)) fail("left identity law");
            if (G.source[g] == x && G.compose[g][e] != static_cast<long>(g)) fail("right identity law");
        }
    }
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g) {
            long fg = G.compose[f][g];
            if (fg < 0) continue;
            for (std::size_t h = 0; h < n; ++h) {
                long gh = G.compose[g][h];
                if (gh < 0) continue;
                if (G.compose[fg][h] != G.compose[f][gh]) fail("composition is not associative");
            }
        }
    for (std::size_t g = 0; g < n; ++g) {
        std::size_t v = G.inverse[g];
        if (v >= n || G.compose[g][v] != static_cast<long>(G.identity[G.target[g]]) ||
            G.compose[v][g] != static_cast<long>(G.identity[G.source[g]]))
            fail("morphism " + std::to_string(g) + " has no inverse");
    }
}

GroupoidPresentation connected_groupoid(std::size_t n, const FiniteGroup& grp) {
    const std::size_t m = grp.order();
    GroupoidPresentation G;
    G.name = n == 1 ? grp.name : "conn" + std::to_string(n) + "(" + grp.name + ")";
    G.objects = n;
    auto idx = [&](std::size_t i, std::size_t j, std::size_t x) { return (i * n + j) * m + x; };
    std::vector<std::size_t> inv(m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (grp.table[a][b] == 0) inv[a] = b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t x = 0; x < m; ++x) {
                G.labels.push_back(morphism_label(i, j, x, m));
                G.target.push_back(i);
                G.source.push_back(j);
                G.inverse.push_back(idx(j, i, inv[x]));
            }
    const std::size_t N = n * n * m;
    G.compose.assign(N, std::vector<long>(N, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t x = 0; x < m; ++x)
                    for (std::size_t y = 0; y < m; ++y)
                        G.compose[idx(i, j, x)][idx(j, k, y)] = static_cast<long>(idx(i, k, grp.table[x][y]));
    for (std::size_t i = 0; i < n; ++i) G.identity.push_back(idx(i, i, 0));
    return G;
}

GroupoidPresentation pair_groupoid(std::size_t n) {
    GroupoidPresentation G = connected_groupoid(n, cyclic(1));
    G.name = "pair" + std::to_string(n);
    return G;
}

GroupoidPresentation group_groupoid(const FiniteGroup& grp) { return connected_groupoid(1, grp); }

GroupoidPresentation discrete_groupoid(std::size_t n) {
    std::vector<GroupoidPresentation> parts(n, group_groupoid(cyclic(1)));
    GroupoidPresentation G = disjoint_union(parts);
    G.name = "discrete" + std::to_string(n);
    return G;
}

GroupoidPresentation disjoint_union(const std::vector<GroupoidPresentation>& parts) {
    GroupoidPresentation G;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    G.compose.assign(total, std::vector<long>(total, -1));
    std::size_t obj_off = 0, mor_off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        G.name += (k ? "+" : "") + p.name;
        for (std::size_t g = 0; g < p.size(); ++g) {
            G.labels.push_back(parts.size() > 1 ? "c" + std::to_string(k) + "." + p.labels[g] : p.labels[g]);
            G.source.push_back(p.source[g] + obj_off);
            G.target.push_back(p.target[g] + obj_off);
            G.inverse.push_back(p.inverse[g] + mor_off);
            for (std::size_t h = 0; h < p.size(); ++h)
                if (p.compose[g][h] >= 0) G.compose[g + mor_off][h + mor_off] = p.compose[g][h] + mor_off;
        }
        for (auto e : p.identity) G.identity.push_back(e + mor_off);
        obj_off += p.objects;
        mor_off += p.size();
    }
    G.objects = obj_off;
    return G;
}

std::vector<GroupoidPresentation> enumerate_groupoids(std::size_t max_objects, std::size_t max_morphisms) {
    // A groupoid is determined up to isomorphism by the multiset of its connected
    // components, each given by (number of objects, vertex group).
    struct Component {
        std::size_t objects;
        std::size_t group;
        std::size_t morphisms;
    };
    const auto& groups = small_groups();
    std::vector<Component> comps;
    for (std::size_t n = 1; n <= max_objects; ++n)
        for (std::size_t g = 0; g < groups.size(); ++g)
            if (n * n * groups[g].order() <= max_morphisms) comps.push_back({n, g, n * n * groups[g].order()});

    std::vector<GroupoidPresentation> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t from, std::size_t objs,
                                                                         std::size_t mors) {
        if (!chosen.empty()) {
            std::vector<GroupoidPresentation> parts;
            for (auto c : chosen) parts.push_back(connected_groupoid(comps[c].objects, groups[comps[c].group]));
            out.push_back(parts.size() == 1 ? parts[0] : disjoint_union(parts));
        }
        for (std::size_t c = from; c < comps.size(); ++c) {
            if (objs + comps[c].objects > max_objects || mors + comps[c].morphisms > max_morphisms) continue;
            chosen.push_back(c);
            rec(c, objs + comps[c].objects, mors + comps[c].morphisms);
            chosen.pop_back();
        }
    };
    rec(0, 0, 0);
    return out;
}

WeakHopfAlgebra groupoid_algebra(const GroupoidPresentation& G, const FieldSpec& field) {
    validate(G);
    const std::size_t n = G.size();
    ObjectWord h = ObjectWord::of("H", n);
    const Scalar one = Scalar::one(field);
    std::vector<SparseCol> mu(n * n), delta(n), eps(n), anti(n), eta(1);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < n; ++k)
            if (G.compose[g][k] >= 0) mu[g * n + k].push_back({static_cast<Index>(G.compose[g][k]), one});
    for (auto e : G.identity) eta[0].push_back({e, one});
    for (std::size_t g = 0; g < n; ++g) {
        delta[g].push_back({g * n + g, one});
        eps[g].push_back({0, one});
        anti[g].push_back({G.inverse[g], one});
    }
    AlgebraData alg{LinMap::from_columns(field, h * h, h, mu), LinMap::from_columns(field, {}, h, eta)};
    CoalgebraData coalg{LinMap::from_columns(field, h, h * h, delta), LinMap::from_columns(field, h, {}, eps)};
    WeakBialgebra B = WeakBialgebra::create(alg, coalg);
    return WeakHopfAlgebra::create(B, LinMap::from_columns(field, h, h, anti));
}

}  // namespace weakhopf
