#include "weakhopf/instances.hpp"

namespace weakhopf {

namespace {

AlgebraData functions_on(std::size_t n, const FieldSpec& field) {
    ObjectWord a = ObjectWord::of("A", n);
    std::vector<SparseCol> mu(n * n), eta(1);
    for (std::size_t x = 0; x < n; ++x) {
        mu[x * n + x].push_back({x, Scalar::one(field)});
        eta[0].push_back({x, Scalar::one(field)});
    }
    return {LinMap::from_columns(field, a * a, a, mu), LinMap::from_columns(field, {}, a, eta)};
}

LinMap twisted_cocycle(const SmashInstance& s, const std::vector<Scalar>& sigma_of_pair) {
    const auto& G = s.groupoid;
    const std::size_t n = G.size();
    ObjectWord h = s.H.object();
    std::vector<SparseCol> cols(n * n);
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < n; ++k)
            if (G.compose[g][k] >= 0) cols[g * n + k].push_back({G.target[g], sigma_of_pair[g * n + k]});
    return LinMap::from_columns(s.A.field(), h * h, s.A.eta.cod(), cols);
}

}  // namespace

SmashInstance groupoid_smash(const GroupoidPresentation& G, const FieldSpec& field, const std::vector<Scalar>& tau) {
    SmashInstance s{G.name, G, groupoid_algebra(G, field), functions_on(G.objects, field), {}, {}};
    const std::size_t n = G.size();
    ObjectWord h = s.H.object(), a = s.A.eta.cod();
    std::vector<SparseCol> rho(n * G.objects);
    for (std::size_t g = 0; g < n; ++g) rho[g * G.objects + G.source[g]].push_back({G.target[g], Scalar::one(field)});
    s.rho = LinMap::from_columns(field, h * a, a, rho);

    std::vector<Scalar> sigma(n * n, Scalar::one(field));
    if (!tau.empty())
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t k = 0; k < n; ++k)
                if (G.compose[g][k] >= 0) sigma[g * n + k] = tau[g] * tau[k] / tau[G.compose[g][k]];
    s.f = twisted_cocycle(s, sigma);
    return s;
}

SmashInstance pair_groupoid_smash(const FieldSpec& field) { return groupoid_smash(pair_groupoid(2), field); }

SmashInstance hopf_trivial_smash(const FieldSpec& field) {
    return groupoid_smash(group_groupoid(small_groups()[1]), field);
}

Scalar random_unit(std::mt19937_64& rng, const FieldSpec& field, int bound) {
    if (field.is_prime()) {
        std::uniform_int_distribution<long long> d(1, field.p - 1);
        return Scalar::from_int(field, d(rng));
    }
    std::uniform_int_distribution<int> num(1, bound), sign(0, 1);
    int a = num(rng), b = num(rng);
    return Scalar::from_fraction(field, sign(rng) ? a : -a, b);
}

SmashInstance random_smash(std::mt19937_64& rng, const FieldSpec& field) {
    static const std::vector<GroupoidPresentation> all = enumerate_groupoids(3, 9);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    const GroupoidPresentation& G = all[pick(rng)];
    std::vector<Scalar> tau(G.size(), Scalar::one(field));
    for (std::size_t g = 0; g < G.size(); ++g)
        if (G.source[g] != G.target[g] || G.identity[G.source[g]] != g) tau[g] = random_unit(rng, field);
    return groupoid_smash(G, field, tau);
}

PhiPerturbation random_phi(std::mt19937_64& rng, const SmashInstance& inst) {
    const auto& G = inst.groupoid;
    const FieldSpec& field = inst.A.field();
    const std::size_t n = G.size();
    std::vector<Scalar> lambda(n, Scalar::one(field));
    for (std::size_t g = 0; g < n; ++g)
        if (G.identity[G.source[g]] != g) lambda[g] = random_unit(rng, field);

    std::vector<SparseCol> phi(n);
    for (std::size_t g = 0; g < n; ++g) phi[g].push_back({G.target[g], lambda[g]});
    PhiPerturbation out;
    out.phi = LinMap::from_columns(field, inst.H.object(), inst.A.eta.cod(), phi);

    std::vector<Scalar> sigma(n * n, Scalar::zero(field));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t k = 0; k < n; ++k)
            if (long gk = G.compose[g][k]; gk >= 0)
                sigma[g * n + k] = inst.f.at(G.target[g], g * n + k) * lambda[gk] / (lambda[g] * lambda[k]);
    out.f_prime = twisted_cocycle(inst, sigma);
    return out;
}

}  // namespace weakhopf
