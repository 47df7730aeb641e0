#include "weakhopf/algebra.hpp"

#include "weakhopf/corpus.hpp"

#include <map>

namespace weakhopf {

namespace {

ObjectWord hword(std::size_t dim, std::size_t n) { return ObjectWord::power(Factor{"H", dim}, n); }

void require(bool cond, const std::string& what) {
    if (!cond) throw ShapeError(what);
}

void check_shapes(const AlgebraData& a) {
    const ObjectWord& x = a.eta.cod();
    require(a.eta.dom().empty(), "unit must have domain K");
    require(a.mu.dom() == x * x && a.mu.cod() == x, "multiplication must be X,X -> X");
}

void check_shapes(const CoalgebraData& c) {
    const ObjectWord& x = c.eps.dom();
    require(c.eps.cod().empty(), "counit must have codomain K");
    require(c.delta.dom() == x && c.delta.cod() == x * x, "comultiplication must be X -> X,X");
}

AlgebraData relabel_h(const AlgebraData& a) {
    std::size_t d = a.dim();
    return {a.mu.relabel(hword(d, 2), hword(d, 1)), a.eta.relabel({}, hword(d, 1))};
}

CoalgebraData relabel_h(const CoalgebraData& c) {
    std::size_t d = c.dim();
    return {c.delta.relabel(hword(d, 1), hword(d, 2)), c.eps.relabel(hword(d, 1), {})};
}

Env base_env(const AlgebraData& a, const CoalgebraData& c) {
    Env env(a.field());
    env.bind("mu", a.mu);
    env.bind("eta", a.eta);
    env.bind("Delta", c.delta);
    env.bind("eps", c.eps);
    return env;
}

const char* kProjectionText[4] = {
    "(eta ; Delta) * id(H) ; id(H) * swap(H,H) ; (mu ; eps) * id(H)",
    "id(H) * (eta ; Delta) ; swap(H,H) * id(H) ; id(H) * (mu ; eps)",
    "(eta ; Delta) * id(H) ; id(H) * (mu ; eps)",
    "id(H) * (eta ; Delta) ; (mu ; eps) * id(H)",
};

}  // namespace

VerdictReport check_algebra(const AlgebraData& A) {
    check_shapes(A);
    const ObjectWord& x = A.object();
    LinMap id = LinMap::identity(A.field(), x * x * x);
    VerdictReport r;
    r.compare("assoc", apply_at(A.mu, {}, {}, apply_at(A.mu, {}, x, id)),
              apply_at(A.mu, {}, {}, apply_at(A.mu, x, {}, id)));
    LinMap idx = LinMap::identity(A.field(), x);
    r.compare("unit.left", compose(A.mu, tensor_product(A.eta, idx)), idx);
    r.compare("unit.right", compose(A.mu, tensor_product(idx, A.eta)), idx);
    return r;
}

VerdictReport check_coalgebra(const CoalgebraData& C) {
    check_shapes(C);
    const ObjectWord& x = C.object();
    VerdictReport r;
    r.compare("coassoc", apply_at(C.delta, {}, x, C.delta), apply_at(C.delta, x, {}, C.delta));
    LinMap idx = LinMap::identity(C.field(), x);
    r.compare("counit.left", apply_at(C.eps, {}, x, C.delta), idx);
    r.compare("counit.right", apply_at(C.eps, x, {}, C.delta), idx);
    return r;
}

CoalgebraData tensor_power(const CoalgebraData& C, std::size_t n) {
    if (n == 0) throw ShapeError("tensor power must be positive");
    if (n == 1) return C;
    const ObjectWord& x = C.object();
    const Index d = x.dim();
    ObjectWord xn;
    for (std::size_t k = 0; k < n; ++k) xn = xn * x;

    // Δ^{⊗n} lands in (X,X)^n; reorder the 2n digits to (X^n, X^n).
    std::vector<SparseCol> cols(xn.dim());
    for (Index c = 0; c < xn.dim(); ++c) {
        std::vector<Index> digit(n);
        Index rest = c;
        for (std::size_t k = n; k-- > 0;) {
            digit[k] = rest % d;
            rest /= d;
        }
        std::vector<std::pair<Index, Index>> acc{{0, 0}};
        std::vector<Scalar> val{Scalar::one(C.field())};
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::pair<Index, Index>> nacc;
            std::vector<Scalar> nval;
            for (std::size_t t = 0; t < acc.size(); ++t)
                for (const auto& e : C.delta.column(digit[k])) {
                    nacc.emplace_back(acc[t].first * d + e.row / d, acc[t].second * d + e.row % d);
                    nval.push_back(val[t] * e.val);
                }
            acc = std::move(nacc);
            val = std::move(nval);
        }
        Index span = xn.dim();
        for (std::size_t t = 0; t < acc.size(); ++t) cols[c].push_back({acc[t].first * span + acc[t].second, val[t]});
    }
    CoalgebraData out;
    out.delta = LinMap::from_columns(C.field(), xn, xn * xn, std::move(cols));
    out.eps = C.eps;
    for (std::size_t k = 1; k < n; ++k) out.eps = tensor_product(out.eps, C.eps);
    return out;
}

LinMap convolve(const LinMap& alpha, const LinMap& beta, const CoalgebraData& C, const AlgebraData& A) {
    const ObjectWord& c = C.object();
    const ObjectWord& a = A.object();
    require(alpha.dom() == c && beta.dom() == c, "convolution operands must start at the coalgebra");
    require(alpha.cod() == a && beta.cod() == a, "convolution operands must land in the algebra");
    LinMap m = apply_at(alpha, {}, c, C.delta);
    m = apply_at(beta, a, {}, m);
    return apply_at(A.mu, {}, {}, m);
}

LinMap convolution_unit(const CoalgebraData& C, const AlgebraData& A) { return compose(A.eta, C.eps); }

std::optional<LinMap> conv_inverse(const LinMap& g, const LinMap& u, const CoalgebraData& C, const AlgebraData& A) {
    return conv_inverse(g, u, u, C, A);
}

std::optional<LinMap> conv_inverse(const LinMap& g, const LinMap& u, const LinMap& u_right, const CoalgebraData& C,
                                   const AlgebraData& A) {
    if (convolve(g, u_right, C, A) != g) throw RegularityPreconditionFailed();
    const FieldSpec& field = A.field();
    const Index N = C.dim(), m = A.dim();
    const Index unknowns = N * m;
    auto var = [N](Index r, Index c) { return r * N + c; };

    // mu_left[s] lists (r, t, v) with v the e_t coefficient of μ(e_s ⊗ e_r); mu_right[s] likewise for μ(e_r ⊗ e_s).
    std::vector<std::vector<std::tuple<Index, Index, Scalar>>> mu_left(m), mu_right(m);
    for (Index col = 0; col < m * m; ++col)
        for (const auto& e : A.mu.column(col)) {
            mu_left[col / m].emplace_back(col % m, e.row, e.val);
            mu_right[col % m].emplace_back(col / m, e.row, e.val);
        }

    std::vector<LinearEquation> eqs;
    auto flush = [&](std::map<Index, std::map<Index, Scalar>>& acc, const LinMap& rhs, Index c, bool subtract_x) {
        for (Index t = 0; t < m; ++t) {
            auto& row = acc[t];
            if (subtract_x) {
                auto it = row.find(var(t, c));
                if (it == row.end()) row.emplace(var(t, c), Scalar::from_int(field, -1));
                else it->second -= Scalar::one(field);
            }
            LinearEquation eq;
            for (auto& [k, v] : row)
                if (!v.is_zero()) eq.coeffs.emplace_back(k, v);
            eq.rhs = subtract_x ? Scalar::zero(field) : rhs.at(t, c);
            eqs.push_back(std::move(eq));
        }
    };

    for (int system = 0; system < 3; ++system) {
        // 0: g∗x = u, 1: x∗g = u_right, 2: x∗u − x = 0
        const LinMap& known = system < 2 ? g : u;
        for (Index c = 0; c < N; ++c) {
            std::map<Index, std::map<Index, Scalar>> acc;
            for (const auto& de : C.delta.column(c)) {
                Index c1 = de.row / N, c2 = de.row % N;
                Index kc = system == 0 ? c1 : c2;  // column of the known factor
                Index xc = system == 0 ? c2 : c1;  // column of the unknown factor
                for (const auto& ke : known.column(kc)) {
                    const auto& table = system == 0 ? mu_left[ke.row] : mu_right[ke.row];
                    for (const auto& [r, t, mv] : table) {
                        Scalar coef = de.val * ke.val * mv;
                        auto& slot = acc[t];
                        auto it = slot.find(var(r, xc));
                        if (it == slot.end()) slot.emplace(var(r, xc), coef);
                        else it->second += coef;
                    }
                }
            }
            flush(acc, system == 1 ? u_right : u, c, system == 2);
        }
    }
    AffineSolution sol = solve_affine(field, unknowns, eqs);
    if (sol.kind == AffineSolution::Kind::no_solution) return std::nullopt;
    return unknowns_to_map(field, g.dom(), g.cod(), sol.particular);
}

VerdictReport check_bialgebra_axioms(const AlgebraData& alg, const CoalgebraData& coalg) {
    check_shapes(alg);
    check_shapes(coalg);
    require(alg.dim() == coalg.dim(), "algebra and coalgebra dimensions differ");
    require(alg.dim() >= 1, "weak bialgebra must have positive dimension");
    require(alg.field() == coalg.field(), "algebra and coalgebra fields differ");
    Env env = base_env(relabel_h(alg), relabel_h(coalg));
    VerdictReport r;
    run_table(r, identity_table("bialgebra"), env);
    return r;
}

WeakBialgebra::WeakBialgebra(AlgebraData a, CoalgebraData c) : alg_(relabel_h(a)), coalg_(relabel_h(c)) {
    Env env = base_env(alg_, coalg_);
    for (int k = 0; k < 4; ++k) pi_[k] = evaluate(kProjectionText[k], env);
    delta2_ = tensor_power(coalg_, 2).delta;
    delta3_ = tensor_power(coalg_, 3).delta;
}

WeakBialgebra WeakBialgebra::create(const AlgebraData& alg, const CoalgebraData& coalg) {
    VerdictReport r = check_bialgebra_axioms(alg, coalg);
    if (!r.ok()) throw InvalidStructure("weak bialgebra axiom '" + r.first_failure()->id + "' fails", r);
    return WeakBialgebra(alg, coalg);
}

WeakBialgebra WeakBialgebra::unchecked(const AlgebraData& alg, const CoalgebraData& coalg) {
    check_shapes(alg);
    check_shapes(coalg);
    require(alg.dim() == coalg.dim(), "algebra and coalgebra dimensions differ");
    return WeakBialgebra(alg, coalg);
}

const LinMap& WeakBialgebra::projection(ProjKind k) const { return pi_[static_cast<int>(k)]; }

Env WeakBialgebra::env() const {
    Env env = base_env(alg_, coalg_);
    env.bind("PiL", pi_[0]);
    env.bind("PiR", pi_[1]);
    env.bind("PiLb", pi_[2]);
    env.bind("PiRb", pi_[3]);
    env.bind("DeltaH2", delta2_);
    env.bind("DeltaH3", delta3_);
    return env;
}

namespace {

LinMap relabel_endo(const WeakBialgebra& H, const LinMap& S) {
    require(S.rows() == H.dim() && S.cols() == H.dim(), "antipode must be H -> H");
    require(S.field() == H.field(), "antipode over a different field");
    return S.relabel(H.object(), H.object());
}

}  // namespace

VerdictReport check_antipode(const WeakBialgebra& H, const LinMap& S) {
    Env env = H.env();
    env.bind("S", relabel_endo(H, S));
    VerdictReport r;
    run_table(r, identity_table("antipode"), env);
    return r;
}

WeakHopfAlgebra WeakHopfAlgebra::create(const WeakBialgebra& H, const LinMap& S) {
    VerdictReport r = check_antipode(H, S);
    if (!r.ok()) throw InvalidStructure("antipode axiom '" + r.first_failure()->id + "' fails", r);
    return WeakHopfAlgebra(H, relabel_endo(H, S));
}

WeakHopfAlgebra WeakHopfAlgebra::unchecked(const WeakBialgebra& H, const LinMap& S) {
    return WeakHopfAlgebra(H, relabel_endo(H, S));
}

Env WeakHopfAlgebra::env() const {
    Env env = WeakBialgebra::env();
    env.bind("S", S_);
    return env;
}

VerdictReport projection_identity_suite(const WeakBialgebra& H, const LinMap* S) {
    Env env = H.env();
    if (S) env.bind("S", relabel_endo(H, *S));
    VerdictReport r;
    run_table(r, identity_table("projections"), env, S != nullptr);
    return r;
}

BaseSubalgebra base_subalgebra(const WeakBialgebra& H, ProjKind side) {
    static const char* names[4] = {"HL", "HR", "HLb", "HRb"};
    Splitting s = split_idempotent(H.projection(side), names[static_cast<int>(side)]);
    BaseSubalgebra out;
    out.inj = s.inj;
    out.proj = s.proj;
    out.algebra.mu = compose(s.proj, compose(H.mu(), tensor_product(s.inj, s.inj)));
    out.algebra.eta = compose(s.proj, H.eta());
    out.report = check_algebra(out.algebra);
    out.report.compare("inj.multiplicative", compose(s.inj, out.algebra.mu),
                       compose(H.mu(), tensor_product(s.inj, s.inj)));
    out.report.compare("inj.unit", compose(s.inj, out.algebra.eta), H.eta());
    return out;
}

}  // namespace weakhopf
