#include "weakhopf/cli.hpp"

#include "weakhopf/cleft.hpp"
#include "weakhopf/corpus.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#ifndef WEAKHOPF_CORPUS_DIR
#define WEAKHOPF_CORPUS_DIR "corpus"
#endif

namespace weakhopf::cli {

using json = nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr)) throw Error("SHA-256 failed");
    std::ostringstream s;
    for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return s.str();
}

std::string corpus_dir() {
    if (const char* env = std::getenv("WEAKHOPF_CORPUS"); env && *env) return env;
    return WEAKHOPF_CORPUS_DIR;
}

std::string identities_json() {
    json all = json::array();
    for (const auto& t : identity_corpus())
        for (const auto& d : t.items)
            all.push_back({{"table", t.name},
                           {"id", d.id},
                           {"lhs", d.lhs},
                           {"rhs", d.rhs},
                           {"needs_antipode", d.needs_antipode}});
    return all.dump(2) + "\n";
}

namespace {

void put_instance(Presentation& p, const WeakBialgebra& H, const std::optional<LinMap>& S, const AlgebraData& A,
                  const LinMap& rho, const LinMap& f) {
    p.field = H.field();
    add_generator(p, "mu", H.mu());
    add_generator(p, "eta", H.eta());
    add_generator(p, "Delta", H.delta());
    add_generator(p, "eps", H.eps());
    p.roles["bialgebra.mu"] = "mu";
    p.roles["bialgebra.eta"] = "eta";
    p.roles["bialgebra.Delta"] = "Delta";
    p.roles["bialgebra.eps"] = "eps";
    if (S) {
        add_generator(p, "S", *S);
        p.roles["antipode"] = "S";
    }
    add_generator(p, "muA", A.mu);
    add_generator(p, "etaA", A.eta);
    add_generator(p, "rho", rho);
    add_generator(p, "f", f);
    p.roles["algebra.mu"] = "muA";
    p.roles["algebra.eta"] = "etaA";
    p.roles["measure"] = "rho";
    p.roles["cocycle"] = "f";
}

}  // namespace

Presentation presentation_of(const SmashInstance& s) {
    Presentation p;
    put_instance(p, s.H, s.H.antipode(), s.A, s.rho, s.f);
    return p;
}

Presentation presentation_of(const CrossedProduct& E, const std::optional<LinMap>& gammainv) {
    Presentation p;
    const WeakMeasure& m = E.measure();
    put_instance(p, m.H(), m.antipode(), m.A(), m.rho(), E.f());
    add_generator(p, "muE", E.muE());
    add_generator(p, "etaE", E.etaE());
    add_generator(p, "deltaE", E.deltaE());
    add_generator(p, "j", E.j());
    add_generator(p, "gamma", E.gamma());
    p.roles["comodule.mu"] = "muE";
    p.roles["comodule.eta"] = "etaE";
    p.roles["comodule.delta"] = "deltaE";
    p.roles["extension"] = "j";
    if (gammainv) {
        add_generator(p, "gammainv", *gammainv);
        p.roles["cleaving.gamma"] = "gamma";
        p.roles["cleaving.gammainv"] = "gammainv";
    }
    return p;
}

namespace {

struct Options {
    std::string input;
    std::string field;
    std::string report;
    bool timing = false;
    std::string measure, cocycle, cocycle_p, phi, out;
    std::string sig, expr, lhs, rhs, identity;
};

std::optional<FieldSpec> field_override(const Options& o) {
    if (o.field.empty()) return std::nullopt;
    return FieldSpec::parse(o.field);
}

WeakBialgebra bialgebra_of(const Presentation& p) {
    AlgebraData alg{p.role_map("bialgebra.mu"), p.role_map("bialgebra.eta")};
    CoalgebraData coalg{p.role_map("bialgebra.Delta"), p.role_map("bialgebra.eps")};
    return WeakBialgebra::unchecked(alg, coalg);
}

std::optional<LinMap> antipode_of(const Presentation& p) {
    if (!p.has_role("antipode")) return std::nullopt;
    return p.role_map("antipode");
}

AlgebraData algebra_of(const Presentation& p) { return {p.role_map("algebra.mu"), p.role_map("algebra.eta")}; }

const LinMap& named_or_role(const Presentation& p, const std::string& name, const std::string& role) {
    return name.empty() ? p.role_map(role) : p.generator(name);
}

WeakMeasure measure_of(const Presentation& p, const Options& o) {
    return WeakMeasure::unchecked(bialgebra_of(p), algebra_of(p), named_or_role(p, o.measure, "measure"),
                                  antipode_of(p));
}

Extension extension_of(const Presentation& p) {
    ComoduleAlgebra C{bialgebra_of(p), antipode_of(p), {p.role_map("comodule.mu"), p.role_map("comodule.eta")},
                      p.role_map("comodule.delta")};
    return {C, algebra_of(p), p.role_map("extension")};
}

CleavingData cleaving_of(const Presentation& p) {
    return {p.role_map("cleaving.gamma"), p.role_map("cleaving.gammainv")};
}

VerdictReport cmd_validate(const Presentation& p, const Options&) {
    VerdictReport r;
    WeakBialgebra H = bialgebra_of(p);
    r.merge(check_bialgebra_axioms(H.algebra(), H.coalgebra()), "bialgebra");
    std::optional<LinMap> S = antipode_of(p);
    if (S) r.merge(check_antipode(H, *S), "antipode");
    LinMap Srel = S ? S->relabel(H.object(), H.object()) : LinMap();
    r.merge(projection_identity_suite(H, S ? &Srel : nullptr), "projections");
    return r;
}

VerdictReport cmd_build(const Presentation& p, const Options& o, std::ostream& err) {
    VerdictReport r;
    WeakMeasure m = measure_of(p, o);
    const LinMap& f = named_or_role(p, o.cocycle, "cocycle");
    r.merge(check_bialgebra_axioms(m.H().algebra(), m.H().coalgebra()), "bialgebra");
    r.merge(measure_report(m), "measure");
    r.merge(cocycle_report(m, f), "cocycle");
    try {
        CrossedProduct E = build_crossed_product(m, f);
        r.merge(E.hypotheses(), "hypotheses");
        r.pass("E_dim", std::to_string(E.dim()));
        r.merge(crossed_product_law_suite(E), "law");
        r.merge(module_algebra_suite(E), "module_algebra");
        std::optional<LinMap> gammainv;
        if (m.antipode()) {
            try {
                CocycleInverse ci = invert_cocycle(m, f);
                r.merge(ci.report, "inverse");
                GammaInverse gi = gamma_inverse(E, ci.finv);
                r.merge(gi.report, "gamma_inverse");
                gammainv = gi.gammainv;
            } catch (const PreconditionFailed& e) {
                r.skip("gamma_inverse", e.what());
            } catch (const NotInvertible& e) {
                r.skip("gamma_inverse", e.what());
            }
        } else {
            r.skip("gamma_inverse", "requires an antipode");
        }
        write_file(o.out.empty() ? o.input + ".E.json" : o.out, dump_presentation(presentation_of(E, gammainv)));
    } catch (const HypothesisFailed& e) {
        r.merge(e.report, "hypotheses");
        err << "first failed hypothesis: " << e.id << "\n";
    }
    return r;
}

VerdictReport cmd_cleft(const Presentation& p, const Options&) {
    VerdictReport r;
    Extension X = extension_of(p);
    CleavingData c = cleaving_of(p);
    r.merge(comodule_algebra_report(X.C), "comodule");
    r.merge(extension_check(X), "extension");
    r.merge(cleaving_check(X, c), "cleaving");
    try {
        r.merge(decomposition(X, c).report, "decomposition");
    } catch (const FactorizationFailed& e) {
        r.fail("decomposition", e.what());
    }
    return r;
}

VerdictReport cmd_reconstruct(const Presentation& p, const Options& o) {
    VerdictReport r;
    Extension X = extension_of(p);
    CleavingData c = cleaving_of(p);
    Reconstruction rec;
    try {
        rec = reconstruct(X, c);
    } catch (const FactorizationFailed& e) {
        r.fail("decomposition", e.what());
        return r;
    }
    r.merge(rec.d.report, "decomposition");
    r.merge(rec.report, "reconstruct");
    if (p.has_role("measure") || !o.measure.empty()) {
        const LinMap& rho = named_or_role(p, o.measure, "measure");
        r.compare("rho.matches_input", rec.rho, rho.relabel(rec.rho.dom(), rec.rho.cod()));
    }
    if (p.has_role("cocycle") || !o.cocycle.empty()) {
        const LinMap& f = named_or_role(p, o.cocycle, "cocycle");
        r.compare("f.matches_input", rec.f, f.relabel(rec.f.dom(), rec.f.cod()));
    }
    try {
        r.merge(recover_inverse_cocycle(X, c, rec).report, "recover_inverse");
    } catch (const FactorizationFailed& e) {
        r.fail("recover_inverse", e.what());
    }
    if (!X.C.S) {
        r.skip("iso", "requires an antipode");
        return r;
    }
    try {
        r.merge(cleft_to_crossed_iso(X, c, rec).report, "iso");
    } catch (const HypothesisFailed& e) {
        r.fail("iso", e.what());
    } catch (const InvalidStructure& e) {
        r.fail("iso", e.what());
    }
    return r;
}

VerdictReport cmd_equiv(const Presentation& p, const Options& o) {
    VerdictReport r;
    WeakMeasure m = measure_of(p, o);
    const LinMap& f = named_or_role(p, o.cocycle, "cocycle");
    const LinMap& f2 = o.cocycle_p.empty() ? (p.has_role("cocycle_p") ? p.role_map("cocycle_p") : f)
                                           : p.generator(o.cocycle_p);
    const LinMap& phi = named_or_role(p, o.phi, "phi");
    CrossedProduct E = build_crossed_product(m, f);
    CrossedProduct E2 = build_crossed_product(m, f2);
    EquivalenceResult eq = equivalence_from_phi(E, E2, phi);
    r.merge(eq.report, "equivalence");
    if (eq.Phi) {
        try {
            r.merge(phi_from_iso(E, E2, *eq.Phi).report, "iso");
        } catch (const NotAnEquivalence& e) {
            r.fail("iso", e.what());
        }
    }
    return r;
}

Env eval_env(const Presentation& p) {
    Env env(p.field);
    if (p.has_role("bialgebra.mu")) {
        std::optional<LinMap> S = antipode_of(p);
        if (p.has_role("algebra.mu") && p.has_role("measure")) {
            WeakMeasure m = WeakMeasure::unchecked(bialgebra_of(p), algebra_of(p), p.role_map("measure"), S);
            env = m.env();
            if (p.has_role("cocycle")) {
                env.bind("f", p.role_map("cocycle").relabel(m.H().object() * m.H().object(), m.A().object()));
                env.bind("F", evaluate("DeltaH2 ; f * mu", env));
            }
        } else {
            WeakBialgebra H = bialgebra_of(p);
            env = S ? WeakHopfAlgebra::unchecked(H, *S).env() : H.env();
        }
    }
    for (const auto& [name, m] : p.generators)
        if (!env.has(name)) env.bind(name, m);
    return env;
}

void print_matrix(std::ostream& out, const LinMap& m) {
    out << m.dom().to_string() << " -> " << m.cod().to_string() << "\n";
    for (const auto& row : m.to_rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " " : "") << row[c].to_string();
        out << "\n";
    }
}

int cmd_eval(const Options& o, std::ostream& out) {
    Presentation p = load_presentation(o.sig, field_override(o));
    Env env = eval_env(p);
    if (!o.expr.empty()) {
        print_matrix(out, evaluate(o.expr, env));
        return 0;
    }
    std::string lhs = o.lhs, rhs = o.rhs, id = "identity";
    if (!o.identity.empty()) {
        json all = json::parse(read_file(corpus_dir() + "/identities.json"));
        bool found = false;
        for (const auto& d : all) {
            std::string key = d["table"].get<std::string>() + "/" + d["id"].get<std::string>();
            if (key == o.identity || d["id"] == o.identity) {
                lhs = d["lhs"];
                rhs = d["rhs"];
                id = key;
                found = true;
                break;
            }
        }
        if (!found) throw ParseError("unknown identity '" + o.identity + "'");
    }
    if (lhs.empty() || rhs.empty()) throw ParseError("eval needs --expr, --identity or both --lhs and --rhs");
    VerdictEntry e = check_identity(id, lhs, rhs, env);
    out << "IDENTITY: " << to_string(e.status);
    if (e.witness)
        out << " (row " << e.witness->row << ", col " << e.witness->col << ": " << e.witness->lhs << " vs "
            << e.witness->rhs << ")";
    out << "\n";
    return e.status == Status::fail ? 1 : 0;
}

int finish(const VerdictReport& r, const Options& o, const std::string& cmd, const std::string& input_bytes,
           long long millis, std::ostream& out) {
    std::string path = o.report.empty() ? o.input + "." + cmd + ".report.json" : o.report;
    write_file(path, dump_report(r, kVersion, sha256_hex(input_bytes), o.timing ? millis : 0));
    out << cmd << ": " << r.count(Status::pass) << " pass, " << r.count(Status::fail) << " fail, "
        << r.count(Status::skipped) << " skipped\n";
    if (const VerdictEntry* bad = r.first_failure()) out << "first failure: " << bad->id << "\n";
    return r.ok() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks for weak Hopf algebras, crossed products and cleft extensions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;

    auto file_command = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        c->add_option("input", o.input, "presentation file")->required();
        c->add_option("--field", o.field, "reinterpret scalars in rational or prime:P");
        c->add_option("--report", o.report, "report path (default <input>." + name + ".report.json)");
        c->add_flag("--timing", o.timing, "record elapsed milliseconds in the report");
        return c;
    };
    CLI::App* validate = file_command("validate", "weak bialgebra, antipode and projection identities");
    CLI::App* build = file_command("build", "build the crossed product and write its matrices");
    build->add_option("--measure", o.measure, "generator to use as the measure");
    build->add_option("--cocycle", o.cocycle, "generator to use as the cocycle");
    build->add_option("--out", o.out, "matrix output (default <input>.E.json)");
    CLI::App* cleft = file_command("cleft", "comodule algebra, extension and cleaving checks");
    CLI::App* recon = file_command("reconstruct", "recover the measure, cocycle and isomorphism");
    CLI::App* equiv = file_command("equiv", "equivalence of crossed products from phi");
    equiv->add_option("--phi", o.phi, "generator to use as phi");
    equiv->add_option("--measure", o.measure, "generator to use as the measure");
    equiv->add_option("--cocycle", o.cocycle, "cocycle of the source");
    equiv->add_option("--cocycle2", o.cocycle_p, "cocycle of the target");
    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression or identity");
    eval->add_option("--sig", o.sig, "presentation providing the generators")->required();
    eval->add_option("--field", o.field, "reinterpret scalars in rational or prime:P");
    eval->add_option("--expr", o.expr, "expression to print");
    eval->add_option("--lhs", o.lhs, "left side of an identity");
    eval->add_option("--rhs", o.rhs, "right side of an identity");
    eval->add_option("--identity", o.identity, "corpus identity as table/id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(o, out);
        auto start = std::chrono::steady_clock::now();
        std::string bytes = read_file(o.input);
        Presentation p = parse_presentation(bytes, field_override(o));
        VerdictReport r;
        std::string cmd;
        if (validate->parsed()) {
            cmd = "validate";
            r = cmd_validate(p, o);
        } else if (build->parsed()) {
            cmd = "build";
            r = cmd_build(p, o, err);
        } else if (cleft->parsed()) {
            cmd = "cleft";
            r = cmd_cleft(p, o);
        } else if (recon->parsed()) {
            cmd = "reconstruct";
            r = cmd_reconstruct(p, o);
        } else {
            cmd = "equiv";
            r = cmd_equiv(p, o);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        return finish(r, o, cmd, bytes, ms.count(), out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const SyntaxError& e) {
        err << "syntax error: " << e.what() << "\n";
    } catch (const UnknownName& e) {
        err << "unknown name: " << e.what() << "\n";
    } catch (const TypeError& e) {
        err << "type error: " << e.what() << "\n";
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << "\n";
    } catch (const FieldMismatch& e) {
        err << "field mismatch: " << e.what() << "\n";
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const HypothesisFailed& e) {
        err << "first failed hypothesis: " << e.id << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace weakhopf::cli
