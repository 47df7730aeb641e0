// Writes the bundled corpus, or with --check compares it against a directory.
#include "weakhopf/cli.hpp"

#include <filesystem>
#include <iostream>
#include <map>

using namespace weakhopf;

namespace {

const FieldSpec Q = FieldSpec::rational();

Presentation broken_epsilon() {
    WeakHopfAlgebra H = groupoid_algebra(pair_groupoid(2), Q);
    LinMap eps = H.eps();
    eps.set(0, 1, Scalar::zero(Q));
    Presentation p;
    p.field = Q;
    add_generator(p, "mu", H.mu());
    add_generator(p, "eta", H.eta());
    add_generator(p, "Delta", H.delta());
    add_generator(p, "eps", eps);
    add_generator(p, "S", H.antipode());
    p.roles = {{"bialgebra.mu", "mu"}, {"bialgebra.eta", "eta"}, {"bialgebra.Delta", "Delta"},
               {"bialgebra.eps", "eps"}, {"antipode", "S"}};
    return p;
}

// u₂ with f(g11,g12), f(g12,g21) and f(g21,g12) set to zero; found by search over small values
Presentation broken_preunit() {
    SmashInstance s = pair_groupoid_smash(Q);
    s.f.set(0, 0 * 4 + 1, Scalar::zero(Q));
    s.f.set(0, 1 * 4 + 2, Scalar::zero(Q));
    s.f.set(1, 2 * 4 + 1, Scalar::zero(Q));
    return cli::presentation_of(s);
}

Presentation pair_smash() {
    SmashInstance s = pair_groupoid_smash(Q);
    Presentation p = cli::presentation_of(s);
    add_generator(p, "phi", s.measure().u(1));
    p.roles["phi"] = "phi";
    return p;
}

std::map<std::string, std::string> corpus_files() {
    return {
        {"identities.json", cli::identities_json()},
        {"pair_groupoid_smash.json", dump_presentation(pair_smash())},
        {"hopf_trivial_smash.json", dump_presentation(cli::presentation_of(hopf_trivial_smash(Q)))},
        {"broken_epsilon.json", dump_presentation(broken_epsilon())},
        {"broken_preunit.json", dump_presentation(broken_preunit())},
    };
}

}  // namespace

int main(int argc, char** argv) {
    bool check = argc == 3 && std::string(argv[1]) == "--check";
    if (argc != 2 && !check) {
        std::cerr << "usage: gen_corpus DIR | gen_corpus --check DIR\n";
        return 2;
    }
    std::filesystem::path dir = argv[argc - 1];
    int stale = 0;
    for (const auto& [name, text] : corpus_files()) {
        std::filesystem::path path = dir / name;
        if (!check) {
            std::filesystem::create_directories(dir);
            write_file(path.string(), text);
            continue;
        }
        std::string have;
        try {
            have = read_file(path.string());
        } catch (const Error&) {
        }
        if (have != text) {
            std::cerr << "stale: " << path.string() << "\n";
            ++stale;
        }
    }
    return stale ? 1 : 0;
}
