#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "terncode/classify.hpp"
#include "terncode/code.hpp"
#include "terncode/equivalence.hpp"
#include "terncode/mass.hpp"

namespace {

std::size_t cap_from_env() {
    const char* v = std::getenv("TERNCODE_CAP");
    if (v == nullptr) return terncode::kDefaultEnumCap;
    try {
        std::size_t used = 0;
        const unsigned long parsed = std::stoul(v, &used);
        if (used != std::string(v).size()) throw std::invalid_argument("trailing junk");
        return parsed;
    } catch (const std::exception&) {
        throw terncode::ArgumentError("TERNCODE_CAP must be a nonnegative integer");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ternary self-orthogonal code classification toolkit"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::size_t cap = 0;  // resolved after parsing: flag beats TERNCODE_CAP beats default

    int n = 0;
    int k = -1;
    bool maximal = false;
    std::string out_dir = "manifests";
    bool resume = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string file_a;
    std::string file_b;

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "classify self-orthogonal codes up to equivalence");
    cmd_classify->add_option("-n,--length", n, "code length")->required();
    CLI::Option* opt_k = cmd_classify->add_option("-k,--dimension", k, "dimension to classify");
    CLI::Option* opt_maximal = cmd_classify->add_flag(
        "--maximal", maximal, "classify at the maximal self-orthogonal dimension");
    opt_k->excludes(opt_maximal);
    cmd_classify->add_option("--out", out_dir, "manifest output directory ('' disables persistence)");
    cmd_classify->add_flag("--resume", resume, "reuse complete manifests already in --out");
    cmd_classify->add_option("--threads", threads, "worker threads");
    cmd_classify->add_option("--cap", cap, "enumeration cap, as the exponent of 3");
    cmd_classify->callback([&] {
        if (!maximal && k < 0) {
            throw terncode::ArgumentError("classify needs -k or --maximal");
        }
        terncode::ClassifyOptions opts;
        opts.out_dir = out_dir;
        opts.resume = resume;
        opts.threads = std::max(1u, threads);
        opts.cap = cap;
        opts.progress = [](const std::string& line) { std::cerr << line << '\n'; };
        terncode::Classifier engine(opts);
        const terncode::ClassificationManifest m =
            maximal ? engine.classify_maximal(n) : engine.classify_so(n, k);
        std::cout << "classes=" << m.records.size() << " residual=" << m.mass.residual.get_str()
                  << '\n';
    });

    CLI::App* cmd_mass = app.add_subcommand("mass", "number of distinct self-orthogonal codes");
    cmd_mass->add_option("-n,--length", n, "code length")->required();
    cmd_mass->add_option("-k,--dimension", k, "dimension")->required();
    cmd_mass->callback([&] { std::cout << terncode::count_T(n, k).get_str() << '\n'; });

    CLI::App* cmd_bound = app.add_subcommand("bound", "lower bound on the number of classes");
    cmd_bound->add_option("-n,--length", n, "code length")->required();
    cmd_bound->add_option("-k,--dimension", k, "dimension")->required();
    cmd_bound->callback([&] { std::cout << terncode::lower_bound(n, k).get_str() << '\n'; });

    CLI::App* cmd_canon = app.add_subcommand("canon", "canonical certificate of a code file");
    cmd_canon->add_option("file", file_a, "code file")->required();
    cmd_canon->add_option("--cap", cap, "enumeration cap, as the exponent of 3");
    cmd_canon->callback([&] {
        std::cout << terncode::cert_hex(
                         terncode::canonical_certificate(terncode::load_code(file_a), cap))
                  << '\n';
    });

    CLI::App* cmd_equiv = app.add_subcommand("equiv", "test two code files for equivalence");
    cmd_equiv->add_option("first", file_a, "code file")->required();
    cmd_equiv->add_option("second", file_b, "code file")->required();
    cmd_equiv->add_option("--cap", cap, "enumeration cap, as the exponent of 3");
    cmd_equiv->callback([&] {
        const bool eq = terncode::are_equivalent(terncode::load_code(file_a),
                                                 terncode::load_code(file_b), cap);
        std::cout << (eq ? "equivalent" : "inequivalent") << '\n';
        if (!eq) exit_code = 1;
    });

    CLI::App* cmd_aut = app.add_subcommand("aut", "automorphism group order of a code file");
    cmd_aut->add_option("file", file_a, "code file")->required();
    cmd_aut->add_option("--cap", cap, "enumeration cap, as the exponent of 3");
    cmd_aut->callback([&] {
        std::cout << terncode::automorphism_group(terncode::load_code(file_a), cap).order.get_str()
                  << '\n';
    });

    CLI::App* cmd_minwt = app.add_subcommand("minwt", "minimum weight of a code file");
    cmd_minwt->add_option("file", file_a, "code file")->required();
    cmd_minwt->add_option("--cap", cap, "enumeration cap, as the exponent of 3");
    cmd_minwt->callback([&] {
        std::cout << terncode::minimum_weight(terncode::load_code(file_a), cap) << '\n';
    });

    try {
        cap = cap_from_env();
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const terncode::CapacityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const terncode::AuditError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const terncode::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
