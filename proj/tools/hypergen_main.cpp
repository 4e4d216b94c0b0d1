// hypergen: sample random hypergraphs / simplicial complexes / independence
// hypergraphs, evaluate operator expressions, enumerate classes, dump exact
// distributions, and run the verification check catalog.
//
// Exit codes: 0 success (all checks pass), 1 check failure or internal
// error, 2 usage/parse/bound error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hg/algebra.hpp"
#include "hg/text_io.hpp"
#include "hg/verify.hpp"

namespace {

using namespace hg;

std::vector<VertexSet> parse_vertex_blocks(const std::string& spec) {
    std::vector<VertexSet> out;
    if (spec.empty()) return out;
    for (const auto& block : split_top_level(spec, ';')) out.push_back(VertexSet::from_csv(block));
    return out;
}

std::vector<std::string> parse_spec_blocks(const std::string& spec) {
    std::vector<std::string> out;
    if (spec.empty()) return out;
    for (const auto& block : split_top_level(spec, ';')) out.push_back(block);
    return out;
}

struct SampleOptions {
    std::string expr;
    std::string vertices;
    std::string p;
    std::uint64_t seed = 0;
    std::uint64_t trials = 1;
};

int cmd_sample(const SampleOptions& opt) {
    Expr e = parse_expr(opt.expr);
    std::vector<VertexSet> blocks = parse_vertex_blocks(opt.vertices);
    std::vector<std::string> specs = parse_spec_blocks(opt.p);
    if (blocks.size() != e.leaf_count())
        throw InvalidInput("--vertices must provide one ';'-separated block per leaf");
    if (specs.size() != e.leaf_count())
        throw InvalidInput("--p must provide one ';'-separated spec per leaf");
    std::vector<ProbabilityMap> maps;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        maps.push_back(parse_prob_spec(specs[i], blocks[i]));

    std::cout << "# generator=" << SampleStream::kGeneratorTag << "\n";
    for (std::uint64_t t = 0; t < opt.trials; ++t) {
        SampleStream stream = SampleStream::substream(opt.seed, t);
        SampledObject obj = sample_expr(e, maps, stream);
        std::cout << "# seed=" << opt.seed << " model=" << obj.descriptor << " trial=" << t
                  << "\n"
                  << to_text(obj.hypergraph);
    }
    return 0;
}

struct VerifyOptions {
    std::string check;
    std::string vertices;
    std::string p;
    std::uint64_t seed = 7;
    std::uint64_t trials = 200000;
    double tol = -1.0;
    unsigned workers = 1;
};

int cmd_verify(const VerifyOptions& opt) {
    if (!is_registered_check(opt.check))
        throw InvalidInput("unknown check '" + opt.check + "'; see 'hypergen checks'");
    CheckParams params;
    params.vertex_blocks = parse_vertex_blocks(opt.vertices);
    params.p_specs = parse_spec_blocks(opt.p);
    params.seed = opt.seed;
    params.trials = opt.trials;
    if (opt.tol >= 0.0) params.tolerance = opt.tol;
    params.workers = opt.workers;
    bool all_pass = true;
    for (const CheckReport& r : run_checks(opt.check, params)) {
        std::cout << render_report(r) << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
}

struct EvalOptions {
    std::string expr;
    std::string inputs;
};

int cmd_eval(const EvalOptions& opt) {
    Expr e = parse_expr(opt.expr);
    std::vector<Hypergraph> inputs;
    for (const auto& path : split_top_level(opt.inputs, ';')) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open input file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        inputs.push_back(parse_hypergraph(buffer.str()));
    }
    if (inputs.size() != e.leaf_count())
        throw InvalidInput("--input must provide one ';'-separated file per leaf");
    std::cout << to_text(eval_expr(e, inputs));
    return 0;
}

struct EnumerateOptions {
    std::string vertices;
    std::string klass = "any";
};

int cmd_enumerate(const EnumerateOptions& opt) {
    VertexSet v = VertexSet::from_csv(opt.vertices);
    std::optional<HypergraphClass> filter;
    if (opt.klass == "complex") filter = HypergraphClass::Complex;
    else if (opt.klass == "indep" || opt.klass == "independence")
        filter = HypergraphClass::Independence;
    else if (opt.klass == "both") filter = HypergraphClass::Both;
    else if (opt.klass == "neither") filter = HypergraphClass::Neither;
    else if (opt.klass != "any")
        throw InvalidInput("--class must be any|complex|indep|both|neither");
    for (const Hypergraph& h : HypergraphEnumeration(v, filter)) std::cout << to_text(h);
    return 0;
}

struct DistOptions {
    std::string model;
    std::string vertices;
    std::string p;
};

int cmd_dist(const DistOptions& opt) {
    VertexSet v = VertexSet::from_csv(opt.vertices);
    ProbabilityMap map = parse_prob_spec(opt.p, v);
    ModelFamily family;
    if (opt.model == "pbar") family = ModelFamily::PBar;
    else if (opt.model == "p") family = ModelFamily::P;
    else if (opt.model == "q") family = ModelFamily::Q;
    else throw InvalidInput("--model must be pbar|p|q");
    DistributionTable table = exact_table({family, map});
    EdgeIndex index(v);
    std::cout << "# vertices:";
    for (const auto& l : v.labels()) std::cout << ' ' << l;
    std::cout << "\n# edges:";
    for (Hyperedge e : index.edges()) {
        std::cout << ' ';
        bool first = true;
        for (std::size_t pos : e.positions()) {
            if (!first) std::cout << ',';
            std::cout << v.label(pos);
            first = false;
        }
    }
    std::cout << "\n";
    std::cout.precision(17);
    for (std::uint64_t s = 0; s < table.size(); ++s)
        std::cout << s << '\t' << table.mass(s) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random hypergraph and simplicial complex generator"};
    app.require_subcommand(1);

    SampleOptions sample_opt;
    auto* sample = app.add_subcommand("sample", "draw from an expression over sampled leaves");
    sample->add_option("--expr", sample_opt.expr, "operator expression")->required();
    sample->add_option("--vertices", sample_opt.vertices, "';'-separated label blocks")->required();
    sample->add_option("--p", sample_opt.p, "';'-separated probability specs")->required();
    sample->add_option("--seed", sample_opt.seed, "base seed");
    sample->add_option("--trials", sample_opt.trials, "number of samples");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "run a registered check or group");
    verify->add_option("--check", verify_opt.check, "check name (see 'checks')")->required();
    verify->add_option("--vertices", verify_opt.vertices, "override vertex blocks");
    verify->add_option("--p", verify_opt.p, "override probability specs");
    verify->add_option("--seed", verify_opt.seed, "seed");
    verify->add_option("--trials", verify_opt.trials, "statistical trials");
    verify->add_option("--tol", verify_opt.tol, "tolerance override");
    verify->add_option("--workers", verify_opt.workers, "worker threads for sampling");

    EvalOptions eval_opt;
    auto* eval = app.add_subcommand("eval", "apply an expression to serialized hypergraphs");
    eval->add_option("--expr", eval_opt.expr, "operator expression")->required();
    eval->add_option("--input", eval_opt.inputs, "';'-separated input files")->required();

    EnumerateOptions enum_opt;
    auto* enumerate = app.add_subcommand("enumerate", "stream every hypergraph of a class");
    enumerate->add_option("--vertices", enum_opt.vertices, "comma-separated labels")->required();
    enumerate->add_option("--class", enum_opt.klass, "any|complex|indep|both|neither");

    DistOptions dist_opt;
    auto* dist = app.add_subcommand("dist", "print an exact model distribution");
    dist->add_option("--model", dist_opt.model, "pbar|p|q")->required();
    dist->add_option("--vertices", dist_opt.vertices, "comma-separated labels")->required();
    dist->add_option("--p", dist_opt.p, "probability spec")->required();

    auto* checks = app.add_subcommand("checks", "list registered check names");

    std::string format = "text";
    app.add_option("--format", format, "output format (text)");

    try {
        app.parse(argc, argv);
        if (format != "text") throw hg::InvalidInput("--format supports only 'text'");
        if (sample->parsed()) return cmd_sample(sample_opt);
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (eval->parsed()) return cmd_eval(eval_opt);
        if (enumerate->parsed()) return cmd_enumerate(enum_opt);
        if (dist->parsed()) return cmd_dist(dist_opt);
        if (checks->parsed()) {
            for (const auto& name : hg::registered_check_names()) std::cout << name << "\n";
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const hg::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
