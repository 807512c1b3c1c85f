#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "ngc/cache.hpp"
#include "ngc/cohomflow.hpp"
#include "ngc/errors.hpp"
#include "ngc/fixtures.hpp"
#include "ngc/json_io.hpp"
#include "ngc/tetraflow.hpp"

namespace {

using namespace ngc;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitAssertion = 3;
constexpr int kExitBudget = 4;

struct Options {
    int dim = 2;
    std::string mode;  // "" = default for dim
    std::string family;
    std::string cache_dir;
    double budget = -1.0;  // seconds; <0 = module default / unlimited
    std::string out;
    std::string format = "text";
};

EvalMode mode_for(const Options& o) {
    std::string m = o.mode;
    if (m.empty()) m = o.dim == 4 ? "skew" : "plain";
    if (m == "plain") return EvalMode::Plain;
    if (m == "skew") return EvalMode::Skew;
    if (m == "sym") return EvalMode::Sym;
    throw ParseError("unknown mode '" + m + "' (expected plain|skew|sym)");
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << text;
    }
}

std::string render_multivector(const Multivector& v, const std::string& format) {
    if (format == "json") return multivector_to_json(v).dump(2);
    return v.display();
}

std::vector<MicroGraph> standard_family(int dim) {
    std::vector<MicroGraph> fam;
    if (dim == 2) {
        for (const auto& e : fixtures::vector_graphs_2d())
            fam.push_back(parse_encoding(e, 2, true));
        return fam;
    }
    const auto& encs = fixtures::vector_graphs_2d();
    MicroGraph g11 = parse_encoding(encs[10], 2, true);
    MicroGraph g12 = parse_encoding(encs[11], 2, true);
    fam = descendants(g11, dim);
    auto d12 = descendants(g12, dim);
    fam.insert(fam.end(), d12.begin(), d12.end());
    return dedup_isomorphic(fam);
}

std::vector<MicroGraph> family_from_selector(const Options& o) {
    if (o.family.empty() || o.family == "standard") return standard_family(o.dim);
    if (o.family == "hamiltonians") {
        std::vector<MicroGraph> fam;
        const std::vector<std::string>* encs = nullptr;
        if (o.dim == 2) {
            fam.push_back(parse_encoding(fixtures::hamiltonian_graph_2d(), 2, false));
            return fam;
        }
        encs = o.dim == 3 ? &fixtures::hamiltonian_graphs_3d() : &fixtures::hamiltonian_graphs_4d();
        for (const auto& e : *encs) fam.push_back(parse_encoding(e, o.dim, false));
        return fam;
    }
    throw ParseError("unknown family '" + o.family + "' (expected standard|hamiltonians)");
}

std::vector<MicroGraph> standard_hamiltonians(int dim) {
    std::vector<MicroGraph> hams;
    if (dim == 2) {
        hams.push_back(parse_encoding(fixtures::hamiltonian_graph_2d(), 2, false));
    } else {
        const auto& encs =
            dim == 3 ? fixtures::hamiltonian_graphs_3d() : fixtures::hamiltonian_graphs_4d();
        for (const auto& e : encs) hams.push_back(parse_encoding(e, dim, false));
    }
    return hams;
}

int cmd_eval(const Options& o, const std::string& enc, bool no_sink) {
    MicroGraph g = parse_encoding(enc, o.dim, !no_sink);
    emit(o, render_multivector(evaluate_mode(g, mode_for(o)), o.format));
    return kExitOk;
}

int cmd_generate(const Options& o) {
    std::vector<MicroGraph> fam;
    if (o.family == "hamiltonians")
        fam = generate_hamiltonian_micrographs(o.dim);
    else if (o.family.empty() || o.family == "vector" || o.family == "standard")
        fam = o.dim == 2 ? generate_2d_vector_graphs() : standard_family(o.dim);
    else
        throw ParseError("unknown family '" + o.family + "' (expected vector|hamiltonians)");
    std::string text;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& g : fam) arr.push_back(serialize_encoding(g));
        text = arr.dump(2);
    } else {
        for (const auto& g : fam) text += serialize_encoding(g) + "\n";
    }
    emit(o, text);
    return kExitOk;
}

int cmd_descendants(const Options& o, const std::string& enc) {
    MicroGraph g = parse_encoding(enc, 2, true);
    std::string text;
    json arr = json::array();
    for (const auto& d : descendants(g, o.dim)) {
        if (o.format == "json")
            arr.push_back(serialize_encoding(d));
        else
            text += serialize_encoding(d) + "\n";
    }
    emit(o, o.format == "json" ? arr.dump(2) : text);
    return kExitOk;
}

int cmd_embed(const Options& o, const std::string& enc, bool no_sink) {
    MicroGraph g = parse_encoding(enc, o.dim, !no_sink);
    emit(o, serialize_encoding(embed(g)) + "\n");
    return kExitOk;
}

int cmd_tetra(const Options& o) {
    emit(o, render_multivector(tetrahedral_flow(o.dim), o.format));
    return kExitOk;
}

int cmd_pipeline(const Options& o) {
    EvalMode mode = mode_for(o);
    auto family = family_from_selector(o);
    PipelineResult triv = solve_trivialization(o.dim, family, mode);
    PipelineResult kern = homogeneous_kernel(o.dim, family, mode);
    EvalMode ham_mode = o.dim == 4 ? EvalMode::Sym : EvalMode::Plain;
    PipelineResult full =
        express_in_hamiltonians(o.dim, kern, family, standard_hamiltonians(o.dim), ham_mode);
    full.has_solution = triv.has_solution;
    full.solution = triv.solution;
    full.seconds += triv.seconds + kern.seconds;
    emit(o, full.to_json_string());
    if (!triv.has_solution) {
        std::cerr << "pipeline: no trivializing vector field found where one is expected\n";
        return kExitAssertion;
    }
    for (const auto& h : full.ham_coeffs)
        if (!h) {
            std::cerr << "pipeline: kernel vector not expressible in Hamiltonian fields\n";
            return kExitAssertion;
        }
    return kExitOk;
}

int cmd_table(const Options& o) {
    PairTable t = pair_search_table(o.dim, o.budget);
    emit(o, o.format == "json" ? t.to_json_string() : t.to_csv());
    for (const auto& row : t.cells)
        for (const auto& cell : row)
            if (cell == "timeout") return kExitBudget;
    return kExitOk;
}

int cmd_cache(const Options& o, const std::string& action) {
    if (action == "list") {
        for (const auto& e : cache::list_disk()) std::cout << e.key << "\t" << e.file << "\n";
        return kExitOk;
    }
    if (action == "clear") {
        size_t n = cache::clear_disk();
        std::cout << "removed " << n << " entries\n";
        return kExitOk;
    }
    if (action == "verify") {
        auto report = cache::verify_disk();
        std::cout << "checked " << report.checked << " entries, " << report.corrupt_keys.size()
                  << " corrupt\n";
        for (const auto& k : report.corrupt_keys) std::cout << "corrupt: " << k << "\n";
        return report.corrupt_keys.empty() ? kExitOk : kExitAssertion;
    }
    throw ParseError("unknown cache action '" + action + "' (expected list|clear|verify)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph calculus for Nambu-determinant Poisson structures"};
    app.require_subcommand(1);

    Options o;
    std::string encoding;
    std::string cache_action;
    bool no_sink = false;

    if (const char* env = std::getenv("NGC_CACHE_DIR")) o.cache_dir = env;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--dim", o.dim, "base dimension (2..4)")->check(CLI::Range(2, 4));
        sub->add_option("--mode", o.mode, "evaluation mode: plain|skew|sym");
        sub->add_option("--family", o.family, "graph family selector");
        sub->add_option("--cache-dir", o.cache_dir, "evaluation cache directory");
        sub->add_option("--budget", o.budget, "time budget in seconds");
        sub->add_option("--out", o.out, "write output to this file");
        sub->add_option("--format", o.format, "output format: json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* eval = app.add_subcommand("eval", "evaluate a graph encoding into a multivector");
    eval->add_option("encoding", encoding, "graph encoding, e.g. [0,3;2,3;2,3]")->required();
    eval->add_flag("--no-sink", no_sink, "encoding has no sink vertex");
    add_common(eval);

    auto* generate = app.add_subcommand("generate", "list a generated graph family");
    add_common(generate);

    auto* desc = app.add_subcommand("descendants", "list descendants of a 2D graph");
    desc->add_option("encoding", encoding, "2D graph encoding")->required();
    add_common(desc);

    auto* emb = app.add_subcommand("embed", "embed a graph into dimension+1");
    emb->add_option("encoding", encoding, "graph encoding")->required();
    emb->add_flag("--no-sink", no_sink, "encoding has no sink vertex");
    add_common(emb);

    auto* tetra = app.add_subcommand("tetra", "print the tetrahedral flow");
    add_common(tetra);

    auto* pipeline = app.add_subcommand("pipeline", "trivialization + kernel + Hamiltonians");
    add_common(pipeline);

    auto* table = app.add_subcommand("table", "pair-search table over descendants");
    add_common(table);

    auto* cachecmd = app.add_subcommand("cache", "evaluation cache maintenance");
    cachecmd->add_option("action", cache_action, "list|clear|verify")->required();
    add_common(cachecmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (!o.cache_dir.empty()) cache::set_directory(o.cache_dir);
        if (eval->parsed()) return cmd_eval(o, encoding, no_sink);
        if (generate->parsed()) return cmd_generate(o);
        if (desc->parsed()) return cmd_descendants(o, encoding);
        if (emb->parsed()) return cmd_embed(o, encoding, no_sink);
        if (tetra->parsed()) return cmd_tetra(o);
        if (pipeline->parsed()) return cmd_pipeline(o);
        if (table->parsed()) return cmd_table(o);
        if (cachecmd->parsed()) return cmd_cache(o, cache_action);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const StructureError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
