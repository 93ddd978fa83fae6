// listhom: command-line front end for the list-homomorphism solver.
//
// Exit codes for solve/oracle: 0 TRUE, 1 FALSE, 2 not in class, 3 usage or I/O.

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "listhom/listhom.hpp"

using namespace listhom;

namespace {

constexpr int exit_true = 0;
constexpr int exit_false = 1;
constexpr int exit_not_in_class = 2;
constexpr int exit_usage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InstanceDocument load_instance(const std::string & path)
{
    std::string text;
    if (path == "-")
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_instance(text);
}

std::string join(const std::vector<std::size_t> & v, const char * sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

void print_answer(bool satisfiable, const std::optional<Homomorphism> & witness, bool show_witness, bool as_json)
{
    if (as_json) {
        SolveResult r;
        r.satisfiable = satisfiable;
        r.witness = witness;
        std::cout << solve_result_json(r).dump() << "\n";
        return;
    }
    std::cout << (satisfiable ? "TRUE" : "FALSE") << "\n";
    if (show_witness && witness)
        std::cout << "witness: " << join(*witness) << "\n";
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
    std::string instance;
    bool fallback_brute = false;
    bool witness = false;
    bool json = false;
    bool stats = false;
    std::optional<std::size_t> hint;
};

int run_solve(const SolveArgs & a)
{
    auto doc = load_instance(a.instance);
    SolveOptions options;
    options.start_hint = a.hint;
    try {
        auto r = lh_solve(doc.graph, doc.lists, doc.target, options);
        print_answer(r.satisfiable, r.witness, a.witness, a.json);
        if (a.stats)
            std::cerr << "edge tests: " << r.stats.edge_tests << ", configuration graphs: " << r.stats.configuration_graphs
                      << ", configurations: " << r.stats.configurations << ", depth: " << r.stats.max_depth << "\n";
        return r.satisfiable ? exit_true : exit_false;
    }
    catch (const NotInClass & e) {
        if (a.fallback_brute && doc.graph.vertex_count() <= default_oracle_cap) {
            std::cerr << "note: " << e.what() << "; falling back to exhaustive search\n";
            auto f = brute_force(doc.graph, doc.lists, doc.target);
            print_answer(f.has_value(), f, a.witness, a.json);
            return f ? exit_true : exit_false;
        }
        if (a.json)
            std::cout << nlohmann::json{{"error", "not_in_class"}, {"vertices", e.vertices()}}.dump() << "\n";
        else
            std::cout << "NOT-IN-CLASS\n";
        std::cerr << e.what() << "\n";
        return exit_not_in_class;
    }
}

// ---- check-ordering --------------------------------------------------------

struct CheckArgs {
    std::string instance;
    std::optional<std::size_t> start;
    bool all_starts = false;
};

void print_ordering(const MultiChainOrdering & ord, const std::vector<Vertex> & names)
{
    std::cout << "  ordering from " << names[ord.start] << "\n";
    for (std::size_t i = 0; i < ord.layers.size(); ++i) {
        std::cout << "    L" << i << ":";
        for (auto x : ord.layers[i])
            std::cout << " " << names[x] << "(d-=" << ord.d_minus[x] << ",d+=" << ord.d_plus[x] << ")";
        std::cout << "\n";
    }
}

int run_check(const CheckArgs & a)
{
    auto doc = load_instance(a.instance);
    if (a.start && *a.start >= doc.graph.vertex_count())
        throw InvalidInput("--start vertex out of range");
    bool all_found = true;
    auto components = connected_components(doc.graph);
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        const auto & comp = components[ci];
        auto sub = induced_subgraph(doc.graph, comp);
        std::cout << "component " << ci << ": vertices " << join(comp) << "\n";
        std::optional<MultiChainOrdering> first;
        if (a.all_starts) {
            for (Vertex v = 0; v < comp.size(); ++v) {
                auto ord = ordering_from(sub.graph, v);
                std::cout << "  start " << comp[v] << ": " << (ord ? "found" : "none") << "\n";
                if (ord && !first)
                    first = std::move(ord);
            }
        }
        else if (a.start && sub.from_parent[*a.start] != no_vertex)
            first = ordering_from(sub.graph, sub.from_parent[*a.start]);
        else
            first = find_ordering(sub.graph);

        if (first) {
            std::cout << "  found\n";
            print_ordering(*first, comp);
        }
        else {
            std::cout << "  none\n";
            all_found = false;
        }
    }
    return all_found ? 0 : 1;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t n = 8;
    std::size_t k = 3;
    double density = 1.0;
    std::uint64_t seed = 0;
    std::string target = "complete";
    std::string perm;
    double target_loops = 0;
    double graph_loops = 0;
};

int run_gen(const GenArgs & a)
{
    Graph g, h;
    ListMapping lists;
    auto full_instance = [&](Graph graph) {
        g = std::move(graph);
        h = complete_graph(a.k);
        lists = ListMapping::full(g.vertex_count(), a.k);
    };

    if (a.family == "permutation" && !a.perm.empty()) {
        PermutationSpec spec;
        std::stringstream ss(a.perm);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto v = std::stoul(tok);
            if (v == 0)
                throw InvalidInput("--perm is one-based");
            spec.pi.push_back(v - 1);
        }
        full_instance(permutation_graph(spec));
    }
    else if (a.family == "permutation" || a.family == "interval" || a.family == "arbitrary") {
        InstanceParams p;
        p.seed = a.seed;
        p.n = a.n;
        p.k = a.k;
        p.list_density = a.density;
        p.family = a.family == "permutation" ? Family::permutation
                   : a.family == "interval"  ? Family::interval
                                             : Family::arbitrary_small;
        p.target = a.target == "random" ? TargetKind::random : TargetKind::complete;
        p.target_loop_probability = a.target_loops;
        p.graph_loop_probability = a.graph_loops;
        auto inst = random_instance(p);
        g = std::move(inst.graph);
        h = std::move(inst.target);
        lists = std::move(inst.lists);
    }
    else if (a.family == "cycle")
        full_instance(counterexample(Counterexample::cycle, a.n));
    else if (a.family == "co-cycle")
        full_instance(counterexample(Counterexample::co_cycle, a.n));
    else if (a.family == "subdivided-claw")
        full_instance(counterexample(Counterexample::subdivided_claw));
    else if (a.family == "co-subdivided-claw")
        full_instance(counterexample(Counterexample::co_subdivided_claw));
    else
        throw UsageError("unknown family " + a.family);

    std::cout << instance_to_json(g, lists, h).dump() << "\n";
    return 0;
}

// ---- oracle ----------------------------------------------------------------

struct OracleArgs {
    std::string instance;
    bool witness = false;
    bool json = false;
    bool count = false;
    std::size_t cap = default_oracle_cap;
};

int run_oracle(const OracleArgs & a)
{
    auto doc = load_instance(a.instance);
    if (a.count) {
        auto c = count_homomorphisms(doc.graph, doc.lists, doc.target, a.cap);
        std::cout << (a.json ? nlohmann::json{{"count", c}}.dump() : "count: " + std::to_string(c)) << "\n";
        return c > 0 ? exit_true : exit_false;
    }
    auto f = brute_force(doc.graph, doc.lists, doc.target, a.cap);
    print_answer(f.has_value(), f, a.witness, a.json);
    return f ? exit_true : exit_false;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzArgs {
    std::size_t trials = 100;
    std::size_t max_n = 8;
    std::size_t k = 3;
    std::uint64_t seed = 1;
    std::string family = "permutation";
    std::optional<double> density;
    std::string target = "complete";
};

int run_fuzz(const FuzzArgs & a)
{
    if (a.max_n == 0 || a.max_n > default_oracle_cap)
        throw InvalidInput("--max-n must lie in [1, " + std::to_string(default_oracle_cap) + "]");
    if (a.family == "arbitrary" && a.max_n > arbitrary_family_cap)
        throw InvalidInput("the arbitrary family is capped at 10 vertices");
    if (a.family != "permutation" && a.family != "interval" && a.family != "arbitrary")
        throw UsageError("unknown family " + a.family);

    std::size_t yes = 0, no = 0, out_of_class = 0, disagreements = 0;
    for (std::size_t t = 0; t < a.trials; ++t) {
        const std::uint64_t trial_seed = a.seed + t;
        Rng shape(trial_seed);
        InstanceParams p;
        p.seed = trial_seed;
        p.n = 1 + shape.below(a.max_n);
        p.k = a.k;
        static constexpr double densities[] = {0.4, 0.7, 1.0};
        p.list_density = a.density ? *a.density : densities[shape.below(3)];
        p.family = a.family == "permutation" ? Family::permutation
                   : a.family == "interval"  ? Family::interval
                                             : Family::arbitrary_small;
        p.target = a.target == "random" ? TargetKind::random : TargetKind::complete;
        auto inst = random_instance(p);

        auto oracle = brute_force(inst.graph, inst.lists, inst.target);
        std::string problem;
        try {
            auto r = lh_solve(inst.graph, inst.lists, inst.target);
            if (r.satisfiable != oracle.has_value())
                problem = std::string("solver says ") + (r.satisfiable ? "TRUE" : "FALSE") + ", oracle says " +
                          (oracle ? "TRUE" : "FALSE");
            else if (r.satisfiable &&
                     (!is_homomorphism(inst.graph, inst.target, *r.witness) || !obeys_lists(*r.witness, inst.lists)))
                problem = "invalid witness";
            (r.satisfiable ? yes : no) += problem.empty();
        }
        catch (const NotInClass &) {
            ++out_of_class;
        }
        catch (const std::exception & e) {
            problem = std::string("solver error: ") + e.what();
        }
        if (!problem.empty()) {
            ++disagreements;
            std::cout << "disagreement at seed " << trial_seed << ": " << problem << "\n"
                      << "  reproduce: listhom fuzz --trials 1 --seed " << trial_seed << " --max-n " << a.max_n
                      << " --k " << a.k << " --family " << a.family << " --target " << a.target;
            if (a.density)
                std::cout << " --density " << *a.density;
            std::cout << "\n";
        }
    }
    std::cout << "trials: " << a.trials << "  true: " << yes << "  false: " << no << "  not-in-class: " << out_of_class
              << "  disagreements: " << disagreements << "\n";
    return disagreements == 0 ? 0 : 1;
}

// ---- export-configs --------------------------------------------------------

struct ExportArgs {
    std::string instance;
    std::string dot = "-";
    std::size_t component = 0;
    std::size_t cap = 100000;
};

struct Reduced {
    Graph graph;
    ListMapping lists;
    Graph target;
    std::vector<Vertex> names;
};

// Restriction and universal-vertex removal to a fixed point.
Reduced reduce(Reduced r)
{
    while (true) {
        auto t = restrict_target(r.target, r.lists);
        r.target = std::move(t.target);
        r.lists = std::move(t.lists);
        auto u = universal_vertex_reduction(r.graph, r.lists, r.target);
        if (!u)
            return r;
        std::vector<Vertex> names;
        for (auto v : u->remaining.to_parent)
            names.push_back(r.names[v]);
        r.graph = std::move(u->remaining.graph);
        r.lists = std::move(u->lists);
        r.names = std::move(names);
    }
}

int run_export(const ExportArgs & a)
{
    auto doc = load_instance(a.instance);
    std::vector<Vertex> names(doc.graph.vertex_count());
    std::iota(names.begin(), names.end(), Vertex{0});
    auto whole = reduce({doc.graph, doc.lists, doc.target, names});

    auto components = connected_components(whole.graph);
    if (a.component >= components.size())
        throw UsageError("after reductions there are only " + std::to_string(components.size()) + " components");
    const auto & comp = components[a.component];
    auto sub = induced_subgraph(whole.graph, comp);
    std::vector<Vertex> sub_names;
    for (auto v : comp)
        sub_names.push_back(whole.names[v]);
    auto part = reduce({sub.graph, whole.lists.restricted(comp), whole.target, sub_names});

    if (part.graph.vertex_count() <= 1 || part.target.vertex_count() <= 2 || !is_connected(part.graph)) {
        std::cerr << "component " << a.component << " is decided by a base case; no configuration graph is built\n";
        return 0;
    }
    auto ord = find_ordering(part.graph);
    if (!ord) {
        std::cerr << NotInClass(part.names).what() << "\n";
        return exit_not_in_class;
    }
    auto cg = build_configuration_graph(part.graph, part.lists, part.target, *ord, BuildMode::complete, a.cap);
    auto path = reachability(cg);
    auto dot = configuration_graph_dot(cg, path);
    if (a.dot == "-")
        std::cout << dot;
    else {
        std::ofstream out(a.dot);
        if (!out)
            throw UsageError("cannot write " + a.dot);
        out << dot;
        std::cout << "nodes: " << cg.node_count() << "  edges: " << cg.edge_count()
                  << "  path: " << (path ? "yes" : "no") << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"List H-colouring for graphs with multi-chain orderings"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto * s = app.add_subcommand("solve", "Decide an instance (exit 0 TRUE, 1 FALSE, 2 not in class)");
    s->add_option("instance", solve.instance, "Instance JSON file, or - for stdin")->required();
    s->add_flag("--fallback-brute", solve.fallback_brute, "Use exhaustive search when the graph is outside the class");
    s->add_flag("--witness", solve.witness, "Print the homomorphism when TRUE");
    s->add_flag("--json", solve.json, "Emit {\"result\": bool, \"witness\": [...]}");
    s->add_flag("--stats", solve.stats, "Print search statistics to stderr");
    s->add_option("--hint", solve.hint, "Start vertex to try first for the ordering");

    CheckArgs check;
    auto * c = app.add_subcommand("check-ordering", "Look for multi-chain orderings of each component");
    c->add_option("instance", check.instance, "Instance JSON file, or - for stdin")->required();
    c->add_option("--start", check.start, "Only try this start vertex in its component");
    c->add_flag("--all-starts", check.all_starts, "Report the outcome for every start vertex");

    GenArgs gen;
    auto * g = app.add_subcommand("gen", "Emit an instance document");
    g->add_option("family", gen.family,
         "permutation | interval | arbitrary | cycle | co-cycle | subdivided-claw | co-subdivided-claw")
        ->required();
    g->add_option("--n", gen.n, "Vertex count");
    g->add_option("--k", gen.k, "Target size");
    g->add_option("--density", gen.density, "Chance that each colour enters each list");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--target", gen.target, "complete | random")->check(CLI::IsMember({"complete", "random"}));
    g->add_option("--perm", gen.perm, "Explicit one-based permutation, e.g. 2,1,4,3");
    g->add_option("--target-loops", gen.target_loops, "Chance of a loop at each target vertex");
    g->add_option("--graph-loops", gen.graph_loops, "Chance of a loop at each graph vertex");

    OracleArgs oracle;
    auto * o = app.add_subcommand("oracle", "Decide by exhaustive search");
    o->add_option("instance", oracle.instance, "Instance JSON file, or - for stdin")->required();
    o->add_flag("--witness", oracle.witness, "Print the lexicographically first homomorphism");
    o->add_flag("--json", oracle.json, "JSON output");
    o->add_flag("--count", oracle.count, "Count all list homomorphisms");
    o->add_option("--cap", oracle.cap, "Refuse graphs with more vertices");

    FuzzArgs fuzz;
    auto * f = app.add_subcommand("fuzz", "Compare the solver with exhaustive search on seeded instances");
    f->add_option("--trials", fuzz.trials, "Number of instances");
    f->add_option("--max-n", fuzz.max_n, "Largest vertex count (at most 20)");
    f->add_option("--k", fuzz.k, "Target size");
    f->add_option("--seed", fuzz.seed, "First seed; trial t uses seed + t");
    f->add_option("--family", fuzz.family, "permutation | interval | arbitrary");
    f->add_option("--density", fuzz.density, "Fixed list density (default: cycle through 0.4, 0.7, 1.0)");
    f->add_option("--target", fuzz.target, "complete | random")->check(CLI::IsMember({"complete", "random"}));

    ExportArgs exp;
    auto * e = app.add_subcommand("export-configs", "Write the configuration graph of one component as DOT");
    e->add_option("instance", exp.instance, "Instance JSON file, or - for stdin")->required();
    e->add_option("--dot", exp.dot, "Output file, or - for stdout");
    e->add_option("--component", exp.component, "Component index after reductions");
    e->add_option("--cap", exp.cap, "Refuse graphs with more configurations than this");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (s->parsed())
            return run_solve(solve);
        if (c->parsed())
            return run_check(check);
        if (g->parsed())
            return run_gen(gen);
        if (o->parsed())
            return run_oracle(oracle);
        if (f->parsed())
            return run_fuzz(fuzz);
        if (e->parsed())
            return run_export(exp);
    }
    catch (const SizeLimitExceeded & err) {
        std::cerr << "refusing: " << err.what() << "\n";
        return exit_usage;
    }
    catch (const InvalidInput & err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return exit_usage;
    }
    catch (const UsageError & err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    catch (const NotInClass & err) {
        std::cerr << err.what() << "\n";
        return exit_not_in_class;
    }
    catch (const std::exception & err) {
        std::cerr << "error: " << err.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
