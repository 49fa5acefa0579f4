// Command line front end: generation, static colouring, dynamic replay,
// verification, census checks and scaling benchmarks.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vizing/dynamic.hpp"
#include "vizing/generate.hpp"
#include "vizing/io.hpp"
#include "vizing/strict_local.hpp"
#include "vizing/verify.hpp"

using namespace vizing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

int log_level() {
    static int level = [] {
        const char* env = std::getenv("VIZING_LOG");
        if (!env) return 0;
        std::string v(env);
        if (v == "debug") return 2;
        if (v == "info") return 1;
        return 0;
    }();
    return level;
}

void info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "vizing: " << msg << "\n";
}

class StatPrinter {
public:
    explicit StatPrinter(bool csv) : csv_(csv) {}
    template <typename T>
    void row(const std::string& key, const T& value) {
        if (csv_)
            std::cout << key << "," << value << "\n";
        else
            std::cout << key << ": " << value << "\n";
    }

private:
    bool csv_;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Graph load_or_generate(const std::string& input, const std::vector<std::string>& gen,
                       std::uint64_t seed) {
    if (!input.empty() && !gen.empty())
        throw std::invalid_argument("pass either --input or --gen, not both");
    if (!input.empty()) return read_graph_file(input);
    if (!gen.empty()) {
        std::mt19937_64 rng(seed);
        return make_graph(parse_gen_spec(gen), rng);
    }
    throw std::invalid_argument("need --input FILE or --gen SPEC");
}

int run_colour_checks(const Graph& g, bool strict, const char* label) {
    auto proper = check_proper(g);
    auto local = strict ? check_strict_local(g) : std::vector<Violation>{};
    for (const auto& v : proper) std::cout << v.str(g) << "\n";
    for (const auto& v : local) std::cout << v.str(g) << "\n";
    if (!proper.empty() || !local.empty()) {
        std::cerr << "vizing: " << label << ": verification failed\n";
        return kExitViolation;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- color --

struct ColorArgs {
    std::string input, out, mode = "strict-local", format = "text";
    std::vector<std::string> gen;
    std::uint64_t seed = 1;
    bool verify = false;
};

int cmd_color(const ColorArgs& args) {
    Graph g = load_or_generate(args.input, args.gen, args.seed);
    StatPrinter stats(args.format == "csv");
    auto start = std::chrono::steady_clock::now();

    StrictLocalStats sl;
    if (args.mode == "strict-local") {
        StrictLocalColourer colourer(g);
        colourer.colour_all();
        sl = colourer.stats();
    } else if (args.mode == "plain") {
        std::mt19937_64 rng(args.seed);
        colour_graph_plain(g, &rng, false);
    } else {
        throw std::invalid_argument("unknown mode '" + args.mode + "'");
    }
    double wall = ms_since(start);

    std::set<Colour> used;
    Colour max_colour = 0;
    for (EdgeId e : g.edges()) {
        used.insert(g.colour(e));
        max_colour = std::max(max_colour, g.colour(e));
    }
    stats.row("n", g.vertex_count());
    stats.row("m", g.edge_count());
    stats.row("delta", g.max_degree());
    stats.row("colours_used", used.size());
    stats.row("max_colour", max_colour);
    if (args.mode == "strict-local") {
        stats.row("phi_initial", sl.phi_initial);
        stats.row("phi_final", sl.phi_final);
        stats.row("chains", sl.chains);
        stats.row("truncated_shifts", sl.truncated_shifts);
    }
    stats.row("wall_ms", wall);

    if (!args.out.empty()) {
        std::ofstream out(args.out);
        if (!out) throw std::runtime_error("cannot write " + args.out);
        write_colouring(out, g);
    }
    if (args.verify) return run_colour_checks(g, args.mode == "strict-local", "color");
    return kExitOk;
}

// -------------------------------------------------------------- dynamic --

struct DynamicArgs {
    std::string stream, format = "text", eps = "0.5";
    std::uint64_t seed = 1;
    long long verify_every = 0;
    bool per_update = false;
    double cdensity = 8.0;
    long long step_cap = 0, length_cap = 0, retry_cap = 0;
};

int cmd_dynamic(const DynamicArgs& args) {
    UpdateStream stream = read_stream_file(args.stream);
    DynamicOptions opts;
    opts.eps = Eps::parse(args.eps);
    opts.seed = args.seed;
    opts.density_constant = args.cdensity;
    opts.step_cap = args.step_cap;
    opts.length_cap = args.length_cap;
    opts.retry_cap = args.retry_cap;
    DynamicColourer dc(stream.vertex_count, opts);

    StatPrinter stats(args.format == "csv");
    auto start = std::chrono::steady_clock::now();
    long long inserts = 0, deletes = 0, attempts = 0, recoloured = 0, fallbacks = 0;
    long long max_recourse = 0, verifications = 0;
    bool violated = false;

    if (args.per_update)
        std::cout << "update,op,u,v,recoloured,attempts,steps,max_colour,delta\n";

    long long line = 0;
    for (const Update& up : stream.ops) {
        ++line;
        try {
            if (up.insert) {
                dc.insert(up.u, up.v);
                ++inserts;
            } else {
                dc.erase(up.u, up.v);
                ++deletes;
            }
        } catch (const std::invalid_argument& ex) {
            std::cerr << "vizing: update " << line << ": " << ex.what() << "\n";
            return kExitUsage;
        }
        const UpdateStats& u = dc.last_update();
        attempts += u.attempts;
        recoloured += u.uncoloured_for_recolour;
        fallbacks += u.fallbacks;
        max_recourse = std::max(max_recourse, u.uncoloured_for_recolour);
        if (args.per_update)
            std::cout << line << "," << (up.insert ? "+" : "-") << "," << up.u << "," << up.v
                      << "," << u.uncoloured_for_recolour << "," << u.attempts << ","
                      << u.chain_steps << "," << u.max_colour << "," << u.delta << "\n";
        if (args.verify_every > 0 && line % args.verify_every == 0) {
            ++verifications;
            auto proper = check_proper(dc.graph());
            auto inv = check_invariant61(dc.graph(), opts.eps);
            for (const auto& v : proper) std::cout << v.str(dc.graph()) << "\n";
            for (const auto& v : inv) std::cout << v.str(dc.graph()) << "\n";
            long long bound = opts.eps.ceil_scaled(dc.graph().max_degree());
            if (dc.max_colour_in_use() > bound) {
                std::cout << "ADAPTIVITY max_colour=" << dc.max_colour_in_use()
                          << " bound=" << bound << "\n";
                violated = true;
            }
            if (!proper.empty() || !inv.empty()) violated = true;
        }
        if (line % 10000 == 0) info("applied " + std::to_string(line) + " updates");
    }
    double wall = ms_since(start);

    stats.row("updates", stream.ops.size());
    stats.row("inserts", inserts);
    stats.row("deletes", deletes);
    stats.row("final_m", dc.graph().edge_count());
    stats.row("final_delta", dc.graph().max_degree());
    stats.row("max_colour", dc.max_colour_in_use());
    stats.row("colour_bound", opts.eps.ceil_scaled(dc.graph().max_degree()));
    stats.row("attempts", attempts);
    stats.row("fallbacks", fallbacks);
    stats.row("recoloured_for_deletes", recoloured);
    stats.row("max_recourse", max_recourse);
    stats.row("verifications", verifications);
    stats.row("wall_ms", wall);
    return violated ? kExitViolation : kExitOk;
}

// --------------------------------------------------------------- verify --

struct VerifyArgs {
    std::string input, colouring, checks = "proper,strict-local", eps = "0.5";
};

int cmd_verify(const VerifyArgs& args) {
    Graph g = read_graph_file(args.input);
    if (!args.colouring.empty()) read_colouring_file(args.colouring, g);

    std::vector<Violation> all;
    auto wants = [&](const std::string& name) {
        return args.checks.find(name) != std::string::npos;
    };
    if (wants("proper")) {
        auto v = check_proper(g);
        all.insert(all.end(), v.begin(), v.end());
    }
    if (wants("strict-local")) {
        auto v = check_strict_local(g);
        all.insert(all.end(), v.begin(), v.end());
    }
    if (wants("invariant61")) {
        auto v = check_invariant61(g, Eps::parse(args.eps));
        all.insert(all.end(), v.begin(), v.end());
    }
    for (const auto& v : all) std::cout << v.str(g) << "\n";
    if (all.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    return kExitViolation;
}

// --------------------------------------------------------------- census --

struct CensusArgs {
    std::string input, format = "text";
    std::vector<std::string> gen;
    std::uint64_t seed = 1;
    double uncolour = 0.3;
    int variants = 4;
};

int cmd_census(const CensusArgs& args) {
    Graph g = load_or_generate(args.input, args.gen, args.seed);
    std::mt19937_64 rng(args.seed + 1);
    random_partial_colouring(g, args.uncolour, rng);

    StatPrinter stats(args.format == "csv");
    long long worst = 0;
    bool ok = true;
    long long bound = 0;
    for (int variant = 0; variant <= args.variants; ++variant) {
        auto family = build_census_family(g, variant > 0, &rng);
        CensusReport rep = census_one_step(g, family);
        worst = std::max(worst, rep.max_membership);
        bound = rep.membership_bound;
        ok = ok && rep.membership_ok && rep.density_ok;
        for (const auto& v : rep.violations) std::cout << v.str(g) << "\n";
    }
    stats.row("n", g.vertex_count());
    stats.row("m", g.edge_count());
    stats.row("delta", g.max_degree());
    stats.row("families", args.variants + 1);
    stats.row("max_membership", worst);
    stats.row("membership_bound", bound);
    stats.row("bounds_ok", ok ? 1 : 0);
    return ok ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ gen --

struct GenArgs {
    std::string out, type = "graph";
    std::vector<std::string> gen;
    std::uint64_t seed = 1;
    int n = 0;
    long long updates = 0;
    double insert_prob = 0.5;
    int ramp_high = 0, ramp_low = 0;
};

int cmd_gen(const GenArgs& args) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!args.out.empty()) {
        file.open(args.out);
        if (!file) throw std::runtime_error("cannot write " + args.out);
        out = &file;
    }
    std::mt19937_64 rng(args.seed);
    if (args.type == "graph") {
        Graph g = make_graph(parse_gen_spec(args.gen), rng);
        write_graph(*out, g);
    } else if (args.type == "stream-random") {
        if (args.n < 2 || args.updates <= 0)
            throw std::invalid_argument("stream-random needs --n and --updates");
        write_stream(*out, random_stream(args.n, args.updates, args.insert_prob, rng));
    } else if (args.type == "stream-ramp") {
        write_stream(*out, ramp_stream(args.ramp_high, args.ramp_low));
    } else {
        throw std::invalid_argument("unknown --type '" + args.type + "'");
    }
    return kExitOk;
}

// ---------------------------------------------------------------- bench --

struct BenchArgs {
    std::string mode = "strict-local", sizes = "1000,2000,4000", format = "text";
    int reps = 5;
    double avg_degree = 10.0;
    std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& args) {
    std::vector<int> sizes;
    std::stringstream ss(args.sizes);
    for (std::string tok; std::getline(ss, tok, ',');) sizes.push_back(std::stoi(tok));
    if (sizes.empty()) throw std::invalid_argument("no sizes given");

    bool csv = args.format == "csv";
    if (csv) std::cout << "n,m,delta,median_ms,growth\n";
    double prev = 0.0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        int n = sizes[i];
        std::vector<double> times;
        int m = 0, delta = 0;
        for (int rep = 0; rep < args.reps; ++rep) {
            std::mt19937_64 rng(args.seed + rep * 7919 + i);
            Graph g = make_gnp(n, std::min(1.0, args.avg_degree / n), rng);
            m = g.edge_count();
            delta = g.max_degree();
            auto start = std::chrono::steady_clock::now();
            if (args.mode == "strict-local") {
                StrictLocalColourer colourer(g);
                colourer.colour_all();
            } else {
                colour_graph_plain(g);
            }
            times.push_back(ms_since(start));
        }
        std::sort(times.begin(), times.end());
        double median = times[times.size() / 2];
        double growth = prev > 0.0 ? median / prev : 0.0;
        prev = median;
        if (csv)
            std::cout << n << "," << m << "," << delta << "," << median << "," << growth << "\n";
        else
            std::cout << "n=" << n << " m=" << m << " delta=" << delta << " median_ms=" << median
                      << " growth=" << growth << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-step Vizing chain edge colouring"};
    app.require_subcommand(1);

    ColorArgs color_args;
    auto* color = app.add_subcommand("color", "colour a static graph");
    color->add_option("--input", color_args.input, "graph file");
    color->add_option("--gen", color_args.gen, "generator spec")->expected(1, 3);
    color->add_option("--mode", color_args.mode, "strict-local|plain");
    color->add_option("--seed", color_args.seed, "rng seed");
    color->add_option("--out", color_args.out, "colouring output file");
    color->add_option("--format", color_args.format, "text|csv");
    color->add_flag("--verify", color_args.verify, "run the verifier afterwards");

    DynamicArgs dyn_args;
    auto* dyn = app.add_subcommand("dynamic", "replay an update stream");
    dyn->add_option("--stream", dyn_args.stream, "update stream file")->required();
    dyn->add_option("--eps", dyn_args.eps, "slack parameter in (0,1]");
    dyn->add_option("--seed", dyn_args.seed, "rng seed");
    dyn->add_option("--verify-every", dyn_args.verify_every, "oracle suite period");
    dyn->add_flag("--per-update", dyn_args.per_update, "csv row per update");
    dyn->add_option("--format", dyn_args.format, "text|csv");
    dyn->add_option("--cdensity", dyn_args.cdensity, "palette density constant");
    dyn->add_option("--step-cap", dyn_args.step_cap, "override the step bound T");
    dyn->add_option("--length-cap", dyn_args.length_cap, "override the length bound l");
    dyn->add_option("--retry-cap", dyn_args.retry_cap, "override palette retries");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a colouring file");
    verify->add_option("--input", verify_args.input, "graph file")->required();
    verify->add_option("--colouring", verify_args.colouring, "colouring file");
    verify->add_option("--checks", verify_args.checks, "proper,strict-local,invariant61");
    verify->add_option("--eps", verify_args.eps, "eps for invariant61");

    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "packing bound census");
    census->add_option("--input", census_args.input, "graph file");
    census->add_option("--gen", census_args.gen, "generator spec")->expected(1, 3);
    census->add_option("--seed", census_args.seed, "rng seed");
    census->add_option("--uncolour", census_args.uncolour, "uncoloured fraction");
    census->add_option("--variants", census_args.variants, "randomized families");
    census->add_option("--format", census_args.format, "text|csv");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "write graphs or update streams");
    gen->add_option("--type", gen_args.type, "graph|stream-random|stream-ramp");
    gen->add_option("--gen", gen_args.gen, "generator spec")->expected(1, 3);
    gen->add_option("--seed", gen_args.seed, "rng seed");
    gen->add_option("--out", gen_args.out, "output file (default stdout)");
    gen->add_option("--n", gen_args.n, "stream vertex count");
    gen->add_option("--updates", gen_args.updates, "stream length");
    gen->add_option("--insert-prob", gen_args.insert_prob, "stream insert probability");
    gen->add_option("--ramp-high", gen_args.ramp_high, "ramp peak degree");
    gen->add_option("--ramp-low", gen_args.ramp_low, "ramp final degree");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "doubling scaling table");
    bench->add_option("--mode", bench_args.mode, "strict-local|plain");
    bench->add_option("--sizes", bench_args.sizes, "comma separated vertex counts");
    bench->add_option("--reps", bench_args.reps, "repetitions per size");
    bench->add_option("--avg-degree", bench_args.avg_degree, "expected degree for gnp");
    bench->add_option("--seed", bench_args.seed, "rng seed");
    bench->add_option("--format", bench_args.format, "text|csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (color->parsed()) return cmd_color(color_args);
        if (dyn->parsed()) return cmd_dynamic(dyn_args);
        if (verify->parsed()) return cmd_verify(verify_args);
        if (census->parsed()) return cmd_census(census_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const std::exception& ex) {
        std::cerr << "vizing: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
