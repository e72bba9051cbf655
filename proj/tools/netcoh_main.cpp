// netcoh: generate, analyze, sweep, closed-form, simulate, validate.
//
// Exit codes: 0 success, 1 usage error, 2 data/graph error, 3 numerical error.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "netcoh/closed_forms.hpp"
#include "netcoh/coherence.hpp"
#include "netcoh/generators.hpp"
#include "netcoh/sim.hpp"
#include "netcoh/spectral.hpp"

using nlohmann::ordered_json;
using namespace netcoh;

namespace {

std::string sig12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Manifest {
    std::string command;
    std::string version = NETCOH_VERSION;
    std::vector<std::pair<std::string, std::string>> fields;  // ordered metadata
    std::string wall_clock_utc = utc_now();

    ordered_json to_json() const {
        ordered_json j{{"command", command}, {"version", version}};
        for (const auto& [k, v] : fields) j[k] = v;
        j["wall_clock_utc"] = wall_clock_utc;
        return j;
    }

    void write_comments(std::ostream& out) const {
        out << "# netcoh v" << version << '\n';
        out << "# command: " << command << '\n';
        for (const auto& [k, v] : fields) out << "# " << k << ": " << v << '\n';
        out << "# wall_clock_utc: " << wall_clock_utc << '\n';
    }
};

std::string echo_command(int argc, char** argv) {
    std::string cmd = "netcoh";
    for (int i = 1; i < argc; ++i) {
        cmd += ' ';
        cmd += argv[i];
    }
    return cmd;
}

// '-' selects the standard stream.
class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw GraphError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Graph read_graph(const std::string& path) {
    if (path == "-") return Graph::from_edge_list(std::cin);
    return Graph::from_edge_list_file(path);
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// generate ------------------------------------------------------------------

struct GenerateOptions {
    std::string family;
    std::int64_t n = -1;
    int m = -1, d = -1, g = -1, k = -1;
    std::int64_t side = -1;
    std::uint64_t seed = 0;
    std::string out = "-";
};

void require_param(bool present, const std::string& flag, const std::string& family) {
    if (!present)
        throw CLI::ValidationError("generate", "--" + flag + " is required for family " + family);
}

std::pair<Graph, GenSpec> build_family(const GenerateOptions& o) {
    GenSpec spec;
    spec.family = o.family;
    spec.seed = o.seed;
    auto vertex_count = [&]() -> VertexId {
        if (o.n > std::numeric_limits<VertexId>::max())
            throw std::invalid_argument("--n exceeds the supported vertex range");
        return static_cast<VertexId>(o.n);
    };

    if (o.family == "ba") {
        require_param(o.n >= 0, "n", o.family);
        require_param(o.m >= 0, "m", o.family);
        spec.params = {{"n", std::to_string(o.n)}, {"m", std::to_string(o.m)}};
        spec.stochastic = true;
        return {ba_network(vertex_count(), o.m, o.seed), spec};
    }
    if (o.family == "hdran") {
        require_param(o.d >= 0, "d", o.family);
        require_param(o.n >= 0, "n", o.family);
        spec.params = {{"d", std::to_string(o.d)}, {"n", std::to_string(o.n)}};
        spec.stochastic = true;
        return {hdran(o.d, vertex_count(), o.seed), spec};
    }
    if (o.family == "pseudofractal") {
        require_param(o.g >= 0, "g", o.family);
        spec.params = {{"g", std::to_string(o.g)}};
        return {pseudofractal(o.g), spec};
    }
    if (o.family == "clique4") {
        require_param(o.g >= 0, "g", o.family);
        spec.params = {{"g", std::to_string(o.g)}};
        return {clique4_motif(o.g), spec};
    }
    if (o.family == "path" || o.family == "cycle" || o.family == "star" ||
        o.family == "complete") {
        require_param(o.n >= 0, "n", o.family);
        spec.params = {{"n", std::to_string(o.n)}};
        if (o.family == "path") return {path_graph(vertex_count()), spec};
        if (o.family == "cycle") return {cycle_graph(vertex_count()), spec};
        if (o.family == "star") return {star_graph(vertex_count()), spec};
        return {complete_graph(vertex_count()), spec};
    }
    if (o.family == "ring_lattice") {
        require_param(o.n >= 0, "n", o.family);
        require_param(o.k >= 0, "k", o.family);
        spec.params = {{"n", std::to_string(o.n)}, {"k", std::to_string(o.k)}};
        return {ring_lattice(vertex_count(), o.k), spec};
    }
    if (o.family == "torus") {
        require_param(o.d >= 0, "d", o.family);
        require_param(o.side >= 0, "side", o.family);
        spec.params = {{"d", std::to_string(o.d)}, {"side", std::to_string(o.side)}};
        return {torus_grid(o.d, static_cast<VertexId>(o.side)), spec};
    }
    throw CLI::ValidationError("generate", "unknown family '" + o.family + "'");
}

int run_generate(const GenerateOptions& o, const std::string& command) {
    auto [graph, spec] = build_family(o);
    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"family", spec.describe()});
    if (spec.stochastic) {
        manifest.fields.push_back({"seed", std::to_string(spec.seed)});
        manifest.fields.push_back({"rng", rng_id});
    }
    manifest.fields.push_back({"n", std::to_string(graph.num_vertices())});
    manifest.fields.push_back({"m", std::to_string(graph.num_edges())});

    OutputFile out(o.out);
    manifest.write_comments(out.stream());
    write_edge_list(graph, out.stream());
    return 0;
}

// analyze -------------------------------------------------------------------

int run_analyze(const std::string& in_path, const std::string& format,
                const std::string& out_path, const std::string& command) {
    Graph raw = read_graph(in_path);
    LccExtraction lcc = extract_largest_component(raw);
    CoherenceReport report = analyze(lcc.graph);

    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"input", in_path});
    manifest.fields.push_back({"dropped_vertices", std::to_string(lcc.dropped_vertices)});

    OutputFile out(out_path);
    if (format == "csv") {
        manifest.write_comments(out.stream());
        out.stream() << CoherenceReport::csv_header() << '\n'
                     << report.to_csv_row() << '\n';
    } else {
        ordered_json j = report.to_json();
        j["manifest"] = manifest.to_json();
        out.stream() << j.dump(2) << '\n';
    }
    return 0;
}

// sweep ---------------------------------------------------------------------

struct SweepOptions {
    std::string family;
    std::string m_list = "2,4,6,8";
    std::string d_list = "2,3,4";
    std::string n_list;
    int replicas = 5;
    std::uint64_t seed = 0;
    std::string out = "-";
};

int run_sweep(const SweepOptions& o, const std::string& command) {
    if (o.family != "ba" && o.family != "hdran")
        throw CLI::ValidationError("sweep", "family must be ba or hdran");
    std::vector<int> params;
    for (const auto& tok : split_list(o.family == "ba" ? o.m_list : o.d_list))
        params.push_back(std::stoi(tok));
    std::vector<VertexId> sizes;
    for (const auto& tok : split_list(o.n_list)) sizes.push_back(std::stoi(tok));
    if (params.empty() || sizes.empty())
        throw CLI::ValidationError("sweep", "parameter and size grids must be non-empty");
    if (o.replicas < 1) throw CLI::ValidationError("sweep", "replicas must be positive");

    struct Cell {
        int param;
        VertexId n;
        int replica;
        double h_fo;
    };
    std::vector<Cell> cells;
    for (std::size_t pi = 0; pi < params.size(); ++pi)
        for (std::size_t ni = 0; ni < sizes.size(); ++ni)
            for (int r = 0; r < o.replicas; ++r)
                cells.push_back({params[pi], sizes[ni], r, 0.0});

    // Seeds depend only on the grid position, so results are deterministic
    // under any execution order.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) break;
            try {
                Cell& c = cells[i];
                std::uint64_t cell_seed = derive_seed(o.seed, i);
                Graph g = o.family == "ba" ? ba_network(c.n, c.param, cell_seed)
                                           : hdran(c.param, c.n, cell_seed);
                c.h_fo = first_order_coherence(g);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                break;
            }
        }
    };
    unsigned workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), cells.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"family", o.family});
    manifest.fields.push_back({"param", o.family == "ba" ? "m" : "d"});
    manifest.fields.push_back({"seed", std::to_string(o.seed)});
    manifest.fields.push_back({"rng", rng_id});

    OutputFile out(o.out);
    manifest.write_comments(out.stream());
    out.stream() << "family,param,n,replica,h_fo\n";
    for (const Cell& c : cells)
        out.stream() << o.family << ',' << c.param << ',' << c.n << ',' << c.replica << ','
                     << sig12(c.h_fo) << '\n';
    return 0;
}

// closed-form ---------------------------------------------------------------

int run_closed_form(const std::string& family, int g_max, const std::string& format,
                    bool alt_normalization, const std::string& out_path,
                    const std::string& command) {
    if (family != "pseudofractal" && family != "clique4")
        throw CLI::ValidationError("closed-form", "family must be pseudofractal or clique4");
    if (g_max < 0 || g_max > 64)
        throw CLI::ValidationError("closed-form", "--g-max must be in 0..64");

    const bool pf = family == "pseudofractal";
    ExactValue limit = pf ? pseudofractal_coherence_limit() : clique4_coherence_limit();

    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"family", family});
    manifest.fields.push_back({"limit", limit.str()});

    OutputFile out(out_path);
    ordered_json rows = ordered_json::array();
    if (format == "csv") {
        manifest.write_comments(out.stream());
        out.stream() << "g,n,m,r,r_mul,r_add,h_fo,h_fo_float,limit,gap_to_limit";
        if (alt_normalization && pf) out.stream() << ",h_fo_alt";
        out.stream() << '\n';
    }

    for (int g = 0; g <= g_max; ++g) {
        ExactValue n = exact_vertices(family, g);
        ExactValue m = exact_edges(family, g);
        ExactValue h = pf ? pseudofractal_coherence(g) : clique4_coherence(g);
        ExactValue r = pf ? pseudofractal_kirchhoff(g) : clique4_kirchhoff_indices(g).kirchhoff;
        std::string r_mul, r_add;
        if (!pf) {
            Clique4Indices idx = clique4_kirchhoff_indices(g);
            r_mul = idx.multiplicative.str();
            r_add = idx.additive.str();
        }
        double gap = std::abs(ExactValue{h.value - limit.value}.float_view());

        if (format == "csv") {
            out.stream() << g << ',' << n.str() << ',' << m.str() << ',' << r.str() << ','
                         << r_mul << ',' << r_add << ',' << h.str() << ','
                         << sig12(h.float_view()) << ',' << limit.str() << ',' << sig12(gap);
            if (alt_normalization && pf)
                out.stream() << ',' << pseudofractal_coherence_alt(g).str();
            out.stream() << '\n';
        } else {
            ordered_json row{{"g", g},           {"n", n.str()},
                             {"m", m.str()},     {"r", r.str()},
                             {"r_mul", r_mul},   {"r_add", r_add},
                             {"h_fo", h.str()},  {"h_fo_float", h.float_view()},
                             {"limit", limit.str()}, {"gap_to_limit", gap}};
            if (alt_normalization && pf) row["h_fo_alt"] = pseudofractal_coherence_alt(g).str();
            rows.push_back(row);
        }
    }
    if (format != "csv") {
        ordered_json j{{"rows", rows}, {"manifest", manifest.to_json()}};
        out.stream() << j.dump(2) << '\n';
    }
    return 0;
}

// simulate ------------------------------------------------------------------

int run_simulate(const std::string& in_path, const SimConfig& cfg, const std::string& out_path,
                 const std::string& command) {
    Graph g = read_graph(in_path);
    SimEstimate est = simulate_coherence(g, cfg);

    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"input", in_path});
    manifest.fields.push_back({"rng", est.rng});

    ordered_json j = est.to_json();
    j["manifest"] = manifest.to_json();
    OutputFile out(out_path);
    out.stream() << j.dump(2) << '\n';
    return 0;
}

// validate ------------------------------------------------------------------

int run_validate(const std::string& in_path, int pairs, std::uint64_t seed,
                 const std::string& out_path, const std::string& command) {
    Graph g = read_graph(in_path);
    if (!g.is_connected()) throw GraphError("graph is disconnected");

    LaplacianSpectrum spec = spectrum(g);
    double sum = 0.0;
    for (double ev : spec.eigenvalues) sum += ev;
    double spectrum_sum_residual = std::abs(sum - 2.0 * static_cast<double>(g.num_edges()));

    double trace_eigen = pseudoinverse_trace(g);
    double trace_solve = pseudoinverse_trace_solve(g);
    double trace_gap = std::abs(trace_eigen - trace_solve) / std::max(1.0, trace_eigen);

    auto omega = resistance_matrix(g);
    double foster = foster_residual(g, omega);

    std::mt19937_64 rng(derive_seed(seed, 0));
    std::uniform_int_distribution<VertexId> pick(0, g.num_vertices() - 1);
    double sum_rule_max = 0.0;
    for (int t = 0; t < pairs; ++t) {
        VertexId i = pick(rng), j = pick(rng);
        if (i == j) continue;
        sum_rule_max = std::max(sum_rule_max, sum_rule_residual(g, i, j, omega));
    }

    double h_fo = trace_eigen / (2.0 * static_cast<double>(g.num_vertices()));
    LowerBounds lb = coherence_lower_bound(g.num_vertices(), g.num_edges());
    double upper = coherence_upper_bound(g);
    bool sandwich = lb.exact <= h_fo + 1e-9 && h_fo <= upper + 1e-9;
    bool tree_equality = std::abs(h_fo - upper) <= 1e-9;

    bool ok = spectrum_sum_residual <= 1e-8 * std::max(1.0, 2.0 * g.num_edges()) &&
              trace_gap <= 1e-8 && foster <= 1e-8 && sum_rule_max <= 1e-8 && sandwich;

    Manifest manifest;
    manifest.command = command;
    manifest.fields.push_back({"input", in_path});
    manifest.fields.push_back({"sampled_pairs", std::to_string(pairs)});

    ordered_json j{
        {"n", g.num_vertices()},
        {"m", g.num_edges()},
        {"spectrum_sum_residual", spectrum_sum_residual},
        {"trace_route_gap", trace_gap},
        {"foster_residual", foster},
        {"sum_rule_max_residual", sum_rule_max},
        {"lower_exact", lb.exact},
        {"lower_asymptotic", lb.asymptotic},
        {"h_fo", h_fo},
        {"upper", upper},
        {"sandwich_ok", sandwich},
        {"tree_equality", tree_equality},
        {"ok", ok},
    };
    j["manifest"] = manifest.to_json();
    OutputFile out(out_path);
    out.stream() << j.dump(2) << '\n';

    if (!ok) throw NumericalError("validation residuals exceed tolerance");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network coherence toolkit for noisy consensus dynamics"};
    app.require_subcommand(1);
    const std::string command = echo_command(argc, argv);

    // generate
    GenerateOptions gen;
    auto* cmd_generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
    cmd_generate->add_option("--family", gen.family,
                             "ba | hdran | pseudofractal | clique4 | path | cycle | star | "
                             "complete | ring_lattice | torus")
        ->required();
    cmd_generate->add_option("--n", gen.n, "target vertex count");
    cmd_generate->add_option("--m", gen.m, "edges per new vertex (ba)");
    cmd_generate->add_option("--d", gen.d, "dimension (hdran, torus)");
    cmd_generate->add_option("--g", gen.g, "iteration index (pseudofractal, clique4)");
    cmd_generate->add_option("--k", gen.k, "neighbors per vertex (ring_lattice)");
    cmd_generate->add_option("--side", gen.side, "side length (torus)");
    cmd_generate->add_option("--seed", gen.seed, "random seed (stochastic families)");
    cmd_generate->add_option("--out", gen.out, "output path or - (default)");

    // analyze
    std::string analyze_in, analyze_format = "json", analyze_out = "-";
    auto* cmd_analyze =
        app.add_subcommand("analyze", "Coherence report for the largest connected component");
    cmd_analyze->add_option("input", analyze_in, "edge-list path or -")->required();
    cmd_analyze->add_option("--format", analyze_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_analyze->add_option("--out", analyze_out, "output path or - (default)");

    // sweep
    SweepOptions sweep;
    auto* cmd_sweep = app.add_subcommand("sweep", "Replicated coherence grid as long-format CSV");
    cmd_sweep->add_option("--family", sweep.family, "ba | hdran")->required();
    cmd_sweep->add_option("--m", sweep.m_list, "comma list of m values (ba)");
    cmd_sweep->add_option("--d", sweep.d_list, "comma list of d values (hdran)");
    cmd_sweep->add_option("--n", sweep.n_list, "comma list of sizes")->required();
    cmd_sweep->add_option("--replicas", sweep.replicas, "replicas per grid point");
    cmd_sweep->add_option("--seed", sweep.seed, "base seed");
    cmd_sweep->add_option("--out", sweep.out, "output path or - (default)");

    // closed-form
    std::string cf_family, cf_format = "csv", cf_out = "-";
    int cf_gmax = 8;
    bool cf_alt = false;
    auto* cmd_cf = app.add_subcommand("closed-form", "Exact index and coherence table");
    cmd_cf->add_option("--family", cf_family, "pseudofractal | clique4")->required();
    cmd_cf->add_option("--g-max,--g_max", cf_gmax, "largest iteration index");
    cmd_cf->add_option("--format", cf_format, "csv | json")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_cf->add_flag("--alt-normalization", cf_alt,
                     "include the halved pseudofractal coherence variant");
    cmd_cf->add_option("--out", cf_out, "output path or - (default)");

    // simulate
    std::string sim_in, sim_scheme = "exact_gaussian", sim_out = "-";
    SimConfig sim_cfg;
    auto* cmd_sim = app.add_subcommand("simulate", "Monte-Carlo coherence estimate");
    cmd_sim->add_option("input", sim_in, "edge-list path or -")->required();
    cmd_sim->add_option("--scheme", sim_scheme, "euler_maruyama | exact_gaussian")
        ->check(CLI::IsMember({"euler_maruyama", "exact_gaussian"}));
    cmd_sim->add_option("--dt", sim_cfg.dt, "time step (default: auto)");
    cmd_sim->add_option("--burn-in-steps,--burn_in_steps", sim_cfg.burn_in_steps,
                        "steps discarded before sampling (default: auto)");
    cmd_sim->add_option("--sample-steps,--sample_steps", sim_cfg.sample_steps,
                        "sampled steps per replica");
    cmd_sim->add_option("--replicas", sim_cfg.replicas, "independent replicas");
    cmd_sim->add_option("--seed", sim_cfg.seed, "base seed");
    cmd_sim->add_option("--out", sim_out, "output path or - (default)");

    // validate
    std::string val_in, val_out = "-";
    int val_pairs = 64;
    std::uint64_t val_seed = 0;
    auto* cmd_val = app.add_subcommand("validate", "Resistance and bound diagnostics");
    cmd_val->add_option("input", val_in, "edge-list path or -")->required();
    cmd_val->add_option("--pairs", val_pairs, "sampled vertex pairs for the sum rule");
    cmd_val->add_option("--seed", val_seed, "sampling seed");
    cmd_val->add_option("--out", val_out, "output path or - (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cmd_generate) return run_generate(gen, command);
        if (*cmd_analyze) return run_analyze(analyze_in, analyze_format, analyze_out, command);
        if (*cmd_sweep) return run_sweep(sweep, command);
        if (*cmd_cf)
            return run_closed_form(cf_family, cf_gmax, cf_format, cf_alt, cf_out, command);
        if (*cmd_sim) {
            sim_cfg.scheme = scheme_from_string(sim_scheme);
            return run_simulate(sim_in, sim_cfg, sim_out, command);
        }
        if (*cmd_val) return run_validate(val_in, val_pairs, val_seed, val_out, command);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
