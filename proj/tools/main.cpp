// Command-line front end: exact/heuristic width solvers, grid and queue
// numbers, the randomized construction, Cayley machinery, Dehn decisions,
// and certificate verification. Exit codes: 0 ok (dehn: trivial), 1 dehn
// nontrivial, 2 usage or malformed input, 3 certificate mismatch, 4 budget
// or timeout with a partial certificate.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tww/calculus.hpp"
#include "tww/certificate.hpp"
#include "tww/construction.hpp"
#include "tww/errors.hpp"
#include "tww/graph.hpp"
#include "tww/grid.hpp"
#include "tww/group.hpp"
#include "tww/matrix.hpp"
#include "tww/queue.hpp"
#include "tww/smallcancel.hpp"
#include "tww/solver.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using namespace tww;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNontrivial = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertMismatch = 3;
constexpr int kExitBudget = 4;

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << data;
}

struct RunReport {
    ordered_json j;

    RunReport(const std::string& command, const std::vector<std::string>& argv) {
        j["command"] = command;
        j["argv"] = argv;
        j["inputs"] = ordered_json::array();
        j["seed"] = nullptr;
        j["parameters"] = ordered_json::object();
        j["results"] = ordered_json::object();
        j["wall_ms"] = 0;
    }
    void input(const std::string& path) {
        j["inputs"].push_back({{"path", path}, {"digest", fnv1a64(slurp(path))}});
    }
};

int default_threads() {
    if (const char* env = std::getenv("TWINWIDTH_THREADS")) {
        const int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

Budget make_budget(std::uint64_t nodes, int timeout_ms) {
    Budget b;
    if (nodes > 0) b.max_nodes = nodes;
    if (timeout_ms > 0) b.wall = std::chrono::milliseconds(timeout_ms);
    return b;
}

ordered_json cert_json(const C2Certificate& c) {
    ordered_json j;
    j["n"] = c.n;
    j["max_degree"] = c.max_degree;
    j["diameter"] = c.diameter ? ordered_json(*c.diameter) : ordered_json("infinite");
    j["girth"] = c.girth ? ordered_json(*c.girth) : ordered_json("infinite");
    j["simple"] = c.simple;
    j["connected"] = c.connected;
    j["degree_ok"] = c.degree_ok;
    j["diameter_ok"] = c.diameter_ok;
    j["girth_ok"] = c.girth_ok;
    j["pass"] = c.pass;
    j["edit_count"] = c.edit_count;
    return j;
}

std::string cert_text(const C2Certificate& c) {
    std::ostringstream os;
    os << "n " << c.n << "\n";
    os << "max_degree " << c.max_degree << " (bound 6: " << (c.degree_ok ? "pass" : "fail")
       << ")\n";
    os << "diameter ";
    if (c.diameter)
        os << *c.diameter;
    else
        os << "infinite";
    os << " (bound 3*log2(n), exact check 2^diam <= n^3: " << (c.diameter_ok ? "pass" : "fail")
       << ")\n";
    os << "girth ";
    if (c.girth)
        os << *c.girth;
    else
        os << "infinite";
    os << " (bound log2(n)/4, exact check 2^(4*girth) > n: " << (c.girth_ok ? "pass" : "fail")
       << ")\n";
    os << "simple " << (c.simple ? "yes" : "no") << "\n";
    os << "connected " << (c.connected ? "yes" : "no") << "\n";
    os << "edit_count " << c.edit_count << "\n";
    os << "pass " << (c.pass ? "yes" : "no") << "\n";
    return os.str();
}

struct Dispatch {
    int exit_code = kExitOk;
    ordered_json report;
};

// Human-readable lines are silenced under --json so stdout stays parseable.
bool g_human = true;
std::ostream& hout() {
    static std::ostream null_stream(nullptr);
    return g_human ? std::cout : null_stream;
}

Dispatch dispatch(const std::vector<std::string>& args);

int cmd_tww(RunReport& rep, const std::string& graph_path, const std::string& matrix_path,
            bool heuristic, std::uint64_t nodes, int timeout_ms, std::string cert_path) {
    const Budget budget = make_budget(nodes, timeout_ms);
    int exit_code = kExitOk;
    if (!graph_path.empty()) {
        rep.input(graph_path);
        const Graph g = read_graph_file(graph_path);
        GraphSolveResult res = heuristic ? stww_graph_heuristic(g) : stww_graph_exact(g, budget);
        if (cert_path.empty()) cert_path = graph_path + ".cert.json";
        write_certificate_file(cert_path, res.certificate);
        rep.j["results"]["width"] = res.width;
        rep.j["results"]["exact"] = res.status == SolveStatus::exact;
        rep.j["results"]["certificate"] = cert_path;
        hout() << "stww " << res.width << "\n";
        hout() << "certificate " << cert_path << "\n";
        if (res.status == SolveStatus::budget_exhausted) {
            hout() << "status budget-exhausted (certified upper bound)\n";
            exit_code = kExitBudget;
        }
    } else {
        rep.input(matrix_path);
        const Matrix m = read_matrix_file(matrix_path);
        MatrixSolveResult res = heuristic ? stww_matrix_heuristic(m) : stww_matrix_exact(m, budget);
        if (cert_path.empty()) cert_path = matrix_path + ".cert.json";
        write_certificate_file(cert_path, res.certificate);
        rep.j["results"]["width"] = res.width;
        rep.j["results"]["exact"] = res.status == SolveStatus::exact;
        rep.j["results"]["certificate"] = cert_path;
        hout() << "stww " << res.width << "\n";
        hout() << "certificate " << cert_path << "\n";
        if (res.status == SolveStatus::budget_exhausted) {
            hout() << "status budget-exhausted (certified upper bound)\n";
            exit_code = kExitBudget;
        }
    }
    return exit_code;
}

int cmd_gn(RunReport& rep, const std::string& graph_path, const std::string& matrix_path,
           bool heuristic, int threads, std::string witness_path) {
    if (!matrix_path.empty()) {
        rep.input(matrix_path);
        const Matrix m = read_matrix_file(matrix_path);
        const int gn = grid_number_matrix(m);
        rep.j["results"]["gn"] = gn;
        hout() << "gn " << gn << "\n";
        if (gn >= 1) {
            const auto w = contains_k_grid(m, gn);
            if (witness_path.empty()) witness_path = matrix_path + ".witness.json";
            spit(witness_path, to_json_text(*w));
            rep.j["results"]["witness"] = witness_path;
            hout() << "witness " << witness_path << "\n";
        }
        return kExitOk;
    }
    rep.input(graph_path);
    const Graph g = read_graph_file(graph_path);
    const auto res = grid_number_graph(g, heuristic ? GnMode::heuristic : GnMode::exact, threads);
    rep.j["results"]["gn"] = res.gn;
    rep.j["results"]["exact"] = res.exact;
    rep.j["results"]["order"] = res.order;
    hout() << "gn " << res.gn << (res.exact ? "" : " (upper bound)") << "\n";
    hout() << "order";
    for (int v : res.order) hout() << ' ' << v;
    hout() << "\n";
    if (res.gn >= 1) {
        const auto w = contains_k_grid(adjacency_matrix(g, res.order), res.gn);
        if (witness_path.empty()) witness_path = graph_path + ".witness.json";
        spit(witness_path, to_json_text(*w));
        rep.j["results"]["witness"] = witness_path;
    }
    return kExitOk;
}

int cmd_queue(RunReport& rep, const std::string& graph_path, bool strict, int threads,
              std::string layout_path) {
    rep.input(graph_path);
    const Graph g = read_graph_file(graph_path);
    const QueueNumberResult res = strict ? sqn_exact(g, threads) : qn_exact(g, threads);
    const auto check = verify_layout(g, res.layout);
    if (!check.ok) throw StructuralError("internal: emitted layout failed verification");
    if (layout_path.empty()) layout_path = graph_path + (strict ? ".sqn.json" : ".qn.json");
    spit(layout_path, to_json_text(res.layout));
    rep.j["results"][strict ? "sqn" : "qn"] = res.count;
    rep.j["results"]["exact"] = res.exact;
    rep.j["results"]["layout"] = layout_path;
    hout() << (strict ? "sqn " : "qn ") << res.count << (res.exact ? "" : " (upper bound)")
              << "\n";
    hout() << "layout " << layout_path << "\n";
    return kExitOk;
}

int cmd_construct(RunReport& rep, int n, std::uint64_t seed, std::vector<int> schedule,
                  int girth_increment, int retries, const std::string& out_prefix,
                  const std::string& stats_path) {
    if (schedule.empty()) schedule = {n};
    const SequenceResult seq = generate_sequence(schedule, seed, girth_increment, retries);
    ordered_json stats;
    stats["schedule"] = schedule;
    stats["seed"] = seed;
    stats["girth_increment"] = girth_increment;
    stats["resamples"] = seq.resamples;
    stats["aborts"] = seq.aborts;
    stats["realized_a"] = seq.realized_a;
    stats["entries"] = ordered_json::array();
    rep.j["results"]["graphs"] = ordered_json::array();
    for (std::size_t k = 0; k < seq.entries.size(); ++k) {
        const auto& e = seq.entries[k];
        const std::string gpath = out_prefix + "_" + std::to_string(k) + ".g";
        const std::string cpath = out_prefix + "_" + std::to_string(k) + ".cert.txt";
        write_graph_file(gpath, e.graph);
        spit(cpath, cert_text(e.cert));
        ordered_json entry = cert_json(e.cert);
        entry["seed_used"] = e.seed_used;
        entry["short_cycles"] = e.short_cycles;
        entry["deleted_edges"] = e.deleted_edges;
        entry["x_size"] = e.x_size;
        entry["tree_edges"] = e.tree_edges;
        entry["graph_file"] = gpath;
        stats["entries"].push_back(entry);
        rep.j["results"]["graphs"].push_back(
            ordered_json{{"path", gpath}, {"digest", fnv1a64(to_text(e.graph))}});
        hout() << "graph " << gpath << " n=" << e.cert.n
                  << " pass=" << (e.cert.pass ? "yes" : "no") << "\n";
    }
    rep.j["results"]["resamples"] = seq.resamples;
    rep.j["results"]["aborts"] = seq.aborts;
    if (!stats_path.empty()) spit(stats_path, stats.dump(2) + "\n");
    return kExitOk;
}

int cmd_cayley(RunReport& rep, const std::string& group_spec, int radius,
               const std::string& order_kind, const std::string& order_file,
               const std::string& out_prefix) {
    const auto group = make_group(group_spec);
    CayleyBall ball = cayley_ball(*group, radius);
    const int n = ball.graph.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));  // rank -> bfs index
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    if (order_kind == "bfs") {
        // discovery order as-is
    } else if (order_kind == "natural") {
        // shortlex on the canonical encodings
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            const auto& ea = ball.elems[static_cast<std::size_t>(a)];
            const auto& eb = ball.elems[static_cast<std::size_t>(b)];
            if (ea.size() != eb.size()) return ea.size() < eb.size();
            return ea < eb;
        });
    } else if (order_kind == "lex") {
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            return ball.elems[static_cast<std::size_t>(a)] < ball.elems[static_cast<std::size_t>(b)];
        });
    } else if (order_kind == "file") {
        rep.input(order_file);
        std::ifstream in(order_file);
        if (!in) throw IoError("cannot open " + order_file);
        perm.clear();
        int v;
        while (in >> v) perm.push_back(v);
        if (static_cast<int>(perm.size()) != n)
            throw ArgumentError("order file must list all " + std::to_string(n) + " ball indices");
    } else {
        throw ArgumentError("unknown order '" + order_kind + "'");
    }
    // Relabel so that vertex id = rank in the chosen order.
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] = r;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : ball.graph.edges()) {
        const int a = rank[static_cast<std::size_t>(u)], b = rank[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    const Graph ordered_ball = Graph::simple(n, std::move(edges));
    const std::string gpath = out_prefix + ".g";
    write_graph_file(gpath, ordered_ball);
    hout() << "ball " << gpath << " vertices=" << n << "\n";
    rep.j["results"]["vertices"] = n;
    rep.j["results"]["graph_file"] = gpath;
    rep.j["results"]["generators"] = ordered_json::array();

    std::vector<GroupOracle::Elem> ordered_elems(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        ordered_elems[static_cast<std::size_t>(r)] =
            ball.elems[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])];
    const OrderedGroundSet ground(ordered_elems);
    const auto gens = group->generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Matrix m = right_action_matrix(ground, *group, gens[i]);
        const std::string mpath = out_prefix + "_gen" + std::to_string(i) + ".m";
        write_matrix_file(mpath, m);
        rep.j["results"]["generators"].push_back(
            ordered_json{{"element", group->describe(gens[i])}, {"matrix_file", mpath}});
        hout() << "action " << mpath << " generator " << group->describe(gens[i]) << "\n";
    }
    return kExitOk;
}

int cmd_dehn(RunReport& rep, const std::string& family_dir, const std::string& word_text,
             const std::string& lambda_text, bool run_check) {
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(family_dir))
        if (entry.path().extension() == ".g") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw ArgumentError("no .g files in " + family_dir);
    std::vector<Graph> graphs;
    for (const auto& f : files) {
        rep.input(f);
        graphs.push_back(read_graph_file(f));
        if (!graphs.back().has_labels()) throw ArgumentError(f + " carries no edge labels");
    }
    const LabelledFamily family(graphs, graphs.front().alphabet());
    Rational lambda{1, 6};
    if (!lambda_text.empty()) {
        const auto slash = lambda_text.find('/');
        if (slash == std::string::npos) throw ArgumentError("lambda must be of the form p/q");
        lambda.num = std::stoll(lambda_text.substr(0, slash));
        lambda.den = std::stoll(lambda_text.substr(slash + 1));
    }
    bool checked = false;
    if (run_check) {
        const auto check = check_small_cancellation(family, lambda);
        if (!check.ok) throw ArgumentError("family fails the small-cancellation condition");
        checked = true;
    }
    RelatorOracle oracle(family);
    const Word w = parse_word(word_text, family.alphabet());
    const DehnResult res = dehn_decide(w, oracle);
    rep.j["results"]["verdict"] = res.verdict == DehnVerdict::trivial ? "trivial" : "nontrivial";
    rep.j["results"]["rewrites"] = res.rewrites;
    rep.j["results"]["family_checked"] = checked;
    rep.j["results"]["reduced"] = format_word(res.reduced, family.alphabet());
    hout() << (res.verdict == DehnVerdict::trivial ? "trivial" : "nontrivial") << "\n";
    return res.verdict == DehnVerdict::trivial ? kExitOk : kExitNontrivial;
}

int cmd_verify(RunReport& rep, const std::string& cert_path, const std::string& graph_path,
               const std::string& matrix_path) {
    rep.input(cert_path);
    const ParsedCertificate cert = read_certificate_file(cert_path);
    int width = 0, claimed = 0;
    try {
        if (cert.kind == CertificateKind::partition_sequence) {
            if (graph_path.empty()) throw ArgumentError("partition certificates need --graph");
            rep.input(graph_path);
            width = verify_partition_sequence(read_graph_file(graph_path), cert.partition);
            claimed = cert.partition.claimed_width;
        } else {
            if (matrix_path.empty()) throw ArgumentError("division certificates need --matrix");
            rep.input(matrix_path);
            width = verify_division_sequence(read_matrix_file(matrix_path), cert.division);
            claimed = cert.division.claimed_width;
        }
    } catch (const CertificateError& e) {
        hout() << "invalid: " << e.what() << "\n";
        rep.j["results"]["valid"] = false;
        return kExitCertMismatch;
    }
    rep.j["results"]["valid"] = (width == claimed);
    rep.j["results"]["width"] = width;
    rep.j["results"]["claimed_width"] = claimed;
    hout() << "width " << width << " claimed " << claimed << "\n";
    return width == claimed ? kExitOk : kExitCertMismatch;
}

int cmd_report(const std::string& report_path) {
    ordered_json stored;
    try {
        stored = ordered_json::parse(slurp(report_path));
    } catch (const std::exception& e) {
        throw IoError(std::string("report is not valid JSON: ") + e.what());
    }
    const std::vector<std::string> argv = stored.at("argv").get<std::vector<std::string>>();
    const Dispatch rerun = dispatch(argv);
    if (rerun.report.at("results") == stored.at("results")) {
        std::cout << "reproduced: results identical\n";
        return kExitOk;
    }
    std::cout << "MISMATCH\nstored:     " << stored.at("results").dump()
              << "\nrecomputed: " << rerun.report.at("results").dump() << "\n";
    return kExitCertMismatch;
}

Dispatch dispatch(const std::vector<std::string>& args) {
    CLI::App app{"strict twin-width, grid and queue numbers, group machinery"};
    app.require_subcommand(1);
    const int threads_default = default_threads();

    auto* tww_cmd = app.add_subcommand("tww", "strict twin-width of a graph or matrix");
    std::string tww_graph, tww_matrix, tww_cert;
    bool tww_heur = false, tww_exact = false;
    std::uint64_t tww_nodes = 0;
    int tww_timeout = 0, tww_threads = threads_default;
    tww_cmd->add_option("--graph", tww_graph);
    tww_cmd->add_option("--matrix", tww_matrix);
    tww_cmd->add_flag("--exact", tww_exact);
    tww_cmd->add_flag("--heuristic", tww_heur);
    tww_cmd->add_option("--cert", tww_cert);
    tww_cmd->add_option("--budget-nodes", tww_nodes);
    tww_cmd->add_option("--timeout-ms", tww_timeout);
    tww_cmd->add_option("--threads", tww_threads);

    auto* gn_cmd = app.add_subcommand("gn", "grid number of a graph or matrix");
    std::string gn_graph, gn_matrix, gn_witness;
    bool gn_heur = false, gn_exact = false;
    int gn_threads = threads_default;
    gn_cmd->add_option("--graph", gn_graph);
    gn_cmd->add_option("--matrix", gn_matrix);
    gn_cmd->add_flag("--exact", gn_exact);
    gn_cmd->add_flag("--heuristic", gn_heur);
    gn_cmd->add_option("--witness", gn_witness);
    gn_cmd->add_option("--threads", gn_threads);

    auto* qn_cmd = app.add_subcommand("qn", "queue number");
    auto* sqn_cmd = app.add_subcommand("sqn", "strict queue number");
    std::string qn_graph, qn_layout, sqn_graph, sqn_layout;
    int qn_threads = threads_default, sqn_threads = threads_default;
    qn_cmd->add_option("--graph", qn_graph)->required();
    qn_cmd->add_option("--layout", qn_layout);
    qn_cmd->add_option("--threads", qn_threads);
    sqn_cmd->add_option("--graph", sqn_graph)->required();
    sqn_cmd->add_option("--layout", sqn_layout);
    sqn_cmd->add_option("--threads", sqn_threads);

    auto* con_cmd = app.add_subcommand("construct", "randomized bounded-degree pipeline");
    int con_n = 0, con_count = 1, con_increment = 6, con_retries = 64;
    std::uint64_t con_seed = 0;
    bool con_seed_set = false;
    std::string con_schedule, con_out = "construct", con_stats;
    con_cmd->add_option_function<std::uint64_t>("--seed", [&](std::uint64_t s) {
        con_seed = s;
        con_seed_set = true;
    });
    con_cmd->add_option("--n", con_n);
    con_cmd->add_option("--count", con_count);
    con_cmd->add_option("--schedule", con_schedule, "comma-separated sizes");
    con_cmd->add_option("--girth-increment", con_increment);
    con_cmd->add_option("--retries", con_retries);
    con_cmd->add_option("--out", con_out);
    con_cmd->add_option("--stats", con_stats);

    auto* cay_cmd = app.add_subcommand("cayley", "Cayley ball and generator action matrices");
    std::string cay_group, cay_order = "bfs", cay_order_file, cay_out = "cayley";
    int cay_radius = 0;
    cay_cmd->add_option("--group", cay_group)->required();
    cay_cmd->add_option("--radius", cay_radius)->required();
    cay_cmd->add_option("--order", cay_order, "natural|lex|bfs|file");
    cay_cmd->add_option("--order-file", cay_order_file);
    cay_cmd->add_option("--out", cay_out);

    auto* dehn_cmd = app.add_subcommand("dehn", "word-problem decision via Dehn's algorithm");
    std::string dehn_family, dehn_word, dehn_lambda;
    bool dehn_check = false;
    dehn_cmd->add_option("--family", dehn_family)->required();
    dehn_cmd->add_option("--word", dehn_word)->required();
    dehn_cmd->add_option("--lambda", dehn_lambda, "small-cancellation parameter p/q (default 1/6)");
    dehn_cmd->add_flag("--check", dehn_check, "run the small-cancellation checker first");

    auto* ver_cmd = app.add_subcommand("verify", "re-check a certificate against its instance");
    std::string ver_cert, ver_graph, ver_matrix;
    ver_cmd->add_option("certificate", ver_cert)->required();
    ver_cmd->add_option("--graph", ver_graph);
    ver_cmd->add_option("--matrix", ver_matrix);

    auto* rep_cmd = app.add_subcommand("report", "re-run a stored run report and compare results");
    std::string rep_file;
    rep_cmd->add_option("report_file", rep_file)->required();

    bool want_json = false;
    app.add_flag("--json", want_json, "machine-readable report on stdout");
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        std::vector<std::string> mutable_args(args.rbegin(), args.rend());
        app.parse(mutable_args);
    } catch (const CLI::ParseError& e) {
        Dispatch d;
        d.exit_code = (app.exit(e) == 0) ? kExitOk : kExitUsage;
        d.report = ordered_json::object();
        return d;
    }

    g_human = !want_json;
    const auto start = std::chrono::steady_clock::now();
    const std::string sub = app.get_subcommands().front()->get_name();
    RunReport rep(sub, args);
    Dispatch d;
    try {
        if (tww_cmd->parsed()) {
            if (tww_graph.empty() == tww_matrix.empty())
                throw ArgumentError("tww needs exactly one of --graph/--matrix");
            if (tww_exact && tww_heur) throw ArgumentError("choose one of --exact/--heuristic");
            rep.j["parameters"] = {{"mode", tww_heur ? "heuristic" : "exact"},
                                   {"budget_nodes", tww_nodes},
                                   {"timeout_ms", tww_timeout},
                                   {"threads", tww_threads}};
            d.exit_code =
                cmd_tww(rep, tww_graph, tww_matrix, tww_heur, tww_nodes, tww_timeout, tww_cert);
        } else if (gn_cmd->parsed()) {
            if (gn_graph.empty() == gn_matrix.empty())
                throw ArgumentError("gn needs exactly one of --graph/--matrix");
            rep.j["parameters"] = {{"mode", gn_heur ? "heuristic" : "exact"},
                                   {"threads", gn_threads}};
            d.exit_code = cmd_gn(rep, gn_graph, gn_matrix, gn_heur, gn_threads, gn_witness);
        } else if (qn_cmd->parsed()) {
            rep.j["parameters"] = {{"threads", qn_threads}};
            d.exit_code = cmd_queue(rep, qn_graph, false, qn_threads, qn_layout);
        } else if (sqn_cmd->parsed()) {
            rep.j["parameters"] = {{"threads", sqn_threads}};
            d.exit_code = cmd_queue(rep, sqn_graph, true, sqn_threads, sqn_layout);
        } else if (con_cmd->parsed()) {
            if (!con_seed_set) throw ArgumentError("randomized commands require --seed");
            std::vector<int> schedule;
            if (!con_schedule.empty()) {
                std::istringstream ss(con_schedule);
                std::string tok;
                while (std::getline(ss, tok, ',')) schedule.push_back(std::stoi(tok));
            } else if (con_count > 1) {
                throw ArgumentError("--count > 1 needs an explicit --schedule");
            }
            if (schedule.empty() && con_n <= 0)
                throw ArgumentError("construct needs --n or --schedule");
            rep.j["seed"] = con_seed;
            rep.j["parameters"] = {{"n", con_n},
                                   {"schedule", schedule},
                                   {"girth_increment", con_increment},
                                   {"retries", con_retries}};
            d.exit_code = cmd_construct(rep, con_n, con_seed, schedule, con_increment, con_retries,
                                        con_out, con_stats);
        } else if (cay_cmd->parsed()) {
            rep.j["parameters"] = {{"group", cay_group},
                                   {"radius", cay_radius},
                                   {"order", cay_order}};
            d.exit_code = cmd_cayley(rep, cay_group, cay_radius, cay_order, cay_order_file, cay_out);
        } else if (dehn_cmd->parsed()) {
            rep.j["parameters"] = {{"lambda", dehn_lambda.empty() ? "1/6" : dehn_lambda},
                                   {"checked", dehn_check},
                                   {"word", dehn_word}};
            d.exit_code = cmd_dehn(rep, dehn_family, dehn_word, dehn_lambda, dehn_check);
        } else if (ver_cmd->parsed()) {
            d.exit_code = cmd_verify(rep, ver_cert, ver_graph, ver_matrix);
        } else if (rep_cmd->parsed()) {
            d.exit_code = cmd_report(rep_file);
            d.report = rep.j;
            return d;
        }
    } catch (const CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        d.exit_code = kExitCertMismatch;
        d.report = rep.j;
        return d;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        d.exit_code = kExitBudget;
        d.report = rep.j;
        return d;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        d.exit_code = kExitUsage;
        d.report = rep.j;
        return d;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rep.j["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    if (want_json) std::cout << rep.j.dump(2) << "\n";
    d.report = rep.j;
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dispatch(args).exit_code;
}
