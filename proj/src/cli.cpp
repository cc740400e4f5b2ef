#include <icol/bounds.hpp>
#include <icol/catalog.hpp>
#include <icol/cli.hpp>
#include <icol/io.hpp>
#include <icol/matrix.hpp>
#include <icol/search.hpp>
#include <icol/verifier.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace icol
{
    namespace
    {
        using ordered_json = nlohmann::ordered_json;

        /// Thrown for bad command lines that CLI11 itself cannot see.
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        struct GraphSource
        {
            std::string family;
            std::string params;
            std::string graph_path;
        };

        auto family_of(const GraphSource & src) -> FamilySpec
        {
            try {
                return parse_family(src.family, src.params);
            }
            catch (const ParseError & e) {
                throw UsageError(e.what());
            }
            catch (const DomainError & e) {
                throw UsageError(e.what());
            }
        }

        auto open_input(const std::string & path) -> std::ifstream
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw ParseError("cannot open " + path);
            return in;
        }

        auto load_graph(const GraphSource & src) -> std::pair<Graph, std::optional<FamilySpec>>
        {
            if (! src.graph_path.empty() && ! src.family.empty())
                throw UsageError("give either --family or --graph, not both");
            if (! src.graph_path.empty()) {
                auto in = open_input(src.graph_path);
                return {read_edge_list(in), std::nullopt};
            }
            if (src.family.empty())
                throw UsageError("one of --family or --graph is required");
            auto spec = family_of(src);
            return {realize(spec), spec};
        }

        auto load_certificate(const std::string & path) -> Certificate
        {
            auto in = open_input(path);
            return read_certificate(in);
        }

        auto emit(const std::string & path, const std::string & contents, std::ostream & out) -> void
        {
            if (path.empty() || path == "-")
                out << contents;
            else
                write_file_atomically(path, contents);
        }

        auto add_family_options(CLI::App * cmd, GraphSource & src) -> void
        {
            std::string names;
            for (auto & n : family_names())
                names += (names.empty() ? "" : ", ") + n;
            cmd->add_option("--family", src.family, "Graph family: " + names);
            cmd->add_option("--params", src.params,
                    "Comma-separated parameters, or name:params*name:params for a product");
        }

        struct Budgets
        {
            std::optional<long long> nodes;
            std::optional<double> seconds;
            int workers = 1;
            std::string order = "bfs";
        };

        auto add_budget_options(CLI::App * cmd, Budgets & b) -> void
        {
            cmd->add_option("--nodes", b.nodes, "Node budget (default 1e8, or INTERVAL_BUDGET_NODES)")
                ->check(CLI::PositiveNumber);
            cmd->add_option("--seconds", b.seconds, "Time budget in seconds (default 300)")->check(CLI::PositiveNumber);
            cmd->add_option("--workers", b.workers, "Parallel t values for --profile")->check(CLI::PositiveNumber);
            cmd->add_option("--order", b.order, "Edge order")->check(CLI::IsMember({"bfs", "index"}));
        }

        auto config_of(const Budgets & b) -> SearchConfig
        {
            auto cfg = apply_environment(SearchConfig{});
            if (b.nodes)
                cfg.node_budget = *b.nodes;
            if (b.seconds)
                cfg.time_budget = *b.seconds;
            cfg.workers = b.workers;
            cfg.edge_order = b.order == "index" ? EdgeOrder::Index : EdgeOrder::BreadthFirst;
            return cfg;
        }

        auto cmd_gen(const GraphSource & src, const std::string & output, std::ostream & out) -> int
        {
            auto [g, spec] = load_graph(src);
            emit(output, to_edge_list(g), out);
            return exit_code::ok;
        }

        auto cmd_construct(const GraphSource & src, const std::string & mode_name, const std::string & output,
                const std::string & dot, std::ostream & out, std::ostream & err) -> int
        {
            if (src.family.empty())
                throw UsageError("--family is required");
            auto spec = family_of(src);
            auto mode = parse_mode(mode_name);
            if (! mode)
                throw UsageError("--mode must be minimal or widest");
            auto c = construct(spec, *mode);
            if (! c)
                throw UsageError("no " + to_string(*mode) + " construction for " + spec.name()
                        + "; supported modes per family:\n" + supported_modes());
            auto cert = make_certificate(c->coloring, c->claimed_t);
            emit(output, to_json_text(cert), out);
            if (! dot.empty()) {
                std::ostringstream s;
                write_dot(s, cert.coloring);
                emit(dot, s.str(), out);
            }
            err << c->name << ": t=" << cert.t << ", " << (cert.valid ? "valid" : "invalid: " + *cert.reason) << '\n';
            return cert.valid ? exit_code::ok : exit_code::negative;
        }

        auto cmd_verify(const std::string & path, std::ostream & out) -> int
        {
            auto cert = load_certificate(path);
            auto report = verify_interval(cert.coloring, cert.t);
            if (report.valid()) {
                out << "valid: interval " << cert.t << "-colouring of a graph with " << cert.coloring.graph.vertex_count()
                    << " vertices and " << cert.coloring.graph.edge_count() << " edges\n";
            }
            else {
                out << "invalid: " << report.reason() << '\n';
                if (report.witness_vertex)
                    out << "witness vertex: " << *report.witness_vertex << '\n';
                if (report.witness_edge) {
                    auto e = cert.coloring.graph.edge(*report.witness_edge);
                    out << "witness edge: " << e.u << " -- " << e.v << " colour " << cert.coloring.colors[*report.witness_edge] << '\n';
                }
                if (report.witness_color)
                    out << "witness colour: " << *report.witness_color << '\n';
            }
            if (cert.valid != report.valid())
                out << "note: stored verdict \"" << (cert.valid ? "valid" : "invalid") << "\" disagrees with re-verification\n";
            return report.valid() ? exit_code::ok : exit_code::negative;
        }

        auto status_code(SearchStatus s) -> int
        {
            switch (s) {
                case SearchStatus::Found:          return exit_code::ok;
                case SearchStatus::Exhausted:      return exit_code::negative;
                case SearchStatus::BudgetExceeded: return exit_code::inconclusive;
            }
            return exit_code::inconclusive;
        }

        struct SearchArgs
        {
            GraphSource src;
            std::optional<int> t;
            std::string stat;
            bool profile = false;
            std::optional<int> t_min, t_max;
            std::string cert;
            Budgets budgets;
        };

        auto cmd_search(const SearchArgs & a, std::ostream & out) -> int
        {
            int modes = (a.t ? 1 : 0) + (a.stat.empty() ? 0 : 1) + (a.profile ? 1 : 0);
            if (modes != 1)
                throw UsageError("give exactly one of --t, --stat, --profile");
            auto [g, spec] = load_graph(a.src);
            if (g.edge_count() == 0)
                throw UsageError("graph has no edges");
            auto cfg = config_of(a.budgets);

            if (a.t) {
                if (*a.t < 1 || *a.t > 256)
                    throw UsageError("--t must be in [1, 256]");
                auto outcome = exists_interval_t(g, *a.t, cfg);
                out << outcome_record(outcome) << '\n';
                if (outcome.coloring && ! a.cert.empty())
                    emit(a.cert, to_json_text(make_certificate(*outcome.coloring, outcome.t)), out);
                return status_code(outcome.status);
            }

            if (a.profile) {
                int lo = a.t_min.value_or(g.max_degree());
                int hi = a.t_max.value_or(default_max_t(g));
                if (lo < 1 || hi > 256 || lo > hi)
                    throw UsageError("profile range must satisfy 1 <= t-min <= t-max <= 256");
                auto profile = spectrum_profile(g, lo, hi, cfg);
                bool any_yes = false, any_unknown = false;
                for (auto & [t, e] : profile) {
                    ordered_json rec;
                    rec["t"] = t;
                    rec["existence"] = to_string(e);
                    out << rec.dump() << '\n';
                    any_yes = any_yes || e == Existence::Yes;
                    any_unknown = any_unknown || e == Existence::Inconclusive;
                }
                return any_unknown ? exit_code::inconclusive : any_yes ? exit_code::ok : exit_code::negative;
            }

            auto result = a.stat == "w" ? compute_w(g, cfg) : compute_W(g, cfg);
            SearchStatus status = ! result.conclusive ? SearchStatus::BudgetExceeded
                : result.value ? SearchStatus::Found : SearchStatus::Exhausted;
            ordered_json rec;
            rec["stat"] = a.stat;
            rec["status"] = to_string(status);
            rec["t"] = result.value ? ordered_json(*result.value) : ordered_json(nullptr);
            rec["nodes"] = result.nodes;
            rec["seconds"] = result.seconds;
            out << rec.dump() << '\n';
            if (result.witness && ! a.cert.empty())
                emit(a.cert, to_json_text(make_certificate(*result.witness, *result.value)), out);
            return status_code(status);
        }

        auto report_record(const BoundReport & r) -> ordered_json
        {
            auto entries = [] (const std::vector<BoundEntry> & list) {
                auto arr = ordered_json::array();
                for (auto & e : list)
                    arr.push_back({{"quantity", to_string(e.quantity)}, {"value", e.value}, {"source", e.source}});
                return arr;
            };
            auto opt = [] (const auto & v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
            ordered_json doc;
            doc["family"] = r.family.name();
            doc["lower_bounds"] = entries(r.lower_bounds);
            doc["upper_bounds"] = entries(r.upper_bounds);
            doc["interval_colorable"] = opt(r.interval_colorable);
            doc["constructed_t"] = opt(r.constructed_t);
            doc["oracle_w"] = opt(r.oracle_w);
            doc["oracle_W"] = opt(r.oracle_W);
            doc["consistent"] = r.consistent();
            doc["notes"] = r.notes;
            return doc;
        }

        auto cmd_bounds(const GraphSource & src, bool oracle, const Budgets & budgets, bool json_only,
                std::ostream & out) -> int
        {
            if (src.family.empty())
                throw UsageError("--family is required");
            auto spec = family_of(src);
            auto report = family_values(spec);

            if (spec.vertex_count() <= 4096) {
                if (auto c = construct(spec, Mode::Widest))
                    report.constructed_t = c->claimed_t;
            }
            bool conclusive = true;
            if (oracle) {
                auto g = realize(spec);
                if (g.edge_count() == 0)
                    throw UsageError("graph has no edges");
                auto cfg = config_of(budgets);
                auto w = compute_w(g, cfg);
                auto W = compute_W(g, cfg);
                if (w.conclusive)
                    report.oracle_w = w.value;
                if (W.conclusive)
                    report.oracle_W = W.value;
                if (w.conclusive && W.conclusive && ! w.value)
                    report.interval_colorable = false;
                conclusive = w.conclusive && W.conclusive;
            }

            std::optional<PlanarClass> planar;
            if (auto p = std::get_if<family::Product>(&spec.variant))
                planar = planar_product_class(*p->left, *p->right);

            if (! json_only) {
                out << spec.name() << '\n';
                out << std::left << std::setw(10) << "quantity" << std::setw(10) << "relation"
                    << std::right << std::setw(8) << "value" << "  source\n";
                auto row = [&] (const BoundEntry & e, const char * rel) {
                    out << std::left << std::setw(10) << to_string(e.quantity) << std::setw(10) << rel
                        << std::right << std::setw(8) << e.value << "  " << e.source << '\n';
                };
                for (auto & e : report.lower_bounds)
                    row(e, ">=");
                for (auto & e : report.upper_bounds)
                    row(e, "<=");
                if (report.constructed_t)
                    out << "constructed t = " << *report.constructed_t << '\n';
                if (report.oracle_w)
                    out << "oracle w = " << *report.oracle_w << '\n';
                if (report.oracle_W)
                    out << "oracle W = " << *report.oracle_W << '\n';
                if (planar)
                    out << "planar class: " << to_string(planar->kind)
                        << (planar->w_upper ? ", w <= " + std::to_string(*planar->w_upper) : std::string()) << '\n';
                for (auto & n : report.notes)
                    out << "note: " << n << '\n';
            }
            auto rec = report_record(report);
            if (planar)
                rec["planar_class"] = to_string(planar->kind);
            out << rec.dump() << '\n';

            if (! report.consistent())
                return exit_code::negative;
            return conclusive ? exit_code::ok : exit_code::inconclusive;
        }

        auto parse_range(const std::string & text, Suite suite) -> MatrixRange
        {
            auto range = default_range(suite);
            if (text.empty())
                return range;
            int a, b, c, d;
            char dot1, dot2, comma, dot3, dot4;
            std::istringstream s(text);
            if (! (s >> a >> dot1 >> dot2 >> b >> comma >> c >> dot3 >> dot4 >> d) || dot1 != '.' || dot2 != '.'
                    || comma != ',' || dot3 != '.' || dot4 != '.' || s.peek() != EOF)
                throw UsageError("--range must look like 2..12,2..12");
            if (a > b || c > d)
                throw UsageError("--range bounds must be increasing");
            return {a, b, c, d};
        }

        auto cmd_matrix(const std::string & suite_text, const std::string & range_text, bool json,
                std::ostream & out) -> int
        {
            std::vector<Suite> suites;
            if (suite_text == "all")
                suites = all_suites();
            else if (auto s = parse_suite(suite_text))
                suites.push_back(*s);
            else {
                std::string names;
                for (auto s : all_suites())
                    names += " " + suite_name(s);
                throw UsageError("unknown suite \"" + suite_text + "\"; choose all or one of:" + names);
            }
            if (suites.size() > 1 && ! range_text.empty())
                throw UsageError("--range needs a single --suite");

            bool all_ok = true;
            for (auto s : suites) {
                auto rows = run_suite(s, parse_range(range_text, s));
                if (json)
                    out << format_records(rows);
                else
                    out << "# " << suite_name(s) << '\n' << format_table(rows);
                all_ok = all_ok && std::all_of(rows.begin(), rows.end(), [] (const MatrixRow & r) { return r.ok; });
            }
            return all_ok ? exit_code::ok : exit_code::negative;
        }

        auto cmd_export_dot(const std::string & path, const std::string & output, std::ostream & out) -> int
        {
            auto cert = load_certificate(path);
            std::ostringstream s;
            write_dot(s, cert.coloring);
            emit(output, s.str(), out);
            return exit_code::ok;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Interval edge colourings: constructions, verification and exact search", "icol"};
        app.require_subcommand(1);

        GraphSource gen_src;
        std::string gen_output;
        auto gen = app.add_subcommand("gen", "Write a family graph as an edge list");
        add_family_options(gen, gen_src);
        gen->add_option("-o,--output", gen_output, "Output path (default stdout)");

        GraphSource con_src;
        std::string con_mode = "widest", con_output, con_dot;
        auto con = app.add_subcommand("construct", "Build a formula colouring and write its certificate");
        add_family_options(con, con_src);
        con->add_option("--mode", con_mode, "minimal or widest");
        con->add_option("-o,--output", con_output, "Certificate path (default stdout)");
        con->add_option("--dot", con_dot, "Also write a DOT rendering");
        con->footer("Supported modes:\n" + supported_modes());

        std::string verify_path;
        auto ver = app.add_subcommand("verify", "Re-verify a certificate");
        ver->add_option("certificate", verify_path, "Certificate path")->required();

        SearchArgs sa;
        auto sea = app.add_subcommand("search", "Exact backtracking search");
        add_family_options(sea, sa.src);
        sea->add_option("--graph", sa.src.graph_path, "Edge-list file");
        sea->add_option("--t", sa.t, "Decide whether an interval t-colouring exists");
        sea->add_option("--stat", sa.stat, "Compute w or W")->check(CLI::IsMember({"w", "W"}));
        sea->add_flag("--profile", sa.profile, "Decide every t in [t-min, t-max]");
        sea->add_option("--t-min", sa.t_min, "Profile lower end (default max degree)");
        sea->add_option("--t-max", sa.t_max, "Profile upper end (default diameter ceiling)");
        sea->add_option("--cert", sa.cert, "Write a certificate for a found colouring");
        add_budget_options(sea, sa.budgets);

        GraphSource bnd_src;
        bool bnd_oracle = false, bnd_json = false;
        Budgets bnd_budgets;
        auto bnd = app.add_subcommand("bounds", "Closed-form bounds for a family instance");
        add_family_options(bnd, bnd_src);
        bnd->add_flag("--oracle", bnd_oracle, "Also compute w and W by exact search");
        bnd->add_flag("--json", bnd_json, "Print only the JSON record");
        add_budget_options(bnd, bnd_budgets);

        std::string mat_suite = "all", mat_range;
        bool mat_json = false;
        auto mat = app.add_subcommand("matrix", "Construct, verify and compare over a parameter grid");
        mat->add_option("--suite", mat_suite, "Suite name or all");
        mat->add_option("--range", mat_range, "Override the suite's ranges, e.g. 2..6,2..6");
        mat->add_flag("--json", mat_json, "One JSON record per row instead of a table");

        std::string dot_path, dot_output;
        auto dot = app.add_subcommand("export-dot", "Render a certificate as DOT");
        dot->add_option("certificate", dot_path, "Certificate path")->required();
        dot->add_option("-o,--output", dot_output, "Output path (default stdout)");

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::CallForHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::CallForAllHelp & e) {
            return app.exit(e, out, err);
        }
        catch (const CLI::ParseError & e) {
            app.exit(e, out, err);
            return exit_code::usage;
        }

        try {
            if (gen->parsed())
                return cmd_gen(gen_src, gen_output, out);
            if (con->parsed())
                return cmd_construct(con_src, con_mode, con_output, con_dot, out, err);
            if (ver->parsed())
                return cmd_verify(verify_path, out);
            if (sea->parsed())
                return cmd_search(sa, out);
            if (bnd->parsed())
                return cmd_bounds(bnd_src, bnd_oracle, bnd_budgets, bnd_json, out);
            if (mat->parsed())
                return cmd_matrix(mat_suite, mat_range, mat_json, out);
            if (dot->parsed())
                return cmd_export_dot(dot_path, dot_output, out);
        }
        catch (const UsageError & e) {
            err << "usage error: " << e.what() << '\n';
            return exit_code::usage;
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return exit_code::negative;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_code::negative;
        }
        return exit_code::usage;
    }
}
