#include "cli.hh"
#include "report.hh"

#include <drg/errors.hh>
#include <drg/pipeline.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

using nlohmann::json;
using std::string;
using std::vector;

namespace drg::cli
{
    namespace
    {
        enum class Format
        {
            text,
            json,
            dot
        };

        struct Request
        {
            string graph;
            string edges;
            int vertex = 0;
            double tolerance = Tolerance{}.base;
            string format = "text";
            bool probe = false;
            bool all_vertices = false;
            string lemma;
        };

        auto add_source_options(CLI::App & command, Request & request, bool with_format) -> void
        {
            auto graph = command.add_option("--graph", request.graph, "named graph, e.g. hypercube:3, hamming:3,3, johnson:6,3, cycle:7");
            auto edges = command.add_option("--edges", request.edges, "edge-list file");
            graph->excludes(edges);
            edges->excludes(graph);
            auto vertex = command.add_option("--vertex", request.vertex, "base vertex (default 0)");
            auto all = command.add_flag("--all-vertices", request.all_vertices, "run once per base vertex");
            vertex->excludes(all);
            all->excludes(vertex);
            command.add_option("--tol", request.tolerance, "base tolerance (default 1e-8)");
            if (with_format)
                command.add_option("--format", request.format, "text, json or dot")
                    ->check(CLI::IsMember({ "text", "json", "dot" }));
            command.add_flag("--probe", request.probe, "probe the subspaces above MM*+M*M");
        }

        auto parse_format(const string & s) -> Format
        {
            if (s == "json")
                return Format::json;
            if (s == "dot")
                return Format::dot;
            return Format::text;
        }

        auto load(const Request & request) -> Algebra
        {
            if (request.graph.empty() == request.edges.empty())
                throw InputError{ "exactly one of --graph and --edges is required" };
            if (! (request.tolerance > 0.0) || ! std::isfinite(request.tolerance))
                throw InputError{ "--tol must be a positive number" };
            Tolerance tolerance;
            tolerance.base = request.tolerance;

            if (! request.graph.empty())
                return prepare(build_named(request.graph), request.graph, tolerance);

            std::ifstream file{ request.edges };
            if (! file)
                throw InputError{ "cannot open edge list " + request.edges };
            return prepare(load_edge_list(file), request.edges, tolerance);
        }

        auto vertices(const Request & request, const Algebra & algebra) -> vector<int>
        {
            if (! request.all_vertices) {
                if (request.vertex < 0 || request.vertex >= algebra.graph.size())
                    throw InputError{ "--vertex " + std::to_string(request.vertex) + " is outside 0.."
                        + std::to_string(algebra.graph.size() - 1) };
                return { request.vertex };
            }
            vector<int> all(algebra.graph.size());
            for (int x = 0 ; x < algebra.graph.size() ; ++x)
                all[x] = x;
            return all;
        }

        auto options_for(const Request & request, int vertex) -> AnalysisOptions
        {
            AnalysisOptions options;
            options.base_vertex = vertex;
            options.tolerance.base = request.tolerance;
            options.probe = request.probe;
            return options;
        }

        auto run_analyze(const Request & request, Format format, std::ostream & out) -> int
        {
            auto algebra = load(request);
            bool passed = true;
            json documents = json::array();
            bool first = true;
            for (int x : vertices(request, algebra)) {
                auto report = analyze(algebra, options_for(request, x));
                passed = passed && report.passed();
                switch (format) {
                    case Format::text:
                        if (! first)
                            out << '\n';
                        write_text(out, report);
                        break;
                    case Format::json:
                        documents.push_back(report_json(report));
                        break;
                    case Format::dot:
                        if (! first)
                            out << '\n';
                        write_dot(out, report, request.all_vertices ? "lattice_v" + std::to_string(x) : "lattice");
                        break;
                }
                first = false;
            }
            if (format == Format::json)
                out << (request.all_vertices ? documents : documents.front()).dump(2) << '\n';
            return passed ? exit_pass : exit_verification_failure;
        }

        auto run_verify(const Request & request, Format format, std::ostream & out) -> int
        {
            if (format == Format::dot)
                throw InputError{ "verify writes text or json" };
            auto algebra = load(request);
            bool passed = true;
            json documents = json::array();
            for (int x : vertices(request, algebra)) {
                auto all = verify_identities(algebra, options_for(request, x));
                vector<Verdict> chosen;
                std::copy_if(all.begin(), all.end(), std::back_inserter(chosen),
                        [&] (const Verdict & v) { return request.lemma.empty() || matches_tag(request.lemma, v.tag); });
                if (chosen.empty())
                    throw InputError{ "no identity matches --lemma " + request.lemma };
                long long failed = std::count_if(chosen.begin(), chosen.end(), [] (const Verdict & v) { return ! v.passed; });
                passed = passed && failed == 0;

                if (format == Format::json) {
                    json verdicts = json::array();
                    for (const auto & v : chosen)
                        verdicts.push_back(verdict_json(v));
                    documents.push_back(json{
                        { "schema", schema_version },
                        { "graph", algebra.name },
                        { "base_vertex", x },
                        { "verdicts", verdicts },
                        { "passed", failed == 0 },
                    });
                    continue;
                }
                out << "graph " << algebra.name << "  base vertex " << x << '\n';
                write_verdict_lines(out, chosen);
                out << chosen.size() << " identities checked, " << failed << " failed\n";
            }
            if (format == Format::json)
                out << (request.all_vertices ? documents : documents.front()).dump(2) << '\n';
            return passed ? exit_pass : exit_verification_failure;
        }
    }

    auto run(const vector<string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "Terwilliger-algebra subspace lattice of a distance-regular graph" };
        app.require_subcommand(1);
        app.set_help_all_flag("--help-all");

        Request request;
        auto analyze_command = app.add_subcommand("analyze", "build the lattice, reconcile both routes, print the report");
        auto diagram_command = app.add_subcommand("diagram", "inclusion diagram in DOT");
        auto verify_command = app.add_subcommand("verify", "batch-check the inner-product and zero-product identities");
        add_source_options(*analyze_command, request, true);
        add_source_options(*diagram_command, request, false);
        add_source_options(*verify_command, request, true);
        verify_command->add_option("--lemma", request.lemma, "identity family: 3.1, 3.2, 3.3, 4.*, 5.*, 5.1, 5.6, 5.9, 5.11");

        vector<string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            if (e.get_exit_code() == 0) {
                app.exit(e, out, err);
                return exit_pass;
            }
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }

        try {
            if (analyze_command->parsed())
                return run_analyze(request, parse_format(request.format), out);
            if (diagram_command->parsed())
                return run_analyze(request, Format::dot, out);
            return run_verify(request, parse_format(request.format), out);
        }
        catch (const InputError & e) {
            err << "error: " << e.what() << '\n';
            return exit_input_error;
        }
        catch (const VerificationError & e) {
            out << "FAIL " << e.what() << '\n';
            err << "verification failed: " << e.what() << '\n';
            return exit_verification_failure;
        }
    }
}
