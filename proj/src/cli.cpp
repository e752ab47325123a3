#include "rigidity/cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "rigidity/error.hpp"
#include "rigidity/families.hpp"
#include "rigidity/packing.hpp"
#include "rigidity/report.hpp"
#include "rigidity/spectral.hpp"

namespace rigidity {

namespace {

struct Loaded {
    Graph graph;
    std::string descriptor;
};

Loaded load_graph(const std::string& path, std::istream& in) {
    if (path == "-") {
        const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return {parse_graph(text), "stdin"};
    }
    return {read_graph_file(path), path};
}

std::string json_real_array(const std::vector<double>& values) {
    std::string text = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        text += (i ? ", " : "") + format_real(values[i]);
    }
    return text + "]";
}

void print_packing(const PackingResult& p, std::ostream& out) {
    out << "k = " << p.k << ": " << (p.found ? "found" : "not found") << ", union rank " << p.union_rank << '\n';
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        out << "part " << i << " (" << p.parts[i].size() << " edges):";
        for (const Edge& e : p.parts[i]) {
            out << ' ' << e.u << '-' << e.v;
        }
        out << '\n';
    }
}

void print_hd_table(const std::vector<HdRow>& rows, std::ostream& out) {
    out << "d   n    m     mu2             5/(d+3)         5/(d+1)         bounds  cover  2n-3  pebble  numeric\n";
    for (const HdRow& r : rows) {
        char line[256];
        std::snprintf(line, sizeof line, "%-3d %-4d %-5d %-15s %-15s %-15s %-7s %-6lld %-5lld %-7s %s\n", r.d, r.n,
                      r.m, format_real(r.mu2).c_str(), format_real(r.lower).c_str(), format_real(r.upper).c_str(),
                      r.bounds_hold ? "ok" : "FAIL", r.cover_value, r.cover_threshold,
                      r.rigid_pebble ? "rigid" : "flex", r.rigid_numeric ? "rigid" : "flex");
        out << line;
    }
    const bool all = std::all_of(rows.begin(), rows.end(), [](const HdRow& r) {
        return r.regular && r.bounds_hold && r.cover_value == 10LL * r.d + 5 && r.cover_threshold == 10LL * r.d + 7 &&
               !r.rigid_pebble && r.agrees();
    });
    out << (all ? "all rows consistent\n" : "INCONSISTENT rows present\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rigidity toolkit: spectral certificates, pebble games, covers and packings", "rigidity"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;
    int k = 1;
    int jobs = 0;
    bool force = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one edge-list graph");
    analyze_cmd->add_option("path", path, "edge-list file, or - for stdin")->required();
    analyze_cmd->add_flag("--json", as_json, "machine-readable output");
    analyze_cmd->add_option("--k", k, "packing parameter")->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--jobs", jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_flag("--force", force, "lift the order guard on theorem-level certificates");

    std::string theorem;
    auto* certify_cmd = app.add_subcommand("certify", "Check one spectral certificate");
    certify_cmd->add_option("path", path, "edge-list file, or - for stdin")->required();
    certify_cmd->add_option("--theorem", theorem, "one of: eigkrig kdisrig strcor maincor redund glob gzeig ramanujan_glob")
        ->required();
    certify_cmd->add_option("--k", k, "packing parameter")->check(CLI::PositiveNumber);
    certify_cmd->add_flag("--json", as_json, "machine-readable output");
    certify_cmd->add_option("--jobs", jobs, "worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    certify_cmd->add_flag("--force", force, "lift the order guard");

    bool two_connected = false;
    auto* pack_cmd = app.add_subcommand("pack", "Pack k edge-disjoint spanning rigid subgraphs");
    pack_cmd->add_option("path", path, "edge-list file, or - for stdin")->required();
    pack_cmd->add_option("--k", k, "number of parts")->check(CLI::PositiveNumber);
    pack_cmd->add_flag("--two-connected", two_connected, "pack spanning 2-connected subgraphs instead");
    pack_cmd->add_flag("--json", as_json, "machine-readable output");

    std::string family_spec;
    auto* family_cmd = app.add_subcommand("family", "Generate a graph, e.g. hd:d=10 or regular:n=30,d=6,seed=1");
    family_cmd->add_option("spec", family_spec, "family:key=value,...")->required();
    family_cmd->add_flag("--json", as_json, "emit spec and edges as JSON");

    std::string matrix = "laplacian";
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues, ascending, as a JSON array");
    spectrum_cmd->add_option("path", path, "edge-list file, or - for stdin")->required();
    spectrum_cmd->add_option("--matrix", matrix, "laplacian, adjacency or signless")
        ->check(CLI::IsMember({"laplacian", "adjacency", "signless"}));

    auto* reproduce_cmd = app.add_subcommand("reproduce-paper", "H_d table for d = 6..12");
    reproduce_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInput;
    }

    try {
        if (*analyze_cmd) {
            const Loaded loaded = load_graph(path, in);
            const Report report = analyze(loaded.graph, loaded.descriptor, AnalyzeOptions{k, jobs, force});
            if (as_json) {
                out << json(report).dump(2) << '\n';
            } else {
                out << format_report_text(report);
            }
        } else if (*certify_cmd) {
            const Loaded loaded = load_graph(path, in);
            const Certificate cert = certify(loaded.graph, theorem, k, CertifyOptions{jobs, force});
            if (as_json) {
                out << json(cert).dump(2) << '\n';
            } else {
                out << format_certificate_text(cert);
            }
        } else if (*pack_cmd) {
            const Loaded loaded = load_graph(path, in);
            const PackingResult result =
                two_connected ? pack_spanning_2connected(loaded.graph, k) : pack_spanning_rigid(loaded.graph, k);
            if (as_json) {
                out << json(result).dump(2) << '\n';
            } else {
                print_packing(result, out);
            }
        } else if (*family_cmd) {
            const FamilySpec spec = parse_family_spec(family_spec);
            const Graph g = generate(spec);
            if (as_json) {
                out << json{{"spec", spec}, {"n", g.order()}, {"m", g.size()}, {"edges", g.edges()}}.dump(2) << '\n';
            } else {
                out << format_edge_list(g);
            }
        } else if (*spectrum_cmd) {
            const Loaded loaded = load_graph(path, in);
            const Graph& g = loaded.graph;
            const SymmetricMatrix m = matrix == "adjacency" ? adjacency(g)
                                      : matrix == "signless" ? signless_laplacian(g)
                                                             : laplacian(g);
            out << json_real_array(eigenvalues(m).values) << '\n';
        } else if (*reproduce_cmd) {
            std::vector<HdRow> rows;
            for (int d = 6; d <= 12; ++d) {
                rows.push_back(reproduce_hd(d));
            }
            if (as_json) {
                out << json(rows).dump(2) << '\n';
            } else {
                print_hd_table(rows, out);
            }
        }
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace rigidity
