// Command-line front door: construct diagrams, extract quivers, produce and
// verify certificates, run mutation-class searches, enumerate seeds, and
// sweep whole (k,n) types. All outputs are deterministic; JSON documents
// carry a top-level "schema":"v1" field.
//
// Exit codes: 0 success, 1 verification failed, 2 invalid input,
// 3 limit exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "postnikov/banff.hpp"
#include "postnikov/explorer.hpp"
#include "postnikov/json_io.hpp"
#include "postnikov/sweep.hpp"

namespace pk = postnikov;
using pk::json;

namespace {

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw pk::BadInput("cannot open " + out_path);
        f << text << "\n";
    }
}

json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw pk::BadInput("cannot open " + path);
    json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        throw pk::BadInput(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

pk::BoundedAffinePermutation permutation_from_flags(const std::string& window,
                                                    const std::string& top_cell) {
    if (window.empty() == top_cell.empty())
        throw pk::BadInput("need exactly one of --window and --top-cell");
    if (!window.empty()) return pk::parse_window(window);
    // Top cell x -> x+k of type (k,n).
    int k = 0, n = 0;
    if (sscanf(top_cell.c_str(), "%d,%d", &k, &n) != 2 || n < 1 || k < 0 || k > n)
        throw pk::BadInput("--top-cell expects K,N with 0 <= K <= N");
    std::vector<int> win(n);
    for (int i = 1; i <= n; ++i) win[i - 1] = i + k;
    return pk::BoundedAffinePermutation::validate(win);
}

int run(int argc, char** argv) {
    CLI::App app{"Postnikov diagrams, ice quivers, and Louise certificates"};
    app.require_subcommand(1);

    std::string window, top_cell, out_path, labels = "target", format = "json";
    int depth = 64, class_limit = 512;
    long long seed_limit = 100000;
    int jobs = 1;

    auto* diagram = app.add_subcommand("diagram", "construct a diagram and its ice quiver");
    diagram->add_option("--window", window, "window w(1),...,w(n)");
    diagram->add_option("--top-cell", top_cell, "K,N for the top cell x -> x+K");
    diagram->add_option("--labels", labels, "face label convention: target|source")
        ->check(CLI::IsMember({"target", "source"}));
    diagram->add_option("--format", format, "output format: json|dot")
        ->check(CLI::IsMember({"json", "dot"}));
    diagram->add_option("--out", out_path, "write output to FILE");

    auto* certify = app.add_subcommand("certify", "produce a Louise certificate");
    certify->add_option("--window", window, "window w(1),...,w(n)");
    certify->add_option("--top-cell", top_cell, "K,N for the top cell");
    certify->add_option("--out", out_path, "write output to FILE");

    std::string cert_file;
    auto* verify = app.add_subcommand("verify", "verify a certificate file");
    verify->add_option("file", cert_file, "certificate JSON")->required();

    std::string quiver_file;
    auto* banff = app.add_subcommand("banff", "search for a quiver Louise certificate");
    banff->add_option("file", quiver_file, "quiver JSON")->required();
    banff->add_option("--depth", depth, "cover recursion depth limit")
        ->check(CLI::Range(1, 1000000000));
    banff->add_option("--class-limit", class_limit, "mutation class size limit")
        ->check(CLI::Range(1, 1000000000));
    banff->add_option("--out", out_path, "write output to FILE");

    auto* explore = app.add_subcommand("explore", "enumerate seeds of a quiver");
    explore->add_option("file", quiver_file, "quiver JSON")->required();
    explore->add_option("--seed-limit", seed_limit, "maximum number of seeds")
        ->check(CLI::Range(1, 1000000000));
    explore->add_option("--out", out_path, "write output to FILE");

    int sweep_k = 0, sweep_n = 0;
    auto* sweep = app.add_subcommand("sweep", "certify+verify every permutation of a type");
    sweep->add_option("k", sweep_k, "type parameter k")->required();
    sweep->add_option("n", sweep_n, "period n")->required();
    sweep->add_option("--jobs", jobs, "parallel workers (OpenMP)")->check(CLI::Range(1, 1000000000));
    sweep->add_option("--out", out_path, "write output to FILE");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // bad flags are invalid input
    }

    if (diagram->parsed()) {
        const auto w = permutation_from_flags(window, top_cell);
        const pk::PlabicGraph g = pk::construct_diagram(w);
        const pk::IceQuiver q = g.to_ice_quiver();
        if (format == "dot") {
            write_out(out_path, q.dot());
            return 0;
        }
        const auto faces = g.faces();
        const auto conv = labels == "target" ? pk::LabelConvention::Target
                                             : pk::LabelConvention::Source;
        const auto face_labels = g.face_labels(conv);
        json jf = json::array();
        for (size_t i = 0; i < faces.size(); ++i) {
            jf.push_back({{"id", faces[i].id},
                          {"boundary", faces[i].boundary},
                          {"label", std::vector<int>(face_labels[i].begin(), face_labels[i].end())}});
        }
        json out{{"schema", "v1"},
                 {"permutation", pk::to_json(w)},
                 {"faces", jf},
                 {"plabic", pk::to_json(g)},
                 {"quiver", pk::to_json(q)}};
        write_out(out_path, out.dump(2));
        return 0;
    }

    if (certify->parsed()) {
        const auto w = permutation_from_flags(window, top_cell);
        const pk::LouiseCertificate cert = pk::certify(w);
        json out{{"schema", "v1"}, {"certificate", pk::to_json(cert)}};
        write_out(out_path, out.dump(2));
        return 0;
    }

    if (verify->parsed()) {
        json j = read_json_file(cert_file);
        const auto cert = pk::certificate_from_json(j.contains("certificate") ? j["certificate"] : j);
        const pk::VerifyResult r = pk::verify(cert);
        if (!r.ok) {
            std::cerr << r.to_string() << "\n";
            return 1;
        }
        std::cout << "OK\n";
        return 0;
    }

    if (banff->parsed()) {
        json j = read_json_file(quiver_file);
        const auto q = pk::quiver_from_json(j);
        const pk::BanffResult r = pk::banff_search(q, {depth, class_limit});
        if (r.status == pk::BanffStatus::LimitExceeded)
            throw pk::LimitExceeded("search limits hit after exploring " +
                                    std::to_string(r.explored) + " quivers");
        json out{{"schema", "v1"},
                 {"status", r.status == pk::BanffStatus::Found ? "found" : "none"},
                 {"explored", r.explored}};
        if (r.status == pk::BanffStatus::Found) out["certificate"] = pk::to_json(r.certificate);
        write_out(out_path, out.dump(2));
        return 0;
    }

    if (explore->parsed()) {
        json j = read_json_file(quiver_file);
        const auto q = pk::quiver_from_json(j);
        const pk::Seed seed = pk::Seed::initial(q);
        const pk::ExploreCounts c = pk::enumerate_seeds(seed, seed_limit);
        json out{{"schema", "v1"},
                 {"variables", c.variables},
                 {"seeds", c.seeds},
                 {"acyclic_seeds", c.acyclic_seeds}};
        write_out(out_path, out.dump(2));
        return 0;
    }

    if (sweep->parsed()) {
#ifdef _OPENMP
        if (jobs > 1) omp_set_num_threads(jobs);
#endif
        const pk::SweepRow row = pk::sweep_type(sweep_k, sweep_n, jobs > 1);
        json fails = json::array();
        for (const auto& w : row.failures) fails.push_back(w);
        json out{{"schema", "v1"}, {"k", row.k},
                 {"n", row.n},      {"count", row.count},
                 {"pass", row.pass}, {"fail", row.fail},
                 {"max_depth", row.max_depth}, {"failures", fails}};
        write_out(out_path, out.dump(2));
        return row.fail == 0 ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pk::LimitExceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const pk::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
