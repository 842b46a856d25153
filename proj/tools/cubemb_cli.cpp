// cubemb command-line interface: face tracing, edge classification, twists,
// facial diagrams, singular-edge reduction, exhaustive search and Monte Carlo
// experiments over signed embeddings of bridgeless cubic graphs.
//
// Exit codes: 0 success, 1 input error, 2 a checked structural property was
// falsified (check-properties only).

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <cubemb/cubemb.hpp>

namespace {

using cubemb::json;

struct GraphSource {
    std::string name;
    std::string file;

    cubemb::CubicGraph load(std::string& label) const {
        if (!name.empty() && !file.empty())
            throw std::invalid_argument("pass either --graph or --graph-file, not both");
        if (!name.empty()) {
            label = name;
            return cubemb::named_graph(name);
        }
        if (!file.empty()) {
            label = file;
            return cubemb::parse_graph(cubemb::read_text_file(file));
        }
        throw std::invalid_argument("a graph is required: --graph NAME or --graph-file PATH");
    }
};

struct EmbeddingSource {
    std::string file;
    std::uint64_t seed = 0;
    bool seed_given = false;

    cubemb::Embedding load(const cubemb::CubicGraph& g) const {
        if (!file.empty()) return cubemb::embedding_from_json(g, cubemb::read_json_file(file));
        if (!seed_given)
            throw std::invalid_argument(
                "an embedding is required: --embedding PATH, or --seed N for a random one");
        std::mt19937_64 rng(seed);
        return cubemb::random_embedding(g, rng);
    }
};

void add_graph_options(CLI::App* cmd, GraphSource& src) {
    cmd->add_option("--graph", src.name, "named graph: theta, k4, k33, petersen, prism_k");
    cmd->add_option("--graph-file", src.file, "edge-list file (first line 'n m', then 'u v')");
}

void add_embedding_options(CLI::App* cmd, EmbeddingSource& src) {
    cmd->add_option("--embedding", src.file, "embedding JSON file");
    cmd->add_option("--seed", src.seed, "seed for a random embedding")
        ->trigger_on_parse()  // needed so seed_given is set
        ->each([&src](const std::string&) { src.seed_given = true; });
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text << '\n';
    else
        cubemb::write_text_file(out_path, text + "\n");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + csv);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed embeddings of bridgeless cubic graphs"};
    app.require_subcommand(1);

    GraphSource graph_src;
    EmbeddingSource emb_src;
    std::string out_path;
    std::string format = "json";
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    int workers = 1;
    int cap = 24;
    int budget = 0;
    int edge = -1;
    bool cascade = false;
    bool exhaustive = false;
    std::string sweep_list;

    auto* faces = app.add_subcommand("faces", "trace facial walks");
    auto* classify = app.add_subcommand("classify", "classify edges as regular/good/bad singular");
    auto* twist_cmd = app.add_subcommand("twist", "negate the signature of one edge");
    auto* diagram = app.add_subcommand("diagram", "build the facial diagram");
    auto* reduce = app.add_subcommand("reduce", "greedy '-' link reduction (or + cascade)");
    auto* search = app.add_subcommand("search", "exhaustive signature sweep for a circular embedding");
    auto* matching = app.add_subcommand("matching-bound", "matching-based low-singular embedding");
    auto* enumerate = app.add_subcommand("enumerate", "full embedding-space enumeration summary");
    auto* experiment = app.add_subcommand("experiment", "Monte Carlo class-count experiment");
    auto* check = app.add_subcommand("check-properties", "structural property checkers (exit 2 on violation)");

    for (auto* cmd : {faces, classify, twist_cmd, diagram, reduce, search, matching, enumerate,
                      experiment, check})
        add_graph_options(cmd, graph_src);
    for (auto* cmd : {faces, classify, twist_cmd, diagram, reduce})
        add_embedding_options(cmd, emb_src);
    for (auto* cmd : {faces, classify, twist_cmd, diagram, reduce, search, matching, enumerate,
                      experiment, check})
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");

    twist_cmd->add_option("--edge", edge, "edge id to twist")->required();
    diagram->add_option("--format", format, "json or dot");
    reduce->add_flag("--cascade", cascade, "run the + cascade heuristic after greedy reduction");
    reduce->add_option("--budget", budget, "cascade twist budget");
    search->add_option("--embedding", emb_src.file, "embedding JSON supplying the fixed rotation");
    search->add_option("--cap", cap, "maximum m for the 2^m signature sweep");
    enumerate->add_option("--workers", workers, "shard the sweep across N threads");
    enumerate->add_option("--format", format, "json summary or csv per-configuration rows");
    experiment->add_option("--samples", samples, "number of random embeddings");
    experiment->add_option("--seed", seed, "root seed")->each([&](const std::string&) {
        seed_given = true;
    });
    experiment->add_option("--workers", workers, "worker count (seed-split, deterministic)");
    experiment->add_option("--format", format, "csv or json");
    experiment->add_option("--sweep", sweep_list,
                           "comma-separated even n values: fresh random graphs per sample");
    check->add_option("--samples", samples, "number of random embeddings to sweep");
    check->add_option("--seed", seed, "root seed")->each([&](const std::string&) {
        seed_given = true;
    });
    check->add_flag("--exhaustive", exhaustive,
                    "also verify minimum-singular embeddings are crossing-free");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        std::string label;

        if (faces->parsed()) {
            auto g = graph_src.load(label);
            auto fs = cubemb::trace_faces(g, emb_src.load(g));
            emit(out_path, cubemb::faces_to_json(g, fs).dump(2));
        } else if (classify->parsed()) {
            auto g = graph_src.load(label);
            auto fs = cubemb::trace_faces(g, emb_src.load(g));
            json j;
            j["classes"] = json::array();
            for (auto c : cubemb::classify_edges(fs)) j["classes"].push_back(cubemb::to_string(c));
            j["counts"] = cubemb::class_counts_to_json(cubemb::count_classes(fs));
            j["faces"] = fs.face_count();
            j["euler_characteristic"] = cubemb::euler_characteristic(g, fs);
            emit(out_path, j.dump(2));
        } else if (twist_cmd->parsed()) {
            auto g = graph_src.load(label);
            auto emb = emb_src.load(g);
            if (edge < 0 || edge >= g.m)
                throw std::invalid_argument("edge id " + std::to_string(edge) +
                                            " out of range 0.." + std::to_string(g.m - 1));
            auto rec = cubemb::record_twist(g, emb, edge);
            json j;
            j["embedding"] = cubemb::embedding_to_json(cubemb::twist(emb, edge));
            j["record"] = cubemb::twist_record_to_json(rec);
            emit(out_path, j.dump(2));
        } else if (diagram->parsed()) {
            auto g = graph_src.load(label);
            auto fs = cubemb::trace_faces(g, emb_src.load(g));
            auto fd = cubemb::build_diagram(g, fs);
            if (format == "dot")
                emit(out_path, cubemb::to_dot(fd));
            else
                emit(out_path, cubemb::diagram_to_json(fd).dump(2));
        } else if (reduce->parsed()) {
            auto g = graph_src.load(label);
            auto emb = emb_src.load(g);
            cubemb::TwistSequence seq;
            if (cascade) {
                std::mt19937_64 rng(cubemb::worker_seed(emb_src.seed, 1));
                seq = cubemb::plus_cascade(g, emb, budget, rng);
            } else {
                seq = cubemb::greedy_reduce(g, emb);
            }
            emit(out_path, cubemb::twist_sequence_to_json(seq).dump(2));
        } else if (search->parsed()) {
            auto g = graph_src.load(label);
            cubemb::Rotation pi;
            if (!emb_src.file.empty())
                pi = cubemb::embedding_from_json(g, cubemb::read_json_file(emb_src.file)).rotation;
            else
                pi = cubemb::canonical_embedding(g).rotation;
            auto outcome = cubemb::search_circular_exhaustive(g, pi, cap);
            emit(out_path, cubemb::search_outcome_to_json(outcome).dump(2));
        } else if (matching->parsed()) {
            auto g = graph_src.load(label);
            auto res = cubemb::matching_bound_embedding(g);
            auto fs = cubemb::trace_faces(g, res.embedding);
            json j;
            j["embedding"] = cubemb::embedding_to_json(res.embedding);
            j["matching"] = res.matching.edges;
            j["counts"] = cubemb::class_counts_to_json(cubemb::count_classes(fs));
            j["faces"] = fs.face_count();
            emit(out_path, j.dump(2));
        } else if (enumerate->parsed()) {
            auto g = graph_src.load(label);
            if (format == "csv") {
                std::ostringstream csv;
                csv << "config,faces,bad,good,regular,crossings";
                cubemb::enumerate_embeddings(g, [&](std::uint64_t idx, const cubemb::Embedding&,
                                                    const cubemb::FaceSet& fs) {
                    auto c = cubemb::count_classes(fs);
                    auto fd = cubemb::build_diagram(g, fs);
                    csv << '\n'
                        << idx << ',' << fs.face_count() << ',' << c.bad << ',' << c.good << ','
                        << c.regular << ',' << cubemb::crossing_pairs(fd).size();
                });
                emit(out_path, csv.str());
            } else {
                auto summary = cubemb::enumerate_summary(g, label, workers);
                emit(out_path, cubemb::enumeration_summary_to_json(summary).dump(2));
            }
        } else if (experiment->parsed()) {
            if (!seed_given) throw std::invalid_argument("experiment requires --seed");
            if (!sweep_list.empty()) {
                auto rows = cubemb::sweep_families(parse_int_list(sweep_list), samples, seed);
                std::ostringstream csv;
                csv << cubemb::sweep_csv_header();
                for (const auto& r : rows) csv << '\n' << cubemb::sweep_csv_row(r);
                emit(out_path, csv.str());
            } else {
                auto g = graph_src.load(label);
                auto rep = cubemb::monte_carlo_classes(g, samples, seed, workers, label);
                if (format == "json")
                    emit(out_path, cubemb::experiment_report_to_json(rep).dump(2));
                else
                    emit(out_path, cubemb::experiment_csv_header() + "\n" +
                                       cubemb::experiment_csv_row(rep));
            }
        } else if (check->parsed()) {
            if (!seed_given) throw std::invalid_argument("check-properties requires --seed");
            auto g = graph_src.load(label);
            std::mt19937_64 rng(seed);
            json report;
            report["graph"] = label;
            report["samples"] = samples;
            std::vector<cubemb::PropertyViolation> all;
            for (std::uint64_t i = 0; i < samples; ++i) {
                auto emb = cubemb::random_embedding(g, rng);
                auto fd = cubemb::build_diagram(g, cubemb::trace_faces(g, emb));
                for (int k = 1; k <= 5; ++k)
                    for (auto& v : cubemb::check_structural_property(fd, g, k))
                        all.push_back(std::move(v));
            }
            report["violations"] = cubemb::violations_to_json(all);
            bool falsified = !all.empty();
            if (exhaustive) {
                auto rep6 = cubemb::verify_property6(g);
                report["property6"] = {{"min_singular", rep6.min_singular},
                                       {"embeddings_checked", rep6.embeddings_checked},
                                       {"crossing_violations", rep6.crossing_violations},
                                       {"passed", rep6.passed}};
                falsified = falsified || !rep6.passed;
            }
            report["falsified"] = falsified;
            emit(out_path, report.dump(2));
            if (falsified) {
                std::cerr << "check-properties: a structural property was falsified\n";
                return 2;
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
