// geoloop: command-line front end for geodesic loop words.
//
// Subcommands read manifolds, words, and tuples as JSON files and write JSON
// (or CSV where it makes sense) to stdout. Exit codes: 0 success, 1 input or
// parse problems, 2 word/geometry validity problems, 3 solver convergence
// failures. Output is buffered and written whole, never partially.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "geoloop/corpus.hpp"
#include "geoloop/geodesic_solver.hpp"
#include "geoloop/group.hpp"
#include "geoloop/invariants.hpp"
#include "geoloop/json_io.hpp"
#include "geoloop/realization.hpp"
#include "geoloop/words.hpp"

namespace {

using nlohmann::json;
using namespace geoloop;

struct Options {
    std::string manifold_path;
    std::vector<std::string> word_paths;
    std::string tuple_path;
    std::string from_text;
    std::string to_text;
    std::string basepoint_text;
    std::string format = "json";
    int samples = 64;
    std::uint64_t seed = 0;
    int count = 1;
    int max_length = 8;
    std::optional<double> tolerance;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("could not open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::optional<double> eps_override_from_env() {
    if (const char* s = std::getenv("GEOLOOP_EPS_EQ")) {
        try {
            return std::stod(s);
        } catch (const std::exception&) {
            throw std::invalid_argument("GEOLOOP_EPS_EQ is not a number");
        }
    }
    return std::nullopt;
}

ManifoldPtr load_manifold(const Options& opt) {
    if (opt.manifold_path.empty()) throw std::invalid_argument("--manifold is required");
    return manifold_from_json(parse_json_text(read_file(opt.manifold_path), opt.manifold_path),
                              eps_override_from_env());
}

Word load_word(const Options& opt, std::size_t index, const ManifoldPtr& m) {
    if (index >= opt.word_paths.size())
        throw std::invalid_argument("expected another --word argument");
    const auto& path = opt.word_paths[index];
    return word_from_json(parse_json_text(read_file(path), path), m);
}

GroupElement load_group_element(const Options& opt, std::size_t index, const ManifoldPtr& m) {
    return group_element_from_word(load_word(opt, index, m));
}

Point parse_point_arg(const std::string& text, const ManifoldSpec& m, const char* flag) {
    if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
    return normalize_point(m, point_from_json(parse_json_text(text, flag)));
}

std::string csv_row(double t, const Point& p, bool with_t) {
    std::ostringstream os;
    os.precision(17);
    if (with_t) os << t;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (with_t || i > 0) os << ",";
        os << p[i];
    }
    os << "\n";
    return os.str();
}

int run_command(const std::string& cmd, const Options& opt, std::string& out) {
    if (cmd == "validate") {
        auto m = load_manifold(opt);
        const Word w = load_word(opt, 0, m);
        const auto r = validate(w);
        json j;
        j["valid"] = r.ok;
        if (!r.ok) {
            j["pair_index"] = r.pair_index;
            j["reason"] = r.reason;
        }
        out = j.dump() + "\n";
        return r.ok ? 0 : 2;
    }
    if (cmd == "reduce") {
        auto m = load_manifold(opt);
        out = word_to_json(reduce(load_word(opt, 0, m))).dump() + "\n";
        return 0;
    }
    if (cmd == "mul") {
        auto m = load_manifold(opt);
        const auto g = load_group_element(opt, 0, m);
        const auto h = load_group_element(opt, 1, m);
        out = word_to_json(mul(g, h).reduced()).dump() + "\n";
        return 0;
    }
    if (cmd == "inv") {
        auto m = load_manifold(opt);
        out = word_to_json(inverse(load_group_element(opt, 0, m)).reduced()).dump() + "\n";
        return 0;
    }
    if (cmd == "act") {
        auto m = load_manifold(opt);
        const auto z = reduce(load_word(opt, 0, m));
        const auto g = load_group_element(opt, 1, m);
        out = word_to_json(act(z, g)).dump() + "\n";
        return 0;
    }
    if (cmd == "conjugate") {
        auto m = load_manifold(opt);
        const auto g = load_group_element(opt, 0, m);
        const auto a = load_group_element(opt, 1, m);
        out = word_to_json(conjugate(g, a).reduced()).dump() + "\n";
        return 0;
    }
    if (cmd == "realize" || cmd == "sample") {
        auto m = load_manifold(opt);
        const auto loop = realize(load_word(opt, 0, m));
        const auto pts = sample_points(loop, opt.samples);
        const bool with_t = cmd == "realize";
        if (opt.format == "csv") {
            std::ostringstream os;
            for (std::size_t i = 0; i < pts.size(); ++i)
                os << csv_row(static_cast<double>(i) / opt.samples, pts[i], with_t);
            out = os.str();
            return 0;
        }
        json j;
        if (with_t) {
            j["length"] = loop.total_length();
            j["breakpoints"] = loop.breakpoints();
            json samples = json::array();
            for (std::size_t i = 0; i < pts.size(); ++i) {
                json s;
                s["t"] = static_cast<double>(i) / opt.samples;
                s["point"] = point_to_json(pts[i]);
                samples.push_back(std::move(s));
            }
            j["samples"] = std::move(samples);
        } else {
            json samples = json::array();
            for (const auto& p : pts) samples.push_back(point_to_json(p));
            j["points"] = std::move(samples);
        }
        out = j.dump() + "\n";
        return 0;
    }
    if (cmd == "solve-geodesic") {
        auto m = load_manifold(opt);
        const Point a = parse_point_arg(opt.from_text, *m, "--from");
        const Point b = parse_point_arg(opt.to_text, *m, "--to");
        ShootingConfig cfg;
        if (opt.tolerance) cfg.bvp_tolerance = *opt.tolerance;
        const auto result = shoot(*m, a, b, cfg);
        json j;
        j["length"] = result.path.length();
        j["initial_velocity"] = result.initial_velocity;
        json polyline = json::array();
        for (int i = 0; i <= opt.samples; ++i)
            polyline.push_back(point_to_json(result.path.at(static_cast<double>(i) / opt.samples)));
        j["polyline"] = std::move(polyline);
        if (opt.format == "csv") {
            std::ostringstream os;
            for (int i = 0; i <= opt.samples; ++i)
                os << csv_row(static_cast<double>(i) / opt.samples,
                              result.path.at(static_cast<double>(i) / opt.samples), true);
            out = os.str();
            return 0;
        }
        out = j.dump() + "\n";
        return 0;
    }
    if (cmd == "pi1") {
        auto m = load_manifold(opt);
        json j;
        j["class"] = deck_to_json(pi1_class(load_group_element(opt, 0, m)));
        out = j.dump() + "\n";
        return 0;
    }
    if (cmd == "deck") {
        auto m = load_manifold(opt);
        json j;
        j["class"] = deck_to_json(deck_element_of_path(reduce(load_word(opt, 0, m))));
        out = j.dump() + "\n";
        return 0;
    }
    if (cmd == "chi" || cmd == "relator") {
        auto m = load_manifold(opt);
        if (opt.tuple_path.empty()) throw std::invalid_argument("--tuple is required");
        const auto tuple =
            tuple_from_json(parse_json_text(read_file(opt.tuple_path), opt.tuple_path), m);
        const auto product = commutator_product(tuple);
        json j;
        if (cmd == "chi") {
            j["word"] = word_to_json(product.reduced());
            try {
                j["class"] = deck_to_json(pi1_class(product));
            } catch (const UnsupportedError&) {
                // chi still makes sense where no deck classification exists
            }
        } else {
            j["relator"] = is_surface_relator(tuple);
            j["class"] = deck_to_json(pi1_class(product));
        }
        out = j.dump() + "\n";
        return 0;
    }
    if (cmd == "random-words") {
        auto m = load_manifold(opt);
        const Point v0 = parse_point_arg(opt.basepoint_text, *m, "--basepoint");
        const auto corpus = random_group_elements(m, v0, opt.count, opt.max_length, opt.seed);
        json words = json::array();
        for (const auto& g : corpus) words.push_back(word_to_json(g.reduced()));
        json j;
        j["words"] = std::move(words);
        out = j.dump() + "\n";
        return 0;
    }
    throw std::invalid_argument("unknown subcommand: " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geodesic loop words: validity, reduction, group operations, realization"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name :
         {"validate", "reduce", "mul", "inv", "act", "conjugate", "realize", "sample",
          "solve-geodesic", "pi1", "deck", "chi", "relator", "random-words"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--manifold", opt.manifold_path, "manifold JSON file");
        sub->add_option("--word", opt.word_paths, "word JSON file (repeatable)");
        sub->add_option("--tuple", opt.tuple_path, "surface tuple JSON file");
        sub->add_option("--from", opt.from_text, "start point as a JSON array");
        sub->add_option("--to", opt.to_text, "end point as a JSON array");
        sub->add_option("--basepoint", opt.basepoint_text, "basepoint as a JSON array");
        sub->add_option("--samples", opt.samples, "sample count");
        sub->add_option("--seed", opt.seed, "corpus seed");
        sub->add_option("--count", opt.count, "number of words to generate");
        sub->add_option("--max-length", opt.max_length, "maximum word length");
        sub->add_option("--format", opt.format, "output format: json or csv");
        sub->add_option("--tolerance", opt.tolerance, "solver tolerance override");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    std::string out;
    try {
        const int code = run_command(cmd, opt, out);
        std::cout << out;
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
