// Command-line front end: constructions, group embeddings, Omega counts and
// spectrum searches, all emitting JSON on stdout.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mstd/constructions.hpp"
#include "mstd/counting.hpp"
#include "mstd/error.hpp"
#include "mstd/group_lattice.hpp"
#include "mstd/io.hpp"
#include "mstd/search.hpp"

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) throw mstd::ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw mstd::ParseError(e.what());
    }
}

std::int64_t get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw mstd::ParseError(std::string("params need integer \"") + key + "\"");
    }
    return j.at(key).get<std::int64_t>();
}

mstd::GapBase gap_base_from_params(const json& p) {
    if (p.contains("recipe")) {
        const json& r = p.at("recipe");
        return mstd::recipe_gap_base(mstd::io::gap_from_json(r.at("p")), get_int(r, "r"),
                                     get_int(r, "s"), get_int(r, "m"));
    }
    if (!p.contains("b") || !p.contains("lstar")) {
        throw mstd::ParseError("gap params need \"recipe\" or \"m\", \"b\" and \"lstar\"");
    }
    return {get_int(p, "m"), mstd::io::int_set_from_json(json{{"elements", p.at("b")}}),
            mstd::io::gap_from_json(p.at("lstar"))};
}

json run_construct(const std::string& family, const json& params) {
    mstd::Construction c = [&] {
        if (family == "t1") {
            return mstd::construct_theorem1({get_int(params, "m"), get_int(params, "d"), get_int(params, "k")});
        }
        if (family == "t3") {
            return mstd::construct_theorem3({get_int(params, "m"), get_int(params, "d"), get_int(params, "k")});
        }
        if (family == "t2") return mstd::construct_theorem2(get_int(params, "k"));
        if (family == "hr") return mstd::construct_hegarty_roesler(get_int(params, "k"));
        const auto variant = family == "gap" ? mstd::GapVariant::one_to_k : mstd::GapVariant::zero_to_k;
        return mstd::construct_gap(gap_base_from_params(params), get_int(params, "k"), variant);
    }();
    json verification = mstd::io::to_json(c.delta);
    verification["a_star"] = c.a_star;
    verification["adjoined"] = c.adjoined;
    verification["family"] = family;
    verification["params"] = params;
    return json{{"set", mstd::io::to_json(c.set)}, {"verification", verification}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and search for sets with more sums than differences"};
    app.require_subcommand(1);

    std::string family;
    std::string params_text;
    auto* construct = app.add_subcommand("construct", "Build a member of an MSTD family");
    construct->add_option("--family", family, "t1|t2|t3|gap|gap2|hr")
        ->required()
        ->check(CLI::IsMember({"t1", "t2", "t3", "gap", "gap2", "hr"}));
    construct->add_option("--params", params_text, "Family parameters as JSON")->required();

    std::string input_path;
    std::int64_t t_max = 16;
    std::int64_t cap_l = 2;
    auto* embed = app.add_subcommand("embed", "Embed a group MSTD set into the integers");
    embed->add_option("--input", input_path, "GroupSubset JSON file, or - for stdin")->required();
    embed->add_option("--t-max", t_max, "Largest lattice scale to try");
    embed->add_option("--cap-l", cap_l, "Bound L on h+k preserved by the linearization");

    int n = 0;
    bool table = false;
    unsigned threads = 0;
    auto* count = app.add_subcommand("count", "Count covering members of Omega in Z/n x Z/2");
    count->add_option("--n", n)->required();
    count->add_flag("--table", table, "Include the per-element phi(g) table");
    count->add_option("--threads", threads, "Worker threads (0 = all cores)");

    std::string strategy = "first";
    std::uint64_t seed = 0;
    std::uint64_t max_draws = std::uint64_t{1} << 16;
    auto* group_search = app.add_subcommand("group-search", "Find a group MSTD set in Omega");
    group_search->add_option("--n", n)->required();
    group_search->add_option("--strategy", strategy)->check(CLI::IsMember({"first", "random"}));
    group_search->add_option("--seed", seed);
    group_search->add_option("--max-draws", max_draws);

    mstd::SpectrumOptions spec_opts;
    spec_opts.max_size = -1;
    std::string format = "json";
    auto* spectrum = app.add_subcommand("spectrum", "Exhaustive n(A) spectrum over subsets of [0,N]");
    spectrum->add_option("--range-max", spec_opts.range_max)->required();
    spectrum->add_option("--min-size", spec_opts.min_size);
    spectrum->add_option("--max-size", spec_opts.max_size, "Defaults to range-max + 1");
    spectrum->add_option("--threads", spec_opts.threads);
    spectrum->add_option("--budget", spec_opts.budget);
    spectrum->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    std::string set_text;
    auto* delta = app.add_subcommand("delta", "Report |A+A|, |A-A| and n(A) for one set");
    auto* set_opt = delta->add_option("--set", set_text, "Space-separated ascending integers");
    delta->add_option("--input", input_path, "IntSet JSON file, or - for stdin")->excludes(set_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (*construct) {
            out = run_construct(family, parse_json(params_text));
        } else if (*embed) {
            const auto group = mstd::io::group_subset_from_json(parse_json(read_input(input_path)));
            const auto r = mstd::embed_pipeline(group, t_max, cap_l);
            out = {{"t_used", r.t_used},
                   {"m_used", r.m_used},
                   {"set", mstd::io::to_json(r.set)},
                   {"delta", r.delta.delta}};
        } else if (*count) {
            out = mstd::io::to_json(mstd::psi_exact(n, threads), table);
        } else if (*group_search) {
            const auto s = strategy == "first" ? mstd::WitnessStrategy::first()
                                               : mstd::WitnessStrategy{mstd::WitnessStrategy::Kind::random,
                                                                       seed, max_draws};
            out = mstd::io::to_json(mstd::find_group_mstd(n, s));
        } else if (*spectrum) {
            if (spec_opts.max_size < 0) spec_opts.max_size = spec_opts.range_max + 1;
            const auto r = mstd::exhaustive_spectrum(spec_opts);
            if (format == "csv") {
                std::cout << mstd::io::to_csv(r);
                return 0;
            }
            out = mstd::io::to_json(r);
        } else if (*delta) {
            const mstd::IntSet a = input_path.empty()
                                       ? mstd::io::parse_int_set_text(set_text)
                                       : mstd::io::int_set_from_json(parse_json(read_input(input_path)));
            out = mstd::io::to_json(mstd::mstd_delta(a));
            out["is_mstd"] = out["delta"].get<std::int64_t>() > 0;
        }
        std::cout << out.dump(2) << '\n';
    } catch (const mstd::PipelineError& e) {
        std::cerr << json{{"error", e.what()}, {"stage", e.stage()}}.dump() << '\n';
        return 1;
    } catch (const mstd::ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "parse"}}.dump() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return 1;
    }
    return 0;
}
