// Copyright 2026 The ccsurf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "ccsurf/codemap.h"
#include "ccsurf/decode.h"
#include "ccsurf/error.h"
#include "ccsurf/simulate.h"
#include "json.hpp"

using namespace ccsurf;
using nlohmann::ordered_json;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Color color_arg(const std::string& s) {
    const auto c = parse_color(s);
    if (!c) {
        throw UsageError("--color must be r, g or b (got '" + s + "')");
    }
    return *c;
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path + " for writing");
    }
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string report_out(const ValidationReport& rep, const std::string& format) {
    return format == "json" ? rep.to_json() : rep.to_text();
}

std::vector<double> parse_ps(const std::string& list) {
    std::vector<double> ps;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            continue;
        }
        std::size_t used = 0;
        double p = 0;
        try {
            p = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || !(p >= 0.0 && p <= 1.0)) {
            throw UsageError("--p entries must be probabilities in [0, 1] (got '" + item + "')");
        }
        ps.push_back(p);
    }
    return ps;
}

MapConventions conventions_for(const Colex& g, Color c, const std::optional<std::uint64_t>& random_seed) {
    return random_seed ? MapConventions::random(g, c, *random_seed) : MapConventions::defaults(g, c);
}

std::string pair_image_text(const SurfaceGraph& sg, const PauliOp& img) {
    const auto s = img.str();
    return s.substr(0, sg.num_edges()) + " | " + s.substr(sg.num_edges());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Color codes as pairs of surface codes: lattices, the map, verification, decoding."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("ccsurf ") + CCSURF_VERSION + " (map format " +
                                          std::to_string(kMapFormatVersion) + ")");
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (default: all available)")->check(CLI::NonNegativeNumber);

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Generate and validate 2-colexes");
    lattice->require_subcommand(1);
    auto* gen = lattice->add_subcommand("gen", "Generate a standard lattice");
    std::string family = "hex";
    int rows = 3;
    int cols = 3;
    std::string out_path;
    gen->add_option("--family", family, "hex or sqoct")->check(CLI::IsMember({"hex", "sqoct"}));
    gen->add_option("--rows", rows, "Rows of faces (hex) or octagons (sqoct)");
    gen->add_option("--cols", cols, "Columns of faces (hex) or octagons (sqoct)");
    gen->add_option("--out", out_path, "Output file (default stdout)");

    auto* validate = lattice->add_subcommand("validate", "Check every colex invariant");
    std::string in_path;
    std::string format = "text";
    validate->add_option("file", in_path, "Lattice JSON")->required();
    validate->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // code
    auto* code = app.add_subcommand("code", "Stabilizer codes on a lattice");
    code->require_subcommand(1);
    std::string which = "color";
    std::string color_name = "r";
    auto* params = code->add_subcommand("params", "Print n, k and (for n <= 24) d");
    auto* stabs = code->add_subcommand("stabilizers", "List generators");
    for (auto* sub : {params, stabs}) {
        sub->add_option("--in", in_path, "Lattice JSON")->required();
        sub->add_option("--code", which, "color, surface or pair")->check(CLI::IsMember({"color", "surface", "pair"}));
        sub->add_option("--color", color_name, "Contraction color for surface codes");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    }

    // map
    auto* map = app.add_subcommand("map", "Contract, build, verify and apply the map");
    map->require_subcommand(1);
    std::optional<std::uint64_t> conv_seed;
    auto* mcontract = map->add_subcommand("contract", "Contract one color class");
    mcontract->add_option("--in", in_path, "Lattice JSON")->required();
    mcontract->add_option("--color", color_name, "Color to contract (r, g, b)");
    mcontract->add_option("--out", out_path, "Output file (default stdout)");

    auto* mbuild = map->add_subcommand("build", "Build the map and write a map file");
    mbuild->add_option("--in", in_path, "Lattice JSON")->required();
    mbuild->add_option("--color", color_name, "Contraction color (r, g, b)");
    mbuild->add_option("--out", out_path, "Map file")->required();
    mbuild->add_option("--random-conventions", conv_seed, "Draw per-face conventions from this seed");

    auto* mverify = map->add_subcommand("verify", "Run every structural check on a map");
    std::string map_path;
    mverify->add_option("--in", in_path, "Lattice JSON the map must belong to");
    mverify->add_option("--map", map_path, "Map file")->required();
    mverify->add_option("--report,--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* mimage = map->add_subcommand("image", "Image of a Pauli on the two surface copies");
    std::string pauli;
    mimage->add_option("--map", map_path, "Map file")->required();
    mimage->add_option("--pauli", pauli, "Pauli string over I, X, Y, Z")->required();
    mimage->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // decode
    auto* decode = app.add_subcommand("decode", "Decode a color-code syndrome through the map");
    std::string syndrome_path;
    std::string error_text;
    std::string matcher_name = "blossom";
    decode->add_option("--map", map_path, "Map file")->required();
    auto* syn_opt = decode->add_option("--syndrome", syndrome_path, "File of 0/1 syndrome bits, generator order");
    auto* err_opt = decode->add_option("--error", error_text, "Error as a Pauli string");
    syn_opt->excludes(err_opt);
    decode->add_option("--matcher", matcher_name, "blossom or greedy")->check(CLI::IsMember({"blossom", "greedy"}));

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical failure rates");
    std::string p_list;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    bool no_timing = false;
    simulate->add_option("--in", in_path, "Lattice JSON")->required();
    simulate->add_option("--color", color_name, "Contraction color (r, g, b)");
    simulate->add_option("--p", p_list, "Comma-separated error probabilities")->required();
    simulate->add_option("--trials", trials, "Trials per probability")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed, "Seed");
    simulate->add_option("--out", out_path, "CSV file (default stdout)");
    simulate->add_option("--matcher", matcher_name, "blossom or greedy")->check(CLI::IsMember({"blossom", "greedy"}));
    simulate->add_option("--random-conventions", conv_seed, "Draw per-face conventions from this seed");
    simulate->add_flag("--no-timing", no_timing, "Write 0 in the seconds column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (threads > 0) {
            omp_set_num_threads(threads);
        }
        const Matcher matcher = matcher_name == "greedy" ? Matcher::Greedy : Matcher::Blossom;

        if (*gen) {
            const auto g = family == "hex" ? build_hexagonal_torus(rows, cols) : build_square_octagon_torus(rows, cols);
            write_text(out_path, save_colex(g));
            return 0;
        }
        if (*validate) {
            // Loading validates; report the full table either way.
            std::unique_ptr<Colex> g;
            try {
                g = std::make_unique<Colex>(load_colex_file(in_path));
            } catch (const ValidationError& e) {
                std::cerr << e.what() << '\n';
                return 1;
            }
            const auto rep = validate_colex(*g);
            std::cout << report_out(rep, format);
            return rep.all_passed() ? 0 : 1;
        }
        if (*params || *stabs) {
            const auto g = load_colex_file(in_path);
            const Color c = color_arg(color_name);
            const auto sc = which == "color" ? color_code(g)
                            : which == "surface" ? surface_code(contract(g, c))
                                                 : surface_pair_code(contract(g, c));
            if (*params) {
                const auto cp = code_params(sc);
                if (format == "json") {
                    ordered_json j{{"n", cp.n}, {"k", cp.k}};
                    j["d"] = cp.d ? ordered_json(*cp.d) : ordered_json(nullptr);
                    std::cout << j.dump(2) << '\n';
                } else {
                    std::cout << "n=" << cp.n << " k=" << cp.k << " d=" << (cp.d ? std::to_string(*cp.d) : "unknown")
                              << '\n';
                }
            } else if (format == "json") {
                ordered_json j = ordered_json::array();
                for (std::size_t i = 0; i < sc.num_generators(); ++i) {
                    j.push_back({{"origin", sc.origins()[i].str()}, {"pauli", sc.generator(i).str()}});
                }
                std::cout << j.dump(2) << '\n';
            } else {
                for (std::size_t i = 0; i < sc.num_generators(); ++i) {
                    std::cout << sc.origins()[i].str() << ' ' << sc.generator(i).str() << '\n';
                }
            }
            return 0;
        }
        if (*mcontract) {
            const auto g = load_colex_file(in_path);
            write_text(out_path, save_surface(contract(g, color_arg(color_name))));
            return 0;
        }
        if (*mbuild) {
            const auto g = load_colex_file(in_path);
            const Color c = color_arg(color_name);
            save_map_file(make_artifact(g, conventions_for(g, c, conv_seed)), out_path);
            return 0;
        }
        if (*mverify) {
            const auto a = load_map_file(map_path);
            const auto& cm = a.code_map;
            if (!in_path.empty()) {
                const auto g = load_colex_file(in_path);
                if (colex_fingerprint(g) != colex_fingerprint(cm.colex)) {
                    std::cerr << "error: map " << map_path << " was built for a different lattice than " << in_path
                              << '\n';
                    return 1;
                }
            }
            auto rep = verify_equivalence(cm);
            const auto closed = verify_closed_forms(cm);
            rep.append(closed.report, "closed-form/");
            bool bc_ok = true;
            try {
                bc_ok = basis_change(cm) == a.basis_change;
            } catch (const InternalError&) {
                bc_ok = false;
            }
            rep.add("stored-basis-change", bc_ok);
            std::cout << report_out(rep, format);
            if (format == "text") {
                for (const auto& d : closed.discrepancies) {
                    std::cout << "note: " << d << '\n';
                }
            }
            return rep.all_passed() ? 0 : 1;
        }
        if (*mimage) {
            const auto a = load_map_file(map_path);
            const auto& cm = a.code_map;
            const auto p = PauliOp::from_string(cm.map.domain(), pauli);
            const auto img = cm.map.apply(p);
            const auto s = img.str();
            const auto e = cm.surface.num_edges();
            if (format == "json") {
                std::cout << ordered_json{{"pauli", p.str()}, {"copy1", s.substr(0, e)}, {"copy2", s.substr(e)}}.dump(2)
                          << '\n';
            } else {
                std::cout << pair_image_text(cm.surface, img) << '\n';
            }
            return 0;
        }
        if (*decode) {
            if (syndrome_path.empty() && error_text.empty()) {
                throw UsageError("decode needs --syndrome or --error");
            }
            const ColorDecoder dec(load_map_file(map_path), matcher);
            DecodeOutcome out;
            if (!error_text.empty()) {
                out = dec.decode_error(PauliOp::from_string(dec.color_code().space(), error_text));
            } else {
                std::string bits;
                for (char ch : read_text(syndrome_path)) {
                    if (ch == '0' || ch == '1') {
                        bits.push_back(ch);
                    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                        throw ParseError(std::string("syndrome file may only hold 0, 1 and whitespace, found '") + ch +
                                         "'");
                    }
                }
                if (bits.size() != dec.color_code().num_generators()) {
                    throw ParseError("syndrome has " + std::to_string(bits.size()) + " bits, the code has " +
                                     std::to_string(dec.color_code().num_generators()) + " generators");
                }
                out = decode_color(dec, Syndrome{dec.color_code().space(), BitVec::from_string(bits)});
            }
            ordered_json j{{"correction", out.correction.str()}, {"syndromeMatches", out.syndrome_matches}};
            j["success"] = out.success ? ordered_json(*out.success) : ordered_json(nullptr);
            j["logicalClass"] = out.logical_class ? ordered_json(*out.logical_class) : ordered_json(nullptr);
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*simulate) {
            const auto ps = parse_ps(p_list);
            const auto g = load_colex_file(in_path);
            const Color c = color_arg(color_name);
            const ColorDecoder dec(make_artifact(g, conventions_for(g, c, conv_seed)), matcher);
            write_text(out_path, to_csv(sweep(dec, ps, trials, seed), !no_timing));
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
