// eostrata: command-line front end.
//
// Exit codes: 0 when every --assert check passes, 1 when one fails,
// 2 for invalid input or an exceeded enumeration ceiling.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eostrata/report.hpp"

using namespace eostrata;

namespace {

struct Output {
    std::string format = "json";
    std::string path;
    std::vector<std::string> asserts;
};

void add_output_options(CLI::App* cmd, Output& out)
{
    cmd->add_option("--format", out.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--out", out.path, "output file (default stdout)");
    cmd->add_option("--assert", out.asserts, "checks that decide the exit code")->delimiter(',');
}

int emit(const std::string& command, const Output& out, const std::function<Json()>& compute)
{
    const auto start = std::chrono::steady_clock::now();
    const Json payload = compute();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Json env = envelope(command, payload, seconds);
    const auto failed = failed_assertions(payload, out.asserts);

    std::string text;
    if (out.format == "json") {
        text = env.dump(2) + "\n";
    } else if (out.format == "dot") {
        text = hasse_dot(payload);
    } else {
        text = "command: " + command + "\n" + render_text(payload) + "payload_hash: " + env["payload_hash"].get<std::string>() + "\n";
    }
    if (out.path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + out.path);
        f << text;
    }

    for (const std::string& name : out.asserts) {
        const bool ok = std::find(failed.begin(), failed.end(), name) == failed.end();
        std::cerr << "assert " << name << ": " << (ok ? "PASS" : "FAIL") << " (" << payload["checks"][name]["detail"].get<std::string>() << ")\n";
    }
    return failed.empty() ? 0 : 1;
}

std::pair<GroupKind, int> parse_group(const std::string& g)
{
    if (g == "gl1") return {GroupKind::GL, 1};
    if (g == "gl2") return {GroupKind::GL, 2};
    if (g == "gl3") return {GroupKind::GL, 3};
    if (g == "sl2") return {GroupKind::SL, 2};
    throw std::invalid_argument("unknown group '" + g + "' (gl1, gl2, gl3, sl2)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zip strata, Clifford pairings, F-zips and orbit enumeration"};
    app.require_subcommand(1);
    Output out;
    std::function<int()> run;

    int n = 0;
    auto* strata = app.add_subcommand("strata", "strata of the CSpin zip datum for SO(n+2)");
    strata->add_option("--n", n, "n >= 1")->required();
    add_output_options(strata, out);
    strata->callback([&] {
        run = [&] {
            if (n < 1 || n > 14) throw std::invalid_argument("--n must lie in [1, 14]");
            return emit("strata", out, [&] { return strata_payload(cspin_strata(n)); });
        };
    });

    std::string family;
    int rank = 0;
    std::vector<int> J;
    std::vector<int> phi;
    std::optional<int> dim_p;
    auto* poset = app.add_subcommand("poset", "stratum poset of a zip datum (J, phi)");
    poset->add_option("--family", family, "A, B or D")->required();
    poset->add_option("--rank", rank)->required();
    poset->add_option("--J", J, "generator labels")->delimiter(',');
    poset->add_option("--phi", phi, "diagram automorphism as images of 1..rank")->delimiter(',');
    poset->add_option("--dim-p", dim_p, "dim P, to report orbit dimensions");
    add_output_options(poset, out);
    poset->callback([&] {
        run = [&] {
            return emit("poset", out, [&] {
                CoxeterSystem sys(parse_family(family), rank);
                ZipDatum d = phi.empty() ? build_zip_datum(sys, make_subset(sys, J)) : build_zip_datum(sys, make_subset(sys, J), phi);
                return poset_payload(strata_poset(d, dim_p));
            });
        };
    });

    std::string field = "Q";
    std::vector<long long> coeffs;
    auto* types = app.add_subcommand("types", "orbits of the Galois action on the scheme of types");
    types->add_option("--field", field, "Q or q:<odd prime>");
    types->add_option("--coeffs", coeffs, "a_1..a_N")->delimiter(',')->required();
    add_output_options(types, out);
    types->callback([&] {
        run = [&] {
            return emit("types", out, [&] {
                FieldSpec f = parse_field(field);
                if (f.k != 1) throw std::invalid_argument("types needs Q or a prime field");
                return types_payload(scheme_of_types({BaseField{f.p}, coeffs}));
            });
        };
    });

    int dim = 0;
    auto* clifford = app.add_subcommand("clifford", "trace, lambda-pairing, positivity and Lie algebras");
    clifford->add_option("--dim", dim, "N")->required();
    clifford->add_option("--coeffs", coeffs, "c_1..c_N (default all 1)")->delimiter(',');
    clifford->add_option("--field", field, "Q or q:<prime power>");
    add_output_options(clifford, out);
    clifford->callback([&] {
        run = [&] {
            if (coeffs.empty()) coeffs.assign(dim > 0 ? dim : 0, 1);
            if (static_cast<int>(coeffs.size()) != dim)
                throw std::invalid_argument("--dim " + std::to_string(dim) + " but " + std::to_string(coeffs.size()) + " coefficients");
            return emit("clifford", out, [&] { return clifford_payload(coeffs, parse_field(field)); });
        };
    });

    int max_ext = 4;
    auto* fzip = app.add_subcommand("fzip", "F-zip computations");
    fzip->require_subcommand(1);
    auto* classify = fzip->add_subcommand("classify", "classify 2-dimensional F-zips with weights {0,1}");
    int fzip_dim = 2;
    std::string fzip_field = "q:2";
    classify->add_option("--dim", fzip_dim, "only 2 is supported");
    classify->add_option("--field", fzip_field, "q:<prime power>");
    classify->add_option("--max-ext", max_ext, "largest extension degree searched");
    add_output_options(classify, out);
    classify->callback([&] {
        run = [&] {
            if (fzip_dim != 2) throw std::invalid_argument("classification is implemented for --dim 2 only");
            if (max_ext < 1) throw std::invalid_argument("--max-ext must be positive");
            return emit("fzip classify", out, [&] {
                FieldSpec f = parse_field(fzip_field);
                if (f.rational()) throw std::invalid_argument("F-zips need a finite field");
                return fzip_payload(classify_weight01_dim2(FiniteField::get(f.p, f.k), max_ext));
            });
        };
    });

    std::string group = "gl2";
    std::string oracle_field = "q:2";
    std::vector<int> mu;
    int oracle_ext = 4;
    auto* oracle = app.add_subcommand("oracle", "brute-force E-orbit classes on G(F_q)");
    oracle->add_option("--group", group, "gl1, gl2, gl3 or sl2");
    oracle->add_option("--field", oracle_field, "q:<prime power>");
    oracle->add_option("--mu", mu, "cocharacter weights (default 1,0,...)")->delimiter(',');
    oracle->add_option("--max-ext", oracle_ext, "largest extension degree searched");
    add_output_options(oracle, out);
    oracle->callback([&] {
        run = [&] {
            return emit("oracle", out, [&] {
                auto [kind, rank_n] = parse_group(group);
                if (mu.empty()) {
                    mu.assign(rank_n, 0);
                    mu[0] = 1;
                }
                FieldSpec f = parse_field(oracle_field);
                if (f.rational()) throw std::invalid_argument("the oracle needs a finite field");
                ZipGroupDatum d = make_zip_group(kind, rank_n, mu, FiniteField::get(f.p, f.k));
                return oracle_payload(d, orbit_classes(d, oracle_ext));
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        return run();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
