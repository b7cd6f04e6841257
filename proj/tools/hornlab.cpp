// hornlab: exact computation with Horn inequalities and their scaling limits.
//
// Subcommands: enumerate, check, approximate, oracle {sample|soundness|sudoku|
// asymptotic}, redundancy, sc. All exact quantities print as "p/q" strings;
// floats appear only in oracle outputs. Exit codes: 0 verdict computed (even
// "nonmember"), 1 usage error, 2 size-cap or precondition refusal, 3 internal
// invariant failure.

#include "hornlab/approx.hpp"
#include "hornlab/errors.hpp"
#include "hornlab/functional.hpp"
#include "hornlab/horn.hpp"
#include "hornlab/json_io.hpp"
#include "hornlab/oracle.hpp"
#include "hornlab/parallel.hpp"
#include "hornlab/screl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hornlab;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw PreconditionError("cannot open output file: " + out_path);
    }
    out << text;
    if (text.empty() || text.back() != '\n') {
        out << '\n';
    }
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stod(item));
    }
    if (out.empty()) {
        throw PreconditionError("expected a comma-separated list of numbers");
    }
    return out;
}

std::vector<std::pair<int, int>> parse_family(const std::string& spec) {
    std::vector<std::pair<int, int>> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            throw PreconditionError("family entries must look like n:r");
        }
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    if (out.empty()) {
        throw PreconditionError("family must be nonempty");
    }
    return out;
}

Bitset parse_subset(const FiniteRelation& R, const std::string& csv) {
    Bitset A = 0;
    if (csv.empty()) {
        return A;
    }
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        int index = -1;
        for (int x = 0; x < static_cast<int>(R.labels.size()); ++x) {
            if (R.labels[x] == item) {
                index = x;
                break;
            }
        }
        if (index < 0) {
            try {
                index = std::stoi(item);
            } catch (const std::exception&) {
                throw PreconditionError("unknown element: '" + item + "'");
            }
        }
        if (index < 0 || index >= R.size) {
            throw PreconditionError("element index out of range: '" + item + "'");
        }
        A |= Bitset(1) << index;
    }
    return A;
}

Json subset_to_json(const FiniteRelation& R, Bitset A) {
    Json names = Json::array();
    for (int x = 0; x < R.size; ++x) {
        if ((A >> x) & 1U) {
            if (!R.labels.empty()) {
                names.push_back(R.labels[x]);
            } else {
                names.push_back(x);
            }
        }
    }
    return names;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
    int n = 0, r = 0;
    std::string set = "T";
    std::string out;
};

int run_enumerate(const EnumerateArgs& args) {
    const auto triples = args.set == "U" ? enumerate_U(args.n, args.r)
                                         : enumerate_T(args.n, args.r);
    std::string text;
    for (const auto& h : triples) {
        text += to_json(h).dump();
        text += '\n';
    }
    write_output(text, args.out);
    return 0;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
    std::string input;
    int depth = 5;
    std::string witness_policy = "first";
    std::string out;
};

int run_check(const CheckArgs& args) {
    const QuantileTriple Q = quantile_triple_from_json(load_json_file(args.input));
    const WitnessPolicy policy = args.witness_policy == "max" ? WitnessPolicy::max_violation
                                                              : WitnessPolicy::first;
    const MembershipVerdict verdict = is_member_H_desk(Q, args.depth, policy);
    write_output(to_json(verdict).dump(2), args.out);
    return 0;
}

// -------------------------------------------------------------- approximate

struct ApproximateArgs {
    std::string input;
    int n = 0, r = 0;
    std::string eps;
    bool strict_floor = false;
    std::string out;
};

int run_approximate(const ApproximateArgs& args) {
    const QuantileTriple Q = quantile_triple_from_json(load_json_file(args.input));
    const Rational eps =
        args.eps.empty() ? default_epsilon(args.n, args.r) : parse_rational(args.eps);
    const ApproxReport report = approximate_in_Tnr(Q, args.n, args.r, eps, args.strict_floor);
    write_output(to_json(report).dump(2), args.out);
    return 0;
}

// ------------------------------------------------------------------- oracle

struct OracleSampleArgs {
    std::string alpha, beta;
    std::uint64_t seed = 1;
    std::string out;
};

int run_oracle_sample(const OracleSampleArgs& args) {
    const auto alpha = parse_double_list(args.alpha);
    const auto beta = parse_double_list(args.beta);
    const SpectraSample s = sample_horn_point(alpha, beta, args.seed);
    write_output(to_json(s).dump(2), args.out);
    return 0;
}

struct OracleSoundnessArgs {
    int n = 4;
    int seeds = 100;
    std::uint64_t seed = 1;
    int depth = 0; // 0 = min(n, 6)
    double tol = 1e-9;
    std::string out, csv;
};

int run_oracle_soundness(const OracleSoundnessArgs& args) {
    const int depth = args.depth > 0 ? args.depth : std::min(args.n, 6);
    // Warm the witness cache before the parallel scan.
    for (int m = 2; m <= depth; ++m) {
        for (int r = 1; r <= m - 1; ++r) {
            cached_T(m, r);
        }
    }
    struct Row {
        std::uint64_t seed;
        Rational min_margin;
        int margins_checked;
        int violations;
    };
    std::vector<Row> rows(args.seeds);
    parallel_for(static_cast<std::size_t>(args.seeds), [&](std::size_t i) {
        std::mt19937_64 rng(derive_seed(args.seed, 2 * i));
        const auto alpha = eig_hermitian(random_hermitian(args.n, rng));
        const auto beta = eig_hermitian(random_hermitian(args.n, rng));
        const SpectraSample s =
            sample_horn_point(alpha, beta, derive_seed(args.seed, 2 * i + 1));
        const SoundnessReport report = soundness_check(s, depth, args.tol);
        rows[i] = Row{s.seed, report.min_margin, report.margins_checked, report.violations};
    });

    int total_margins = 0, total_violations = 0;
    Rational min_margin;
    bool have_min = false;
    std::string csv_text = "sample,seed,min_margin,margins_checked,violations\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        total_margins += rows[i].margins_checked;
        total_violations += rows[i].violations;
        if (!have_min || rows[i].min_margin < min_margin) {
            min_margin = rows[i].min_margin;
            have_min = true;
        }
        csv_text += std::to_string(i) + "," + std::to_string(rows[i].seed) + "," +
                    format_rational(rows[i].min_margin) + "," +
                    std::to_string(rows[i].margins_checked) + "," +
                    std::to_string(rows[i].violations) + "\n";
    }
    if (!args.csv.empty()) {
        write_output(csv_text, args.csv);
    }
    const Json summary{{"n", args.n},
                       {"seeds", args.seeds},
                       {"depth", depth},
                       {"tol", args.tol},
                       {"margins_checked", total_margins},
                       {"violations", total_violations},
                       {"min_margin", have_min ? format_rational(min_margin) : "0"}};
    write_output(summary.dump(2), args.out);
    return 0;
}

struct OracleSudokuArgs {
    int n = 4;
    int seeds = 100;
    std::uint64_t seed = 1;
    std::string out;
};

int run_oracle_sudoku(const OracleSudokuArgs& args) {
    std::vector<char> ok(args.seeds);
    parallel_for(static_cast<std::size_t>(args.seeds), [&](std::size_t i) {
        ok[i] = sudoku_check(args.n, derive_seed(args.seed, i)) ? 1 : 0;
    });
    int passed = 0;
    for (char c : ok) {
        passed += c;
    }
    const Json summary{
        {"n", args.n}, {"seeds", args.seeds}, {"passed", passed}, {"failed", args.seeds - passed}};
    write_output(summary.dump(2), args.out);
    return 0;
}

struct OracleAsymptoticArgs {
    std::string kind;
    std::string sample_file;
    std::string alpha, beta;
    std::uint64_t seed = 1;
    std::string a, b, x, mu;
    std::string inner_file;
    std::string out;
};

int run_oracle_asymptotic(const OracleAsymptoticArgs& args) {
    SpectraSample s;
    if (!args.sample_file.empty()) {
        s = spectra_sample_from_json(load_json_file(args.sample_file));
    } else {
        s = sample_horn_point(parse_double_list(args.alpha), parse_double_list(args.beta),
                              args.seed);
    }
    const NormalizedSample normalized = normalize_sample(s);
    Json out{{"kind", args.kind},
             {"map",
              {{"s", format_rational(normalized.scale)},
               {"a", format_rational(normalized.a)},
               {"b", format_rational(normalized.b)}}}};
    if (args.kind == "weyl") {
        const Rational margin = weyl_margin(normalized.triple, parse_rational(args.a),
                                            parse_rational(args.b));
        out["margin"] = format_rational(margin);
        out["margin_float"] = static_cast<double>(margin);
    } else if (args.kind == "kyfan") {
        const Rational margin = kyfan_margin(normalized.triple, parse_rational(args.x));
        out["margin"] = format_rational(margin);
        out["margin_float"] = static_cast<double>(margin);
    } else if (args.kind == "lidskii") {
        const StepQuantile inner = step_quantile_from_json(load_json_file(args.inner_file));
        const Rational margin =
            lidskii_margin(normalized.triple, inner, parse_rational(args.mu));
        out["margin"] = format_rational(margin);
        out["margin_float"] = static_cast<double>(margin);
    } else {
        throw PreconditionError("kind must be weyl, kyfan or lidskii");
    }
    write_output(out.dump(2), args.out);
    return 0;
}

// --------------------------------------------------------------- redundancy

struct RedundancyArgs {
    std::string target;
    std::string violating;
    std::string family;
    std::string eps;
    std::string out;
};

int run_redundancy(const RedundancyArgs& args) {
    const HornTriple target = horn_triple_from_json(load_json_file(args.target));
    const QuantileTriple violating = quantile_triple_from_json(load_json_file(args.violating));
    const Margin target_margin = horn_margin(violating, target);
    if (target_margin.value >= 0) {
        throw PreconditionError("redundancy: the supplied triple satisfies the target inequality");
    }
    const QuantileTriple target_embedded = embed(target);

    Json attempts = Json::array();
    std::optional<Json> found;
    for (const auto& [nk, rk] : parse_family(args.family)) {
        const Rational eps =
            args.eps.empty() ? default_epsilon(nk, rk) : parse_rational(args.eps);
        Json attempt{{"n", nk}, {"r", rk}, {"eps", format_rational(eps)}};
        try {
            const ApproxReport report = approximate_in_Tnr(target_embedded, nk, rk, eps);
            const Margin witness_margin = horn_margin(violating, report.output);
            attempt["witness"] = to_json(report.output);
            attempt["witness_in_T"] = report.in_T_verified;
            attempt["witness_margin"] = format_rational(witness_margin.value);
            Json distances = Json::array();
            for (const auto& d : report.distances) {
                distances.push_back(format_rational(d));
            }
            attempt["inequality_distance"] = distances;
            attempt["ratio_gap"] =
                format_rational(Rational(target.r, target.n) - Rational(rk, nk));
            if (!found && report.in_T_verified && witness_margin.value < 0) {
                found = attempt;
            }
        } catch (const PreconditionError& e) {
            attempt["error"] = e.what();
        }
        attempts.push_back(attempt);
    }

    Json out{{"target", to_json(target)},
             {"target_margin", format_rational(target_margin.value)},
             {"found", found.has_value()},
             {"attempts", attempts}};
    if (found) {
        out["witness"] = *found;
    }
    write_output(out.dump(2), args.out);
    return 0;
}

// ----------------------------------------------------------------------- sc

struct ScArgs {
    std::string relation;
    std::string mode = "classify";
    std::string subset;
    std::string out;
};

int run_sc(const ScArgs& args) {
    const FiniteRelation R = relation_from_json(load_json_file(args.relation));
    Json out{{"size", R.size}, {"mode", args.mode}};
    if (args.mode == "classify") {
        const SubsetVerdict v = classify(R, parse_subset(R, args.subset));
        out["subset"] = subset_to_json(R, v.subset);
        out["friendly"] = v.friendly;
        out["weakly_packed"] = v.weakly_packed;
        out["strongly_packed"] = v.strongly_packed;
        out["weak_sc"] = v.weak_sc;
        out["strong_sc"] = v.strong_sc;
    } else if (args.mode == "weak" || args.mode == "strong") {
        const auto sets =
            enumerate_sc(R, args.mode == "weak" ? ScMode::weak : ScMode::strong);
        Json list = Json::array();
        for (Bitset A : sets) {
            list.push_back(subset_to_json(R, A));
        }
        out["sets"] = list;
    } else if (args.mode == "extend") {
        const Bitset extended = extend_to_weak_sc(R, parse_subset(R, args.subset));
        out["extended"] = subset_to_json(R, extended);
    } else if (args.mode == "unique") {
        const UniqueScResult result = unique_weak_sc_containing(R, parse_subset(R, args.subset));
        switch (result.kind) {
        case UniqueScResult::unique:
            out["result"] = "unique";
            out["set"] = subset_to_json(R, result.set);
            break;
        case UniqueScResult::multiple: out["result"] = "multiple"; break;
        case UniqueScResult::none_friendly: out["result"] = "none-friendly"; break;
        }
    } else {
        throw PreconditionError("sc mode must be classify, weak, strong, extend or unique");
    }
    write_output(out.dump(2), args.out);
    return 0;
}

// ------------------------------------------------------------------- config

// Applies a JSON config file as defaults: any key not already present on the
// command line is appended as --key=value. Flags always win.
std::vector<std::string> apply_config(std::vector<std::string> argv) {
    std::string config_path;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (argv[i] == "--config" && i + 1 < argv.size()) {
            config_path = argv[i + 1];
            argv.erase(argv.begin() + static_cast<std::ptrdiff_t>(i),
                       argv.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        }
        if (argv[i].rfind("--config=", 0) == 0) {
            config_path = argv[i].substr(9);
            argv.erase(argv.begin() + static_cast<std::ptrdiff_t>(i));
            break;
        }
    }
    if (config_path.empty()) {
        return argv;
    }
    const Json config = load_json_file(config_path);
    if (!config.is_object()) {
        throw PreconditionError("config file must hold a JSON object");
    }
    for (const auto& [key, value] : config.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& arg : argv) {
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
                present = true;
                break;
            }
        }
        if (present) {
            continue;
        }
        if (value.is_boolean()) {
            if (value.get<bool>()) {
                argv.push_back(flag);
            }
        } else if (value.is_string()) {
            argv.push_back(flag + "=" + value.get<std::string>());
        } else {
            argv.push_back(flag + "=" + value.dump());
        }
    }
    return argv;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Horn-inequality computations"};
    app.require_subcommand(1);

    EnumerateArgs enumerate_args;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "enumerate U^n_r or T^n_r");
    cmd_enumerate->add_option("--n", enumerate_args.n)->required();
    cmd_enumerate->add_option("--r", enumerate_args.r)->required();
    cmd_enumerate->add_option("--set", enumerate_args.set)
        ->check(CLI::IsMember({"U", "T"}));
    cmd_enumerate->add_option("--out", enumerate_args.out);

    CheckArgs check_args;
    auto* cmd_check = app.add_subcommand("check", "membership scan of a quantile triple");
    cmd_check->add_option("--input", check_args.input)->required();
    cmd_check->add_option("--depth", check_args.depth);
    cmd_check->add_option("--witness-policy", check_args.witness_policy)
        ->check(CLI::IsMember({"first", "max"}));
    cmd_check->add_option("--out", check_args.out);

    ApproximateArgs approximate_args;
    auto* cmd_approximate =
        app.add_subcommand("approximate", "approximate a triple by an element of T^n_r");
    cmd_approximate->add_option("--input", approximate_args.input)->required();
    cmd_approximate->add_option("--n", approximate_args.n)->required();
    cmd_approximate->add_option("--r", approximate_args.r)->required();
    cmd_approximate->add_option("--eps", approximate_args.eps);
    cmd_approximate->add_flag("--strict-floor", approximate_args.strict_floor);
    cmd_approximate->add_option("--out", approximate_args.out);

    auto* cmd_oracle = app.add_subcommand("oracle", "random-matrix ground truth");
    cmd_oracle->require_subcommand(1);

    OracleSampleArgs sample_args;
    auto* cmd_sample = cmd_oracle->add_subcommand("sample", "spectrum of diag(a) + U diag(b) U*");
    cmd_sample->add_option("--alpha", sample_args.alpha)->required();
    cmd_sample->add_option("--beta", sample_args.beta)->required();
    cmd_sample->add_option("--seed", sample_args.seed);
    cmd_sample->add_option("--out", sample_args.out);

    OracleSoundnessArgs soundness_args;
    auto* cmd_soundness =
        cmd_oracle->add_subcommand("soundness", "batch margin scan over seeded samples");
    cmd_soundness->add_option("--n", soundness_args.n);
    cmd_soundness->add_option("--seeds", soundness_args.seeds);
    cmd_soundness->add_option("--seed", soundness_args.seed);
    cmd_soundness->add_option("--depth", soundness_args.depth);
    cmd_soundness->add_option("--tol", soundness_args.tol);
    cmd_soundness->add_option("--out", soundness_args.out);
    cmd_soundness->add_option("--csv", soundness_args.csv);

    OracleSudokuArgs sudoku_args;
    auto* cmd_sudoku = cmd_oracle->add_subcommand("sudoku", "row/column sum grid property");
    cmd_sudoku->add_option("--n", sudoku_args.n);
    cmd_sudoku->add_option("--seeds", sudoku_args.seeds);
    cmd_sudoku->add_option("--seed", sudoku_args.seed);
    cmd_sudoku->add_option("--out", sudoku_args.out);

    OracleAsymptoticArgs asymptotic_args;
    auto* cmd_asymptotic =
        cmd_oracle->add_subcommand("asymptotic", "limiting Weyl / Ky Fan / Lidskii margins");
    cmd_asymptotic->add_option("--kind", asymptotic_args.kind)->required();
    cmd_asymptotic->add_option("--sample", asymptotic_args.sample_file);
    cmd_asymptotic->add_option("--alpha", asymptotic_args.alpha);
    cmd_asymptotic->add_option("--beta", asymptotic_args.beta);
    cmd_asymptotic->add_option("--seed", asymptotic_args.seed);
    cmd_asymptotic->add_option("--a", asymptotic_args.a);
    cmd_asymptotic->add_option("--b", asymptotic_args.b);
    cmd_asymptotic->add_option("--x", asymptotic_args.x);
    cmd_asymptotic->add_option("--mu", asymptotic_args.mu);
    cmd_asymptotic->add_option("--inner", asymptotic_args.inner_file);
    cmd_asymptotic->add_option("--out", asymptotic_args.out);

    RedundancyArgs redundancy_args;
    auto* cmd_redundancy =
        app.add_subcommand("redundancy", "replace a violated inequality by a nearby one");
    cmd_redundancy->add_option("--target", redundancy_args.target)->required();
    cmd_redundancy->add_option("--violating", redundancy_args.violating)->required();
    cmd_redundancy->add_option("--family", redundancy_args.family)->required();
    cmd_redundancy->add_option("--eps", redundancy_args.eps);
    cmd_redundancy->add_option("--out", redundancy_args.out);

    ScArgs sc_args;
    auto* cmd_sc = app.add_subcommand("sc", "self-characterising subsets of a finite relation");
    cmd_sc->add_option("--relation", sc_args.relation)->required();
    cmd_sc->add_option("--mode", sc_args.mode)
        ->check(CLI::IsMember({"classify", "weak", "strong", "extend", "unique"}));
    cmd_sc->add_option("--subset", sc_args.subset);
    cmd_sc->add_option("--out", sc_args.out);

    try {
        std::vector<std::string> arguments(argv + 1, argv + argc);
        arguments = apply_config(arguments);
        // CLI11 consumes arguments in reverse.
        std::reverse(arguments.begin(), arguments.end());
        app.parse(arguments);

        if (*cmd_enumerate) {
            return run_enumerate(enumerate_args);
        }
        if (*cmd_check) {
            return run_check(check_args);
        }
        if (*cmd_approximate) {
            return run_approximate(approximate_args);
        }
        if (*cmd_sample) {
            return run_oracle_sample(sample_args);
        }
        if (*cmd_soundness) {
            return run_oracle_soundness(soundness_args);
        }
        if (*cmd_sudoku) {
            return run_oracle_sudoku(sudoku_args);
        }
        if (*cmd_asymptotic) {
            return run_oracle_asymptotic(asymptotic_args);
        }
        if (*cmd_redundancy) {
            return run_redundancy(redundancy_args);
        }
        if (*cmd_sc) {
            return run_sc(sc_args);
        }
        std::cerr << "no subcommand selected\n";
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
