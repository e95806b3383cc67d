#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "degseq/characterize.hpp"
#include "degseq/graph.hpp"
#include "degseq/graphicality.hpp"
#include "degseq/oracle.hpp"
#include "degseq/patterns.hpp"
#include "degseq/sequence.hpp"
#include "degseq/sigma.hpp"

using namespace degseq;

namespace {

struct Options {
    std::string pattern;
    std::string sequence;
    std::string mode = "human";
    std::string method = "predicate";
    int n = 0;
};

bool machine(const Options& opt) { return opt.mode == "machine"; }

const TargetPattern& pattern_of(const Options& opt) {
    const TargetPattern* p = pattern_by_name(opt.pattern);
    if (!p) throw std::invalid_argument("unknown pattern '" + opt.pattern + "'");
    return *p;
}

std::string family_suffix(const FamilyMatch& m, bool machine_mode) {
    const char* key = m.kind == FamilyKind::kCond3 ? "t" : "i";
    if (machine_mode) {
        return " k=" + std::to_string(m.k) + " " + key + "=" + std::to_string(m.second);
    }
    return ", k=" + std::to_string(m.k) + ", " + key + "=" + std::to_string(m.second);
}

int report_verdict(const Verdict& v, const Options& opt) {
    if (v.potential) {
        std::cout << (machine(opt) ? "decision=YES" : "YES") << "\n";
        return 0;
    }
    const std::string id{condition_id(*v.violated)};
    if (machine(opt)) {
        std::cout << "decision=NO condition=" << id
                  << (v.family ? family_suffix(*v.family, true) : "") << "\n";
    } else {
        std::cout << "NO (condition " << id << (v.family ? family_suffix(*v.family, false) : "")
                  << ")\n";
    }
    return 1;
}

int run_check(const Options& opt) {
    const DegreeSequence seq = parse_sequence(opt.sequence);
    return report_verdict(check_pattern(seq, pattern_of(opt)), opt);
}

int run_realize(const Options& opt) {
    const DegreeSequence seq = parse_sequence(opt.sequence);
    const TargetPattern& pat = pattern_of(opt);
    const Verdict v = check_pattern(seq, pat);
    if (!v.potential) return report_verdict(v, opt);
    const SimpleGraph g = realize_with_pattern(seq, pat);
    const auto emb = find_embedding(g, pat);
    if (!emb) throw std::logic_error("built realization lost the pattern");
    std::cout << to_text(g) << "embed:";
    for (int h : emb->map) std::cout << " " << h;
    std::cout << "\n";
    return 0;
}

int run_graphic(const Options& opt) {
    const DegreeSequence seq = parse_sequence(opt.sequence);
    const bool eg = is_graphic_erdos_gallai(seq);
    const bool lo = is_graphic_lay_off(seq);
    const std::optional<bool> sd = is_graphic_small_degree(seq);
    if (eg != lo || (sd && *sd != eg)) {
        throw std::logic_error("graphicality deciders disagree on " + format_sequence(seq));
    }
    const auto word = [](bool b) { return b ? "yes" : "no"; };
    if (machine(opt)) {
        std::cout << "graphic=" << word(eg) << " erdos_gallai=" << word(eg)
                  << " lay_off=" << word(lo) << " small_degree=" << (sd ? word(*sd) : "na")
                  << "\n";
    } else {
        std::cout << word(eg);
        if (!eg && seq.sum() % 2 != 0) std::cout << " (odd degree sum)";
        std::cout << " [erdos-gallai " << word(eg) << ", lay-off " << word(lo)
                  << ", small-degree " << (sd ? word(*sd) : "n/a") << "]\n";
    }
    return eg ? 0 : 1;
}

int run_layoff(const Options& opt) {
    const DegreeSequence seq = parse_sequence(opt.sequence);
    const LayOffResult r = lay_off(seq);
    const std::string text = format_sequence(r.residual);
    if (machine(opt)) {
        std::cout << "residual=" << text << "\n";
    } else {
        std::cout << "residual: " << (r.residual.empty() ? "(empty)" : text) << "\n";
    }
    return 0;
}

int run_sigma(const Options& opt) {
    const Decider decider = opt.method == "oracle" ? Decider::kOracle : Decider::kPredicate;
    const SigmaResult r = compute_sigma(pattern_of(opt), opt.n, decider);
    const std::string witness = format_sequence(r.extremal_witness);
    const long long wsum = r.extremal_witness.sum();
    if (machine(opt)) {
        std::cout << "sigma=" << r.sigma_value << " n=" << r.n << " pattern=" << r.pattern
                  << " witness=" << witness << " witness_sigma=" << wsum << "\n";
    } else {
        std::cout << "sigma(" << r.pattern << ", " << r.n << ") = " << r.sigma_value << "\n"
                  << "extremal witness: " << witness << " (sigma " << wsum << ")\n";
    }
    return 0;
}

int run_crosscheck(const Options& opt) {
    if (opt.n > kEnumerationCeiling) {
        std::cerr << "error: refused: crosscheck at n=" << opt.n
                  << " exceeds the oracle ceiling (" << kEnumerationCeiling << ")\n";
        return 2;
    }
    if (opt.n < 5) {
        std::cerr << "error: crosscheck needs n >= 5, got " << opt.n << "\n";
        return 2;
    }
    const TargetPattern& pat = pattern_of(opt);
    long long total = 0, yes = 0, no = 0, mismatches = 0;
    enumerate_graphic_sequences(opt.n, [&](const DegreeSequence& seq) {
        const bool predicate = check_pattern(seq, pat).potential;
        const bool oracle = oracle_potentially(seq, pat);
        ++total;
        (predicate ? yes : no) += 1;
        if (predicate != oracle) {
            ++mismatches;
            const auto word = [](bool b) { return b ? "YES" : "NO"; };
            if (machine(opt)) {
                std::cout << "mismatch sequence=" << format_sequence(seq)
                          << " predicate=" << word(predicate) << " oracle=" << word(oracle)
                          << "\n";
            } else {
                std::cout << "mismatch: " << format_sequence(seq) << " predicate "
                          << word(predicate) << ", oracle " << word(oracle) << "\n";
            }
        }
        return true;
    });
    if (machine(opt)) {
        std::cout << "sequences=" << total << " yes=" << yes << " no=" << no
                  << " mismatches=" << mismatches << "\n";
    } else {
        std::cout << mismatches << " mismatches / " << total << " sequences (" << yes << " yes, "
                  << no << " no)\n";
    }
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree sequence toolkit: graphicality, pattern potential, realization"};
    app.require_subcommand(1);
    Options opt;

    const auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", opt.mode, "output mode: human or machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };
    const auto add_pattern = [&](CLI::App* cmd) {
        cmd->add_option("--pattern", opt.pattern, "target pattern: k5-p4 or k5-y4")
            ->required()
            ->check(CLI::IsMember({"k5-p4", "k5-y4"}));
    };
    const auto add_sequence = [&](CLI::App* cmd) {
        cmd->add_option("--sequence", opt.sequence, "degree sequence text, e.g. \"4^2,2^3\"")
            ->required();
    };
    const auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "sequence length")->required();
    };

    CLI::App* check =
        app.add_subcommand("check", "decide whether a sequence is potentially pattern-graphic");
    add_pattern(check);
    add_sequence(check);
    add_mode(check);

    CLI::App* realize =
        app.add_subcommand("realize", "build a realization containing the pattern");
    add_pattern(realize);
    add_sequence(realize);
    add_mode(realize);

    CLI::App* graphic = app.add_subcommand("graphic", "test graphicality");
    add_sequence(graphic);
    add_mode(graphic);

    CLI::App* layoff =
        app.add_subcommand("layoff", "lay off the smallest term and print the residual");
    add_sequence(layoff);
    add_mode(layoff);

    CLI::App* sigma = app.add_subcommand("sigma", "smallest sum forcing the pattern at length n");
    add_pattern(sigma);
    add_n(sigma);
    sigma->add_option("--method", opt.method, "decider: predicate or oracle")
        ->check(CLI::IsMember({"predicate", "oracle"}));
    add_mode(sigma);

    CLI::App* crosscheck =
        app.add_subcommand("crosscheck", "sweep length n: decision predicate vs oracle");
    add_pattern(crosscheck);
    add_n(crosscheck);
    add_mode(crosscheck);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(check)) return run_check(opt);
        if (app.got_subcommand(realize)) return run_realize(opt);
        if (app.got_subcommand(graphic)) return run_graphic(opt);
        if (app.got_subcommand(layoff)) return run_layoff(opt);
        if (app.got_subcommand(sigma)) return run_sigma(opt);
        if (app.got_subcommand(crosscheck)) return run_crosscheck(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
