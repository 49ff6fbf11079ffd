#include "lpsucc/completion.hpp"
#include "lpsucc/errors.hpp"
#include "lpsucc/formalisms.hpp"
#include "lpsucc/formula.hpp"
#include "lpsucc/generators.hpp"
#include "lpsucc/program.hpp"
#include "lpsucc/random.hpp"
#include "lpsucc/simplifier.hpp"
#include "lpsucc/stable.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lpsucc;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kPropertyFailed = 1, kUsage = 2, kCap = 3 };

/// Raised for bad command-line combinations detected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void print_report(const AnswerSetReport& r, const std::string& format) {
    if (format == "text") {
        for (const auto& s : r.strings()) std::cout << s << '\n';
    } else {
        std::cout << to_json(r).dump() << '\n';
    }
}

json loop_json(const Loop& l) {
    auto a = json::array();
    for (Var x : l.atoms) a.push_back("x" + std::to_string(x));
    return a;
}

struct Options {
    std::size_t max_vars = 0;
    std::size_t max_loops = 0;
    std::string input = "-";
    std::string format = "json";
    std::string formalism = "cp";
    std::string from = "cp";
    std::string to = "tv";
    std::string property;
    std::string out;
    std::size_t n = 0;
    std::size_t n_max = 16;
    bool random = false;
    std::uint64_t seed = 1;
    std::size_t count = 100;
    std::size_t max_n = 5;
    std::size_t max_rules = 12;
    bool dimacs = false;
    bool no_flatten = false;
    bool no_verify = false;
};

EnumerationCaps caps_of(const Options& o) {
    auto caps = EnumerationCaps::from_env();
    if (o.max_vars) caps.max_vars = o.max_vars;
    if (o.max_loops) caps.max_loops = o.max_loops;
    return caps;
}

AnswerSetReport solve_any(const std::string& formalism, const std::string& text, const EnumerationCaps& caps) {
    if (formalism == "cp" || formalism == "lp") return answer_sets(parse_program(text), caps);
    if (formalism == "cc") return cc_answer_sets(parse_cc(text), caps);
    if (formalism == "dt") return dt_models(parse_dt(text), caps);
    if (formalism == "tv") return tv_models(parse_tv(text), caps);
    if (formalism == "pf") {
        auto fs = parse_formula_set(text);
        return make_report(fs.signature_size, models(fs.formulas, fs.signature_size, caps));
    }
    throw UsageError("unknown formalism " + formalism);
}

int cmd_solve(const Options& o) {
    print_report(solve_any(o.formalism, read_input(o.input), caps_of(o)), o.format);
    return kOk;
}

int cmd_complete(const Options& o) {
    auto p = parse_program(read_input(o.input));
    auto comp = completion(p, !o.no_flatten);
    if (o.dimacs) {
        std::cout << to_dimacs(comp, p.signature_size());
    } else if (o.format == "text") {
        for (const auto& f : comp) std::cout << render_formula(f) << ".\n";
    } else {
        auto a = json::array();
        for (const auto& f : comp) a.push_back(render_formula(f));
        auto m = formula_metrics(comp);
        std::cout << json{{"n", p.signature_size()}, {"formulas", a}, {"size", m.size}, {"depth", m.depth}}.dump()
                  << '\n';
    }
    return kOk;
}

int cmd_loops(const Options& o) {
    auto loops = enumerate_loops(parse_program(read_input(o.input)), caps_of(o));
    if (o.format == "text") {
        for (const auto& l : loops) {
            std::cout << '{';
            for (std::size_t i = 0; i < l.atoms.size(); ++i) std::cout << (i ? ", " : "") << 'x' << l.atoms[i];
            std::cout << "}\n";
        }
    } else {
        auto a = json::array();
        for (const auto& l : loops) a.push_back(loop_json(l));
        std::cout << json{{"loops", a}, {"count", loops.size()}}.dump() << '\n';
    }
    return kOk;
}

int cmd_loop_formulas(const Options& o) {
    auto p = parse_program(read_input(o.input));
    auto loops = enumerate_loops(p, caps_of(o));
    if (o.format == "text") {
        for (const auto& l : loops) std::cout << render_formula(loop_formula(l, p)) << ".\n";
    } else {
        auto a = json::array();
        for (const auto& l : loops) a.push_back({{"loop", loop_json(l)}, {"formula", render_formula(loop_formula(l, p))}});
        std::cout << json{{"loop_formulas", a}, {"count", loops.size()}}.dump() << '\n';
    }
    return kOk;
}

int cmd_simplify(const Options& o) {
    SimplifyOptions opts;
    opts.verify = !o.no_verify;
    opts.caps = caps_of(o);
    auto res = simplify_parity(parse_program(read_input(o.input)), opts);
    if (o.format == "text") {
        // The trace rides along as a comment so the output still parses.
        std::cout << render_program(res.program) << "% trace: " << to_json(res.trace).dump() << '\n';
    } else {
        std::cout << json{{"program", render_program(res.program)}, {"trace", to_json(res.trace)}}.dump() << '\n';
    }
    return kOk;
}

int cmd_generate(const Options& o) {
    auto tag = parse_formalism(o.formalism);
    if (!tag) throw UsageError("unknown formalism " + o.formalism);
    write_output(o.out, generate_parity(*tag, o.n).render());
    return kOk;
}

json failure(const std::string& property, const std::string& detail) {
    return {{"property", property}, {"holds", false}, {"detail", detail}};
}

int report_check(json result) {
    std::cout << result.dump() << '\n';
    return result.at("holds").get<bool>() ? kOk : kPropertyFailed;
}

int check_program(const std::string& property, const Program& p, const EnumerationCaps& caps, std::size_t n,
                  json& out) {
    out = {{"property", property}, {"holds", true}};
    CheckResult r;
    if (property == "lin-zhao") {
        r = check_lin_zhao(p, caps);
    } else if (property == "fages") {
        r = check_fages(p, caps);
    } else if (property == "antichain") {
        auto rep = answer_sets(p, caps);
        r.holds = is_antichain(rep);
        if (!r.holds) {
            for (const auto& a : rep.answer_sets)
                for (const auto& b : rep.answer_sets)
                    if (a != b && a.subset_of(b) && r.detail.empty())
                        r.detail = a.to_string() + " is a proper subset of " + b.to_string();
        }
    } else if (property == "parity") {
        if (n == 0) n = p.signature_size();
        if (n != p.signature_size()) {
            r.detail = "signature has " + std::to_string(p.signature_size()) + " variables, expected " +
                       std::to_string(n);
        } else {
            auto rep = answer_sets(p, caps);
            r.holds = is_parity_report(rep, n);
            if (!r.holds) {
                auto odd = odd_strings(n);
                for (const auto& w : odd)
                    if (!std::binary_search(rep.answer_sets.begin(), rep.answer_sets.end(), w)) {
                        r.witness = w;
                        r.detail = "odd string missing from answer sets";
                        break;
                    }
                if (!r.witness)
                    for (const auto& a : rep.answer_sets)
                        if (a.parity() == 0) {
                            r.witness = a;
                            r.detail = "even string among answer sets";
                            break;
                        }
            }
        }
    } else {
        throw UsageError("unknown property " + property);
    }
    if (!r.holds) {
        out = failure(property, r.detail);
        if (r.witness) out["witness"] = r.witness->to_string();
        out["program"] = render_program(p);
    }
    return r.holds;
}

int cmd_check(const Options& o) {
    const auto caps = caps_of(o);
    json out;
    if (!o.random) {
        check_program(o.property, parse_program(read_input(o.input)), caps, o.n, out);
        return report_check(out);
    }
    if (o.property != "lin-zhao" && o.property != "antichain")
        throw UsageError("--random supports --property lin-zhao or antichain");
    Rng rng(o.seed);
    RandomProgramParams params{o.max_n, o.max_rules, 4, o.property == "antichain"};
    if (o.max_n == 0 || o.max_rules == 0) throw UsageError("--max-n and --max-rules must be positive");
    for (std::size_t i = 0; i < o.count; ++i) {
        auto p = random_program(rng, params);
        if (!check_program(o.property, p, caps, 0, out)) {
            out["instance"] = i;
            out["seed"] = o.seed;
            return report_check(out);
        }
    }
    return report_check({{"property", o.property}, {"holds", true}, {"seed", o.seed}, {"count", o.count}});
}

int cmd_translate(const Options& o) {
    if (o.to != "tv") throw UsageError("only --to tv is supported");
    auto text = read_input(o.input);
    TVProgram tv;
    if (o.from == "cp" || o.from == "lp") {
        tv = cp_to_tv(parse_program(text));
    } else if (o.from == "dt") {
        tv = dt_to_tv(parse_dt(text));
    } else if (o.from == "pf") {
        auto fs = parse_formula_set(text);
        tv = pf_to_tv(conjoin(fs.formulas), fs.signature_size);
    } else {
        throw UsageError("--from must be cp, dt or pf");
    }
    write_output(o.out, render_tv(tv));
    return kOk;
}

int cmd_bench_sizes(const Options& o) {
    auto t = size_table(o.n_max);
    if (o.format == "text") {
        std::cout << "n\tcp\tcp_pred\tcc_cons\tcc_rules\tdt\tpf\ttv\n";
        for (const auto& r : t.rows)
            std::cout << r.n << '\t' << r.cp << '\t' << r.cp_predicted << '\t' << r.cc_constraints << '\t'
                      << r.cc_rules << '\t' << r.dt << '\t' << r.pf << '\t' << r.tv << '\n';
        std::cout << "max dt/n^2 = " << t.dt_per_n2 << "\nmax pf/n^2 = " << t.pf_per_n2 << '\n';
    } else {
        std::cout << to_json(t).dump() << '\n';
    }
    return kOk;
}

int cmd_emit(const Options& o) {
    if (!o.dimacs) throw UsageError("emit needs --dimacs");
    auto fs = parse_formula_set(read_input(o.input));
    std::cout << to_dimacs(fs.formulas, fs.signature_size);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Canonical logic programs: answer sets, completion, loop formulas and PARITY encodings"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--max-vars", o.max_vars, "Largest signature enumerated (env LPSUCC_MAX_VARS, default 20)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-loops", o.max_loops, "Largest loop count (env LPSUCC_MAX_LOOPS, default 1000000)")
        ->check(CLI::PositiveNumber);

    auto formats = CLI::IsMember({"json", "text"});
    auto add_input = [&](CLI::App* c) { c->add_option("input", o.input, "Input file, '-' for stdin"); };
    auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "json or text")->check(formats); };

    auto* solve = app.add_subcommand("solve", "Answer sets or models by exhaustive enumeration");
    add_input(solve);
    add_format(solve);
    solve->add_option("--formalism", o.formalism, "cp, lp, cc, dt, tv or pf")
        ->check(CLI::IsMember({"cp", "lp", "cc", "dt", "tv", "pf"}));

    auto* complete = app.add_subcommand("complete", "Clark completion");
    add_input(complete);
    add_format(complete);
    complete->add_flag("--dimacs", o.dimacs, "DIMACS CNF output; refused unless every formula is CNF");
    complete->add_flag("--no-flatten", o.no_flatten, "Keep `not not x` as !!x");

    auto* loops = app.add_subcommand("loops", "Loops of the positive dependency graph");
    add_input(loops);
    add_format(loops);

    auto* lfs = app.add_subcommand("loop-formulas", "One loop formula per loop");
    add_input(lfs);
    add_format(lfs);

    auto* simplify = app.add_subcommand("simplify", "PARITY simplification pipeline");
    add_input(simplify);
    simplify->add_option("--format", o.format, "json, or text (program with the trace as a comment)")
        ->check(formats);
    simplify->add_flag("--no-verify", o.no_verify, "Skip the answer-set oracle checks");

    auto* generate = app.add_subcommand("generate", "PARITY_n instance");
    generate->add_option("--formalism", o.formalism, "cp, lp, cc, dt, tv or pf")
        ->required()
        ->check(CLI::IsMember({"cp", "lp", "cc", "dt", "tv", "pf"}));
    generate->add_option("--n", o.n, "Number of variables")->required()->check(CLI::PositiveNumber);
    generate->add_option("--out", o.out, "Output file (default stdout)");

    auto* check = app.add_subcommand("check", "Property check; exit 1 with a counterexample on failure");
    add_input(check);
    check->add_option("--property", o.property, "lin-zhao, fages, antichain or parity")
        ->required()
        ->check(CLI::IsMember({"lin-zhao", "fages", "antichain", "parity"}));
    check->add_option("--n", o.n, "PARITY width (default: signature size)");
    check->add_flag("--random", o.random, "Check seeded random programs instead of an input file");
    check->add_option("--seed", o.seed, "RNG seed");
    check->add_option("--count", o.count, "Number of random programs");
    check->add_option("--max-n", o.max_n, "Largest random signature");
    check->add_option("--max-rules", o.max_rules, "Largest random rule count");

    auto* translate = app.add_subcommand("translate", "Translate into two-valued programs");
    add_input(translate);
    translate->add_option("--to", o.to, "Target formalism")->required()->check(CLI::IsMember({"tv"}));
    translate->add_option("--from", o.from, "cp, dt or pf")->check(CLI::IsMember({"cp", "lp", "dt", "pf"}));
    translate->add_option("--out", o.out, "Output file (default stdout)");

    auto* bench = app.add_subcommand("bench-sizes", "PARITY encoding sizes per formalism");
    bench->add_option("--n-max", o.n_max, "Largest n")->check(CLI::Range(1, 40));
    add_format(bench);

    auto* emit = app.add_subcommand("emit", "Emit a formula file in another format");
    add_input(emit);
    emit->add_flag("--dimacs", o.dimacs, "DIMACS CNF; refused unless every formula is CNF");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*complete) return cmd_complete(o);
        if (*loops) return cmd_loops(o);
        if (*lfs) return cmd_loop_formulas(o);
        if (*simplify) return cmd_simplify(o);
        if (*generate) return cmd_generate(o);
        if (*check) return cmd_check(o);
        if (*translate) return cmd_translate(o);
        if (*bench) return cmd_bench_sizes(o);
        if (*emit) return cmd_emit(o);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LemmaViolation& e) {
        std::cout << failure("lemma", e.what()).dump() << '\n';
        return kPropertyFailed;
    }
    return kUsage;
}
