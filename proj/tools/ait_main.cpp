// ait: minimalist prefix-free universal machines on a shared
// lambda/combinator core, with small-scale algorithmic information theory
// tools on top.
//
//   ait run --lang simple 1101010000        evaluate a codeword
//   ait parse --lang blc 0010               show the parsed program
//   ait abstract "``^x ``^y `y x"           bracket abstraction to S/K/I
//   ait eliminate --lang keraia 11000       run an endmarker-eliminated machine
//   ait omega --lang simple --max-len 10    halting-probability lower bound
//   ait complexity --lang simple --target "" --max-len 8
//   ait count-trees 7                       full-binary-tree census
//
// Exit codes for run/eliminate: 0 halt, 10 underflow, 11 overflow,
// 12 syntax error, 13 step limit; 2 for usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "ait/abstraction.hpp"
#include "ait/ait_tools.hpp"
#include "ait/bem.hpp"
#include "ait/encodings.hpp"
#include "ait/keraia.hpp"
#include "ait/reduce.hpp"
#include "ait/runtime.hpp"

namespace {

using namespace ait;

std::string read_input_source(const std::string& arg, const std::string& file) {
    if (!file.empty()) {
        if (file == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            return ss.str();
        }
        std::ifstream in(file);
        if (!in) throw CLI::ValidationError("--input-file", "cannot open " + file);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

Language parse_lang(const std::string& name) {
    auto lang = language_from_name(name);
    if (!lang) throw CLI::ValidationError("--lang", "unknown language " + name);
    return *lang;
}

// the (program term, pipe input) pair a language run reduces, for traces
struct Program {
    TermPtr term;
    BitString input;
};

std::optional<Program> build_program(Language lang, const BitString& bits) {
    switch (lang) {
    case Language::Iota:
    case Language::Fokker: {
        BitTreePtr tree = parse_tree(bits);
        if (!tree) return std::nullopt;
        TermPtr leaf = lang == Language::Iota ? iota_term() : fokker_combinator();
        std::function<TermPtr(const BitTreePtr&)> conv = [&](const BitTreePtr& t) {
            return t->leaf() ? leaf : app(conv(t->left), conv(t->right));
        };
        return Program{conv(tree), ""};
    }
    case Language::Simple:
    case Language::Extended: {
        auto split = split_tree_prefix(bits);
        if (!split || split->tree->leaf()) return std::nullopt;
        TermPtr leaf = lang == Language::Simple ? zero_combinator()
                                                : extend_universal(iota_term_primitive());
        std::function<TermPtr(const BitTreePtr&)> conv = [&](const BitTreePtr& t) {
            return t->leaf() ? leaf : app(conv(t->left), conv(t->right));
        };
        return Program{conv(split->tree), split->rest};
    }
    case Language::Zot: {
        TermPtr acc = zot_empty();
        for (char c : bits) acc = app(acc, zot_bit(c == '1' ? 1 : 0));
        return Program{acc, ""};
    }
    case Language::Blc: {
        auto parsed = blc_parse(bits);
        if (!parsed || !is_closed(parsed->term)) return std::nullopt;
        TermPtr list = blc_nil();
        for (std::size_t i = parsed->rest.size(); i-- > 0;)
            list = app(app(pair_lambda(), blc_bit(parsed->rest[i] == '1' ? 1 : 0)), list);
        return Program{app(parsed->term, list), ""};
    }
    case Language::Keraia: {
        BitTreePtr tree = parse_tree(bits);
        if (!tree) return std::nullopt;
        return Program{keraia_translate(tree, KeraiaLeaf::Interpret), ""};
    }
    case Language::PfKeraia: {
        auto split = split_tree_prefix(bits);
        if (!split) return std::nullopt;
        return Program{keraia_translate(split->tree, KeraiaLeaf::Read), split->rest};
    }
    }
    return std::nullopt;
}

int report_outcome(const RunOutcome& o, const std::string& mode) {
    if (o.halted) {
        if (mode == "bits") std::cout << o.bits << "\n";
        else std::cout << o.serialized << "\n";
        return 0;
    }
    std::cerr << diverge_reason_name(o.reason) << "\n";
    return exit_code(o);
}

int run_trace(Language lang, const BitString& bits, std::uint64_t steps) {
    auto prog = build_program(lang, bits);
    if (!prog) {
        std::cerr << "syntax-error\n";
        return exit_code(DivergeReason::SyntaxError);
    }
    Pipe pipe{prog->input};
    ReduceResult r = reduce_traced(prog->term, steps, pipe,
                                   [](const TermPtr& t) { std::cout << print_canonical(t) << "\n"; });
    RunOutcome o;
    switch (r.status) {
    case ReduceStatus::NormalForm:
        if (!pipe.empty()) o = RunOutcome::diverged(DivergeReason::Overflow, r.steps_used);
        else {
            TermPtr out = r.term;
            if (lang == Language::Keraia || lang == Language::PfKeraia) {
                out = combinatorize(out);
                std::cout << print_canonical(out) << "\n";
            }
            o = RunOutcome::halt(out, r.steps_used);
        }
        break;
    case ReduceStatus::InputUnderflow:
        o = RunOutcome::diverged(DivergeReason::Underflow, r.steps_used);
        break;
    case ReduceStatus::StepLimit:
        o = RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
        break;
    }
    if (!o.halted) std::cerr << diverge_reason_name(o.reason) << "\n";
    return exit_code(o);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App cli{"minimalist prefix-free universal machines and concrete AIT tools"};
    cli.require_subcommand(1);

    std::string lang_name, bits_arg, input_file, mode = "term", target, resume, source;
    std::uint64_t steps = 100000, round_budget = 100000;
    std::size_t max_len = 8;
    unsigned workers = 1;
    std::size_t tree_len = 0;

    auto* run = cli.add_subcommand("run", "evaluate a codeword");
    run->add_option("--lang", lang_name, "iota|fokker|simple|ext|zot|blc|keraia|pf-keraia")->required();
    run->add_option("bits", bits_arg, "codeword bits ('0'/'1', whitespace ignored)");
    run->add_option("--input-file", input_file, "read the bits from a file ('-' for stdin)");
    run->add_option("--steps", steps, "reduction step limit")->check(CLI::PositiveNumber);
    run->add_option("--mode", mode, "term|bits|trace")->check(CLI::IsMember({"term", "bits", "trace"}));

    auto* parse = cli.add_subcommand("parse", "parse a program without evaluating");
    parse->add_option("--lang", lang_name, "language")->required();
    parse->add_option("bits", bits_arg, "program bits");
    parse->add_option("--input-file", input_file, "read the bits from a file");

    auto* abstract_cmd = cli.add_subcommand("abstract", "bracket-abstract a backtick-dialect term");
    abstract_cmd->add_option("source", source, "term in the backtick dialect")->required();

    auto* elim = cli.add_subcommand("eliminate", "run an endmarker-eliminated machine");
    elim->add_option("--lang", lang_name, "zot|blc|keraia|fixed3|parity|echo")->required();
    elim->add_option("bits", bits_arg, "input bits");
    elim->add_option("--input", bits_arg, "input bits (named form)");
    elim->add_option("--input-file", input_file, "read the bits from a file");
    elim->add_option("--steps", steps, "total step limit")->check(CLI::PositiveNumber);
    elim->add_option("--round-budget", round_budget, "per-round speculation budget")->check(CLI::PositiveNumber);
    elim->add_option("--mode", mode, "term|bits")->check(CLI::IsMember({"term", "bits"}));

    auto* omega = cli.add_subcommand("omega", "halting-probability lower bound");
    omega->add_option("--lang", lang_name, "simple|ext|pf-keraia|elim-<bem>")->required();
    omega->add_option("--max-len", max_len, "longest codeword length")->required();
    omega->add_option("--steps", steps, "step limit per codeword")->check(CLI::PositiveNumber);
    omega->add_option("--workers", workers, "worker threads (0 = hardware)");
    omega->add_option("--resume", resume, "restartable record file");

    auto* cx = cli.add_subcommand("complexity", "program-size complexity upper bound");
    cx->add_option("--lang", lang_name, "machine")->required();
    cx->add_option("--target", target, "target output bits (may be empty)")->required();
    cx->add_option("--max-len", max_len, "longest codeword length")->required();
    cx->add_option("--steps", steps, "step limit per codeword")->check(CLI::PositiveNumber);
    cx->add_option("--workers", workers, "worker threads (0 = hardware)");

    auto* ct = cli.add_subcommand("count-trees", "count preorder full-binary-tree traversals");
    ct->add_option("length", tree_len, "bit length to census")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return cli.exit(e); // --help
        cli.exit(e);
        return 2;
    }

    try {
        if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

        if (run->parsed()) {
            Language lang = parse_lang(lang_name);
            BitString bits = parse_bits(read_input_source(bits_arg, input_file));
            if (mode == "trace") return run_trace(lang, bits, steps);
            return report_outcome(eval_language(lang, bits, steps), mode);
        }

        if (parse->parsed()) {
            Language lang = parse_lang(lang_name);
            BitString bits = parse_bits(read_input_source(bits_arg, input_file));
            auto prog = build_program(lang, bits);
            if (!prog) {
                std::cerr << "syntax-error\n";
                return exit_code(DivergeReason::SyntaxError);
            }
            std::cout << print_canonical(prog->term) << "\n";
            if (!prog->input.empty())
                std::cout << "input: " << prog->input << "\n";
            return 0;
        }

        if (abstract_cmd->parsed()) {
            TermPtr t = parse_curried(source);
            std::cout << print_canonical(combinatorize(t)) << "\n";
            return 0;
        }

        if (elim->parsed()) {
            BitString bits = parse_bits(read_input_source(bits_arg, input_file));
            RunOutcome o = run_eliminated(lang_name, bits, steps, round_budget);
            if (o.halted && !o.term) { // bit-only machine
                std::cout << o.bits << "\n";
                return 0;
            }
            return report_outcome(o, mode);
        }

        if (omega->parsed()) {
            auto machine = chaitin_machine_by_name(lang_name);
            if (!machine) throw CLI::ValidationError("--lang", "unknown machine " + lang_name);
            OmegaBound b;
            if (resume.empty()) {
                b = omega_lower_bound(*machine, max_len, steps, workers);
            } else {
                Enumeration e = enumerate_halting_resumable(*machine, max_len, steps, workers, resume);
                b.max_len = max_len;
                b.step_limit = steps;
                for (auto& r : e.records) {
                    if (r.codeword.size() > max_len) continue; // file may reach deeper
                    b.lower.add_pow2(unsigned(r.codeword.size()));
                    b.records.push_back(std::move(r));
                }
                b.stats = e.stats;
            }
            std::cout << "machine: " << machine->name << "\n"
                      << "codewords: " << b.records.size()
                      << " (step-limit-censored: " << b.stats.step_limit_hits << ")\n"
                      << "lower bound: " << b.lower.fraction_string() << " = "
                      << b.lower.binary_expansion(unsigned(std::max<std::size_t>(max_len, 8))) << "\n";
            return 0;
        }

        if (cx->parsed()) {
            auto machine = chaitin_machine_by_name(lang_name);
            if (!machine) throw CLI::ValidationError("--lang", "unknown machine " + lang_name);
            BitString target_bits = parse_bits(target);
            auto bound = complexity_upper_bound(*machine, target_bits, max_len, steps, workers);
            if (bound) std::cout << "H <= " << *bound << "\n";
            else std::cout << "no witness up to length " << max_len << "\n";
            return 0;
        }

        if (ct->parsed()) {
            std::uint64_t n = count_trees(tree_len);
            std::cout << "trees(" << tree_len << ") = " << n;
            if (tree_len % 2 == 1)
                std::cout << "  (catalan " << (tree_len - 1) / 2 << " = "
                          << catalan(unsigned((tree_len - 1) / 2)) << ")";
            std::cout << "\n";
            return 0;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
