#include "ait/bem.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>
#include <stdexcept>

#include "ait/abstraction.hpp"
#include "ait/keraia.hpp"
#include "ait/reduce.hpp"

namespace ait {

namespace {

using Status = BemProcess::Status;

// Shared skeleton for the lambda-language machines: a collect phase that
// requests symbols, then a term reduced one contraction per step() with no
// further input.
class TermEvalProcess : public BemProcess {
public:
    Status status() const override { return status_; }

    void step() override {
        assert(status_ == Status::Running);
        StepResult r = step_once(term_, no_input_);
        switch (r.kind) {
        case StepResult::Kind::Contracted:
            term_ = std::move(r.term);
            return;
        case StepResult::Kind::NormalForm:
            finish(term_);
            return;
        case StepResult::Kind::InputUnderflow:
            // the evaluated term never reads (plain-language machines only)
            status_ = Status::Diverged;
            return;
        }
    }

    BitString output_bits() const override { return out_bits_; }
    TermPtr output_term() const override { return out_term_; }

protected:
    void begin_eval(TermPtr t) {
        term_ = std::move(t);
        status_ = Status::Running;
    }
    void diverge() { status_ = Status::Diverged; }

    // final output shaping; Keraia overrides to abstract binders
    virtual void finish(const TermPtr& nf) {
        out_term_ = nf;
        out_bits_ = decode_bool_list(nf);
        status_ = Status::Halted;
    }

    Status status_ = Status::NeedInput;
    TermPtr term_;
    TermPtr out_term_;
    BitString out_bits_;

private:
    Pipe no_input_;
};

// Keraia reads bits while the tree traversal is incomplete; the traversal
// is self-delimiting, so at completion the machine evaluates with no
// further read. Extra bits or a premature endmarker are syntax errors.
class KeraiaProcess final : public TermEvalProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<KeraiaProcess>(*this);
    }

    void feed(Symbol s) override {
        assert(status_ == Status::NeedInput);
        if (s == Symbol::Blank) { diverge(); return; }
        bits_ += s == Symbol::One ? '1' : '0';
        counter_ += s == Symbol::One ? 1 : -1;
        if (counter_ == -1) {
            BitTreePtr tree = parse_tree(bits_);
            assert(tree);
            begin_eval(keraia_translate(tree, KeraiaLeaf::Interpret));
        }
    }

    DivergeReason divergence_reason() const override { return DivergeReason::SyntaxError; }

private:
    void finish(const TermPtr& nf) override {
        TermPtr comb = combinatorize(nf);
        out_term_ = comb;
        out_bits_ = decode_bool_list(comb);
        status_ = Status::Halted;
    }

    std::string bits_;
    int counter_ = 0;
};

// BLC reads bits while the program prefix is incomplete (the grammar is
// self-delimiting); a complete program is applied to the empty list. An
// endmarker inside the program, or an unbound index, loops.
class BlcProcess final : public TermEvalProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<BlcProcess>(*this);
    }

    void feed(Symbol s) override {
        assert(status_ == Status::NeedInput);
        if (s == Symbol::Blank) { diverge(); return; }
        bits_ += s == Symbol::One ? '1' : '0';
        auto parsed = blc_parse(bits_);
        if (!parsed) return; // needs more bits
        assert(parsed->rest.empty());
        if (!is_closed(parsed->term)) { diverge(); return; }
        begin_eval(app(parsed->term, blc_nil()));
    }

    DivergeReason divergence_reason() const override { return DivergeReason::SyntaxError; }

private:
    std::string bits_;
};

// Zot accepts every bit and only the endmarker ends the program, so the
// fold cannot be evaluated early.
class ZotProcess final : public TermEvalProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<ZotProcess>(*this);
    }

    void feed(Symbol s) override {
        assert(status_ == Status::NeedInput);
        if (s != Symbol::Blank) {
            bits_ += s == Symbol::One ? '1' : '0';
            return;
        }
        TermPtr acc = zot_empty();
        for (char c : bits_)
            acc = app(acc, zot_bit(c == '1' ? 1 : 0));
        begin_eval(std::move(acc));
    }

private:
    std::string bits_;
};

// toy: reads three symbols, then one more whose value is ignored, and
// halts with output "1"
class Fixed3Process final : public BemProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<Fixed3Process>(*this);
    }
    Status status() const override { return reads_ < 4 ? Status::NeedInput : Status::Halted; }
    void step() override { assert(false); }
    void feed(Symbol) override { ++reads_; }
    BitString output_bits() const override { return "1"; }

private:
    int reads_ = 0;
};

// toy: reads until the endmarker, output is the parity of the 1-bits
class ParityProcess final : public BemProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<ParityProcess>(*this);
    }
    Status status() const override { return done_ ? Status::Halted : Status::NeedInput; }
    void step() override { assert(false); }
    void feed(Symbol s) override {
        if (s == Symbol::Blank) done_ = true;
        else if (s == Symbol::One) ones_ ^= 1;
    }
    BitString output_bits() const override { return ones_ ? "1" : "0"; }

private:
    int ones_ = 0;
    bool done_ = false;
};

// toy: reads until the endmarker and outputs the collected bits
class EchoProcess final : public BemProcess {
public:
    std::unique_ptr<BemProcess> clone() const override {
        return std::make_unique<EchoProcess>(*this);
    }
    Status status() const override { return done_ ? Status::Halted : Status::NeedInput; }
    void step() override { assert(false); }
    void feed(Symbol s) override {
        if (s == Symbol::Blank) done_ = true;
        else collected_ += s == Symbol::One ? '1' : '0';
    }
    BitString output_bits() const override { return collected_; }

private:
    BitString collected_;
    bool done_ = false;
};

template <typename Proc>
class SimpleMachine final : public BemMachine {
public:
    explicit SimpleMachine(std::string name) : name_(std::move(name)) {}
    std::unique_ptr<BemProcess> start() const override { return std::make_unique<Proc>(); }
    std::string_view name() const override { return name_; }

private:
    std::string name_;
};

} // namespace

std::shared_ptr<const BemMachine> as_bem(Language lang) {
    switch (lang) {
    case Language::Zot: return std::make_shared<SimpleMachine<ZotProcess>>("zot");
    case Language::Blc: return std::make_shared<SimpleMachine<BlcProcess>>("blc");
    case Language::Keraia: return std::make_shared<SimpleMachine<KeraiaProcess>>("keraia");
    default:
        throw std::invalid_argument("as_bem: unsupported language");
    }
}

std::shared_ptr<const BemMachine> bem_by_name(std::string_view name) {
    if (name == "fixed3") return std::make_shared<SimpleMachine<Fixed3Process>>("fixed3");
    if (name == "parity") return std::make_shared<SimpleMachine<ParityProcess>>("parity");
    if (name == "echo") return std::make_shared<SimpleMachine<EchoProcess>>("echo");
    if (auto lang = language_from_name(name)) return as_bem(*lang);
    throw std::invalid_argument("unknown blank-endmarker machine: " + std::string(name));
}

DriveResult drive_bem(const BemMachine& machine, const BitString& x, bool append_blank,
                      std::uint64_t step_limit) {
    auto proc = machine.start();
    std::size_t next = 0;
    bool blank_fed = false;
    std::uint64_t steps = 0;
    for (;;) {
        switch (proc->status()) {
        case Status::Running:
            if (steps++ >= step_limit)
                return {Status::Running, "", nullptr};
            proc->step();
            break;
        case Status::NeedInput:
            if (next < x.size()) {
                proc->feed(bit_symbol(x[next++] == '1' ? 1 : 0));
            } else if (append_blank && !blank_fed) {
                blank_fed = true;
                proc->feed(Symbol::Blank);
            } else {
                return {Status::NeedInput, "", nullptr};
            }
            break;
        case Status::Halted:
            return {Status::Halted, proc->output_bits(), proc->output_term()};
        case Status::Diverged:
            return {Status::Diverged, "", nullptr};
        }
    }
}

namespace {

struct Branch {
    std::unique_ptr<BemProcess> proc;
};

bool outputs_identical(const BemProcess& a, const BemProcess& b) {
    if (a.output_bits() != b.output_bits()) return false;
    TermPtr ta = a.output_term();
    TermPtr tb = b.output_term();
    if (!ta || !tb) return true; // bit-only machines compare by bits alone
    return alpha_eq(ta, tb);
}

} // namespace

RunOutcome EliminatedMachine::run(const BitString& input, std::uint64_t step_limit,
                                  EliminateStats* stats) const {
    Pipe pipe{input};
    std::uint64_t total_steps = 0;
    auto spend = [&]() -> bool { return ++total_steps > step_limit; };

    auto settle = [&](std::unique_ptr<BemProcess>& proc) -> std::optional<RunOutcome> {
        // advance a lone process to its next decision point
        while (proc->status() == Status::Running) {
            if (spend()) return RunOutcome::diverged(DivergeReason::StepLimit, total_steps);
            proc->step();
        }
        if (proc->status() == Status::Halted) {
            if (!pipe.empty())
                return RunOutcome::diverged(DivergeReason::Overflow, total_steps);
            RunOutcome o = proc->output_term()
                               ? RunOutcome::halt(proc->output_term(), total_steps)
                               : RunOutcome::halt_bits(proc->output_bits(), total_steps);
            return o;
        }
        if (proc->status() == Status::Diverged)
            return RunOutcome::diverged(proc->divergence_reason(), total_steps);
        return std::nullopt; // NeedInput
    };

    auto proc = machine_->start();
    if (auto o = settle(proc)) return *o;

    for (;;) {
        // speculation round over the three possible symbols
        if (stats) {
            ++stats->rounds;
            stats->max_live_branches = std::max<std::size_t>(stats->max_live_branches, 3);
        }
        std::array<Branch, 3> br;
        for (int i = 0; i < 3; ++i) {
            br[i].proc = proc->clone();
            br[i].proc->feed(static_cast<Symbol>(i));
        }

        std::uint64_t round_steps = 0;
        bool read_now = false;
        for (;;) {
            int halted = 0, running = 0, reading = 0, dead = 0;
            for (auto& b : br) {
                switch (b.proc->status()) {
                case Status::Halted: ++halted; break;
                case Status::Running: ++running; break;
                case Status::NeedInput: ++reading; break;
                case Status::Diverged: ++dead; break;
                }
            }
            if (halted == 3) {
                if (outputs_identical(*br[0].proc, *br[1].proc) &&
                    outputs_identical(*br[1].proc, *br[2].proc)) {
                    // unanimous: the read result cannot matter, halt without it
                    if (!pipe.empty())
                        return RunOutcome::diverged(DivergeReason::Overflow, total_steps);
                    return br[0].proc->output_term()
                               ? RunOutcome::halt(br[0].proc->output_term(), total_steps)
                               : RunOutcome::halt_bits(br[0].proc->output_bits(), total_steps);
                }
                read_now = true; // outputs differ, the symbol decides
            } else if (reading > 0 || dead > 0) {
                read_now = true; // unanimous halting is settled impossible
            }
            if (read_now) break;
            // dovetail: strict round-robin, one contraction per live branch
            for (auto& b : br) {
                if (b.proc->status() != Status::Running) continue;
                if (spend() || ++round_steps > round_budget_)
                    return RunOutcome::diverged(DivergeReason::StepLimit, total_steps);
                b.proc->step();
            }
        }

        // the real read; the endmarker branch is discarded
        auto bit = pipe.read();
        if (!bit) return RunOutcome::diverged(DivergeReason::Underflow, total_steps);
        proc = std::move(br[*bit == 0 ? 0 : 1].proc);
        if (auto o = settle(proc)) return *o;
    }
}

EliminatedMachine eliminate(std::shared_ptr<const BemMachine> machine,
                            std::uint64_t round_budget) {
    return EliminatedMachine(std::move(machine), round_budget);
}

RunOutcome run_eliminated(std::string_view bem_name, const BitString& input,
                          std::uint64_t step_limit, std::uint64_t round_budget) {
    return eliminate(bem_by_name(bem_name), round_budget).run(input, step_limit);
}

} // namespace ait
