#include "ait/runtime.hpp"

#include <stdexcept>

#include "ait/reduce.hpp"

namespace ait {

std::string_view diverge_reason_name(DivergeReason r) {
    switch (r) {
    case DivergeReason::Underflow: return "underflow";
    case DivergeReason::Overflow: return "overflow";
    case DivergeReason::SyntaxError: return "syntax-error";
    case DivergeReason::StepLimit: return "step-limit";
    }
    return "?";
}

RunOutcome RunOutcome::halt(TermPtr t, std::uint64_t steps) {
    RunOutcome o;
    o.halted = true;
    o.term = std::move(t);
    o.serialized = print_canonical(o.term);
    o.bits = decode_bool_list(o.term);
    o.steps = steps;
    return o;
}

RunOutcome RunOutcome::halt_bits(BitString bits, std::uint64_t steps) {
    RunOutcome o;
    o.halted = true;
    o.bits = std::move(bits);
    o.steps = steps;
    return o;
}

RunOutcome RunOutcome::diverged(DivergeReason r, std::uint64_t steps) {
    RunOutcome o;
    o.reason = r;
    o.steps = steps;
    return o;
}

RunOutcome run_with_pipe(const TermPtr& program, const BitString& input,
                         std::uint64_t step_limit) {
    if (!is_closed(program))
        throw std::invalid_argument("run_with_pipe: program must be closed");
    Pipe pipe{input};
    ReduceResult r = reduce(program, step_limit, pipe);
    switch (r.status) {
    case ReduceStatus::NormalForm:
        if (!pipe.empty())
            return RunOutcome::diverged(DivergeReason::Overflow, r.steps_used);
        return RunOutcome::halt(std::move(r.term), r.steps_used);
    case ReduceStatus::InputUnderflow:
        return RunOutcome::diverged(DivergeReason::Underflow, r.steps_used);
    case ReduceStatus::StepLimit:
        return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
    }
    return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
}

int exit_code(DivergeReason r) {
    switch (r) {
    case DivergeReason::Underflow: return 10;
    case DivergeReason::Overflow: return 11;
    case DivergeReason::SyntaxError: return 12;
    case DivergeReason::StepLimit: return 13;
    }
    return 13;
}

int exit_code(const RunOutcome& o) {
    return o.halted ? 0 : exit_code(o.reason);
}

} // namespace ait
