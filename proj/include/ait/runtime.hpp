#ifndef AIT_RUNTIME_HPP
#define AIT_RUNTIME_HPP

#include <cstdint>
#include <string>

#include "ait/bits.hpp"
#include "ait/term.hpp"

namespace ait {

enum class DivergeReason { Underflow, Overflow, SyntaxError, StepLimit };

std::string_view diverge_reason_name(DivergeReason r);

// Result of a sender-pipe-machine run. A halted run reports the output
// term (null for bit-only machines) together with its canonical text and
// boolean-list bits; a halted run always drained the pipe.
struct RunOutcome {
    bool halted = false;
    TermPtr term;
    std::string serialized;
    BitString bits;
    DivergeReason reason = DivergeReason::StepLimit;
    std::uint64_t steps = 0;

    static RunOutcome halt(TermPtr t, std::uint64_t steps);
    static RunOutcome halt_bits(BitString bits, std::uint64_t steps);
    static RunOutcome diverged(DivergeReason r, std::uint64_t steps);
};

// Reduces a closed program against a pipe loaded with input. Normal form
// with a drained pipe halts; leftover input is overflow; a starved read is
// underflow; otherwise the step budget ran out.
RunOutcome run_with_pipe(const TermPtr& program, const BitString& input,
                         std::uint64_t step_limit);

// exit-code contract: halt 0, underflow 10, overflow 11, syntax error 12,
// step limit 13
int exit_code(DivergeReason r);
int exit_code(const RunOutcome& o);

} // namespace ait

#endif
