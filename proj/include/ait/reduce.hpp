#ifndef AIT_REDUCE_HPP
#define AIT_REDUCE_HPP

#include <cstdint>
#include <functional>

#include "ait/bits.hpp"
#include "ait/term.hpp"

namespace ait {

enum class ReduceStatus { NormalForm, StepLimit, InputUnderflow };

struct ReduceResult {
    ReduceStatus status;
    TermPtr term;             // normal form, or the input term when aborted
    std::uint64_t steps_used; // beta + delta contractions, <= step_limit
};

// Leftmost-outermost reduction to beta/delta normal form. One step is one
// beta contraction or one delta contraction:
//   S x y z -> x z (y z)      K x y -> x      I x -> x
//   R x -> K x                (next pipe bit 0, bit consumed)
//   R x -> (K I) x            (next pipe bit 1, bit consumed)
// An R application whose read finds the pipe empty yields InputUnderflow;
// an unapplied R is an inert constant.
ReduceResult reduce(const TermPtr& t, std::uint64_t step_limit, Pipe& pipe);
ReduceResult reduce(const TermPtr& t, std::uint64_t step_limit);

struct StepResult {
    enum class Kind { Contracted, NormalForm, InputUnderflow } kind;
    TermPtr term; // the contracted term when kind == Contracted
};

// Contracts the single leftmost-outermost redex. Used for traces and for
// resumable machine states; agrees with reduce() on the contraction order.
StepResult step_once(const TermPtr& t, Pipe& pipe);

// reduce() built on step_once, reporting every intermediate state
// (including the initial term) to on_state.
ReduceResult reduce_traced(const TermPtr& t, std::uint64_t step_limit, Pipe& pipe,
                           const std::function<void(const TermPtr&)>& on_state);

// Combinator-level equality: expand primitives, reduce both sides, compare
// alpha-equality of the normal forms. False if either side fails to
// normalize within the limit.
bool combinator_eq(const TermPtr& a, const TermPtr& b, std::uint64_t step_limit = 200000);

} // namespace ait

#endif
