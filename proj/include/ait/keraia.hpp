#ifndef AIT_KERAIA_HPP
#define AIT_KERAIA_HPP

#include <cstdint>

#include "ait/bits.hpp"
#include "ait/reduce.hpp"
#include "ait/runtime.hpp"
#include "ait/term.hpp"
#include "ait/tree.hpp"

namespace ait {

// What an unmatched leaf stands for: the interpreter constant in the plain
// machine, the bit-reading operator in the prefix-free one.
enum class KeraiaLeaf { Interpret, Read };

// Structural translation of a bit tree. Precedence at each subtree:
//   1. the whole subtree matches a bound variable pattern (most recent
//      binding wins)
//   2. binder form: a left child "1 0 P..." introduces an abstraction
//      whose variable pattern is the subtree P, scoped over the right child
//   3. application of the two children
//   4. a remaining leaf becomes the leaf constant
// Patterns match by tree shape; marking never descends into binder syntax
// or into an already matched occurrence.
TermPtr keraia_translate(const BitTreePtr& tree, KeraiaLeaf leaf);

struct KeraiaResult {
    ReduceStatus status;
    TermPtr combinator; // valid when status == NormalForm
    std::uint64_t steps_used;
};

// translate, reduce to normal form (no input), then abstract residual
// binders into S/K/I
KeraiaResult keraia_interpret(const BitTreePtr& tree, KeraiaLeaf leaf,
                              std::uint64_t step_limit);

// The whole bit string is one traversal (the endmarker is implicit at the
// end); halts with the resulting combinator.
RunOutcome keraia_eval(const BitString& bits, std::uint64_t step_limit);

// Prefix-free variant: the leading traversal is the program (leaves become
// R), the remaining bits feed the pipe.
RunOutcome pf_keraia_eval(const BitString& codeword, std::uint64_t step_limit);

} // namespace ait

#endif
