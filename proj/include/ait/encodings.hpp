#ifndef AIT_ENCODINGS_HPP
#define AIT_ENCODINGS_HPP

#include <optional>
#include <string_view>

#include "ait/bits.hpp"
#include "ait/runtime.hpp"
#include "ait/term.hpp"
#include "ait/tree.hpp"

namespace ait {

enum class Language { Iota, Fokker, Simple, Extended, Zot, Blc, Keraia, PfKeraia };

std::optional<Language> language_from_name(std::string_view name);
std::string_view language_name(Language lang);

// --- combinator builders --------------------------------------------------

// the Iota universal combinator λf.fSK, pure lambda form
TermPtr iota_term();
// λf.fSK over the S/K delta constants (the basis used by the bit-reading
// machine family)
TermPtr iota_term_primitive();
// Fokker's universal combinator λf.fS(λxyz.x)
TermPtr fokker_combinator();

// The bit-reading universal combinator ("0") of the simple Chaitin
// machine: λx.x C A (K I) S with C = λx.xB, A = K(KR),
// B = K(K(K(K(K(K(KK)))))).
TermPtr zero_combinator();

// Chaitin-universal extension of an arbitrary universal combinator U:
// Pair (λxyz.U) R with Pair = λxyz.zxy. Requires U closed.
TermPtr extend_universal(const TermPtr& u);

// Zot alphabet: the empty-program continuation and the two bit combinators
TermPtr zot_empty();      // λc.cI
TermPtr zot_bit(int bit); // λc.c(λf.fSK) / λcL.L(λlR.R(λr.c(lr)))

TermPtr blc_bit(int bit); // K / K I
TermPtr blc_nil();        // K I

// --- evaluators -------------------------------------------------------------

// Plain Iota: the whole input must be exactly one tree; leaves are ι.
RunOutcome iota_eval(const BitString& bits, std::uint64_t step_limit);
// Same codeword scheme with Fokker's combinator at the leaves.
RunOutcome fokker_eval(const BitString& bits, std::uint64_t step_limit);

// The simple Chaitin machine: a leading application tree over the zero
// combinator, remaining bits feed the pipe.
RunOutcome simple_chaitin_eval(const BitString& codeword, std::uint64_t step_limit);

// Same machine with extend_universal(u) at the leaves.
RunOutcome extended_eval(const TermPtr& u, const BitString& codeword,
                         std::uint64_t step_limit);

// Zot: left fold of the bit combinators over λc.cI; the normal form of the
// fold is the output (no pipe, so never under/overflows).
RunOutcome zot_eval(const BitString& bits, std::uint64_t step_limit);

// Binary lambda calculus program prefix: 00F = abstraction, 01FF =
// application, 1^k 0 = de Bruijn index k-1. Returns the term and the
// unconsumed bits; nullopt on truncation.
struct BlcParse {
    TermPtr term;
    BitString rest;
};
std::optional<BlcParse> blc_parse(const BitString& bits);

// BLC: parse the program, turn the remaining bits into a nil-terminated
// pair list of K / K I, apply, and take the normal form.
RunOutcome blc_eval(const BitString& bits, std::uint64_t step_limit);

// dispatcher; Extended uses U = iota_term_primitive()
RunOutcome eval_language(Language lang, const BitString& bits, std::uint64_t step_limit);

} // namespace ait

#endif
