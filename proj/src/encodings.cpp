#include "ait/encodings.hpp"

#include <stdexcept>

#include "ait/keraia.hpp"
#include "ait/reduce.hpp"

namespace ait {

std::optional<Language> language_from_name(std::string_view name) {
    if (name == "iota") return Language::Iota;
    if (name == "fokker") return Language::Fokker;
    if (name == "simple") return Language::Simple;
    if (name == "ext") return Language::Extended;
    if (name == "zot") return Language::Zot;
    if (name == "blc") return Language::Blc;
    if (name == "keraia") return Language::Keraia;
    if (name == "pf-keraia") return Language::PfKeraia;
    return std::nullopt;
}

std::string_view language_name(Language lang) {
    switch (lang) {
    case Language::Iota: return "iota";
    case Language::Fokker: return "fokker";
    case Language::Simple: return "simple";
    case Language::Extended: return "ext";
    case Language::Zot: return "zot";
    case Language::Blc: return "blc";
    case Language::Keraia: return "keraia";
    case Language::PfKeraia: return "pf-keraia";
    }
    return "?";
}

TermPtr iota_term() {
    static const TermPtr t = lam(app(app(var(0), s_lambda()), k_lambda()));
    return t;
}

TermPtr iota_term_primitive() {
    static const TermPtr t = lam(app(app(var(0), prim(Prim::S)), prim(Prim::K)));
    return t;
}

TermPtr fokker_combinator() {
    static const TermPtr t =
        lam(app(app(var(0), s_lambda()), lam(lam(lam(var(2))))));
    return t;
}

TermPtr zero_combinator() {
    static const TermPtr t = [] {
        TermPtr K = prim(Prim::K);
        TermPtr a = app(K, app(K, prim(Prim::R)));
        TermPtr b = K;
        for (int i = 0; i < 7; ++i) b = app(K, b);
        TermPtr c = lam(app(var(0), b));
        return lam(app(app(app(app(var(0), c), a), app(K, prim(Prim::I))),
                       prim(Prim::S)));
    }();
    return t;
}

TermPtr extend_universal(const TermPtr& u) {
    if (!is_closed(u))
        throw std::invalid_argument("extend_universal: U must be closed");
    TermPtr discard3 = lam(lam(lam(u)));
    return app(app(pair_lambda(), discard3), prim(Prim::R));
}

TermPtr zot_empty() {
    static const TermPtr t = lam(app(var(0), i_lambda()));
    return t;
}

TermPtr zot_bit(int bit) {
    static const TermPtr zero = lam(app(var(0), iota_term()));
    // λc.λL. L (λl.λR. R (λr. c (l r))): the continuation receives each
    // combinator in turn
    static const TermPtr one = lam(lam(app(
        var(0),
        lam(lam(app(var(0), lam(app(var(4), app(var(2), var(0))))))))));
    return bit == 0 ? zero : one;
}

TermPtr blc_bit(int bit) {
    return bit == 0 ? prim(Prim::K) : app(prim(Prim::K), prim(Prim::I));
}

TermPtr blc_nil() {
    return app(prim(Prim::K), prim(Prim::I));
}

namespace {

TermPtr tree_to_term(const BitTreePtr& t, const TermPtr& leaf) {
    if (t->leaf()) return leaf;
    return app(tree_to_term(t->left, leaf), tree_to_term(t->right, leaf));
}

RunOutcome eval_whole_tree(const BitString& bits, const TermPtr& leaf,
                           std::uint64_t step_limit) {
    BitTreePtr tree = parse_tree(bits);
    if (!tree) return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    ReduceResult r = reduce(tree_to_term(tree, leaf), step_limit);
    if (r.status == ReduceStatus::NormalForm)
        return RunOutcome::halt(std::move(r.term), r.steps_used);
    return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
}

RunOutcome eval_codeword_machine(const BitString& codeword, const TermPtr& leaf,
                                 std::uint64_t step_limit) {
    auto split = split_tree_prefix(codeword);
    if (!split) return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    // A bare leaf never completes an application tree: the machine keeps
    // waiting, so the run diverges. The sender blocks first if it still
    // holds bits.
    if (split->tree->leaf())
        return RunOutcome::diverged(
            split->rest.empty() ? DivergeReason::Underflow : DivergeReason::Overflow, 0);
    return run_with_pipe(tree_to_term(split->tree, leaf), split->rest, step_limit);
}

} // namespace

RunOutcome iota_eval(const BitString& bits, std::uint64_t step_limit) {
    return eval_whole_tree(bits, iota_term(), step_limit);
}

RunOutcome fokker_eval(const BitString& bits, std::uint64_t step_limit) {
    return eval_whole_tree(bits, fokker_combinator(), step_limit);
}

RunOutcome simple_chaitin_eval(const BitString& codeword, std::uint64_t step_limit) {
    return eval_codeword_machine(codeword, zero_combinator(), step_limit);
}

RunOutcome extended_eval(const TermPtr& u, const BitString& codeword,
                         std::uint64_t step_limit) {
    return eval_codeword_machine(codeword, extend_universal(u), step_limit);
}

RunOutcome zot_eval(const BitString& bits, std::uint64_t step_limit) {
    TermPtr acc = zot_empty();
    for (char c : bits)
        acc = app(acc, zot_bit(c == '1' ? 1 : 0));
    ReduceResult r = reduce(acc, step_limit);
    if (r.status == ReduceStatus::NormalForm)
        return RunOutcome::halt(std::move(r.term), r.steps_used);
    return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
}

namespace {

// returns nullptr on truncation
TermPtr blc_parse_rec(const BitString& bits, std::size_t& pos) {
    if (pos >= bits.size()) return nullptr;
    if (bits[pos] == '0') {
        if (pos + 1 >= bits.size()) return nullptr;
        char second = bits[pos + 1];
        pos += 2;
        if (second == '0') {
            TermPtr body = blc_parse_rec(bits, pos);
            return body ? lam(std::move(body)) : nullptr;
        }
        TermPtr fn = blc_parse_rec(bits, pos);
        if (!fn) return nullptr;
        TermPtr arg = blc_parse_rec(bits, pos);
        if (!arg) return nullptr;
        return app(std::move(fn), std::move(arg));
    }
    // 1^k 0 encodes de Bruijn index k-1
    std::size_t k = 0;
    while (pos < bits.size() && bits[pos] == '1') { ++k; ++pos; }
    if (pos >= bits.size()) return nullptr;
    ++pos; // the closing '0'
    return var(std::uint32_t(k - 1));
}

} // namespace

std::optional<BlcParse> blc_parse(const BitString& bits) {
    std::size_t pos = 0;
    TermPtr t = blc_parse_rec(bits, pos);
    if (!t) return std::nullopt;
    return BlcParse{std::move(t), bits.substr(pos)};
}

RunOutcome blc_eval(const BitString& bits, std::uint64_t step_limit) {
    auto parsed = blc_parse(bits);
    if (!parsed) return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    // an index with no enclosing binder has no referent
    if (!is_closed(parsed->term))
        return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    TermPtr list = blc_nil();
    for (std::size_t i = parsed->rest.size(); i-- > 0;)
        list = app(app(pair_lambda(), blc_bit(parsed->rest[i] == '1' ? 1 : 0)),
                   std::move(list));
    ReduceResult r = reduce(app(parsed->term, std::move(list)), step_limit);
    if (r.status == ReduceStatus::NormalForm)
        return RunOutcome::halt(std::move(r.term), r.steps_used);
    return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
}

RunOutcome eval_language(Language lang, const BitString& bits, std::uint64_t step_limit) {
    switch (lang) {
    case Language::Iota: return iota_eval(bits, step_limit);
    case Language::Fokker: return fokker_eval(bits, step_limit);
    case Language::Simple: return simple_chaitin_eval(bits, step_limit);
    case Language::Extended: return extended_eval(iota_term_primitive(), bits, step_limit);
    case Language::Zot: return zot_eval(bits, step_limit);
    case Language::Blc: return blc_eval(bits, step_limit);
    case Language::Keraia: return keraia_eval(bits, step_limit);
    case Language::PfKeraia: return pf_keraia_eval(bits, step_limit);
    }
    return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
}

} // namespace ait
