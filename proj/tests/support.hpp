#ifndef AIT_TESTS_SUPPORT_HPP
#define AIT_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ait/bits.hpp"
#include "ait/reduce.hpp"
#include "ait/term.hpp"

namespace ait::test {

// --- random generators ------------------------------------------------------

// closed term over Lam/App/Var and the S/K/I constants (no R, so reduction
// order cannot interact with input)
inline TermPtr random_closed_term(std::mt19937& rng, int budget, int binders = 0) {
    std::uniform_int_distribution<int> pick(0, 99);
    int roll = pick(rng);
    if (budget <= 1) {
        if (binders > 0 && roll < 60)
            return var(std::uniform_int_distribution<int>(0, binders - 1)(rng));
        static const Prim prims[3] = {Prim::S, Prim::K, Prim::I};
        return prim(prims[roll % 3]);
    }
    if (roll < 35) {
        std::uniform_int_distribution<int> split(1, budget - 1);
        int left = split(rng);
        return app(random_closed_term(rng, left, binders),
                   random_closed_term(rng, budget - 1 - left, binders));
    }
    if (roll < 70)
        return lam(random_closed_term(rng, budget - 1, binders + 1));
    if (binders > 0 && roll < 85)
        return var(std::uniform_int_distribution<int>(0, binders - 1)(rng));
    static const Prim prims[3] = {Prim::S, Prim::K, Prim::I};
    return prim(prims[roll % 3]);
}

// applicative term over free markers and S/K/I constants (for bracket
// abstraction properties)
inline TermPtr random_applicative(std::mt19937& rng, int budget,
                                  const std::vector<std::string>& names) {
    std::uniform_int_distribution<int> pick(0, 99);
    if (budget <= 1 || pick(rng) < 45) {
        int roll = pick(rng);
        if (roll < 60 && !names.empty())
            return free_var(names[std::uniform_int_distribution<std::size_t>(0, names.size() - 1)(rng)]);
        static const Prim prims[3] = {Prim::S, Prim::K, Prim::I};
        return prim(prims[roll % 3]);
    }
    std::uniform_int_distribution<int> split(1, budget - 1);
    int left = split(rng);
    return app(random_applicative(rng, left, names),
               random_applicative(rng, budget - 1 - left, names));
}

// uniform random full binary tree bits with n internal nodes
inline void random_tree_bits(std::mt19937& rng, int internal, std::string& out) {
    if (internal == 0) {
        out += '0';
        return;
    }
    out += '1';
    std::uniform_int_distribution<int> split(0, internal - 1);
    int left = split(rng);
    random_tree_bits(rng, left, out);
    random_tree_bits(rng, internal - 1 - left, out);
}

// --- an independent reduction oracle ----------------------------------------
// Innermost-first single stepper: contracts the leftmost *innermost* redex.
// Shares nothing with the production reducer beyond the term type.

inline bool oracle_is_redex(const TermPtr& t) {
    if (t->kind != TermNode::Kind::App) return false;
    const TermPtr& f = t->a;
    if (f->kind == TermNode::Kind::Lam) return true;
    if (f->kind == TermNode::Kind::Prim && f->prim == Prim::I) return true;
    if (f->kind == TermNode::Kind::App && f->a->kind == TermNode::Kind::Prim &&
        f->a->prim == Prim::K)
        return true;
    return f->kind == TermNode::Kind::App && f->a->kind == TermNode::Kind::App &&
           f->a->a->kind == TermNode::Kind::Prim && f->a->a->prim == Prim::S;
}

inline TermPtr oracle_contract(const TermPtr& t) {
    const TermPtr& f = t->a;
    if (f->kind == TermNode::Kind::Lam) return subst_top(f->a, t->b);
    if (f->kind == TermNode::Kind::Prim) return t->b;                      // I x
    if (f->a->kind == TermNode::Kind::Prim) return f->b;                   // K x y
    return app(app(f->a->b, t->b), app(f->b, t->b));                       // S x y z
}

inline std::optional<TermPtr> innermost_step(const TermPtr& t) {
    switch (t->kind) {
    case TermNode::Kind::Lam:
        if (auto b = innermost_step(t->a)) return lam(std::move(*b));
        return std::nullopt;
    case TermNode::Kind::App:
        if (auto f = innermost_step(t->a)) return app(std::move(*f), t->b);
        if (auto a = innermost_step(t->b)) return app(t->a, std::move(*a));
        if (oracle_is_redex(t)) return oracle_contract(t);
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

inline std::optional<TermPtr> innermost_normalize(TermPtr t, std::uint64_t bound) {
    for (std::uint64_t i = 0; i < bound; ++i) {
        auto next = innermost_step(t);
        if (!next) return t;
        t = std::move(*next);
        if (t->size > (1u << 20)) return std::nullopt;
    }
    return std::nullopt;
}

inline std::size_t count_redexes(const TermPtr& t) {
    std::size_t n = oracle_is_redex(t) ? 1 : 0;
    if (t->kind == TermNode::Kind::Lam) n += count_redexes(t->a);
    if (t->kind == TermNode::Kind::App) n += count_redexes(t->a) + count_redexes(t->b);
    return n;
}

// --- the published textual Keraia parser, ported verbatim as an oracle ------
// Marks variables by global substring replacement with the pattern digits
// renamed 0->2 / 1->3, then parses. Only valid for encodings whose patterns
// do not collide with binder syntax.

inline std::string appendix_replace_all(std::string text, const std::string& from,
                                        const std::string& to) {
    std::string out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t hit = text.find(from, pos);
        if (hit == std::string::npos) break;
        out += text.substr(pos, hit - pos);
        out += to;
        pos = hit + from.size();
    }
    out += text.substr(pos);
    return out;
}

inline std::string appendix_keraia_parse(const std::string& x) {
    if (x.find('1') == std::string::npos) return "_" + x + " ";
    std::size_t pos = 1;
    int count = 0;
    for (count = 0; count >= 0 && pos < x.size(); ++pos) {
        char c = x[pos];
        count += (c == '1' || c == '3') ? 1 : -1;
    }
    std::string left = x.substr(1, pos - 1);
    std::size_t start = pos;
    for (count = 0; count >= 0 && pos < x.size(); ++pos) {
        char c = x[pos];
        count += (c == '1' || c == '3') ? 1 : -1;
    }
    std::string right = x.substr(start, pos - start);
    if (left.substr(0, 2) == "10") {
        std::string arg = left.substr(2);
        std::string renamed = arg;
        for (char& c : renamed) c = c == '0' ? '2' : '3';
        return "``^_" + renamed + " " +
               appendix_keraia_parse(appendix_replace_all(right, arg, renamed));
    }
    return "`" + appendix_keraia_parse(left) + appendix_keraia_parse(right);
}

} // namespace ait::test

#endif
