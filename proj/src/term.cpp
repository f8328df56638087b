#include "ait/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <vector>

namespace ait {

namespace {

std::uint32_t sat_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    return s > 0xffffffffull ? 0xffffffffu : std::uint32_t(s);
}

} // namespace

std::string_view prim_name(Prim p) {
    switch (p) {
    case Prim::S: return "S";
    case Prim::K: return "K";
    case Prim::I: return "I";
    case Prim::R: return "R";
    case Prim::Interpret: return "Interpret";
    }
    return "?";
}

TermPtr var(std::uint32_t index) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Var;
    n->index = index;
    n->max_free = index + 1;
    return n;
}

TermPtr free_var(std::string name) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Free;
    n->name = std::move(name);
    n->has_named = true;
    return n;
}

TermPtr lam(TermPtr body) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::Lam;
    n->size = sat_add(1, body->size);
    n->depth = body->depth + 1;
    n->max_free = body->max_free > 0 ? body->max_free - 1 : 0;
    n->has_named = body->has_named;
    n->a = std::move(body);
    return n;
}

TermPtr app(TermPtr fn, TermPtr arg) {
    auto n = std::make_shared<TermNode>();
    n->kind = TermNode::Kind::App;
    n->size = sat_add(1, sat_add(fn->size, arg->size));
    n->depth = 1 + std::max(fn->depth, arg->depth);
    n->max_free = std::max(fn->max_free, arg->max_free);
    n->has_named = fn->has_named || arg->has_named;
    n->a = std::move(fn);
    n->b = std::move(arg);
    return n;
}

TermPtr prim(Prim p) {
    static const TermPtr cache[5] = {
        [] { auto n = std::make_shared<TermNode>(); n->kind = TermNode::Kind::Prim; n->prim = Prim::S; return n; }(),
        [] { auto n = std::make_shared<TermNode>(); n->kind = TermNode::Kind::Prim; n->prim = Prim::K; return n; }(),
        [] { auto n = std::make_shared<TermNode>(); n->kind = TermNode::Kind::Prim; n->prim = Prim::I; return n; }(),
        [] { auto n = std::make_shared<TermNode>(); n->kind = TermNode::Kind::Prim; n->prim = Prim::R; return n; }(),
        [] { auto n = std::make_shared<TermNode>(); n->kind = TermNode::Kind::Prim; n->prim = Prim::Interpret; return n; }(),
    };
    return cache[static_cast<int>(p)];
}

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    const TermNode* x = a.get();
    const TermNode* y = b.get();
    for (;;) {
        if (x == y) return true;
        if (!x || !y) return false;
        if (x->kind != y->kind || x->size != y->size) return false;
        switch (x->kind) {
        case TermNode::Kind::Var: return x->index == y->index;
        case TermNode::Kind::Free: return x->name == y->name;
        case TermNode::Kind::Prim: return x->prim == y->prim;
        case TermNode::Kind::Lam: // chase binder chains without recursing
            x = x->a.get();
            y = y->a.get();
            break;
        case TermNode::Kind::App:
            if (!alpha_eq(x->a, y->a)) return false;
            x = x->b.get();
            y = y->b.get();
            break;
        }
    }
}

bool is_closed(const TermPtr& t) {
    return t && t->max_free == 0 && !t->has_named;
}

bool contains_free(const TermPtr& t, std::string_view name) {
    if (!t || !t->has_named) return false;
    switch (t->kind) {
    case TermNode::Kind::Free: return t->name == name;
    case TermNode::Kind::Lam: return contains_free(t->a, name);
    case TermNode::Kind::App: return contains_free(t->a, name) || contains_free(t->b, name);
    default: return false;
    }
}

TermPtr shift(const TermPtr& t, std::int64_t d, std::uint32_t cutoff) {
    if (t->max_free <= cutoff || d == 0) return t; // nothing free to move
    switch (t->kind) {
    case TermNode::Kind::Var:
        if (t->index >= cutoff) {
            std::int64_t idx = std::int64_t(t->index) + d;
            assert(idx >= 0);
            return var(std::uint32_t(idx));
        }
        return t;
    case TermNode::Kind::Lam:
        return lam(shift(t->a, d, cutoff + 1));
    case TermNode::Kind::App:
        return app(shift(t->a, d, cutoff), shift(t->b, d, cutoff));
    default:
        return t;
    }
}

namespace {

// t[j := s] with the free indices above j decremented
TermPtr subst(const TermPtr& t, std::uint32_t j, const TermPtr& s) {
    if (t->max_free <= j) return t; // j not free here
    switch (t->kind) {
    case TermNode::Kind::Var:
        if (t->index == j) return shift(s, j, 0);
        if (t->index > j) return var(t->index - 1);
        return t;
    case TermNode::Kind::Lam:
        return lam(subst(t->a, j + 1, s));
    case TermNode::Kind::App:
        return app(subst(t->a, j, s), subst(t->b, j, s));
    default:
        return t;
    }
}

} // namespace

TermPtr subst_top(const TermPtr& body, const TermPtr& arg) {
    return subst(body, 0, arg);
}

TermPtr subst_free(const TermPtr& t, std::string_view name, const TermPtr& replacement) {
    if (!t->has_named) return t;
    switch (t->kind) {
    case TermNode::Kind::Free:
        return t->name == name ? replacement : t;
    case TermNode::Kind::Lam:
        return lam(subst_free(t->a, name, replacement));
    case TermNode::Kind::App:
        return app(subst_free(t->a, name, replacement), subst_free(t->b, name, replacement));
    default:
        return t;
    }
}

// ---------------------------------------------------------------------------
// backtick dialect

namespace {

struct Token {
    enum class Kind { Tick, Caret, Name } kind;
    std::string text;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> toks;
    std::size_t i = 0;
    auto is_name_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (c == '`') { toks.push_back({Token::Kind::Tick, "`"}); ++i; continue; }
        if (c == '^') { toks.push_back({Token::Kind::Caret, "^"}); ++i; continue; }
        if (is_name_char(c)) {
            std::size_t j = i;
            while (j < src.size() && is_name_char(src[j])) ++j;
            toks.push_back({Token::Kind::Name, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
    return toks;
}

std::optional<Prim> prim_by_name(std::string_view name) {
    if (name == "S") return Prim::S;
    if (name == "K") return Prim::K;
    if (name == "I") return Prim::I;
    if (name == "R") return Prim::R;
    if (name == "Interpret") return Prim::Interpret;
    return std::nullopt;
}

struct Parser {
    const std::vector<Token>& toks;
    const Definitions& defs;
    std::size_t pos = 0;
    std::vector<std::string> binders; // innermost last

    const Token* peek(std::size_t ahead = 0) const {
        return pos + ahead < toks.size() ? &toks[pos + ahead] : nullptr;
    }

    TermPtr parse() {
        const Token* t = peek();
        if (!t) throw ParseError("dangling application: expected a term");
        if (t->kind == Token::Kind::Tick) {
            // ``^x B binds x over B; any other tick is a plain application
            const Token* t1 = peek(1);
            const Token* t2 = peek(2);
            if (t1 && t2 && t1->kind == Token::Kind::Tick && t2->kind == Token::Kind::Caret) {
                pos += 3;
                const Token* name = peek();
                if (!name || name->kind != Token::Kind::Name)
                    throw ParseError("expected a binder name after ^");
                ++pos;
                binders.push_back(name->text);
                TermPtr body = parse();
                binders.pop_back();
                return lam(std::move(body));
            }
            ++pos;
            TermPtr fn = parse();
            TermPtr arg = parse();
            return app(std::move(fn), std::move(arg));
        }
        if (t->kind == Token::Kind::Caret)
            throw ParseError("binder marker ^ outside an abstraction form");
        ++pos;
        for (std::size_t i = binders.size(); i-- > 0;) {
            if (binders[i] == t->text)
                return var(std::uint32_t(binders.size() - 1 - i));
        }
        if (auto p = prim_by_name(t->text)) return prim(*p);
        if (auto it = defs.find(t->text); it != defs.end()) return it->second;
        throw ParseError("unbound name: " + t->text);
    }
};

std::string binder_letter(std::size_t depth) {
    // a..z, aa..az, ba.. (bijective base 26)
    std::string s;
    for (std::size_t n = depth + 1; n > 0; n = (n - 1) / 26)
        s.insert(s.begin(), char('a' + (n - 1) % 26));
    return s;
}

void print_rec(const TermPtr& t, std::size_t depth, std::string& out) {
    switch (t->kind) {
    case TermNode::Kind::Var:
        if (t->index >= depth)
            throw std::invalid_argument("print_canonical: open term");
        out += binder_letter(depth - 1 - t->index);
        return;
    case TermNode::Kind::Free:
        throw std::invalid_argument("print_canonical: term contains the free marker " + t->name);
    case TermNode::Kind::Prim:
        out += prim_name(t->prim);
        return;
    case TermNode::Kind::Lam:
        out += "``^";
        out += binder_letter(depth);
        out += ' ';
        print_rec(t->a, depth + 1, out);
        return;
    case TermNode::Kind::App:
        out += '`';
        print_rec(t->a, depth, out);
        out += ' ';
        print_rec(t->b, depth, out);
        return;
    }
}

} // namespace

TermPtr parse_curried(std::string_view source, const Definitions& defs) {
    auto toks = lex(source);
    Parser p{toks, defs, 0, {}};
    TermPtr t = p.parse();
    if (p.pos != toks.size())
        throw ParseError("unexpected trailing tokens");
    return t;
}

std::string print_canonical(const TermPtr& t) {
    std::string out;
    print_rec(t, 0, out);
    return out;
}

TermPtr expand_primitives(const TermPtr& t) {
    switch (t->kind) {
    case TermNode::Kind::Prim:
        switch (t->prim) {
        case Prim::S: return s_lambda();
        case Prim::K: return k_lambda();
        case Prim::I: return i_lambda();
        default: return t;
        }
    case TermNode::Kind::Lam:
        return lam(expand_primitives(t->a));
    case TermNode::Kind::App:
        return app(expand_primitives(t->a), expand_primitives(t->b));
    default:
        return t;
    }
}

// ---------------------------------------------------------------------------
// boolean lists

namespace {

bool is_identity_form(const TermPtr& t) {
    if (t->kind == TermNode::Kind::Prim && t->prim == Prim::I) return true;
    return t->kind == TermNode::Kind::Lam &&
           t->a->kind == TermNode::Kind::Var && t->a->index == 0;
}

bool is_true_form(const TermPtr& t) { // the K normal form
    if (t->kind == TermNode::Kind::Prim && t->prim == Prim::K) return true;
    return t->kind == TermNode::Kind::Lam && t->a->kind == TermNode::Kind::Lam &&
           t->a->a->kind == TermNode::Kind::Var && t->a->a->index == 1;
}

bool is_false_form(const TermPtr& t) { // the K I normal form; doubles as nil
    if (t->kind == TermNode::Kind::Lam && t->a->kind == TermNode::Kind::Lam &&
        t->a->a->kind == TermNode::Kind::Var && t->a->a->index == 0)
        return true;
    return t->kind == TermNode::Kind::App && is_true_form(t->a) && is_identity_form(t->b);
}

} // namespace

BitString decode_bool_list(const TermPtr& t) {
    BitString out;
    TermPtr cur = t;
    for (;;) {
        if (is_false_form(cur)) return out; // nil
        // list cell λz.z X Y
        if (cur->kind == TermNode::Kind::Lam && cur->a->kind == TermNode::Kind::App &&
            cur->a->a->kind == TermNode::Kind::App &&
            cur->a->a->a->kind == TermNode::Kind::Var && cur->a->a->a->index == 0) {
            const TermPtr& head = cur->a->a->b;
            if (is_true_form(head)) out += '0';
            else if (is_false_form(head)) out += '1';
            else return "";
            cur = cur->a->b;
            continue;
        }
        return ""; // not a boolean list
    }
}

TermPtr s_lambda() {
    static const TermPtr t = lam(lam(lam(app(app(var(2), var(0)), app(var(1), var(0))))));
    return t;
}

TermPtr k_lambda() {
    static const TermPtr t = lam(lam(var(1)));
    return t;
}

TermPtr i_lambda() {
    static const TermPtr t = lam(var(0));
    return t;
}

TermPtr pair_lambda() {
    static const TermPtr t = lam(lam(lam(app(app(var(0), var(2)), var(1)))));
    return t;
}

} // namespace ait
