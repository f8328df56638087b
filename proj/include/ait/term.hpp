#ifndef AIT_TERM_HPP
#define AIT_TERM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ait/bits.hpp"

namespace ait {

// Primitive constants with delta rules (S/K/I), the bit-reading operator R,
// and the inert Keraia interpreter constant. These are kept distinct from
// their lambda expansions so combinator-level outputs print exactly;
// expand_primitives converts to pure lambda form for cross-checks.
enum class Prim : std::uint8_t { S, K, I, R, Interpret };

std::string_view prim_name(Prim p);

struct TermNode;
using TermPtr = std::shared_ptr<const TermNode>;

// Immutable lambda/combinator expression. Variables are de Bruijn indices
// (0 = innermost binder); Free carries a named marker used by bracket
// abstraction and by tests.
struct TermNode {
    enum class Kind : std::uint8_t { Var, Free, Lam, App, Prim };

    Kind kind;
    std::uint32_t index = 0;    // Var
    Prim prim = Prim::S;        // Prim
    std::string name;           // Free

    TermPtr a, b;               // Lam: a = body.  App: a = function, b = argument.

    // maintained at construction so size/closedness tests are O(1)
    std::uint32_t size = 1;     // node count (saturating)
    std::uint32_t depth = 1;
    std::uint32_t max_free = 0; // 1 + highest free de Bruijn index
    bool has_named = false;     // contains a Free node
};

TermPtr var(std::uint32_t index);
TermPtr free_var(std::string name);
TermPtr lam(TermPtr body);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr prim(Prim p);

// left-nested application chain: app(f, a, b) = (f a) b
template <typename... Rest>
TermPtr app(TermPtr fn, TermPtr arg, TermPtr next, Rest... rest) {
    return app(app(std::move(fn), std::move(arg)), std::move(next), std::move(rest)...);
}

// structural equality on de Bruijn form; Free markers compare by name,
// primitives are distinct from their lambda expansions
bool alpha_eq(const TermPtr& a, const TermPtr& b);

bool is_closed(const TermPtr& t);
bool contains_free(const TermPtr& t, std::string_view name);

// de Bruijn plumbing
TermPtr shift(const TermPtr& t, std::int64_t d, std::uint32_t cutoff = 0);
// beta instantiation: body[0 := arg], remaining indices decremented
TermPtr subst_top(const TermPtr& body, const TermPtr& arg);
// replace every free occurrence of a named marker
TermPtr subst_free(const TermPtr& t, std::string_view name, const TermPtr& replacement);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Definitions = std::map<std::string, TermPtr, std::less<>>;

// Backtick dialect: ` is a binary prefix application operator, ``^x B is an
// abstraction binding x over B, names are variables or the primitive
// constants. Additional named definitions may be supplied.
TermPtr parse_curried(std::string_view source, const Definitions& defs = {});

// Inverse of parse_curried with deterministic fresh binder names a, b, c...
// Requires a closed term.
std::string print_canonical(const TermPtr& t);

// S, K, I replaced by their lambda-calculus definitions; R and Interpret
// are left alone.
TermPtr expand_primitives(const TermPtr& t);

// Reads a normal form as a nil-terminated pair list (cells λz.z X Y), with
// the K normal form as bit 0, the K I normal form as bit 1, and the K I
// form as nil. Anything else decodes to the empty string.
BitString decode_bool_list(const TermPtr& t);

// standard lambda forms
TermPtr s_lambda();        // λxyz.xz(yz)
TermPtr k_lambda();        // λxy.x
TermPtr i_lambda();        // λx.x
TermPtr pair_lambda();     // λxyz.zxy

} // namespace ait

#endif
