#include "ait/abstraction.hpp"

#include <stdexcept>
#include <string>

namespace ait {

TermPtr lambda_abstract(std::string_view name, const TermPtr& t) {
    if (!contains_free(t, name))
        return app(prim(Prim::K), t);
    if (t->kind == TermNode::Kind::Free && t->name == name)
        return prim(Prim::I);
    if (t->kind == TermNode::Kind::App)
        return app(app(prim(Prim::S), lambda_abstract(name, t->a)),
                   lambda_abstract(name, t->b));
    throw std::invalid_argument("lambda_abstract: term must be applicative (eliminate binders innermost-first)");
}

namespace {

TermPtr comb(const TermPtr& t, unsigned& counter) {
    switch (t->kind) {
    case TermNode::Kind::Lam: {
        std::string name = "$" + std::to_string(counter++);
        TermPtr body = comb(subst_top(t->a, free_var(name)), counter);
        return lambda_abstract(name, body);
    }
    case TermNode::Kind::App:
        return app(comb(t->a, counter), comb(t->b, counter));
    default:
        return t;
    }
}

} // namespace

TermPtr combinatorize(const TermPtr& t) {
    unsigned counter = 0;
    return comb(t, counter);
}

} // namespace ait
