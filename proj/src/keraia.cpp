#include "ait/keraia.hpp"

#include <vector>

#include "ait/abstraction.hpp"

namespace ait {

namespace {

bool matches_env(const BitTreePtr& t, const std::vector<BitTreePtr>& env) {
    for (const auto& p : env)
        if (tree_shape_eq(t, p)) return true;
    return false;
}

TermPtr translate(const BitTreePtr& t, std::vector<BitTreePtr>& env, const TermPtr& leaf) {
    // innermost binding first
    for (std::size_t i = env.size(); i-- > 0;) {
        if (tree_shape_eq(t, env[i]))
            return var(std::uint32_t(env.size() - 1 - i));
    }
    if (!t->leaf()) {
        const BitTreePtr& l = t->left;
        // Binder: the left subtree reads "10" + pattern. Variables are
        // marked before the body is parsed, so a left child that is itself
        // a marked occurrence is a variable at the head of an application,
        // never binder syntax.
        if (!l->leaf() && l->left->leaf() && !matches_env(l, env)) {
            env.push_back(l->right);
            TermPtr body = translate(t->right, env, leaf);
            env.pop_back();
            return lam(std::move(body));
        }
        return app(translate(l, env, leaf), translate(t->right, env, leaf));
    }
    return leaf;
}

} // namespace

TermPtr keraia_translate(const BitTreePtr& tree, KeraiaLeaf leaf) {
    std::vector<BitTreePtr> env;
    TermPtr leaf_term = prim(leaf == KeraiaLeaf::Interpret ? Prim::Interpret : Prim::R);
    return translate(tree, env, leaf_term);
}

KeraiaResult keraia_interpret(const BitTreePtr& tree, KeraiaLeaf leaf,
                              std::uint64_t step_limit) {
    TermPtr t = keraia_translate(tree, leaf);
    ReduceResult r = reduce(t, step_limit);
    if (r.status != ReduceStatus::NormalForm)
        return {r.status, nullptr, r.steps_used};
    return {ReduceStatus::NormalForm, combinatorize(r.term), r.steps_used};
}

RunOutcome keraia_eval(const BitString& bits, std::uint64_t step_limit) {
    BitTreePtr tree = parse_tree(bits);
    if (!tree) return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    KeraiaResult r = keraia_interpret(tree, KeraiaLeaf::Interpret, step_limit);
    if (r.status == ReduceStatus::NormalForm)
        return RunOutcome::halt(std::move(r.combinator), r.steps_used);
    return RunOutcome::diverged(DivergeReason::StepLimit, r.steps_used);
}

RunOutcome pf_keraia_eval(const BitString& codeword, std::uint64_t step_limit) {
    auto split = split_tree_prefix(codeword);
    if (!split) return RunOutcome::diverged(DivergeReason::SyntaxError, 0);
    TermPtr program = keraia_translate(split->tree, KeraiaLeaf::Read);
    RunOutcome o = run_with_pipe(program, split->rest, step_limit);
    if (!o.halted) return o;
    return RunOutcome::halt(combinatorize(o.term), o.steps);
}

} // namespace ait
