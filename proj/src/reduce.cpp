#include "ait/reduce.hpp"

#include <cassert>
#include <vector>

namespace ait {

namespace {

// resource aborts; reduce() converts these into ReduceResult statuses
struct StepLimitAbort {};
struct UnderflowAbort {};

constexpr std::uint32_t kMaxTermSize = 16u << 20;
constexpr std::uint32_t kMaxNesting = 10000; // keeps recursive passes within stack bounds

struct Ctx {
    std::uint64_t limit;
    Pipe* pipe;
    std::uint64_t steps = 0;
    std::uint32_t rec_depth = 0;

    void tick() {
        if (steps >= limit) throw StepLimitAbort{};
        ++steps;
    }
    int read_bit() {
        auto b = pipe->read();
        if (!b) throw UnderflowAbort{};
        return *b;
    }
    void guard(const TermPtr& t) {
        if (t->size > kMaxTermSize || t->depth > kMaxNesting) throw StepLimitAbort{};
    }
};

struct RecGuard {
    Ctx& cx;
    explicit RecGuard(Ctx& c) : cx(c) {
        if (++cx.rec_depth > kMaxNesting) throw StepLimitAbort{};
    }
    ~RecGuard() { --cx.rec_depth; }
};

// Weak head reduction over an explicit spine. On return the head is a
// lambda (spine empty) or a stuck/under-applied atom; spine.back() is the
// first pending argument.
TermPtr whnf(TermPtr t, std::vector<TermPtr>& spine, Ctx& cx) {
    for (;;) {
        switch (t->kind) {
        case TermNode::Kind::App:
            spine.push_back(t->b);
            t = t->a;
            break;
        case TermNode::Kind::Lam: {
            if (spine.empty()) return t;
            TermPtr arg = std::move(spine.back());
            spine.pop_back();
            cx.tick();
            t = subst_top(t->a, arg);
            cx.guard(t);
            break;
        }
        case TermNode::Kind::Prim:
            switch (t->prim) {
            case Prim::S: {
                if (spine.size() < 3) return t;
                TermPtr x = std::move(spine.back()); spine.pop_back();
                TermPtr y = std::move(spine.back()); spine.pop_back();
                TermPtr z = std::move(spine.back()); spine.pop_back();
                cx.tick();
                t = app(app(std::move(x), z), app(std::move(y), z));
                cx.guard(t);
                break;
            }
            case Prim::K: {
                if (spine.size() < 2) return t;
                TermPtr x = std::move(spine.back()); spine.pop_back();
                spine.pop_back();
                cx.tick();
                t = std::move(x);
                break;
            }
            case Prim::I: {
                if (spine.empty()) return t;
                TermPtr x = std::move(spine.back()); spine.pop_back();
                cx.tick();
                t = std::move(x);
                break;
            }
            case Prim::R: {
                // R x -> K x or (K I) x, consuming one input bit. The
                // argument stays on the spine.
                if (spine.empty()) return t;
                int bit = cx.read_bit();
                cx.tick();
                t = bit == 0 ? prim(Prim::K) : app(prim(Prim::K), prim(Prim::I));
                break;
            }
            case Prim::Interpret:
                return t;
            }
            break;
        case TermNode::Kind::Var:
        case TermNode::Kind::Free:
            return t;
        }
    }
}

TermPtr normalize(TermPtr t, Ctx& cx) {
    RecGuard rg(cx);
    // binder chains are walked iteratively so deep lambda results cannot
    // exhaust the call stack; recursion only descends into arguments
    std::size_t binders = 0;
    TermPtr out;
    for (;;) {
        std::vector<TermPtr> spine;
        TermPtr head = whnf(std::move(t), spine, cx);
        if (head->kind == TermNode::Kind::Lam) {
            assert(spine.empty());
            ++binders;
            t = head->a;
            continue;
        }
        out = std::move(head);
        for (std::size_t i = spine.size(); i-- > 0;)
            out = app(std::move(out), normalize(spine[i], cx));
        break;
    }
    while (binders-- > 0) out = lam(std::move(out));
    return out;
}

} // namespace

ReduceResult reduce(const TermPtr& t, std::uint64_t step_limit, Pipe& pipe) {
    Ctx cx{step_limit, &pipe};
    try {
        TermPtr nf = normalize(t, cx);
        return {ReduceStatus::NormalForm, std::move(nf), cx.steps};
    } catch (const StepLimitAbort&) {
        return {ReduceStatus::StepLimit, t, cx.steps};
    } catch (const UnderflowAbort&) {
        return {ReduceStatus::InputUnderflow, t, cx.steps};
    }
}

ReduceResult reduce(const TermPtr& t, std::uint64_t step_limit) {
    Pipe empty;
    return reduce(t, step_limit, empty);
}

namespace {

// single leftmost-outermost contraction; nullptr when t is normal
TermPtr contract(const TermPtr& t, Pipe& pipe, bool& underflow) {
    switch (t->kind) {
    case TermNode::Kind::Lam: {
        // peel binder chains iteratively
        std::size_t binders = 0;
        TermPtr body = t;
        while (body->kind == TermNode::Kind::Lam) {
            ++binders;
            body = body->a;
        }
        TermPtr inner = contract(body, pipe, underflow);
        if (!inner) return nullptr;
        while (binders-- > 0) inner = lam(std::move(inner));
        return inner;
    }
    case TermNode::Kind::App: {
        const TermPtr& f = t->a;
        // redexes rooted here
        if (f->kind == TermNode::Kind::Lam)
            return subst_top(f->a, t->b);
        if (f->kind == TermNode::Kind::Prim) {
            if (f->prim == Prim::I) return t->b;
            if (f->prim == Prim::R) {
                auto bit = pipe.read();
                if (!bit) { underflow = true; return nullptr; }
                TermPtr rep = *bit == 0 ? prim(Prim::K) : app(prim(Prim::K), prim(Prim::I));
                return app(std::move(rep), t->b);
            }
        }
        if (f->kind == TermNode::Kind::App && f->a->kind == TermNode::Kind::Prim &&
            f->a->prim == Prim::K)
            return f->b; // K x y -> x
        if (f->kind == TermNode::Kind::App && f->a->kind == TermNode::Kind::App &&
            f->a->a->kind == TermNode::Kind::Prim && f->a->a->prim == Prim::S) {
            const TermPtr& x = f->a->b;
            const TermPtr& y = f->b;
            const TermPtr& z = t->b;
            return app(app(x, z), app(y, z));
        }
        // otherwise leftmost first
        if (TermPtr fn = contract(f, pipe, underflow)) return app(std::move(fn), t->b);
        if (underflow) return nullptr;
        if (TermPtr arg = contract(t->b, pipe, underflow)) return app(f, std::move(arg));
        return nullptr;
    }
    default:
        return nullptr;
    }
}

} // namespace

StepResult step_once(const TermPtr& t, Pipe& pipe) {
    bool underflow = false;
    TermPtr next = contract(t, pipe, underflow);
    if (underflow) return {StepResult::Kind::InputUnderflow, nullptr};
    if (!next) return {StepResult::Kind::NormalForm, nullptr};
    return {StepResult::Kind::Contracted, std::move(next)};
}

ReduceResult reduce_traced(const TermPtr& t, std::uint64_t step_limit, Pipe& pipe,
                           const std::function<void(const TermPtr&)>& on_state) {
    TermPtr cur = t;
    if (on_state) on_state(cur);
    for (std::uint64_t steps = 0;; ++steps) {
        if (steps == step_limit) {
            // probe with a pipe copy so an abandoned R contraction cannot
            // consume input
            Pipe probe = pipe;
            StepResult r = step_once(cur, probe);
            if (r.kind == StepResult::Kind::NormalForm)
                return {ReduceStatus::NormalForm, cur, steps};
            if (r.kind == StepResult::Kind::InputUnderflow)
                return {ReduceStatus::InputUnderflow, cur, steps};
            return {ReduceStatus::StepLimit, cur, steps};
        }
        StepResult r = step_once(cur, pipe);
        switch (r.kind) {
        case StepResult::Kind::NormalForm:
            return {ReduceStatus::NormalForm, cur, steps};
        case StepResult::Kind::InputUnderflow:
            return {ReduceStatus::InputUnderflow, cur, steps};
        case StepResult::Kind::Contracted:
            cur = std::move(r.term);
            if (on_state) on_state(cur);
            break;
        }
    }
}

bool combinator_eq(const TermPtr& a, const TermPtr& b, std::uint64_t step_limit) {
    ReduceResult ra = reduce(expand_primitives(a), step_limit);
    ReduceResult rb = reduce(expand_primitives(b), step_limit);
    if (ra.status != ReduceStatus::NormalForm || rb.status != ReduceStatus::NormalForm)
        return false;
    return alpha_eq(ra.term, rb.term);
}

} // namespace ait
