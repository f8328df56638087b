#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ait/ait_tools.hpp"
#include "ait/encodings.hpp"
#include "ait/reduce.hpp"
#include "support.hpp"

using namespace ait;

TEST_CASE("tree parsing accepts exactly the full preorder traversals") {
    CHECK(parse_tree("0"));
    CHECK(parse_tree("100"));
    CHECK_FALSE(parse_tree("1"));
    CHECK_FALSE(parse_tree("1001")); // trailing bit
    CHECK_FALSE(parse_tree(""));

    BitTreePtr t = parse_tree("100");
    REQUIRE(t);
    CHECK_FALSE(t->leaf());
    CHECK(t->left->leaf());
    CHECK(t->right->leaf());
}

TEST_CASE("tree prefix splitting") {
    auto s1 = split_tree_prefix("1001");
    REQUIRE(s1);
    CHECK(s1->tree->bits() == "100");
    CHECK(s1->rest == "1");

    auto s2 = split_tree_prefix("111010010100110001");
    REQUIRE(s2);
    CHECK(s2->tree->bits() == "11101001010011000");
    CHECK(s2->rest == "1");

    CHECK_FALSE(split_tree_prefix("11"));
}

TEST_CASE("no accepted tree is a proper prefix of another") {
    std::vector<BitString> accepted;
    for (unsigned len = 1; len <= 13; len += 2)
        for (std::uint64_t i = 0; i < (1ull << len); ++i) {
            BitString w(len, '0');
            for (unsigned b = 0; b < len; ++b)
                if (i >> (len - 1 - b) & 1) w[b] = '1';
            if (parse_tree(w)) accepted.push_back(w);
        }
    CHECK(kraft_prefix_check(accepted)); // prefix-free, sum below one
    std::sort(accepted.begin(), accepted.end());
    for (std::size_t i = 0; i + 1 < accepted.size(); ++i) {
        const auto& a = accepted[i];
        const auto& b = accepted[i + 1];
        bool proper_prefix = a.size() < b.size() && b.compare(0, a.size(), a) == 0;
        CHECK_FALSE(proper_prefix);
    }
}

TEST_CASE("iota evaluates its worked examples") {
    RunOutcome i = iota_eval("100", 100000);
    REQUIRE(i.halted);
    CHECK(alpha_eq(i.term, lam(var(0))));

    RunOutcome k = iota_eval("1010100", 100000);
    REQUIRE(k.halted);
    CHECK(alpha_eq(k.term, k_lambda()));

    RunOutcome leaf = iota_eval("0", 100000);
    REQUIRE(leaf.halted);
    CHECK(alpha_eq(leaf.term, iota_term()));

    CHECK(iota_eval("1", 1000).reason == DivergeReason::SyntaxError);
    CHECK(iota_eval("1001", 1000).reason == DivergeReason::SyntaxError); // trailing input
}

TEST_CASE("fokker's combinator recovers K and S with fewer applications") {
    CHECK(is_closed(fokker_combinator()));

    RunOutcome ff = fokker_eval("100", 100000);
    REQUIRE(ff.halted);
    CHECK(alpha_eq(ff.term, k_lambda()));

    RunOutcome fff = fokker_eval("10100", 100000);
    REQUIRE(fff.halted);
    CHECK(alpha_eq(fff.term, s_lambda()));

    // the same values need five and nine leaves in plain iota
    RunOutcome ik = iota_eval("1010100", 100000);
    RunOutcome is = iota_eval("101010100", 100000);
    REQUIRE(ik.halted);
    REQUIRE(is.halted);
    CHECK(alpha_eq(ik.term, ff.term));
    CHECK(alpha_eq(is.term, fff.term));
}

TEST_CASE("the simple machine reproduces its seven published rows") {
    auto out = [](const BitString& w) { return simple_chaitin_eval(w, 100000); };

    RunOutcome k = out("100");
    REQUIRE(k.halted);
    CHECK(alpha_eq(k.term, prim(Prim::K)));

    RunOutcome s = out("10100");
    REQUIRE(s.halted);
    CHECK(alpha_eq(s.term, prim(Prim::S)));

    RunOutcome r = out("1010100");
    REQUIRE(r.halted);
    CHECK(alpha_eq(r.term, prim(Prim::R)));

    CHECK(out("1").reason == DivergeReason::SyntaxError);
    CHECK(out("00").reason == DivergeReason::Overflow);
    CHECK(out("110101000").reason == DivergeReason::Underflow);

    RunOutcome h = out("1101010000");
    REQUIRE(h.halted);
    CHECK(alpha_eq(h.term, app(prim(Prim::K), zero_combinator())));
}

TEST_CASE("a bare-leaf program never assembles an application tree") {
    CHECK(simple_chaitin_eval("0", 100000).reason == DivergeReason::Underflow);
    CHECK(simple_chaitin_eval("00", 100000).reason == DivergeReason::Overflow);
    CHECK(extended_eval(iota_term_primitive(), "0", 100000).reason == DivergeReason::Underflow);
}

TEST_CASE("the extension table for U = iota") {
    TermPtr u = iota_term_primitive();
    auto out = [&](const BitString& w) { return extended_eval(u, w, 100000); };

    RunOutcome r1 = out("1100100");
    REQUIRE(r1.halted);
    CHECK(combinator_eq(r1.term, prim(Prim::I)));

    RunOutcome r2 = out("11001100100");
    REQUIRE(r2.halted);
    CHECK(alpha_eq(r2.term, app(prim(Prim::S), prim(Prim::K)))); // exactly `S K
    CHECK(combinator_eq(r2.term, app(prim(Prim::S), prim(Prim::K))));

    RunOutcome r3 = out("110011001100100");
    REQUIRE(r3.halted);
    CHECK(alpha_eq(r3.term, prim(Prim::K)));

    RunOutcome r4 = out("1100110011001100100");
    REQUIRE(r4.halted);
    CHECK(alpha_eq(r4.term, prim(Prim::S)));

    RunOutcome r5 = out("1011001100100");
    REQUIRE(r5.halted);
    CHECK(alpha_eq(r5.term, prim(Prim::R)));

    // "100" denotes U itself under the translation
    RunOutcome u100 = out("100");
    REQUIRE(u100.halted);
    CHECK(alpha_eq(u100.term, u));
}

TEST_CASE("the extended combinator applied to itself recovers U") {
    // hand reduction: Pair (λxyz.I) R applied to itself steps through
    // (λz.z (λxyz.I) R) X -> X (λxyz.I) R, and with X the extension of I the
    // chain discards both constants, leaving I
    TermPtr ext_i = extend_universal(prim(Prim::I));
    ReduceResult hand = reduce(app(ext_i, ext_i), 100000);
    REQUIRE(hand.status == ReduceStatus::NormalForm);
    CHECK(alpha_eq(hand.term, prim(Prim::I)));

    std::mt19937 rng(41);
    int done = 0;
    while (done < 20) {
        TermPtr u = test::random_closed_term(rng, 1 + int(rng() % 25));
        ReduceResult nu = reduce(u, 50000);
        if (nu.status != ReduceStatus::NormalForm) continue;
        TermPtr zero = extend_universal(u);
        ReduceResult r = reduce(app(zero, zero), 100000);
        REQUIRE(r.status == ReduceStatus::NormalForm);
        CHECK(alpha_eq(r.term, nu.term));
        ++done;
    }
}

TEST_CASE("zot folds its input and never touches a pipe") {
    RunOutcome empty = zot_eval("", 100000);
    REQUIRE(empty.halted);
    CHECK(alpha_eq(empty.term, zot_empty())); // λc.cI is already normal

    // single-step fold assembled by hand as the oracle
    RunOutcome one = zot_eval("0", 100000);
    REQUIRE(one.halted);
    ReduceResult oracle = reduce(app(zot_empty(), zot_bit(0)), 100000);
    REQUIRE(oracle.status == ReduceStatus::NormalForm);
    CHECK(alpha_eq(one.term, oracle.term));
    CHECK(alpha_eq(one.term, iota_term())); // (λc.cI)(λc.cι) -> ι

    // the fold is left-associative: the accumulator grows one application
    // per bit
    TermPtr acc = zot_empty();
    for (char c : BitString("1101"))
        acc = app(acc, zot_bit(c == '1' ? 1 : 0));
    std::size_t spine = 0;
    for (TermPtr t = acc; t->kind == TermNode::Kind::App; t = t->a) ++spine;
    CHECK(spine == 4);

    std::mt19937 rng(43);
    for (int i = 0; i < 40; ++i) {
        BitString w;
        for (unsigned b = 0; b < rng() % 8; ++b) w += rng() % 2 ? '1' : '0';
        RunOutcome o = zot_eval(w, 3000);
        CHECK((o.halted || o.reason == DivergeReason::StepLimit));
    }
}

TEST_CASE("blc parses its grammar") {
    auto i = blc_parse("0010");
    REQUIRE(i);
    CHECK(alpha_eq(i->term, lam(var(0))));
    CHECK(i->rest == "");

    auto k2 = blc_parse("000010");
    REQUIRE(k2);
    CHECK(alpha_eq(k2->term, lam(lam(var(0)))));

    auto ii = blc_parse("0100100010");
    REQUIRE(ii);
    CHECK(alpha_eq(ii->term, app(lam(var(0)), lam(var(0)))));
    CHECK(ii->rest == "");

    CHECK_FALSE(blc_parse("001"));
    CHECK_FALSE(blc_parse(""));

    auto open = blc_parse("110");
    REQUIRE(open); // grammar accepts, machine rejects
    CHECK(blc_eval("110", 1000).reason == DivergeReason::SyntaxError);
}

TEST_CASE("blc applies the program to the remaining bits as a pair list") {
    RunOutcome nil = blc_eval("0010", 100000);
    REQUIRE(nil.halted);
    CHECK(alpha_eq(nil.term, blc_nil()));
    CHECK(nil.bits == "");

    RunOutcome one = blc_eval("00100", 100000);
    REQUIRE(one.halted);
    CHECK(one.bits == "0");
    // probed against P X Y K = X
    auto head = test::innermost_normalize(app(one.term, prim(Prim::K)), 10000);
    REQUIRE(head);
    CHECK(alpha_eq(*head, prim(Prim::K)));

    CHECK(blc_eval("001", 1000).reason == DivergeReason::SyntaxError);
}

TEST_CASE("language names round-trip") {
    for (Language lang : {Language::Iota, Language::Fokker, Language::Simple,
                          Language::Extended, Language::Zot, Language::Blc,
                          Language::Keraia, Language::PfKeraia}) {
        auto back = language_from_name(language_name(lang));
        REQUIRE(back);
        CHECK(*back == lang);
    }
    CHECK_FALSE(language_from_name("jot"));
}
