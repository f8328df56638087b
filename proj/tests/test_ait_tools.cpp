#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "ait/ait_tools.hpp"
#include "ait/encodings.hpp"
#include "ait/tree.hpp"

using namespace ait;

namespace {

ChaitinMachine machine(const char* name) {
    auto m = chaitin_machine_by_name(name);
    REQUIRE(m);
    return *m;
}

struct TempFile {
    std::string path;
    TempFile() {
        path = (std::filesystem::temp_directory_path() /
                ("ait_records_" + std::to_string(std::rand()) + ".tsv"))
                   .string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("the simple machine's short halting set") {
    Enumeration e1 = enumerate_halting(machine("simple"), 1, 10000);
    CHECK(e1.records.empty()); // "1" is a syntax error, "0" waits for a tree

    Enumeration e3 = enumerate_halting(machine("simple"), 3, 10000);
    REQUIRE(e3.records.size() == 1);
    CHECK(e3.records[0].codeword == "100");
    CHECK(e3.records[0].output_term == "K");
}

TEST_CASE("prefix-free keraia halts on its shortest published codeword") {
    Enumeration e = enumerate_halting(machine("pf-keraia"), 4, 10000);
    bool found = false;
    for (const auto& r : e.records)
        if (r.codeword == "1001") found = true;
    CHECK(found);
    CHECK(kraft_prefix_check(e.records));
}

TEST_CASE("omega lower bounds") {
    OmegaBound b = omega_lower_bound(machine("simple"), 3, 10000);
    CHECK(b.lower.fraction_string() == "1/2^3");
    CHECK(b.lower.binary_expansion(4) == "0.0010");

    OmegaBound none = omega_lower_bound(machine("simple"), 0, 10000);
    CHECK(none.lower.num == 0);

    OmegaBound b8 = omega_lower_bound(machine("simple"), 8, 10000);
    OmegaBound b12 = omega_lower_bound(machine("simple"), 12, 10000);
    CHECK(b8.lower.compare(b12.lower) <= 0);
    CHECK(b12.lower.compare(Dyadic::one()) <= 0);

    // monotone in the step limit alone
    OmegaBound starved = omega_lower_bound(machine("simple"), 8, 30);
    CHECK(starved.lower.compare(b8.lower) <= 0);
}

TEST_CASE("dyadic arithmetic is exact") {
    Dyadic d;
    d.add_pow2(3);
    d.add_pow2(3);
    CHECK(d.fraction_string() == "1/2^2");
    d.add_pow2(1);
    d.add_pow2(2);
    CHECK(d.compare(Dyadic::one()) == 0);

    Dyadic sum;
    for (int i = 0; i < 70; ++i) sum.add_pow2(70); // exercises wide integers
    CHECK(sum.fraction_string() == "35/2^69");
}

TEST_CASE("complexity upper bounds") {
    // K's canonical output: locate its bits via the machine itself
    auto simple = machine("simple");
    RunOutcome k = simple.run("100", 10000);
    REQUIRE(k.halted);
    auto bound = complexity_upper_bound(simple, k.bits, 3, 10000);
    // K's boolean-list view is empty, and "100" is the only length<=3 witness
    REQUIRE(bound);
    CHECK(*bound == 3);

    auto missing = complexity_upper_bound(simple, "010101", 3, 10000);
    CHECK_FALSE(missing);

    auto pf = machine("pf-keraia");
    RunOutcome i = pf.run("1001", 10000);
    REQUIRE(i.halted);
    auto pf_bound = complexity_upper_bound(pf, i.bits, 4, 10000);
    REQUIRE(pf_bound);
    CHECK(*pf_bound <= 4); // the bare-leaf codeword "0" also outputs no bits

    // more search never increases the bound
    auto wider = complexity_upper_bound(simple, k.bits, 6, 10000);
    REQUIRE(wider);
    CHECK(*wider <= *bound);
}

TEST_CASE("catalan numbers and the tree census") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(10) == 16796);

    CHECK(count_trees(7) == 5); // brute force over the 128 strings
    CHECK(count_trees(6) == 0);
    for (unsigned n = 0; n <= 7; ++n)
        CHECK(count_trees(2 * n + 1) == catalan(n));

    // the census agrees with the parser's acceptance
    for (unsigned len = 1; len <= 13; ++len) {
        std::uint64_t accepted = 0;
        for (std::uint64_t i = 0; i < (1ull << len); ++i) {
            BitString w(len, '0');
            for (unsigned b = 0; b < len; ++b)
                if (i >> (len - 1 - b) & 1) w[b] = '1';
            if (parse_tree(w)) ++accepted;
        }
        CHECK(accepted == count_trees(len));
    }

    double asymptotic = std::pow(4.0, 16) / std::sqrt(3.14159265358979323846 * 16.0 * 16.0 * 16.0);
    double ratio = double(catalan(16)) / asymptotic;
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
}

TEST_CASE("kraft and prefix checking") {
    CHECK(kraft_prefix_check(std::vector<BitString>{"0", "10"}));
    CHECK_FALSE(kraft_prefix_check(std::vector<BitString>{"0", "01"}));
    CHECK(kraft_prefix_check(std::vector<BitString>{}));

    Enumeration e = enumerate_halting(machine("simple"), 12, 10000);
    CHECK(kraft_prefix_check(e.records));
}

TEST_CASE("re-running a codeword reproduces its record") {
    Enumeration e = enumerate_halting(machine("pf-keraia"), 6, 10000);
    auto m = machine("pf-keraia");
    for (const auto& r : e.records) {
        RunOutcome o = m.run(r.codeword, 10000);
        REQUIRE(o.halted);
        CHECK(o.steps == r.steps);
        CHECK(o.bits == r.output_bits);
        CHECK(o.serialized == r.output_term);
    }
}

TEST_CASE("worker threads do not change the enumeration") {
    Enumeration serial = enumerate_halting(machine("simple"), 9, 10000, 1);
    Enumeration parallel = enumerate_halting(machine("simple"), 9, 10000, 4);
    REQUIRE(serial.records.size() == parallel.records.size());
    for (std::size_t i = 0; i < serial.records.size(); ++i) {
        CHECK(serial.records[i].codeword == parallel.records[i].codeword);
        CHECK(serial.records[i].output_term == parallel.records[i].output_term);
    }
    CHECK(serial.stats.step_limit_hits == parallel.stats.step_limit_hits);
}

TEST_CASE("record files resume to a bit-identical enumeration") {
    TempFile file;
    auto m = machine("simple");

    Enumeration first = enumerate_halting_resumable(m, 6, 10000, 1, file.path);
    auto loaded = load_record_file(file.path);
    REQUIRE(loaded);
    CHECK(loaded->completed_len == 6);
    CHECK(loaded->records.size() == first.records.size());

    Enumeration resumed = enumerate_halting_resumable(m, 10, 10000, 1, file.path);
    Enumeration fresh = enumerate_halting(m, 10, 10000);
    REQUIRE(resumed.records.size() == fresh.records.size());
    for (std::size_t i = 0; i < fresh.records.size(); ++i) {
        CHECK(resumed.records[i].codeword == fresh.records[i].codeword);
        CHECK(resumed.records[i].steps == fresh.records[i].steps);
        CHECK(resumed.records[i].output_bits == fresh.records[i].output_bits);
        CHECK(resumed.records[i].output_term == fresh.records[i].output_term);
    }
    CHECK(resumed.stats.step_limit_hits == fresh.stats.step_limit_hits);
    CHECK(resumed.stats.underflows == fresh.stats.underflows);

    // identical dyadic bounds either way
    Dyadic a, b;
    for (const auto& r : resumed.records) a.add_pow2(unsigned(r.codeword.size()));
    for (const auto& r : fresh.records) b.add_pow2(unsigned(r.codeword.size()));
    CHECK(a.compare(b) == 0);

    // a mismatched configuration is refused
    CHECK_THROWS_AS(enumerate_halting_resumable(m, 10, 20000, 1, file.path), std::runtime_error);
}

TEST_CASE("eliminated machines enumerate like ordinary ones") {
    auto m = chaitin_machine_by_name("elim-fixed3");
    REQUIRE(m);
    Enumeration e = enumerate_halting(*m, 4, 10000);
    CHECK(e.records.size() == 8);
    for (const auto& r : e.records) {
        CHECK(r.codeword.size() == 3);
        CHECK(r.output_bits == "1");
    }
    CHECK(kraft_prefix_check(e.records));
    CHECK_FALSE(chaitin_machine_by_name("elim-nonesuch"));
}
