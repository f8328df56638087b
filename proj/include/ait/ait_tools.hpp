#ifndef AIT_AIT_TOOLS_HPP
#define AIT_AIT_TOOLS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ait/bits.hpp"
#include "ait/runtime.hpp"

namespace ait {

// a prefix-free machine under enumeration: codeword -> outcome
struct ChaitinMachine {
    std::string name;
    std::function<RunOutcome(const BitString&, std::uint64_t)> run;
};

// simple, ext, pf-keraia, and eliminated machines as elim-<bem>
// (elim-zot, elim-blc, elim-keraia, elim-fixed3, elim-parity, elim-echo)
std::optional<ChaitinMachine> chaitin_machine_by_name(std::string_view name);

struct HaltingRecord {
    BitString codeword;
    std::uint64_t steps = 0;
    BitString output_bits;
    std::string output_term;
};

struct EnumerationStats {
    std::uint64_t step_limit_hits = 0;
    std::uint64_t underflows = 0;
    std::uint64_t overflows = 0;
    std::uint64_t syntax_errors = 0;
};

struct Enumeration {
    std::vector<HaltingRecord> records; // length-lexicographic order
    EnumerationStats stats;
};

// Every bit string of length 1..max_len, in length-lexicographic order.
// Halting runs are recorded; diverging ones are tallied. Candidate runs may
// execute on worker threads; the output order is canonical regardless.
Enumeration enumerate_halting(const ChaitinMachine& machine, std::size_t max_len,
                              std::uint64_t step_limit, unsigned workers = 1);

// exact dyadic rational num / 2^shift
struct Dyadic {
    boost::multiprecision::cpp_int num;
    unsigned shift = 0;

    void normalize();
    void add_pow2(unsigned k); // += 2^-k
    void add(const Dyadic& other);
    int compare(const Dyadic& other) const;

    std::string fraction_string() const;            // "num/2^shift"
    std::string binary_expansion(unsigned digits) const; // "0.0101..."

    static Dyadic zero() { return {}; }
    static Dyadic one() { return {1, 0}; }
};

struct OmegaBound {
    Dyadic lower;
    std::size_t max_len = 0;
    std::uint64_t step_limit = 0;
    std::vector<HaltingRecord> records;
    EnumerationStats stats;
};

OmegaBound omega_lower_bound(const ChaitinMachine& machine, std::size_t max_len,
                             std::uint64_t step_limit, unsigned workers = 1);

// minimum codeword length whose output bits equal the target; an upper
// bound on the machine's program-size complexity of the target
std::optional<std::size_t> complexity_upper_bound(const ChaitinMachine& machine,
                                                  const BitString& target_bits,
                                                  std::size_t max_len,
                                                  std::uint64_t step_limit,
                                                  unsigned workers = 1);

// exact Catalan numbers (n <= 30 to stay in 64 bits)
std::uint64_t catalan(unsigned n);
// number of accepted preorder traversals of the given bit length, by
// exhaustive parse (0 for even lengths)
std::uint64_t count_trees(std::size_t bit_length);

// no codeword is a proper prefix of another, and the dyadic sum is <= 1
bool kraft_prefix_check(const std::vector<HaltingRecord>& records);
bool kraft_prefix_check(const std::vector<BitString>& codewords);

// --- restartable record files ----------------------------------------------
// One tab-separated line per record (codeword, steps, output_bits,
// output_term); a checkpoint line after each completed length lets long
// enumerations resume.

struct RecordFileData {
    std::string machine;
    std::uint64_t step_limit = 0;
    std::size_t completed_len = 0;
    std::vector<HaltingRecord> records;
    EnumerationStats stats; // cumulative at the last checkpoint
};

std::optional<RecordFileData> load_record_file(const std::string& path);

// enumerate_halting that streams to the record file and reuses any lengths
// it already completed (machine name and step limit must match)
Enumeration enumerate_halting_resumable(const ChaitinMachine& machine, std::size_t max_len,
                                        std::uint64_t step_limit, unsigned workers,
                                        const std::string& record_path);

} // namespace ait

#endif
