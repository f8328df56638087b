#include "ait/ait_tools.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ait/bem.hpp"
#include "ait/encodings.hpp"
#include "ait/keraia.hpp"

namespace ait {

std::optional<ChaitinMachine> chaitin_machine_by_name(std::string_view name) {
    if (name == "simple")
        return ChaitinMachine{"simple", [](const BitString& w, std::uint64_t s) {
                                  return simple_chaitin_eval(w, s);
                              }};
    if (name == "ext")
        return ChaitinMachine{"ext", [](const BitString& w, std::uint64_t s) {
                                  return extended_eval(iota_term_primitive(), w, s);
                              }};
    if (name == "pf-keraia")
        return ChaitinMachine{"pf-keraia", [](const BitString& w, std::uint64_t s) {
                                  return pf_keraia_eval(w, s);
                              }};
    if (name.substr(0, 5) == "elim-") {
        std::string bem(name.substr(5));
        try {
            auto machine = bem_by_name(bem);
            return ChaitinMachine{std::string(name),
                                  [machine](const BitString& w, std::uint64_t s) {
                                      return eliminate(machine, s).run(w, s);
                                  }};
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

namespace {

BitString index_to_bits(std::uint64_t idx, std::size_t len) {
    BitString s(len, '0');
    for (std::size_t b = 0; b < len; ++b)
        if (idx >> (len - 1 - b) & 1) s[b] = '1';
    return s;
}

struct LengthScan {
    std::vector<HaltingRecord> records;
    EnumerationStats stats;
};

LengthScan scan_length(const ChaitinMachine& machine, std::size_t len,
                       std::uint64_t step_limit, unsigned workers) {
    const std::uint64_t total = 1ull << len;
    std::vector<std::optional<HaltingRecord>> slots(total);
    EnumerationStats stats;

    auto eval_one = [&](std::uint64_t idx, EnumerationStats& st) {
        BitString w = index_to_bits(idx, len);
        RunOutcome o = machine.run(w, step_limit);
        if (o.halted) {
            slots[idx] = HaltingRecord{w, o.steps, o.bits, o.serialized};
            return;
        }
        switch (o.reason) {
        case DivergeReason::StepLimit: ++st.step_limit_hits; break;
        case DivergeReason::Underflow: ++st.underflows; break;
        case DivergeReason::Overflow: ++st.overflows; break;
        case DivergeReason::SyntaxError: ++st.syntax_errors; break;
        }
    };

    if (workers <= 1 || total < 64) {
        for (std::uint64_t i = 0; i < total; ++i) eval_one(i, stats);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<EnumerationStats> per_thread(workers);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                for (;;) {
                    std::uint64_t i = next.fetch_add(1);
                    if (i >= total) return;
                    eval_one(i, per_thread[t]);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& st : per_thread) {
            stats.step_limit_hits += st.step_limit_hits;
            stats.underflows += st.underflows;
            stats.overflows += st.overflows;
            stats.syntax_errors += st.syntax_errors;
        }
    }

    LengthScan out;
    out.stats = stats;
    for (auto& s : slots)
        if (s) out.records.push_back(std::move(*s));
    return out;
}

void accumulate(EnumerationStats& into, const EnumerationStats& from) {
    into.step_limit_hits += from.step_limit_hits;
    into.underflows += from.underflows;
    into.overflows += from.overflows;
    into.syntax_errors += from.syntax_errors;
}

} // namespace

Enumeration enumerate_halting(const ChaitinMachine& machine, std::size_t max_len,
                              std::uint64_t step_limit, unsigned workers) {
    Enumeration out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        LengthScan scan = scan_length(machine, len, step_limit, workers);
        accumulate(out.stats, scan.stats);
        for (auto& r : scan.records) out.records.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// dyadic arithmetic

void Dyadic::normalize() {
    if (num == 0) { shift = 0; return; }
    while (shift > 0 && (num & 1) == 0) {
        num >>= 1;
        --shift;
    }
}

void Dyadic::add_pow2(unsigned k) {
    if (k >= shift) {
        num <<= (k - shift);
        shift = k;
        num += 1;
    } else {
        num += boost::multiprecision::cpp_int(1) << (shift - k);
    }
    normalize();
}

void Dyadic::add(const Dyadic& other) {
    unsigned s = std::max(shift, other.shift);
    boost::multiprecision::cpp_int a = num << (s - shift);
    boost::multiprecision::cpp_int b = other.num << (s - other.shift);
    num = a + b;
    shift = s;
    normalize();
}

int Dyadic::compare(const Dyadic& other) const {
    unsigned s = std::max(shift, other.shift);
    boost::multiprecision::cpp_int a = num << (s - shift);
    boost::multiprecision::cpp_int b = other.num << (s - other.shift);
    return a < b ? -1 : (a == b ? 0 : 1);
}

std::string Dyadic::fraction_string() const {
    std::ostringstream os;
    os << num << "/2^" << shift;
    return os.str();
}

std::string Dyadic::binary_expansion(unsigned digits) const {
    // integer part is 0 or 1 for halting probabilities
    boost::multiprecision::cpp_int ip = num >> shift;
    boost::multiprecision::cpp_int frac = num - (ip << shift);
    std::string out = ip.str() + ".";
    for (unsigned i = 1; i <= digits; ++i) {
        if (shift >= i)
            out += static_cast<bool>((frac >> (shift - i)) & 1) ? '1' : '0';
        else
            out += '0';
    }
    return out;
}

OmegaBound omega_lower_bound(const ChaitinMachine& machine, std::size_t max_len,
                             std::uint64_t step_limit, unsigned workers) {
    Enumeration e = enumerate_halting(machine, max_len, step_limit, workers);
    OmegaBound b;
    b.max_len = max_len;
    b.step_limit = step_limit;
    for (const auto& r : e.records)
        b.lower.add_pow2(unsigned(r.codeword.size()));
    b.records = std::move(e.records);
    b.stats = e.stats;
    return b;
}

std::optional<std::size_t> complexity_upper_bound(const ChaitinMachine& machine,
                                                  const BitString& target_bits,
                                                  std::size_t max_len,
                                                  std::uint64_t step_limit,
                                                  unsigned workers) {
    Enumeration e = enumerate_halting(machine, max_len, step_limit, workers);
    for (const auto& r : e.records) // length-lex order: first hit is minimal
        if (r.output_bits == target_bits) return r.codeword.size();
    return std::nullopt;
}

std::uint64_t catalan(unsigned n) {
    if (n > 30) throw std::invalid_argument("catalan: n too large for exact 64-bit arithmetic");
    static std::vector<std::uint64_t> table = {1};
    while (table.size() <= n) {
        std::size_t m = table.size(); // computing C_m = sum C_i * C_{m-1-i}
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < m; ++i) c += table[i] * table[m - 1 - i];
        table.push_back(c);
    }
    return table[n];
}

std::uint64_t count_trees(std::size_t bit_length) {
    if (bit_length % 2 == 0) return 0;
    if (bit_length > 25) throw std::invalid_argument("count_trees: exhaustive scan too large");
    std::uint64_t count = 0;
    const std::uint64_t total = 1ull << bit_length;
    for (std::uint64_t i = 0; i < total; ++i) {
        // preorder scan: +1 per '1', -1 per '0'; must first hit -1 at the end
        int counter = 0;
        bool ok = true;
        for (std::size_t b = 0; b < bit_length; ++b) {
            counter += (i >> (bit_length - 1 - b) & 1) ? 1 : -1;
            if (counter == -1 && b + 1 != bit_length) { ok = false; break; }
        }
        if (ok && counter == -1) ++count;
    }
    return count;
}

bool kraft_prefix_check(const std::vector<BitString>& codewords) {
    std::vector<BitString> sorted = codewords;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        const BitString& a = sorted[i];
        const BitString& b = sorted[i + 1];
        if (a.size() < b.size() && b.compare(0, a.size(), a) == 0) return false;
    }
    Dyadic sum;
    for (const auto& w : codewords) sum.add_pow2(unsigned(w.size()));
    return sum.compare(Dyadic::one()) <= 0;
}

bool kraft_prefix_check(const std::vector<HaltingRecord>& records) {
    std::vector<BitString> words;
    words.reserve(records.size());
    for (const auto& r : records) words.push_back(r.codeword);
    return kraft_prefix_check(words);
}

// ---------------------------------------------------------------------------
// record files

namespace {

constexpr std::string_view kHeaderTag = "# ait-records";

std::string header_line(const std::string& machine, std::uint64_t step_limit) {
    std::ostringstream os;
    os << kHeaderTag << " machine=" << machine << " step_limit=" << step_limit;
    return os.str();
}

std::string checkpoint_line(std::size_t len, const EnumerationStats& st) {
    std::ostringstream os;
    os << "#complete len=" << len << " steplimit=" << st.step_limit_hits
       << " underflow=" << st.underflows << " overflow=" << st.overflows
       << " syntax=" << st.syntax_errors;
    return os.str();
}

std::string record_line(const HaltingRecord& r) {
    std::ostringstream os;
    os << r.codeword << '\t' << r.steps << '\t' << r.output_bits << '\t' << r.output_term;
    return os.str();
}

bool parse_kv(const std::string& line, const std::string& key, std::string& value) {
    auto pos = line.find(key + "=");
    if (pos == std::string::npos) return false;
    pos += key.size() + 1;
    auto end = line.find(' ', pos);
    value = line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    return true;
}

} // namespace

std::optional<RecordFileData> load_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line.rfind(kHeaderTag, 0) != 0) return std::nullopt;

    RecordFileData data;
    std::string v;
    if (!parse_kv(line, "machine", data.machine)) return std::nullopt;
    if (!parse_kv(line, "step_limit", v)) return std::nullopt;
    data.step_limit = std::strtoull(v.c_str(), nullptr, 10);

    std::vector<HaltingRecord> pending;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("#complete", 0) == 0) {
            std::string lv;
            if (!parse_kv(line, "len", lv)) return std::nullopt;
            data.completed_len = std::strtoull(lv.c_str(), nullptr, 10);
            // checkpoints carry cumulative totals; the latest one wins
            if (parse_kv(line, "steplimit", lv)) {
                EnumerationStats st;
                st.step_limit_hits = std::strtoull(lv.c_str(), nullptr, 10);
                if (parse_kv(line, "underflow", lv)) st.underflows = std::strtoull(lv.c_str(), nullptr, 10);
                if (parse_kv(line, "overflow", lv)) st.overflows = std::strtoull(lv.c_str(), nullptr, 10);
                if (parse_kv(line, "syntax", lv)) st.syntax_errors = std::strtoull(lv.c_str(), nullptr, 10);
                data.stats = st;
            }
            for (auto& r : pending) data.records.push_back(std::move(r));
            pending.clear();
            continue;
        }
        if (line[0] == '#') continue;
        // codeword \t steps \t output_bits \t output_term
        HaltingRecord r;
        std::size_t p1 = line.find('\t');
        std::size_t p2 = p1 == std::string::npos ? p1 : line.find('\t', p1 + 1);
        std::size_t p3 = p2 == std::string::npos ? p2 : line.find('\t', p2 + 1);
        if (p3 == std::string::npos) return std::nullopt;
        r.codeword = line.substr(0, p1);
        r.steps = std::strtoull(line.substr(p1 + 1, p2 - p1 - 1).c_str(), nullptr, 10);
        r.output_bits = line.substr(p2 + 1, p3 - p2 - 1);
        r.output_term = line.substr(p3 + 1);
        pending.push_back(std::move(r));
    }
    // records after the last checkpoint belong to an unfinished length
    return data;
}

Enumeration enumerate_halting_resumable(const ChaitinMachine& machine, std::size_t max_len,
                                        std::uint64_t step_limit, unsigned workers,
                                        const std::string& record_path) {
    RecordFileData data;
    if (auto loaded = load_record_file(record_path)) {
        if (loaded->machine != machine.name || loaded->step_limit != step_limit)
            throw std::runtime_error("record file " + record_path +
                                     " was produced by a different machine or step limit");
        data = std::move(*loaded);
    } else {
        data.machine = machine.name;
        data.step_limit = step_limit;
    }

    // rewrite the validated portion, dropping any unfinished tail
    std::ofstream out(record_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write record file " + record_path);
    out << header_line(data.machine, data.step_limit) << '\n';
    {
        // per-length stats are not retained, so only the final checkpoint
        // of the reused portion carries the cumulative totals
        std::size_t i = 0;
        for (std::size_t len = 1; len <= data.completed_len; ++len) {
            while (i < data.records.size() && data.records[i].codeword.size() == len)
                out << record_line(data.records[i++]) << '\n';
            if (len == data.completed_len)
                out << checkpoint_line(len, data.stats) << '\n';
            else
                out << "#complete len=" << len << '\n';
        }
    }

    Enumeration result;
    result.records = data.records;
    result.stats = data.stats;
    for (std::size_t len = data.completed_len + 1; len <= max_len; ++len) {
        LengthScan scan = scan_length(machine, len, step_limit, workers);
        accumulate(result.stats, scan.stats);
        for (auto& r : scan.records) {
            out << record_line(r) << '\n';
            result.records.push_back(std::move(r));
        }
        out << checkpoint_line(len, result.stats) << '\n';
        out.flush();
    }
    return result;
}

} // namespace ait
