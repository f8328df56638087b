#ifndef AIT_BEM_HPP
#define AIT_BEM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ait/bits.hpp"
#include "ait/encodings.hpp"
#include "ait/runtime.hpp"
#include "ait/term.hpp"

namespace ait {

// input alphabet of a blank-endmarker machine: bits plus the endmarker
enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };

inline Symbol bit_symbol(int bit) { return bit == 0 ? Symbol::Zero : Symbol::One; }

// One running instance of a blank-endmarker machine. Deterministic and
// cloneable, so the eliminator can snapshot it at read requests.
//   Running:   call step()
//   NeedInput: call feed()
//   Halted:    output available
//   Diverged:  provably loops without reading again (e.g. a syntax error)
class BemProcess {
public:
    enum class Status { Running, NeedInput, Halted, Diverged };

    virtual ~BemProcess() = default;
    virtual std::unique_ptr<BemProcess> clone() const = 0;
    virtual Status status() const = 0;
    virtual void step() = 0;
    virtual void feed(Symbol s) = 0;
    virtual BitString output_bits() const = 0;
    virtual TermPtr output_term() const { return nullptr; }
    virtual DivergeReason divergence_reason() const { return DivergeReason::StepLimit; }
};

class BemMachine {
public:
    virtual ~BemMachine() = default;
    virtual std::unique_ptr<BemProcess> start() const = 0;
    virtual std::string_view name() const = 0;
};

// Language-backed machines (Zot, Blc, Keraia). Throws on anything else.
std::shared_ptr<const BemMachine> as_bem(Language lang);
// Language machines plus the registered toys: fixed3, parity, echo.
std::shared_ptr<const BemMachine> bem_by_name(std::string_view name);

// drive a fresh process with the symbols of x (optionally followed by the
// endmarker), stepping as needed; used for replay checks
struct DriveResult {
    BemProcess::Status status;
    BitString bits;
    TermPtr term;
};
DriveResult drive_bem(const BemMachine& machine, const BitString& x, bool append_blank,
                      std::uint64_t step_limit);

struct EliminateStats {
    std::size_t rounds = 0;
    std::size_t max_live_branches = 0;
};

// The endmarker-elimination construction. At every read request of B, C
// speculates the three possible symbols in dovetailed branches:
//   - all three halt with identical output  -> C halts without reading
//   - a branch reaches a read or provably diverges (so unanimous halting is
//     settled impossible) -> C performs the real read and keeps the
//     matching branch
//   - a speculation round exceeding its budget, or the whole run exceeding
//     step_limit, reports StepLimit
class EliminatedMachine {
public:
    EliminatedMachine(std::shared_ptr<const BemMachine> machine, std::uint64_t round_budget)
        : machine_(std::move(machine)), round_budget_(round_budget) {}

    RunOutcome run(const BitString& input, std::uint64_t step_limit,
                   EliminateStats* stats = nullptr) const;

    const BemMachine& machine() const { return *machine_; }

private:
    std::shared_ptr<const BemMachine> machine_;
    std::uint64_t round_budget_;
};

EliminatedMachine eliminate(std::shared_ptr<const BemMachine> machine,
                            std::uint64_t round_budget = 100000);

RunOutcome run_eliminated(std::string_view bem_name, const BitString& input,
                          std::uint64_t step_limit, std::uint64_t round_budget = 100000);

} // namespace ait

#endif
