#ifndef AIT_BITS_HPP
#define AIT_BITS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ait {

// A finite bit sequence, stored as ASCII '0'/'1'. Codewords, programs and
// machine inputs are all carried in this form.
using BitString = std::string;

bool is_bit_string(std::string_view text);

// Parses bit text: '0'/'1' kept, whitespace ignored. A single trailing '.'
// (the explicit endmarker position used in input files) is accepted and
// dropped. Throws std::invalid_argument on anything else.
BitString parse_bits(std::string_view text);

// The shared input channel between sender and machine. Bits are consumed
// from the front; consumed only grows and remaining only shrinks.
class Pipe {
public:
    Pipe() = default;
    explicit Pipe(BitString bits) : bits_(std::move(bits)) {}

    // next bit, or nullopt when the sender has nothing left (underflow at
    // the caller's discretion)
    std::optional<int> read() {
        if (pos_ >= bits_.size()) return std::nullopt;
        return bits_[pos_++] == '1' ? 1 : 0;
    }

    bool empty() const { return pos_ >= bits_.size(); }
    std::size_t remaining() const { return bits_.size() - pos_; }
    std::size_t consumed() const { return pos_; }
    const BitString& bits() const { return bits_; }

private:
    BitString bits_;
    std::size_t pos_ = 0;
};

} // namespace ait

#endif
