#include "ait/bits.hpp"

#include <cctype>
#include <stdexcept>

namespace ait {

bool is_bit_string(std::string_view text) {
    for (char c : text)
        if (c != '0' && c != '1') return false;
    return true;
}

BitString parse_bits(std::string_view text) {
    BitString out;
    bool endmarker_seen = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (endmarker_seen)
            throw std::invalid_argument("bits after the '.' endmarker");
        if (c == '0' || c == '1') { out += c; continue; }
        if (c == '.') { endmarker_seen = true; continue; }
        throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
    }
    return out;
}

} // namespace ait
