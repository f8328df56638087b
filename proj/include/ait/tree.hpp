#ifndef AIT_TREE_HPP
#define AIT_TREE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ait/bits.hpp"

namespace ait {

struct BitTree;
using BitTreePtr = std::shared_ptr<const BitTree>;

// Parse of a preorder full-binary-tree traversal: '1' is an internal node,
// '0' a leaf. Each subtree remembers its originating bit substring.
struct BitTree {
    BitTreePtr left, right; // null for a leaf
    std::shared_ptr<const std::string> source;
    std::size_t begin = 0, end = 0;

    bool leaf() const { return !left; }
    std::string_view bits() const {
        return std::string_view(*source).substr(begin, end - begin);
    }
};

// Whole string must be exactly one traversal; nullptr on truncation or
// trailing bits. (The scan counter +1 per '1', -1 per '0' must first reach
// -1 exactly at the final bit.)
BitTreePtr parse_tree(const BitString& bits);

struct SplitTree {
    BitTreePtr tree;
    BitString rest;
};

// Shortest prefix that is a full traversal, plus the remainder; nullopt if
// no prefix completes.
std::optional<SplitTree> split_tree_prefix(const BitString& bits);

// shape comparison (full traversals have equal shapes iff equal bits)
bool tree_shape_eq(const BitTreePtr& a, const BitTreePtr& b);

} // namespace ait

#endif
