#include "ait/tree.hpp"

namespace ait {

namespace {

// recursive descent; returns nullptr on truncation
BitTreePtr build(const std::shared_ptr<const std::string>& src, std::size_t& pos) {
    if (pos >= src->size()) return nullptr;
    auto node = std::make_shared<BitTree>();
    node->source = src;
    node->begin = pos;
    if ((*src)[pos] == '0') {
        ++pos;
        node->end = pos;
        return node;
    }
    ++pos;
    node->left = build(src, pos);
    if (!node->left) return nullptr;
    node->right = build(src, pos);
    if (!node->right) return nullptr;
    node->end = pos;
    return node;
}

} // namespace

BitTreePtr parse_tree(const BitString& bits) {
    auto src = std::make_shared<const std::string>(bits);
    std::size_t pos = 0;
    BitTreePtr t = build(src, pos);
    if (!t || pos != src->size()) return nullptr;
    return t;
}

std::optional<SplitTree> split_tree_prefix(const BitString& bits) {
    auto src = std::make_shared<const std::string>(bits);
    std::size_t pos = 0;
    BitTreePtr t = build(src, pos);
    if (!t) return std::nullopt;
    return SplitTree{std::move(t), bits.substr(pos)};
}

bool tree_shape_eq(const BitTreePtr& a, const BitTreePtr& b) {
    return a->bits() == b->bits();
}

} // namespace ait
