#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "polyq/tree.hpp"

namespace polyq {

// Grammar:  Tree := "*" | "(" Tree ("," Tree)+ ")"
// Whitespace is allowed anywhere between tokens and dropped on serialization.

enum class ParseErrorKind {
    EmptyInput,
    UnbalancedParens,
    SingleChildNode,
    TrailingGarbage,
    UnexpectedChar,
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what);
    ParseErrorKind kind() const { return kind_; }
    // byte offset into the original input, whitespace included
    std::size_t offset() const { return offset_; }

private:
    ParseErrorKind kind_;
    std::size_t offset_;
};

RibbonTree parse_tree(const std::string& text);

// no whitespace; parse(serialize(t)) == t and serialize(parse(s)) is s with
// whitespace stripped
std::string serialize_tree(const RibbonTree& t);

}  // namespace polyq
