#include "polyq/notation.hpp"

#include <cctype>

namespace polyq {

ParseError::ParseError(ParseErrorKind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at byte " + std::to_string(offset)),
      kind_(kind),
      offset_(offset) {}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return text[pos];
    }
};

RibbonTree parse_node(Cursor& cur) {
    if (cur.done())
        throw ParseError(ParseErrorKind::UnbalancedParens, cur.text.size(),
                         "input ends where a subtree is expected");
    char c = cur.peek();
    std::size_t at = cur.pos;
    if (c == '*') {
        ++cur.pos;
        return RibbonTree::leaf();
    }
    if (c != '(')
        throw ParseError(ParseErrorKind::UnexpectedChar, at,
                         std::string("expected '*' or '(', found '") + c + "'");
    std::size_t open_at = cur.pos;
    ++cur.pos;
    std::vector<RibbonTree> children;
    children.push_back(parse_node(cur));
    while (true) {
        if (cur.done())
            throw ParseError(ParseErrorKind::UnbalancedParens, cur.text.size(),
                             "missing ')' for '(' ");
        char d = cur.peek();
        if (d == ',') {
            ++cur.pos;
            children.push_back(parse_node(cur));
        } else if (d == ')') {
            ++cur.pos;
            if (children.size() == 1)
                throw ParseError(ParseErrorKind::SingleChildNode, open_at,
                                 "node with a single child");
            return RibbonTree::internal(std::move(children));
        } else {
            throw ParseError(ParseErrorKind::UnexpectedChar, cur.pos,
                             std::string("expected ',' or ')', found '") + d + "'");
        }
    }
}

}  // namespace

RibbonTree parse_tree(const std::string& text) {
    Cursor cur{text};
    if (cur.done()) throw ParseError(ParseErrorKind::EmptyInput, 0, "empty input");
    RibbonTree t = parse_node(cur);
    if (!cur.done()) {
        char c = cur.peek();
        std::size_t at = cur.pos;
        if (c == ')')
            throw ParseError(ParseErrorKind::UnbalancedParens, at, "unmatched ')'");
        throw ParseError(ParseErrorKind::TrailingGarbage, at, "trailing input after tree");
    }
    return t;
}

std::string serialize_tree(const RibbonTree& t) {
    if (t.is_leaf()) return "*";
    std::string out = "(";
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        if (i) out += ',';
        out += serialize_tree(t.children()[i]);
    }
    out += ')';
    return out;
}

}  // namespace polyq
