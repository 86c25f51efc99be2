#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liftspace/boolean_function.hpp"
#include "liftspace/errors.hpp"

namespace liftspace {

enum class Cmp { Eq, Ne, Lt, Le, Gt, Ge };

inline std::string_view cmp_symbol(Cmp c) {
    switch (c) {
        case Cmp::Eq: return "==";
        case Cmp::Ne: return "!=";
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Gt: return ">";
        case Cmp::Ge: return ">=";
    }
    return "?";
}

// Relational predicate over a single Boolean function. Atoms classify the
// function as a whole (parity, constant, balanced, output counts) or probe
// one output (value_at); not/and/or combine them.
class Predicate {
public:
    enum class Kind : std::uint8_t { Parity, Constant, Balanced, ValueAt, Ones, Not, And, Or };

    static Predicate parity() { return Predicate(make(Kind::Parity)); }
    static Predicate constant() { return Predicate(make(Kind::Constant)); }
    static Predicate balanced() { return Predicate(make(Kind::Balanced)); }

    static Predicate value_at(std::vector<std::uint8_t> input_bits) {
        auto node = make(Kind::ValueAt);
        node->bits = std::move(input_bits);
        return Predicate(std::move(node));
    }

    static Predicate ones(Cmp cmp, std::size_t bound) {
        auto node = make(Kind::Ones);
        node->cmp = cmp;
        node->bound = bound;
        return Predicate(std::move(node));
    }

    static Predicate negation(Predicate p) {
        auto node = make(Kind::Not);
        node->lhs = std::move(p.node_);
        return Predicate(std::move(node));
    }

    static Predicate conjunction(Predicate a, Predicate b) {
        auto node = make(Kind::And);
        node->lhs = std::move(a.node_);
        node->rhs = std::move(b.node_);
        return Predicate(std::move(node));
    }

    static Predicate disjunction(Predicate a, Predicate b) {
        auto node = make(Kind::Or);
        node->lhs = std::move(a.node_);
        node->rhs = std::move(b.node_);
        return Predicate(std::move(node));
    }

    Kind kind() const noexcept { return node_->kind; }

    bool evaluate(const BooleanFunction& f) const { return eval(*node_, f); }

    std::string to_string() const { return render(*node_, 1); }

    bool operator==(const Predicate& other) const { return equal(*node_, *other.node_); }

private:
    struct Node {
        Kind kind;
        std::vector<std::uint8_t> bits;  // ValueAt
        Cmp cmp = Cmp::Eq;               // Ones
        std::size_t bound = 0;           // Ones
        std::shared_ptr<const Node> lhs, rhs;
    };

    explicit Predicate(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    static std::shared_ptr<Node> make(Kind kind) {
        auto node = std::make_shared<Node>();
        node->kind = kind;
        return node;
    }

    static bool eval(const Node& node, const BooleanFunction& f) {
        switch (node.kind) {
            case Kind::Parity: return f.parity_odd();
            case Kind::Constant: return f.is_constant();
            case Kind::Balanced: return f.is_balanced();
            case Kind::ValueAt: {
                if (node.bits.size() != f.arity())
                    throw ArityMismatch("value_at expects " + std::to_string(f.arity()) +
                                        " input bits, got " + std::to_string(node.bits.size()));
                std::size_t input = 0;
                for (auto bit : node.bits) input = (input << 1) | bit;
                return f.value(input) == 1;
            }
            case Kind::Ones: {
                const std::size_t n = f.ones_count();
                switch (node.cmp) {
                    case Cmp::Eq: return n == node.bound;
                    case Cmp::Ne: return n != node.bound;
                    case Cmp::Lt: return n < node.bound;
                    case Cmp::Le: return n <= node.bound;
                    case Cmp::Gt: return n > node.bound;
                    case Cmp::Ge: return n >= node.bound;
                }
                return false;
            }
            case Kind::Not: return !eval(*node.lhs, f);
            case Kind::And: return eval(*node.lhs, f) && eval(*node.rhs, f);
            case Kind::Or: return eval(*node.lhs, f) || eval(*node.rhs, f);
        }
        return false;
    }

    static int precedence(Kind kind) {
        switch (kind) {
            case Kind::Or: return 1;
            case Kind::And: return 2;
            case Kind::Not: return 3;
            default: return 4;
        }
    }

    // "and" binds tighter than "or"; "not" tightest. Right operands of a
    // binary node are rendered one level tighter so that right-nested trees
    // keep their parentheses and parse(to_string(p)) == p structurally.
    static std::string render(const Node& node, int min_prec) {
        std::string out;
        switch (node.kind) {
            case Kind::Parity: out = "parity"; break;
            case Kind::Constant: out = "constant"; break;
            case Kind::Balanced: out = "balanced"; break;
            case Kind::ValueAt: {
                std::string bits;
                for (auto bit : node.bits) bits.push_back(bit ? '1' : '0');
                out = "value_at(" + bits + ")";
                break;
            }
            case Kind::Ones:
                out = "ones " + std::string(cmp_symbol(node.cmp)) + " " +
                      std::to_string(node.bound);
                break;
            case Kind::Not: out = "not " + render(*node.lhs, precedence(Kind::Not)); break;
            case Kind::And:
                out = render(*node.lhs, 2) + " and " + render(*node.rhs, 3);
                break;
            case Kind::Or:
                out = render(*node.lhs, 1) + " or " + render(*node.rhs, 2);
                break;
        }
        if (precedence(node.kind) < min_prec) return "(" + out + ")";
        return out;
    }

    static bool equal(const Node& a, const Node& b) {
        if (a.kind != b.kind) return false;
        switch (a.kind) {
            case Kind::ValueAt: return a.bits == b.bits;
            case Kind::Ones: return a.cmp == b.cmp && a.bound == b.bound;
            case Kind::Not: return equal(*a.lhs, *b.lhs);
            case Kind::And:
            case Kind::Or: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
            default: return true;
        }
    }

    std::shared_ptr<const Node> node_;
};

namespace detail {

// Recursive-descent parser for the predicate grammar:
//   expr   := and ("or" and)*
//   and    := unary ("and" unary)*
//   unary  := "not" unary | "(" expr ")" | atom
//   atom   := "parity" | "constant" | "balanced"
//           | "value_at" "(" bits ")" | "ones" cmp integer
class PredicateParser {
public:
    explicit PredicateParser(std::string_view text) : text_(text) {}

    Predicate parse() {
        Predicate p = parse_or();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw PredicateParseError(message, pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_).substr(0, word.size()) != word) return false;
        const std::size_t after = pos_ + word.size();
        if (after < text_.size()) {
            const char next = text_[after];
            if (std::isalnum(static_cast<unsigned char>(next)) || next == '_') return false;
        }
        return true;
    }

    bool eat_word(std::string_view word) {
        if (!peek_word(word)) return false;
        pos_ += word.size();
        return true;
    }

    Predicate parse_or() {
        Predicate lhs = parse_and();
        while (eat_word("or")) lhs = Predicate::disjunction(std::move(lhs), parse_and());
        return lhs;
    }

    Predicate parse_and() {
        Predicate lhs = parse_unary();
        while (eat_word("and")) lhs = Predicate::conjunction(std::move(lhs), parse_unary());
        return lhs;
    }

    Predicate parse_unary() {
        if (eat_word("not")) return Predicate::negation(parse_unary());
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            Predicate inner = parse_or();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        return parse_atom();
    }

    Predicate parse_atom() {
        if (eat_word("parity")) return Predicate::parity();
        if (eat_word("constant")) return Predicate::constant();
        if (eat_word("balanced")) return Predicate::balanced();
        if (eat_word("value_at")) return parse_value_at();
        if (eat_word("ones")) return parse_ones();
        fail("expected an atom (parity, constant, balanced, value_at, ones)");
    }

    Predicate parse_value_at() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '(') fail("expected '(' after value_at");
        ++pos_;
        skip_ws();
        std::vector<std::uint8_t> bits;
        while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
            bits.push_back(text_[pos_++] == '1' ? 1 : 0);
        if (bits.empty()) fail("expected input bits inside value_at(...)");
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')' after value_at bits");
        ++pos_;
        return Predicate::value_at(std::move(bits));
    }

    Predicate parse_ones() {
        skip_ws();
        Cmp cmp;
        if (consume("==")) cmp = Cmp::Eq;
        else if (consume("!=")) cmp = Cmp::Ne;
        else if (consume("<=")) cmp = Cmp::Le;
        else if (consume(">=")) cmp = Cmp::Ge;
        else if (consume("<")) cmp = Cmp::Lt;
        else if (consume(">")) cmp = Cmp::Gt;
        else fail("expected comparison after 'ones'");
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer bound after comparison");
        std::size_t bound = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            bound = bound * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
        return Predicate::ones(cmp, bound);
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_).substr(0, token.size()) != token) return false;
        pos_ += token.size();
        return true;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Predicate parse_predicate(std::string_view text) {
    return detail::PredicateParser(text).parse();
}

// Class labels for the two outcome classes of a predicate. The bare parity
// atom reports odd/even; everything else is "1"/"0".
struct OutcomeLabels {
    std::string when_true;
    std::string when_false;
};

inline OutcomeLabels outcome_labels(const Predicate& p) {
    if (p.kind() == Predicate::Kind::Parity) return {"odd", "even"};
    return {"1", "0"};
}

}  // namespace liftspace
