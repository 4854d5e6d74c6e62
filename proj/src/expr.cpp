#include "randcolor/expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace randcolor {

struct NExpression::Node {
    enum class Op { Literal, N, Neg, Add, Sub, Mul, Div, Pow } op = Op::Literal;
    Rational literal;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using Node = NExpression::Node;
using NodePtr = std::shared_ptr<const Node>;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse()
    {
        NodePtr out = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw std::invalid_argument("bad expression '" + std::string(text_) + "': " + why);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char ch)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    static NodePtr make(Node::Op op, NodePtr lhs, NodePtr rhs = nullptr)
    {
        auto node = std::make_shared<Node>();
        node->op = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }

    NodePtr expr()
    {
        NodePtr out = term();
        for (;;) {
            if (eat('+')) out = make(Node::Op::Add, out, term());
            else if (eat('-')) out = make(Node::Op::Sub, out, term());
            else return out;
        }
    }

    NodePtr term()
    {
        NodePtr out = power();
        for (;;) {
            if (eat('*')) out = make(Node::Op::Mul, out, power());
            else if (eat('/')) out = make(Node::Op::Div, out, power());
            else return out;
        }
    }

    NodePtr power()
    {
        NodePtr base = unary();
        if (eat('^')) return make(Node::Op::Pow, base, power());
        return base;
    }

    NodePtr unary()
    {
        if (eat('-')) return make(Node::Op::Neg, unary());
        if (eat('+')) return unary();
        return primary();
    }

    NodePtr primary()
    {
        skip();
        if (eat('(')) {
            NodePtr inner = expr();
            if (!eat(')')) fail("missing ')'");
            return inner;
        }
        if (pos_ < text_.size() && text_[pos_] == 'n') {
            ++pos_;
            auto node = std::make_shared<Node>();
            node->op = Node::Op::N;
            return node;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            ++pos_;
        }
        // exponent suffix such as 1e-3
        if (pos_ < text_.size() && pos_ > start && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t look = pos_ + 1;
            if (look < text_.size() && (text_[look] == '-' || text_[look] == '+')) ++look;
            if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
                pos_ = look;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            }
        }
        if (pos_ == start) fail("expected a number, 'n' or '('");
        auto node = std::make_shared<Node>();
        node->literal = parse_rational(text_.substr(start, pos_ - start));
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Param evaluate(const Node& node, std::int64_t n)
{
    using Op = Node::Op;
    switch (node.op) {
    case Op::Literal:
        return Param::of(node.literal);
    case Op::N:
        return Param::of(Rational(to_integer(n)));
    case Op::Neg: {
        Param x = evaluate(*node.lhs, n);
        if (x.exact) return Param::of(Rational(-*x.exact));
        return Param::of(-x.value);
    }
    default:
        break;
    }
    const Param a = evaluate(*node.lhs, n);
    const Param b = evaluate(*node.rhs, n);
    const bool exact = a.exact && b.exact;
    switch (node.op) {
    case Op::Add:
        return exact ? Param::of(Rational(*a.exact + *b.exact)) : Param::of(a.value + b.value);
    case Op::Sub:
        return exact ? Param::of(Rational(*a.exact - *b.exact)) : Param::of(a.value - b.value);
    case Op::Mul:
        return exact ? Param::of(Rational(*a.exact * *b.exact)) : Param::of(a.value * b.value);
    case Op::Div:
        if (b.value == 0.0) throw std::domain_error("division by zero in expression");
        return exact ? Param::of(Rational(*a.exact / *b.exact)) : Param::of(a.value / b.value);
    case Op::Pow:
        if (exact && b.exact->get_den() == 1 && abs(b.exact->get_num()) <= 64) {
            const long e = b.exact->get_num().get_si();
            Rational base = *a.exact;
            if (e < 0) {
                if (base == 0) throw std::domain_error("zero to a negative power");
                base = 1 / base;
            }
            Rational out = 1;
            for (long k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
            return Param::of(out);
        }
        return Param::of(std::pow(a.value, b.value));
    default:
        throw std::logic_error("unreachable expression node");
    }
}

bool mentions_n(const Node& node)
{
    if (node.op == Node::Op::N) return true;
    return (node.lhs && mentions_n(*node.lhs)) || (node.rhs && mentions_n(*node.rhs));
}

} // namespace

NExpression NExpression::parse(std::string_view text)
{
    NExpression out;
    out.root_ = Parser(text).parse();
    out.text_ = std::string(text);
    return out;
}

Param NExpression::eval(std::int64_t n) const { return evaluate(*root_, n); }

bool NExpression::uses_n() const { return mentions_n(*root_); }

} // namespace randcolor
