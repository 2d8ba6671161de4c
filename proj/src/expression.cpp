#include "qsl2/expression.hpp"

#include <cctype>
#include <limits>

#include "qsl2/frobenius.hpp"

namespace qsl2 {

namespace {

bool is_quantum_letter(const std::string& s) { return s == "a" || s == "b" || s == "c" || s == "d"; }
bool is_classical_letter(const std::string& s)
{
    return s == "alpha" || s == "beta" || s == "gamma" || s == "delta";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExpressionAst parse()
    {
        ExpressionAst e = expr();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return e;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch))
            throw ParseError(std::string("expected '") + ch + "'", pos_);
    }

    ExpressionAst expr()
    {
        skip_space();
        ExpressionAst sum;
        sum.kind = ExpressionAst::Kind::sum;
        sum.position = pos_;
        int sign = 1;
        if (accept('-'))
            sign = -1;
        else
            accept('+');
        sum.children.push_back(term());
        sum.signs.push_back(sign);
        for (;;) {
            if (accept('+'))
                sign = 1;
            else if (accept('-'))
                sign = -1;
            else
                break;
            sum.children.push_back(term());
            sum.signs.push_back(sign);
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1)
            return std::move(sum.children[0]);
        return sum;
    }

    ExpressionAst term()
    {
        skip_space();
        ExpressionAst prod;
        prod.kind = ExpressionAst::Kind::product;
        prod.position = pos_;
        prod.children.push_back(factor());
        while (accept('*'))
            prod.children.push_back(factor());
        if (prod.children.size() == 1)
            return std::move(prod.children[0]);
        return prod;
    }

    ExpressionAst factor()
    {
        ExpressionAst base_node = base();
        if (!accept('^'))
            return base_node;
        const std::size_t exp_pos = pos_;
        long e = 0;
        if (accept('(')) {
            e = signed_integer();
            expect(')');
        } else {
            e = signed_integer();
        }
        if (e < 0 && !(base_node.kind == ExpressionAst::Kind::symbol && base_node.symbol == "q"))
            throw ParseError("negative exponent is only allowed on q", exp_pos);
        ExpressionAst pw;
        pw.kind = ExpressionAst::Kind::power;
        pw.position = base_node.position;
        pw.exponent = e;
        pw.children.push_back(std::move(base_node));
        return pw;
    }

    long signed_integer()
    {
        skip_space();
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        Integer v = unsigned_integer();
        if (!v.fits_slong_p())
            throw ParseError("exponent out of range", pos_);
        return negative ? -v.get_si() : v.get_si();
    }

    Integer unsigned_integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected integer", start);
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    ExpressionAst base()
    {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of input", pos_);

        if (accept('(')) {
            ExpressionAst inner = expr();
            expect(')');
            return inner;
        }

        const unsigned char ch = static_cast<unsigned char>(text_[pos_]);
        if (std::isdigit(ch)) {
            Integer num = unsigned_integer();
            Integer den = 1;
            if (accept('/')) {
                const std::size_t den_pos = pos_;
                den = unsigned_integer();
                if (den == 0)
                    throw ParseError("zero denominator", den_pos);
            }
            ExpressionAst s;
            s.kind = ExpressionAst::Kind::scalar;
            s.value = Rational(num, den);
            s.value.canonicalize();
            s.position = start;
            return s;
        }

        static const std::pair<std::string_view, const char*> greek[] = {
            {"\xCE\xB1", "alpha"}, {"\xCE\xB2", "beta"}, {"\xCE\xB3", "gamma"}, {"\xCE\xB4", "delta"}};
        for (const auto& [utf8, name] : greek) {
            if (text_.substr(pos_, utf8.size()) == utf8) {
                pos_ += utf8.size();
                return symbol(name, start);
            }
        }

        if (std::isalpha(ch) || ch == '_') {
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "q" || is_quantum_letter(name) || is_classical_letter(name))
                return symbol(name, start);
            throw ParseError("unknown symbol '" + name + "'", start);
        }
        throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", start);
    }

    static ExpressionAst symbol(const std::string& name, std::size_t position)
    {
        ExpressionAst s;
        s.kind = ExpressionAst::Kind::symbol;
        s.symbol = name;
        s.position = position;
        return s;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

QElement evaluate_symbol(const std::string& name, const QRing& ring)
{
    if (name == "q")
        return QElement::scalar(ring, ring.q_pow(1));
    if (is_quantum_letter(name))
        return QElement::generator(ring, name[0]);
    ClassicalMonomial m;
    if (name == "alpha")
        m.alpha = 1;
    else if (name == "beta")
        m.beta = 1;
    else if (name == "gamma")
        m.gamma = 1;
    else
        m.delta = 1;
    return lift(ClassicalElement::monomial(ring, m));
}

}  // namespace

ExpressionAst parse_expression(std::string_view text) { return Parser(text).parse(); }

QElement evaluate(const ExpressionAst& ast, const QRing& ring)
{
    switch (ast.kind) {
    case ExpressionAst::Kind::scalar:
        return QElement::scalar(ring, Cyclotomic(ring.field(), ast.value));
    case ExpressionAst::Kind::symbol:
        return evaluate_symbol(ast.symbol, ring);
    case ExpressionAst::Kind::power: {
        const ExpressionAst& base = ast.children.at(0);
        if (base.kind == ExpressionAst::Kind::symbol && base.symbol == "q")
            return QElement::scalar(ring, ring.q_pow(ast.exponent));
        if (ast.exponent > std::numeric_limits<int>::max())
            throw DomainError("exponent too large");
        return power(evaluate(base, ring), static_cast<int>(ast.exponent));
    }
    case ExpressionAst::Kind::product: {
        QElement acc = evaluate(ast.children.at(0), ring);
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            acc = qmul(acc, evaluate(ast.children[i], ring));
        return acc;
    }
    case ExpressionAst::Kind::sum: {
        QElement acc(ring);
        for (std::size_t i = 0; i < ast.children.size(); ++i) {
            if (ast.signs[i] > 0)
                acc += evaluate(ast.children[i], ring);
            else
                acc -= evaluate(ast.children[i], ring);
        }
        return acc;
    }
    }
    throw std::logic_error("evaluate: unknown node kind");
}

QElement parse_element(std::string_view text, const QRing& ring)
{
    return evaluate(parse_expression(text), ring);
}

}  // namespace qsl2
