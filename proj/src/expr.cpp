#include "toricqh/expr.hpp"

#include <cctype>
#include <climits>

namespace toricqh {

namespace {

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    ElementExpr parse()
    {
        ElementExpr e;
        e.terms.push_back(term());
        while (accept('+'))
            e.terms.push_back(term());
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > INT_MAX / 4)
                fail("integer too large");
            ++pos_;
        }
        if (pos_ == start)
            fail("expected an integer");
        return static_cast<int>(value);
    }

    Term term()
    {
        Term t;
        t.factors.push_back(factor());
        while (accept('*'))
            t.factors.push_back(factor());
        return t;
    }

    Factor factor()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("expected a factor");
        Factor f;
        const char c = text_[pos_];
        if (c == 'X') {
            ++pos_;
            f.kind = Factor::Kind::Variable;
            const std::size_t at = pos_;
            f.index = integer();
            if (f.index < 1 || (nvars_ && static_cast<std::size_t>(f.index) > nvars_)) {
                pos_ = at;
                fail("variable X" + std::to_string(f.index) + " out of range");
            }
            f.exponent = accept('^') ? integer() : 1;
        } else if (c == 'q') {
            ++pos_;
            f.kind = Factor::Kind::Q;
            f.exponent = 1;
            if (accept('^')) {
                const bool negative = accept('-');
                f.exponent = negative ? -integer() : integer();
            }
        } else if (c == 'L' || c == '1') {
            ++pos_;
            f.kind = Factor::Kind::Unit;
            f.literal = c;
            if (c == '1' && pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("only the literal 1 is allowed as a coefficient");
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        return f;
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

ElementExpr parse_expr(std::string_view text, std::size_t nvars)
{
    return Parser(text, nvars).parse();
}

std::string print_expr(const ElementExpr& e)
{
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i)
            out += " + ";
        const auto& factors = e.terms[i].factors;
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k)
                out += "*";
            const Factor& f = factors[k];
            switch (f.kind) {
            case Factor::Kind::Variable:
                out += "X" + std::to_string(f.index);
                if (f.exponent != 1)
                    out += "^" + std::to_string(f.exponent);
                break;
            case Factor::Kind::Q:
                out += "q";
                if (f.exponent != 1)
                    out += "^" + std::to_string(f.exponent);
                break;
            case Factor::Kind::Unit:
                out += f.literal;
                break;
            }
        }
    }
    return out;
}

QHElement evaluate(const Ring& ring, const ElementExpr& e)
{
    QHElement out;
    for (const Term& t : e.terms) {
        Monomial m(ring.nvars());
        int q_exp = 0;
        for (const Factor& f : t.factors) {
            if (f.kind == Factor::Kind::Variable) {
                if (f.index < 1 || static_cast<std::size_t>(f.index) > ring.nvars())
                    throw Error(ErrorCode::ParseError, "variable X" + std::to_string(f.index) + " out of range");
                m.x[static_cast<std::size_t>(f.index - 1)] += f.exponent;
            } else if (f.kind == Factor::Kind::Q) {
                q_exp += f.exponent;
            }
        }
        out += ring.quotient().element_of(m).shifted(q_exp);
    }
    return out;
}

}  // namespace toricqh
