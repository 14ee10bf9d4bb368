#include "njump/parser.hpp"

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

namespace njump {
namespace {

constexpr std::int64_t max_exponent = 1'000'000'000'000'000; // 10^15

struct Token {
    enum Kind { number, variable, plus, minus, star, caret, slash, end };
    Kind kind;
    std::size_t pos; // 1-based character position
    Int value;       // kind == number
    int var = -1;    // kind == variable, 0..2
};

[[noreturn]] void syntax_error(std::size_t pos, const std::string& what)
{
    std::ostringstream out;
    out << "syntax error at position " << pos << ": " << what;
    fail(ErrorKind::parse, out.str());
}

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            Int value(std::string(text.substr(i, j - i)));
            out.push_back({Token::number, pos, value});
            i = j;
            continue;
        }
        switch (c) {
        case 'x':
        case 'y':
        case 'z':
            out.push_back({Token::variable, pos, 0, c - 'x'});
            break;
        case '+':
            out.push_back({Token::plus, pos, 0});
            break;
        case '-':
            out.push_back({Token::minus, pos, 0});
            break;
        case '*':
            out.push_back({Token::star, pos, 0});
            break;
        case '^':
            out.push_back({Token::caret, pos, 0});
            break;
        case '/':
            out.push_back({Token::slash, pos, 0});
            break;
        default:
            syntax_error(pos, std::string("unexpected character '") + c + "'");
        }
        ++i;
    }
    out.push_back({Token::end, text.size() + 1, 0});
    return out;
}

class GermParser {
public:
    GermParser(std::string_view text, int dimension)
        : tokens_(tokenize(text)), dimension_(dimension)
    {
    }

    Support parse()
    {
        if (peek().kind == Token::end)
            syntax_error(peek().pos, "empty germ");

        int sign = +1;
        if (peek().kind == Token::plus || peek().kind == Token::minus) {
            if (peek().kind == Token::minus)
                sign = -1;
            advance();
        }
        parse_term(sign);
        while (peek().kind != Token::end) {
            const Token& t = peek();
            if (t.kind != Token::plus && t.kind != Token::minus)
                syntax_error(t.pos, "expected '+' or '-' between terms");
            advance();
            parse_term(t.kind == Token::minus ? -1 : +1);
        }

        std::vector<ExponentVector> points;
        points.reserve(terms_.size());
        for (const auto& [exps, acc] : terms_) {
            if (acc.occurrences > 1 && acc.coefficient == 0) {
                std::ostringstream out;
                out << "monomial " << to_string(exps, dimension_)
                    << " appears " << acc.occurrences
                    << " times and its coefficients cancel exactly;"
                       " membership in the support is ambiguous";
                fail(ErrorKind::parse, out.str());
            }
            points.push_back(exps);
        }
        return Support(dimension_, std::move(points));
    }

private:
    struct Accumulated {
        Rat coefficient;
        int occurrences = 0;
    };

    const Token& peek() const { return tokens_[index_]; }
    void advance() { ++index_; }

    Int expect_number(const char* what)
    {
        if (peek().kind != Token::number)
            syntax_error(peek().pos, std::string("expected ") + what);
        Int v = peek().value;
        advance();
        return v;
    }

    std::int64_t parse_exponent()
    {
        if (peek().kind == Token::minus)
            syntax_error(peek().pos, "negative exponents are not allowed");
        std::size_t pos = peek().pos;
        Int v = expect_number("an exponent after '^'");
        if (v > max_exponent)
            syntax_error(pos, "exponent out of range");
        return v.convert_to<std::int64_t>();
    }

    void parse_term(int sign)
    {
        std::size_t start = peek().pos;
        Rat coefficient = sign;
        ExponentVector exps;
        bool saw_factor = false;

        for (;;) {
            const Token& t = peek();
            if (t.kind == Token::number) {
                std::size_t pos = t.pos;
                Int numer = t.value;
                advance();
                Int denom = 1;
                if (peek().kind == Token::slash) {
                    advance();
                    std::size_t dpos = peek().pos;
                    denom = expect_number("a denominator after '/'");
                    if (denom == 0)
                        syntax_error(dpos, "division by zero in coefficient");
                }
                if (numer == 0)
                    syntax_error(pos, "zero coefficient is not allowed");
                coefficient *= Rat(numer, denom);
                saw_factor = true;
            } else if (t.kind == Token::variable) {
                if (dimension_ == 2 && t.var == 2)
                    syntax_error(t.pos, "variable z is not allowed in dimension 2");
                int var = t.var;
                advance();
                std::int64_t e = 1;
                if (peek().kind == Token::caret) {
                    advance();
                    e = parse_exponent();
                }
                if (exps[var] > max_exponent - e)
                    syntax_error(t.pos, "exponent out of range");
                exps[var] += e;
                saw_factor = true;
            } else if (t.kind == Token::star) {
                advance();
                if (peek().kind != Token::number && peek().kind != Token::variable)
                    syntax_error(peek().pos, "expected a factor after '*'");
            } else {
                break;
            }
        }

        if (!saw_factor)
            syntax_error(peek().pos, "expected a term");
        if (exps == ExponentVector{}) {
            std::ostringstream out;
            out << "constant term at position " << start
                << "; a germ must vanish at the origin";
            fail(ErrorKind::parse, out.str());
        }

        auto& acc = terms_[exps];
        acc.coefficient += coefficient;
        acc.occurrences += 1;
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
    int dimension_;
    std::map<ExponentVector, Accumulated> terms_;
};

} // namespace

Support parse_germ(std::string_view text, std::optional<int> dimension)
{
    int dim = dimension.value_or(3);
    if (dim != 2 && dim != 3)
        fail(ErrorKind::input_mismatch, "dimension must be 2 or 3");
    return GermParser(text, dim).parse();
}

bool is_convenient(const Support& s)
{
    for (int axis = 0; axis < s.dimension(); ++axis) {
        bool touched = false;
        for (const auto& p : s.points()) {
            bool pure = p[axis] > 0;
            for (int j = 0; j < 3 && pure; ++j)
                if (j != axis && p[j] != 0)
                    pure = false;
            if (pure) {
                touched = true;
                break;
            }
        }
        if (!touched)
            return false;
    }
    return true;
}

std::string to_canonical_string(const Support& s)
{
    static const char* names[3] = {"x", "y", "z"};
    std::ostringstream out;
    bool first_term = true;
    for (const auto& p : s.points()) {
        if (!first_term)
            out << " + ";
        first_term = false;
        bool first_factor = true;
        for (int v = 0; v < s.dimension(); ++v) {
            if (p[v] == 0)
                continue;
            if (!first_factor)
                out << '*';
            first_factor = false;
            out << names[v];
            if (p[v] > 1)
                out << '^' << p[v];
        }
    }
    return out.str();
}

} // namespace njump
