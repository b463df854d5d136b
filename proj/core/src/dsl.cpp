#include "tautring/dsl.hpp"

#include <cctype>
#include <optional>

namespace tautring {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TautExpr run(int declaredArity) {
        TautExpr e = parseSum();
        skipSpace();
        if (pos_ < text_.size())
            fail("unexpected trailing input");
        const int inferred = e.maxFactorIndex();
        if (declaredArity < 0)
            return reanchor(e, inferred);
        if (inferred > declaredArity)
            fail("factor index " + std::to_string(inferred) +
                 " exceeds declared arity " + std::to_string(declaredArity));
        return reanchor(e, declaredArity);
    }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, col_);
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    std::optional<char> peek() {
        skipSpace();
        if (pos_ >= text_.size()) return std::nullopt;
        return text_[pos_];
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    long parseInteger() {
        skipSpace();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer");
        long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000L)
                fail("integer literal too large");
            advance();
        }
        return value;
    }

    // All parsing happens on a generous working arity; run() re-anchors.
    static constexpr int kWorkArity = 255;

    static TautExpr reanchor(const TautExpr& e, int arity) {
        TautExpr out(arity);
        for (const auto& [m, c] : e.terms()) out.addTerm(m, c);
        return out;
    }

    TautExpr parseSum() {
        bool negate = accept('-');
        if (!negate) accept('+');
        TautExpr e = parseProduct();
        if (negate) e = -e;
        while (true) {
            if (accept('+')) e += parseProduct();
            else if (accept('-')) e -= parseProduct();
            else return e;
        }
    }

    TautExpr parseProduct() {
        TautExpr e = parsePower();
        while (accept('*')) e = e.freeProduct(parsePower());
        return e;
    }

    TautExpr parsePower() {
        TautExpr base = parseAtom();
        if (!accept('^')) return base;
        const long exp = parseInteger();
        if (exp > 64) fail("exponent too large");
        TautExpr e = TautExpr::unit(kWorkArity);
        for (long i = 0; i < exp; ++i) e = e.freeProduct(base);
        return e;
    }

    TautExpr parseAtom() {
        auto c = peek();
        if (!c) fail("unexpected end of input");
        if (*c == '(') {
            advance();
            TautExpr e = parseSum();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(*c))) {
            const long num = parseInteger();
            if (accept('/')) {
                const long den = parseInteger();
                if (den == 0) fail("zero denominator");
                return TautExpr::term(kWorkArity, Monomial(), rational(num, den));
            }
            return TautExpr::term(kWorkArity, Monomial(), rational(num));
        }
        switch (*c) {
        case 'o': {
            advance();
            expect('(');
            const int r = static_cast<int>(parseInteger());
            expect(')');
            return TautExpr::point(kWorkArity, checkIndex(r));
        }
        case 'k': {
            advance();
            expect('(');
            const int r = static_cast<int>(parseInteger());
            expect(')');
            return TautExpr::canonical(kWorkArity, checkIndex(r));
        }
        case 'c': {
            advance();
            expect('(');
            const int r = static_cast<int>(parseInteger());
            expect(')');
            return TautExpr::secondChern(kWorkArity, checkIndex(r));
        }
        case 'h': {
            advance();
            expect('(');
            const int a = static_cast<int>(parseInteger());
            expect(',');
            const int r = static_cast<int>(parseInteger());
            expect(')');
            if (a < 1) fail("divisor basis index must be positive");
            return TautExpr::divisor(kWorkArity, a, checkIndex(r));
        }
        case 'D': {
            advance();
            expect('(');
            const int r = static_cast<int>(parseInteger());
            expect(',');
            const int s = static_cast<int>(parseInteger());
            expect(')');
            if (r == s) fail("D(r,r) is ill-formed");
            return TautExpr::diagonal(kWorkArity, checkIndex(r), checkIndex(s));
        }
        default:
            fail(std::string("unexpected character '") + *c + "'");
        }
    }

    int checkIndex(int r) {
        if (r < 1 || r > kWorkArity) fail("factor index out of range");
        return r;
    }
};

} // namespace

TautExpr parseExpr(const std::string& text, int declaredArity) {
    return Parser(text).run(declaredArity);
}

std::string printExpr(const TautExpr& x) {
    return x.toString();
}

CorrespondenceHeader parseCorrespondence(const std::string& text) {
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    const std::string kw = "corr";
    if (text.compare(pos, kw.size(), kw) != 0)
        throw ParseError("expected 'corr M N : <expr>' header", 1, static_cast<int>(pos) + 1);
    pos += kw.size();
    auto readInt = [&]() -> int {
        skip();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw ParseError("expected arity in correspondence header", 1,
                             static_cast<int>(pos) + 1);
        return std::stoi(text.substr(start, pos - start));
    };
    const int m = readInt();
    const int n = readInt();
    skip();
    if (pos >= text.size() || text[pos] != ':')
        throw ParseError("expected ':' in correspondence header", 1,
                         static_cast<int>(pos) + 1);
    ++pos;
    return {m, n, parseExpr(text.substr(pos), m + n)};
}

} // namespace tautring
