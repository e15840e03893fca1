#include "hydro/exact/parse.hpp"

#include "hydro/errors.hpp"

#include <cctype>

namespace hydro {

namespace {

class Parser {
  public:
    Parser(std::string_view text, std::span<const std::string> names) : s_(text), names_(names) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip();
        if (pos_ != s_.size())
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

  private:
    int nvars() const { return static_cast<int>(names_.size()); }

    [[noreturn]] void error(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        MultiPoly p = term();
        for (;;) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = unary();
        for (;;) {
            if (eat('*')) {
                p = p * unary();
            } else if (eat('/')) {
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero())
                    error("division by a non-constant or zero");
                p *= d.constant_term().inverse();
            } else {
                return p;
            }
        }
    }

    MultiPoly unary() {
        if (eat('-'))
            return -unary();
        if (eat('+'))
            return unary();
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (!eat('^'))
            return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_ || pos_ - start > 4)
            error("bad exponent");
        return base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }

    MultiPoly atom() {
        skip();
        if (pos_ >= s_.size())
            error("unexpected end");
        if (eat('(')) {
            MultiPoly p = expr();
            if (!eat(')'))
                error("missing ')'");
            return p;
        }
        const char c = s_[pos_];
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return MultiPoly(nvars(), Rational::parse(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            for (int i = 0; i < nvars(); ++i)
                if (names_[static_cast<std::size_t>(i)] == name)
                    return MultiPoly::variable(nvars(), i);
            pos_ = start;
            error("unknown variable '" + std::string(name) + "'");
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::span<const std::string> names_;
    std::size_t pos_ = 0;
};

} // namespace

MultiPoly parse_polynomial(std::string_view text, std::span<const std::string> names) {
    return Parser(text, names).run();
}

} // namespace hydro
