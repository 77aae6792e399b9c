#include "sympspin/parse.hpp"

#include <cctype>

namespace sympspin {

namespace {

class SpinorParser {
public:
    SpinorParser(std::string_view text, int rank) : text_(text), rank_(rank) {}

    SpinorPoly parse() {
        skip_ws();
        if (pos_ == text_.size()) {
            throw ParseError("empty expression", pos_);
        }
        SpinorPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        }
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    SpinorPoly expr() {
        SpinorPoly acc(rank_);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        SpinorPoly t = term();
        acc = negate ? -t : t;
        while (true) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    SpinorPoly term() {
        SpinorPoly acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (peek() == '/') {
                std::size_t at = pos_;
                ++pos_;
                SpinorPoly d = factor();
                if (d.is_zero()) {
                    throw ParseError("division by zero", at);
                }
                if (d.size() != 1 || d.terms().front().mono.degree() != 0) {
                    throw ParseError("division by a non-constant expression", at);
                }
                acc *= d.terms().front().coef.inverse();
            } else {
                return acc;
            }
        }
    }

    SpinorPoly factor() {
        if (accept('-')) {
            return -factor();
        }
        if (accept('+')) {
            return factor();
        }
        SpinorPoly b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            long e = digits();
            if (e < 0) {
                throw ParseError("expected exponent", at);
            }
            SpinorPoly out = SpinorPoly::constant(rank_, 1);
            for (long k = 0; k < e; ++k) {
                out = out * b;
            }
            return out;
        }
        return b;
    }

    // Returns -1 when no digits are present.
    long digits() {
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            if (pos_ - start > 15) {
                throw ParseError("integer literal too long", start);
            }
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return pos_ == start ? -1 : v;
    }

    bool at_identifier_end(std::size_t p) const {
        return p >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[p]));
    }

    SpinorPoly base() {
        skip_ws();
        if (pos_ == text_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        char c = text_[pos_];
        std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            SpinorPoly inner = expr();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number_literal();
        }
        if (c == 'i' && at_identifier_end(pos_ + 1)) {
            ++pos_;
            return SpinorPoly::constant(rank_, GaussianRational::i());
        }
        if (c == 'x' || c == 'q') {
            ++pos_;
            long idx = digits();
            if (idx < 0) {
                throw ParseError(std::string("expected index after '") + c + "'", pos_);
            }
            long limit = c == 'x' ? 2L * rank_ : rank_;
            if (idx < 1 || idx > limit) {
                throw ParseError(std::string("variable ") + c + std::to_string(idx) + " exceeds rank " +
                                     std::to_string(rank_) + " (index " + std::to_string(idx) + ")",
                                 at);
            }
            return c == 'x' ? SpinorPoly::x(rank_, static_cast<int>(idx))
                            : SpinorPoly::q(rank_, static_cast<int>(idx));
        }
        throw ParseError(std::string("unexpected '") + c + "'", at);
    }

    // digits ['/' digits] [ws 'i']
    SpinorPoly number_literal() {
        std::size_t at = pos_;
        mpz_class num(scan_digits());
        mpz_class den = 1;
        if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            den = mpz_class(scan_digits());
            if (den == 0) {
                throw ParseError("zero denominator", at);
            }
        }
        mpq_class value(num, den);
        value.canonicalize();
        std::size_t save = pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == 'i' && at_identifier_end(pos_ + 1)) {
            ++pos_;
            return SpinorPoly::constant(rank_, GaussianRational(0, value));
        }
        pos_ = save;
        return SpinorPoly::constant(rank_, GaussianRational(value));
    }

    std::string scan_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    int rank_;
    std::size_t pos_ = 0;
};

}  // namespace

SpinorPoly parse_spinor(std::string_view text, int rank) { return SpinorParser(text, rank).parse(); }

std::vector<SpinorPoly> OperatorPipeline::apply(const SpinorPoly& s) const {
    std::vector<SpinorPoly> out;
    out.reserve(components.size());
    for (const auto& op : components) {
        out.push_back(op.apply(s));
    }
    return out;
}

namespace {

struct Token {
    std::string text;
    std::size_t pos;
};

std::vector<Token> split_words(std::string_view text) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
            ++k;
        }
        if (k == text.size()) {
            break;
        }
        std::size_t start = k;
        int depth = 0;
        std::string word;
        while (k < text.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(text[k])))) {
            if (text[k] == '(') {
                ++depth;
            } else if (text[k] == ')') {
                --depth;
            }
            if (!std::isspace(static_cast<unsigned char>(text[k]))) {
                word += text[k];
            }
            ++k;
        }
        if (depth != 0) {
            throw ParseError("unbalanced parentheses in operator word", start);
        }
        out.push_back({word, start});
    }
    return out;
}

std::vector<std::string> call_args(const Token& tok, std::string_view name) {
    std::string_view t = tok.text;
    if (t.size() < name.size() + 2 || t.substr(0, name.size()) != name || t[name.size()] != '(' || t.back() != ')') {
        throw ParseError("malformed operator token '" + tok.text + "'", tok.pos);
    }
    std::string_view inner = t.substr(name.size() + 1, t.size() - name.size() - 2);
    std::vector<std::string> args;
    std::size_t k = 0;
    while (true) {
        std::size_t comma = inner.find(',', k);
        args.emplace_back(inner.substr(k, comma == std::string_view::npos ? inner.npos : comma - k));
        if (comma == std::string_view::npos) {
            break;
        }
        k = comma + 1;
    }
    return args;
}

int int_arg(const std::string& s, const Token& tok) {
    if (s.empty() || s.size() > 6) {
        throw ParseError("bad index in '" + tok.text + "'", tok.pos);
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("bad index in '" + tok.text + "'", tok.pos);
        }
    }
    return std::stoi(s);
}

void check_range(int v, int hi, const Token& tok) {
    if (v < 1 || v > hi) {
        throw ParseError("index " + std::to_string(v) + " out of range 1.." + std::to_string(hi) + " in '" + tok.text + "'",
                         tok.pos);
    }
}

}  // namespace

OperatorPipeline parse_operator(std::string_view text, int rank) {
    auto words = split_words(text);
    if (words.empty()) {
        throw ParseError("empty operator word", 0);
    }
    OperatorPipeline out;
    LinearOperator tail = LinearOperator::identity(rank);
    // Build right-to-left: the rightmost token acts first.
    for (std::size_t w = words.size(); w-- > 0;) {
        const Token& tok = words[w];
        const std::string& t = tok.text;
        if (t == "Ts") {
            if (w != 0) {
                throw ParseError("'Ts' is vector-valued and must be the leftmost factor", tok.pos);
            }
            out.vectorValued = true;
            for (int l = 1; l <= 2 * rank; ++l) {
                out.components.push_back(compose(twistor_operator(rank, l), tail));
            }
            return out;
        }
        LinearOperator op(rank);
        if (t == "Ds") {
            op = Ds_operator(rank);
        } else if (t == "Xs") {
            op = Xs_operator(rank);
        } else if (t == "Es") {
            op = Es_operator(rank);
        } else if (t.rfind("Ts(", 0) == 0) {
            auto args = call_args(tok, "Ts");
            if (args.size() != 1) {
                throw ParseError("Ts(l) takes one index", tok.pos);
            }
            int l = int_arg(args[0], tok);
            check_range(l, 2 * rank, tok);
            op = twistor_operator(rank, l);
        } else if (t.rfind("cl(", 0) == 0) {
            auto args = call_args(tok, "cl");
            if (args.size() != 1) {
                throw ParseError("cl(l) takes one index", tok.pos);
            }
            int l = int_arg(args[0], tok);
            check_range(l, 2 * rank, tok);
            op = clifford_operator(rank, l);
        } else if (t.rfind("mp(", 0) == 0) {
            auto args = call_args(tok, "mp");
            if (args.size() != 3 || args[0].size() != 1) {
                throw ParseError("mp(X|Y|Z,j,k) expected", tok.pos);
            }
            GeneratorKind kind;
            switch (args[0][0]) {
                case 'X':
                    kind = GeneratorKind::X;
                    break;
                case 'Y':
                    kind = GeneratorKind::Y;
                    break;
                case 'Z':
                    kind = GeneratorKind::Z;
                    break;
                default:
                    throw ParseError("generator kind must be X, Y or Z", tok.pos);
            }
            int j = int_arg(args[1], tok);
            int k = int_arg(args[2], tok);
            check_range(j, rank, tok);
            check_range(k, rank, tok);
            op = mp_generator(kind, j, k, rank);
        } else {
            throw ParseError("unknown operator '" + t + "'", tok.pos);
        }
        tail = compose(op, tail);
    }
    out.components.push_back(std::move(tail));
    return out;
}

}  // namespace sympspin
