#include "skein/parse.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace skein {

namespace {

int to_int(const std::string& tok, const char* what) {
    int value = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (tok.empty() || ec != std::errc{} || ptr != end) throw ParseError(std::string("bad ") + what, tok);
    return value;
}

class ElementParser {
public:
    explicit ElementParser(const std::string& text) : text_(text) {}

    SymFunc parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty element", "");
        SymFunc total;
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        while (true) {
            SymFunc t = term();
            total += negate ? -t : t;
            skip_ws();
            if (pos_ == text_.size()) break;
            if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", rest_token());
            negate = peek() == '-';
            ++pos_;
        }
        return total;
    }

private:
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    // The token starting at pos_, for error messages.
    std::string rest_token() const {
        std::size_t end = pos_;
        while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) &&
               text_[end] != '+' && text_[end] != '-' && text_[end] != '*')
            ++end;
        return text_.substr(pos_, std::max<std::size_t>(end - pos_, 1));
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    SymFunc term() {
        SymFunc t = factor();
        while (true) {
            skip_ws();
            if (pos_ == text_.size() || peek() != '*') return t;
            ++pos_;
            t = t * factor();
        }
    }

    SymFunc factor() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("unexpected end of element", "");
        const std::size_t start = pos_;
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string d = digits();
            return SymFunc::constant(Scalar(Integer(d)));
        }
        if (c == 'h' || c == 'e' || c == 'p') {
            ++pos_;
            std::string d = digits();
            if (d.empty() || (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(peek())))) {
                pos_ = start;
                throw ParseError("bad generator", rest_token());
            }
            const int k = to_int(d, "generator index");
            if (c == 'h') return h(k);
            if (c == 'e') return elementary(k);
            if (k < 1) throw ParseError("power sums start at p1", text_.substr(start, pos_ - start));
            return power_sum(k);
        }
        if (c == 's' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
            const std::size_t close = text_.find(')', pos_);
            if (close == std::string::npos) throw ParseError("unclosed partition", text_.substr(start));
            const std::string inside = text_.substr(pos_ + 2, close - pos_ - 2);
            const std::string whole = text_.substr(start, close - start + 1);
            std::vector<int> parts;
            std::stringstream ss(inside);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t a = item.find_first_not_of(" \t");
                std::size_t b = item.find_last_not_of(" \t");
                if (a == std::string::npos) throw ParseError("empty partition part", whole);
                parts.push_back(to_int(item.substr(a, b - a + 1), "partition part"));
            }
            pos_ = close + 1;
            try {
                return schur(Partition(parts));
            } catch (const std::invalid_argument&) {
                throw ParseError("not a partition", whole);
            }
        }
        throw ParseError("unexpected token", rest_token());
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<int> parse_braid_word(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> word;
    std::string tok;
    while (in >> tok) {
        const int g = to_int(tok, "braid generator");
        if (g == 0) throw ParseError("braid generators are nonzero", tok);
        word.push_back(g);
    }
    return word;
}

SymFunc parse_element(const std::string& text) { return ElementParser(text).parse(); }

}  // namespace skein
