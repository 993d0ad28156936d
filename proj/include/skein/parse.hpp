#pragma once

// Text grammars for the command line.
//   braid word: whitespace-separated nonzero integers, e.g. "1 -2 1 -2"
//   element:    sums of products of h<k>, e<k>, p<k>, s(l1,l2,...) and
//               integers, e.g. "h2 - 3*h1*h1 + s(2,1)"

#include <stdexcept>
#include <string>
#include <vector>

#include "skein/symfun.hpp"

namespace skein {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& message, std::string token)
        : std::invalid_argument(message + ": '" + token + "'"), token_(std::move(token)) {}
    const std::string& token() const noexcept { return token_; }

private:
    std::string token_;
};

std::vector<int> parse_braid_word(const std::string& text);
SymFunc parse_element(const std::string& text);

}  // namespace skein
