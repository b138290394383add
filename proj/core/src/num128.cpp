#include "hexcut/num128.hpp"

#include <algorithm>

namespace hexcut {

std::string to_string(i128 value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    unsigned __int128 mag =
        negative ? -static_cast<unsigned __int128>(value) : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

i128 i128_from_string(std::string_view text) {
    if (text.empty()) throw Error(ErrorCode::ParseError, "empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
        if (text.size() == 1) throw Error(ErrorCode::ParseError, "bare '-' is not an integer");
    }
    i128 value = 0;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c < '0' || c > '9')
            throw Error(ErrorCode::ParseError,
                        "invalid digit in integer literal: " + std::string(text));
        value = checked_mul(value, 10);
        value = negative ? checked_sub(value, c - '0') : checked_add(value, c - '0');
    }
    return value;
}

} // namespace hexcut
