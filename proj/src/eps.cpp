#include "vizing/eps.hpp"

#include <cctype>

namespace vizing {

Eps Eps::parse(const std::string& text) {
    std::size_t dot = text.find('.');
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])) && i != dot)
            throw std::invalid_argument("bad eps literal: " + text);
    long long num = 0, den = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (i == dot) continue;
        num = num * 10 + (text[i] - '0');
        if (dot != std::string::npos && i > dot) den *= 10;
        if (den > 1000000000LL || num > 1000000000LL)
            throw std::invalid_argument("eps literal too precise: " + text);
    }
    return Eps(num, den);
}

std::string Eps::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace vizing
