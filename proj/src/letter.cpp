#include "trisub/letter.hpp"

#include "trisub/error.hpp"

namespace trisub {

Word parse_word(const std::string& text) {
    Word w;
    w.reserve(text.size());
    for (const char ch : text) {
        const auto l = letter_from_char(ch);
        if (!l) {
            throw DomainError(std::string("bad letter '") + ch + "', expected one of A, B, C, M");
        }
        w.push_back(*l);
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (const Letter l : w) {
        s.push_back(to_char(l));
    }
    return s;
}

}  // namespace trisub
