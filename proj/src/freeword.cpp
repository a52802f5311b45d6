#include "hb/freeword.hpp"

#include <utility>

namespace hb {

FreeWord::FreeWord(std::vector<std::int32_t> raw) {
    letters_.reserve(raw.size());
    for (std::int32_t g : raw) push(g);
}

void FreeWord::push(std::int32_t signed_gen) {
    if (!letters_.empty() && letters_.back() == -signed_gen)
        letters_.pop_back();
    else
        letters_.push_back(signed_gen);
}

void FreeWord::append(const FreeWord& w) {
    for (std::int32_t g : w.letters_) push(g);
}

void FreeWord::append_inverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
}

FreeWord FreeWord::inverse() const {
    FreeWord r;
    r.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        r.letters_.push_back(-*it); // already reduced: inverse of reduced is reduced
    return r;
}

std::string FreeWord::str() const {
    if (letters_.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) s += ' ';
        std::int32_t g = letters_[i];
        s += 'x';
        s += std::to_string(g > 0 ? g : -g);
        if (g < 0) s += "^-1";
    }
    return s;
}

} // namespace hb
