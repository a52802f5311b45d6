#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace hb {

// Reduced word in a free group: signed 1-based generator indices, +j for
// x_j and -j for x_j^{-1}. Appends cancel against the tail, so a FreeWord
// is freely reduced at all times.
class FreeWord {
  public:
    FreeWord() = default;
    explicit FreeWord(std::vector<std::int32_t> raw);

    static FreeWord generator(int j) { return FreeWord({static_cast<std::int32_t>(j)}); }

    void push(std::int32_t signed_gen);
    void append(const FreeWord& w);
    void append_inverse(const FreeWord& w);
    FreeWord inverse() const;

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<std::int32_t>& letters() const { return letters_; }

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    auto operator<=>(const FreeWord& o) const { return letters_ <=> o.letters_; }

    std::string str() const; // e.g. "x1 x2 x1^-1", "e" when empty

  private:
    std::vector<std::int32_t> letters_;
};

} // namespace hb
