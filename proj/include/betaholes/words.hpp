#pragma once

// Finite binary words: order, rotations, Lyndon and Farey combinatorics.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace bh {

enum class Order { less, equal, greater };

const char* order_name(Order o);

class Word {
public:
    // Throws std::invalid_argument unless s is a nonempty 0/1 string.
    explicit Word(std::string s);

    std::size_t size() const { return d_.size(); }
    int operator[](std::size_t i) const { return d_[i] - '0'; }
    int back() const { return d_.back() - '0'; }
    const std::string& str() const { return d_; }

    Word sub(std::size_t pos, std::size_t len = std::string::npos) const { return Word(d_.substr(pos, len)); }
    Word rotate(std::size_t j) const;  // a_{j+1}...a_m a_1...a_j
    Word reversed() const;

    friend Word operator+(const Word& a, const Word& b) { return Word(a.d_ + b.d_); }
    friend bool operator==(const Word& a, const Word& b) { return a.d_ == b.d_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.d_ != b.d_; }
    // Structural order (for containers); not the u0^inf order.
    friend bool operator<(const Word& a, const Word& b) { return a.d_ < b.d_; }

private:
    std::string d_;
};

// u0^inf against v0^inf.
Order lex_compare(const Word& u, const Word& v);

Word plus(const Word& w);
Word minus(const Word& w);
Word reflect(const Word& w);

bool is_aperiodic(const Word& w);
bool is_lyndon(const Word& w);

struct Rotation {
    Word word;
    std::size_t shift;
};

Rotation lyndon_rotation(const Word& w);
Word max_rotation(const Word& w);

struct FareyLevel {
    unsigned level;
    std::vector<Word> entries;
};

inline constexpr unsigned default_max_farey_level = 20;

FareyLevel farey_level(unsigned n, unsigned max_level = default_max_farey_level);

// All Farey words (degenerate ones included) of length <= max_len, in increasing order.
std::vector<Word> farey_words_up_to(std::size_t max_len);

bool is_farey(const Word& w);
bool is_nondegenerate_farey(const Word& w);

std::pair<Word, Word> standard_factorization(const Word& w);

bool check_palindrome_property(const Word& w);

// Every primitive binary word of length len that is maximal among its rotations.
std::vector<Word> maximal_rotation_words(std::size_t len);

}  // namespace bh

template <>
struct std::hash<bh::Word> {
    std::size_t operator()(const bh::Word& w) const noexcept { return std::hash<std::string>{}(w.str()); }
};
