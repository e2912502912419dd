#include "betaholes/words.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "betaholes/error.hpp"

namespace bh {

const char* order_name(Order o) {
    switch (o) {
        case Order::less: return "less";
        case Order::equal: return "equal";
        case Order::greater: return "greater";
    }
    return "?";
}

Word::Word(std::string s) : d_(std::move(s)) {
    if (d_.empty()) throw std::invalid_argument("Word: empty");
    if (d_.find_first_not_of("01") != std::string::npos)
        throw std::invalid_argument("Word: not a 0/1 string: " + d_);
}

Word Word::rotate(std::size_t j) const {
    j %= d_.size();
    return Word(d_.substr(j) + d_.substr(0, j));
}

Word Word::reversed() const { return Word(std::string(d_.rbegin(), d_.rend())); }

Order lex_compare(const Word& u, const Word& v) {
    std::size_t n = std::max(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i) {
        int a = i < u.size() ? u[i] : 0;
        int b = i < v.size() ? v[i] : 0;
        if (a != b) return a < b ? Order::less : Order::greater;
    }
    return Order::equal;
}

Word plus(const Word& w) {
    if (w.back() != 0) throw Error(ErrorCode::LastDigitMismatch, "plus needs a final 0: " + w.str());
    std::string s = w.str();
    s.back() = '1';
    return Word(s);
}

Word minus(const Word& w) {
    if (w.back() != 1) throw Error(ErrorCode::LastDigitMismatch, "minus needs a final 1: " + w.str());
    std::string s = w.str();
    s.back() = '0';
    return Word(s);
}

Word reflect(const Word& w) {
    std::string s = w.str();
    for (char& c : s) c = c == '0' ? '1' : '0';
    return Word(s);
}

bool is_aperiodic(const Word& w) {
    const std::size_t m = w.size();
    const std::string& s = w.str();
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d) continue;
        bool periodic = true;
        for (std::size_t i = d; i < m && periodic; ++i) periodic = s[i] == s[i - d];
        if (periodic) return false;
    }
    return true;
}

bool is_lyndon(const Word& w) {
    const std::string& s = w.str();
    const std::size_t m = s.size();
    for (std::size_t i = 1; i < m; ++i)
        if (s.compare(i, m - i, s, 0, m - i) <= 0) return false;
    return true;
}

Rotation lyndon_rotation(const Word& w) {
    if (!is_aperiodic(w)) throw Error(ErrorCode::PeriodicWord, w.str());
    const std::string& s = w.str();
    const std::size_t m = s.size();
    const std::string ss = s + s;
    std::size_t best = 0;
    for (std::size_t j = 1; j < m; ++j)
        if (ss.compare(j, m, ss, best, m) < 0) best = j;
    return {Word(ss.substr(best, m)), best};
}

Word max_rotation(const Word& w) {
    if (!is_aperiodic(w)) throw Error(ErrorCode::PeriodicWord, w.str());
    const std::string& s = w.str();
    const std::size_t m = s.size();
    const std::string ss = s + s;
    std::size_t best = 0;
    for (std::size_t j = 1; j < m; ++j)
        if (ss.compare(j, m, ss, best, m) > 0) best = j;
    return Word(ss.substr(best, m));
}

FareyLevel farey_level(unsigned n, unsigned max_level) {
    if (n > max_level)
        throw Error(ErrorCode::LevelTooLarge, "level " + std::to_string(n) + " exceeds " + std::to_string(max_level));
    std::vector<Word> cur{Word("0"), Word("1")};
    for (unsigned k = 0; k < n; ++k) {
        std::vector<Word> next;
        next.reserve(2 * cur.size() - 1);
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            next.push_back(cur[i]);
            next.push_back(cur[i] + cur[i + 1]);
        }
        next.push_back(cur.back());
        cur.swap(next);
    }
    return {n, std::move(cur)};
}

namespace {

// Farey words of bounded length, with the parent pair that produced each one.
// Children of a consecutive pair (u, v) are longer than uv, so pruning at
// |uv| > L loses nothing of length <= L.
struct FareyCache {
    std::mutex mu;
    std::size_t max_len = 0;
    std::vector<Word> ordered;
    std::unordered_map<Word, std::pair<Word, Word>> parents;

    void extend(std::size_t len) {
        if (len <= max_len) return;
        std::vector<Word> out;
        std::unordered_map<Word, std::pair<Word, Word>> par;
        // iterative in-order walk of the pruned Stern-Brocot style tree
        struct Frame {
            Word u, v;
            int stage;
        };
        out.push_back(Word("0"));
        std::vector<Frame> stack{{Word("0"), Word("1"), 0}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.u.size() + f.v.size() > len) {
                stack.pop_back();
                continue;
            }
            Word uv = f.u + f.v;
            if (f.stage == 0) {
                f.stage = 1;
                stack.push_back({f.u, uv, 0});
            } else {
                out.push_back(uv);
                par.emplace(uv, std::make_pair(f.u, f.v));
                Word v = f.v;
                stack.pop_back();
                stack.push_back({uv, v, 0});
            }
        }
        out.push_back(Word("1"));
        ordered.swap(out);
        parents.swap(par);
        max_len = len;
    }
};

FareyCache& farey_cache() {
    static FareyCache c;
    return c;
}

}  // namespace

std::vector<Word> farey_words_up_to(std::size_t max_len) {
    FareyCache& c = farey_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.extend(max_len);
    std::vector<Word> r;
    for (const Word& w : c.ordered)
        if (w.size() <= max_len) r.push_back(w);
    return r;
}

bool is_farey(const Word& w) {
    if (w.size() == 1) return true;
    FareyCache& c = farey_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.extend(w.size());
    return c.parents.count(w) > 0;
}

bool is_nondegenerate_farey(const Word& w) { return w.size() >= 2 && is_farey(w); }

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() == 1) throw Error(ErrorCode::DegenerateFarey, w.str());
    FareyCache& c = farey_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    c.extend(w.size());
    auto it = c.parents.find(w);
    if (it == c.parents.end()) throw Error(ErrorCode::NotFarey, w.str());
    return it->second;
}

bool check_palindrome_property(const Word& w) {
    if (!is_nondegenerate_farey(w)) throw Error(ErrorCode::NotFarey, w.str());
    const std::string& s = w.str();
    const std::string inner = s.substr(1, s.size() - 2);
    return std::equal(inner.begin(), inner.end(), inner.rbegin());
}

std::vector<Word> maximal_rotation_words(std::size_t len) {
    std::vector<Word> out;
    if (len == 0 || len > 30) throw std::invalid_argument("maximal_rotation_words: length out of range");
    for (unsigned long long x = 0; x < (1ull << len); ++x) {
        std::string s(len, '0');
        for (std::size_t i = 0; i < len; ++i)
            if ((x >> (len - 1 - i)) & 1ull) s[i] = '1';
        Word w(s);
        if (is_aperiodic(w) && max_rotation(w) == w) out.push_back(w);
    }
    return out;
}

}  // namespace bh
