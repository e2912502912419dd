#include "betaholes/survivor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

#include "betaholes/error.hpp"

namespace bh {

const char* method_name(EntropyMethod m) {
    return m == EntropyMethod::automaton_exact ? "automaton_exact" : "counting";
}

LexSubshift survivor_shift(const EpSequence& lower, const EpSequence& alpha) { return LexSubshift{lower, alpha, true, false}; }

LexSubshift reduce_upper(const LexSubshift& shift) {
    if (!shift.strict_upper) return shift;
    const EpSequence& a = shift.upper;
    for (std::size_t m = 1; m <= a.orbit_window(); ++m) {
        if (a.digit(m - 1) != 1) continue;
        if (!ep_leq(a.shift(m), shift.lower)) continue;
        std::string block = a.prefix(m);
        block.back() = '0';
        return LexSubshift{shift.lower, EpSequence("", block), false, shift.strict_lower};
    }
    return shift;
}

bool membership(const EpSequence& x, const LexSubshift& shift) {
    for (std::size_t n = 0; n < x.orbit_window(); ++n) {
        EpSequence s = x.shift(n);
        Order lo = lex_compare_ep(shift.lower, s);
        if (lo == Order::greater || (shift.strict_lower && lo == Order::equal)) return false;
        Order hi = lex_compare_ep(s, shift.upper);
        if (hi == Order::greater || (shift.strict_upper && hi == Order::equal)) return false;
    }
    return true;
}

namespace {

// Position j in a bound stands for the pending constraint "the rest compares
// against sigma^j(bound)"; positions wrap into the period.
struct Bound {
    const EpSequence& s;
    std::uint32_t size() const { return static_cast<std::uint32_t>(s.orbit_window()); }
    int digit(std::uint32_t j) const { return s.digit(j); }
    std::uint32_t next(std::uint32_t j) const {
        return j + 1 < size() ? j + 1 : static_cast<std::uint32_t>(s.preperiod().size());
    }
};

struct Ties {
    std::vector<std::uint32_t> lo, hi;
    bool operator==(const Ties& o) const { return lo == o.lo && hi == o.hi; }
};

struct TiesHash {
    std::size_t operator()(const Ties& t) const noexcept {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint32_t v) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (auto v : t.lo) mix(v);
        mix(0xffffffffu);
        for (auto v : t.hi) mix(v);
        return h;
    }
};

// Reads digit d after the state t; false if a bound is violated.
bool step(const Bound& L, const Bound& U, const Ties& t, int d, Ties& out) {
    out.lo.clear();
    out.hi.clear();
    auto adv_lo = [&](std::uint32_t j) {
        int c = L.digit(j);
        if (d < c) return false;
        if (d == c) out.lo.push_back(L.next(j));
        return true;
    };
    auto adv_hi = [&](std::uint32_t j) {
        int c = U.digit(j);
        if (d > c) return false;
        if (d == c) out.hi.push_back(U.next(j));
        return true;
    };
    if (!adv_lo(0)) return false;
    for (auto j : t.lo)
        if (!adv_lo(j)) return false;
    if (!adv_hi(0)) return false;
    for (auto j : t.hi)
        if (!adv_hi(j)) return false;
    // a tie at position 0 duplicates the fresh one opened on every step
    auto tidy = [](std::vector<std::uint32_t>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (!v.empty() && v.front() == 0) v.erase(v.begin());
    };
    tidy(out.lo);
    tidy(out.hi);
    return true;
}

// Does a tie at position j survive forever along the cycle labelled lab?
bool tie_persists(const Bound& B, std::uint32_t j, const std::vector<int>& lab) {
    std::set<std::pair<std::size_t, std::uint32_t>> seen;
    std::size_t i = 0;
    while (seen.insert({i, j}).second) {
        if (lab[i] != B.digit(j)) return false;
        j = B.next(j);
        i = (i + 1) % lab.size();
    }
    return true;
}

void analyse(SubshiftAutomaton& a, const std::vector<Ties>& ties, const LexSubshift& shift) {
    const std::size_t n = a.size();
    // states with an infinite future
    std::vector<std::vector<int>> pred(n);
    std::vector<int> outdeg(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (int t : a.next[s])
            if (t >= 0) {
                pred[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
                ++outdeg[s];
            }
    std::vector<char> alive(n, 1);
    std::vector<int> q;
    for (std::size_t s = 0; s < n; ++s)
        if (outdeg[s] == 0) q.push_back(static_cast<int>(s));
    while (!q.empty()) {
        int s = q.back();
        q.pop_back();
        alive[static_cast<std::size_t>(s)] = 0;
        for (int p : pred[static_cast<std::size_t>(s)])
            if (--outdeg[static_cast<std::size_t>(p)] == 0) q.push_back(p);
    }

    // Tarjan on the alive subgraph, iterative
    a.scc.assign(n, -1);
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stk;
    int counter = 0, ncomp = 0;
    struct Frame {
        int v;
        int e;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (!alive[root] || index[root] >= 0) continue;
        std::vector<Frame> call{{static_cast<int>(root), 0}};
        index[root] = low[root] = counter++;
        stk.push_back(static_cast<int>(root));
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const std::size_t v = static_cast<std::size_t>(f.v);
            if (f.e < 2) {
                int w = a.next[v][static_cast<std::size_t>(f.e++)];
                if (w < 0 || !alive[static_cast<std::size_t>(w)]) continue;
                const std::size_t wu = static_cast<std::size_t>(w);
                if (index[wu] < 0) {
                    index[wu] = low[wu] = counter++;
                    stk.push_back(w);
                    on_stack[wu] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[wu]) {
                    low[v] = std::min(low[v], index[wu]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stk.back();
                    stk.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    a.scc[static_cast<std::size_t>(w)] = ncomp;
                } while (w != f.v);
                ++ncomp;
            }
            int child = f.v;
            call.pop_back();
            if (!call.empty()) {
                const std::size_t p = static_cast<std::size_t>(call.back().v);
                low[p] = std::min(low[p], low[static_cast<std::size_t>(child)]);
            }
        }
    }

    // classify components: trivial, single cycle, or rich
    std::vector<int> inner_edges(static_cast<std::size_t>(ncomp), 0), members(static_cast<std::size_t>(ncomp), 0);
    std::vector<int> rep(static_cast<std::size_t>(ncomp), -1);
    a.scc_rich.assign(static_cast<std::size_t>(ncomp), 0);
    for (std::size_t s = 0; s < n; ++s) {
        if (a.scc[s] < 0) continue;
        const std::size_t c = static_cast<std::size_t>(a.scc[s]);
        ++members[c];
        rep[c] = static_cast<int>(s);
        int inside = 0;
        for (int t : a.next[s])
            if (t >= 0 && a.scc[static_cast<std::size_t>(t)] == a.scc[s]) ++inside;
        inner_edges[c] += inside;
        if (inside == 2) a.scc_rich[c] = 1;
    }
    const Bound L{shift.lower}, U{shift.upper};
    a.scc_good.assign(static_cast<std::size_t>(ncomp), 0);
    for (std::size_t c = 0; c < static_cast<std::size_t>(ncomp); ++c) {
        if (inner_edges[c] == 0) continue;  // a single state without a loop
        if (a.scc_rich[c]) {
            a.scc_good[c] = 1;  // carries non-periodic paths, which never tie a bound forever
            continue;
        }
        // single cycle: the only infinite path is periodic; it is illegal iff a
        // strict bound stays tied forever
        std::vector<int> lab;
        std::size_t s = static_cast<std::size_t>(rep[c]);
        const std::size_t s0 = s;
        do {
            for (int d = 0; d < 2; ++d) {
                int t = a.next[s][static_cast<std::size_t>(d)];
                if (t >= 0 && a.scc[static_cast<std::size_t>(t)] == static_cast<int>(c)) {
                    lab.push_back(d);
                    s = static_cast<std::size_t>(t);
                    break;
                }
            }
        } while (s != s0);
        bool bad = false;
        if (shift.strict_lower) {
            bad = tie_persists(L, 0, lab);
            for (auto j : ties[s0].lo) bad = bad || tie_persists(L, j, lab);
        }
        if (shift.strict_upper) {
            bad = bad || tie_persists(U, 0, lab);
            for (auto j : ties[s0].hi) bad = bad || tie_persists(U, j, lab);
        }
        a.scc_good[c] = !bad;
    }

    // good = reaches a good component
    a.good.assign(n, 0);
    q.clear();
    for (std::size_t s = 0; s < n; ++s)
        if (a.scc[s] >= 0 && a.scc_good[static_cast<std::size_t>(a.scc[s])]) {
            a.good[s] = 1;
            q.push_back(static_cast<int>(s));
        }
    while (!q.empty()) {
        int s = q.back();
        q.pop_back();
        for (int p : pred[static_cast<std::size_t>(s)])
            if (!a.good[static_cast<std::size_t>(p)]) {
                a.good[static_cast<std::size_t>(p)] = 1;
                q.push_back(p);
            }
    }
}

}  // namespace

SubshiftAutomaton compile(const LexSubshift& shift, std::size_t cap) {
    const Bound L{shift.lower}, U{shift.upper};
    SubshiftAutomaton a;
    std::vector<Ties> ties;
    std::unordered_map<Ties, int, TiesHash> ids;
    ties.push_back(Ties{});
    ids.emplace(ties[0], 0);
    a.next.push_back({-1, -1});
    Ties out;
    for (std::size_t s = 0; s < ties.size(); ++s) {
        for (int d = 0; d < 2; ++d) {
            if (!step(L, U, ties[s], d, out)) continue;
            auto it = ids.find(out);
            int id;
            if (it == ids.end()) {
                if (ties.size() >= cap)
                    throw Error(ErrorCode::StateCapExceeded, "more than " + std::to_string(cap) + " states");
                id = static_cast<int>(ties.size());
                ids.emplace(out, id);
                ties.push_back(out);
                a.next.push_back({-1, -1});
            } else {
                id = it->second;
            }
            a.next[s][static_cast<std::size_t>(d)] = id;
        }
    }
    analyse(a, ties, shift);
    return a;
}

std::uint64_t count_words(const SubshiftAutomaton& aut, std::size_t n) {
    if (aut.empty()) return 0;
    std::vector<std::uint64_t> cur(aut.size(), 0), nxt(aut.size(), 0);
    cur[static_cast<std::size_t>(aut.start)] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::fill(nxt.begin(), nxt.end(), 0);
        for (std::size_t s = 0; s < aut.size(); ++s) {
            if (!cur[s]) continue;
            for (int t : aut.next[s]) {
                if (t < 0 || !aut.good[static_cast<std::size_t>(t)]) continue;
                std::uint64_t& slot = nxt[static_cast<std::size_t>(t)];
                if (slot > std::numeric_limits<std::uint64_t>::max() - cur[s])
                    throw Error(ErrorCode::TooLarge, "word count overflows 64 bits at n=" + std::to_string(k + 1));
                slot += cur[s];
            }
        }
        cur.swap(nxt);
    }
    std::uint64_t total = 0;
    for (auto c : cur) {
        if (total > std::numeric_limits<std::uint64_t>::max() - c) throw Error(ErrorCode::TooLarge, "word count overflow");
        total += c;
    }
    return total;
}

namespace {

// Depth-first walk over words whose windows respect the bound prefixes.
// visit(word) is called for each such word of length n; returning true stops.
class RelaxedWalker {
public:
    explicit RelaxedWalker(const LexSubshift& s) : shift_(s), L_{s.lower}, U_{s.upper} {}

    template <class Visit>
    bool walk(std::string& w, const Ties& t, std::size_t n, Visit&& visit) const {
        if (w.size() == n) return visit(w, t);
        Ties out;
        for (int d = 0; d < 2; ++d) {
            if (!step(L_, U_, t, d, out)) continue;
            w.push_back(static_cast<char>('0' + d));
            Ties copy = out;
            bool stop = walk(w, copy, n, visit);
            w.pop_back();
            if (stop) return true;
        }
        return false;
    }

    const LexSubshift& shift() const { return shift_; }

private:
    const LexSubshift& shift_;
    Bound L_, U_;
};

// Is there an eventually periodic legal sequence w y (v)^inf with |y| <= depth, |v| <= max_period?
bool has_lasso(const RelaxedWalker& rw, const std::string& w, const Ties& t, std::size_t depth, std::size_t max_period) {
    std::string z = w;
    std::function<bool(const Ties&, std::size_t)> search = [&](const Ties& tz, std::size_t left) -> bool {
        for (std::size_t p = 1; p <= max_period && p <= z.size(); ++p) {
            EpSequence x(z.substr(0, z.size() - p), z.substr(z.size() - p));
            if (membership(x, rw.shift())) return true;
        }
        if (left == 0) return false;
        const Bound L{rw.shift().lower}, U{rw.shift().upper};
        Ties out;
        for (int d = 0; d < 2; ++d) {
            if (!step(L, U, tz, d, out)) continue;
            z.push_back(static_cast<char>('0' + d));
            Ties copy = out;
            bool ok = search(copy, left - 1);
            z.pop_back();
            if (ok) return true;
        }
        return false;
    };
    return search(t, depth);
}

}  // namespace

std::uint64_t count_relaxed(const LexSubshift& shift, std::size_t n) {
    RelaxedWalker rw(shift);
    std::string w;
    std::uint64_t c = 0;
    rw.walk(w, Ties{}, n, [&](const std::string&, const Ties&) {
        ++c;
        return false;
    });
    return c;
}

std::uint64_t count_words(const LexSubshift& shift, std::size_t n, CountMethod method) {
    if (method == CountMethod::automaton) return count_words(compile(shift), n);
    if (n > brute_force_max_n) throw Error(ErrorCode::TooLarge, "brute force is limited to n <= 30");
    const std::size_t depth = 2 * (shift.lower.orbit_window() + shift.upper.orbit_window()) + 4;
    const std::size_t max_period = std::max<std::size_t>(
        12, 2 * std::max(shift.lower.orbit_window(), shift.upper.orbit_window()));
    RelaxedWalker rw(shift);
    std::string w;
    std::uint64_t c = 0;
    rw.walk(w, Ties{}, n, [&](const std::string& word, const Ties& t) {
        if (has_lasso(rw, word, t, depth, max_period)) ++c;
        return false;
    });
    return c;
}

namespace {

// Collatz-Wielandt bracket for the spectral radius of an irreducible 0/1
// matrix given by successor lists; iterates on A + I to avoid periodicity.
std::pair<double, double> spectral_bracket(const std::vector<std::vector<int>>& succ, double tol) {
    const std::size_t n = succ.size();
    std::vector<double> v(n, 1.0), w(n);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    const std::size_t max_iter = std::max<std::size_t>(2000, 200'000'000 / (n + 1));
    for (std::size_t it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (int j : succ[i]) s += v[static_cast<std::size_t>(j)];
            w[i] = s;
        }
        double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0, wmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = w[i] / v[i];
            rmin = std::min(rmin, r);
            rmax = std::max(rmax, r);
            wmax = std::max(wmax, w[i]);
        }
        lo = std::max(lo, rmin);
        hi = std::min(hi, rmax);
        for (std::size_t i = 0; i < n; ++i) v[i] = std::max(w[i] / wmax, 1e-300);
        if (it >= 200 && hi - lo <= tol * hi) break;
    }
    // widen for floating point rounding, then undo the +I shift
    const double slack = 1e-12 * hi + 1e-15;
    return {std::max(1.0, lo - slack) - 1.0, hi + slack - 1.0};
}

}  // namespace

EntropyBracket entropy(const SubshiftAutomaton& aut, double tolerance) {
    EntropyBracket b;
    b.method = EntropyMethod::automaton_exact;
    if (aut.empty()) {
        b.empty = true;
        return b;
    }
    const std::size_t ncomp = aut.scc_rich.size();
    double best_lo = 1.0, best_hi = 1.0;  // spectral radius 1 when only cycles remain
    for (std::size_t c = 0; c < ncomp; ++c) {
        if (!aut.scc_rich[c] || !aut.scc_good[c]) continue;
        std::vector<int> local(aut.size(), -1);
        std::vector<std::size_t> members;
        for (std::size_t s = 0; s < aut.size(); ++s)
            if (aut.scc[s] == static_cast<int>(c)) {
                local[s] = static_cast<int>(members.size());
                members.push_back(s);
            }
        std::vector<std::vector<int>> succ(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int t : aut.next[members[i]])
                if (t >= 0 && aut.scc[static_cast<std::size_t>(t)] == static_cast<int>(c))
                    succ[i].push_back(local[static_cast<std::size_t>(t)]);
        auto [lo, hi] = spectral_bracket(succ, tolerance);
        best_lo = std::max(best_lo, lo);
        best_hi = std::max(best_hi, hi);
    }
    b.lower = std::clamp(std::log2(best_lo), 0.0, 1.0);
    b.upper = std::clamp(std::log2(best_hi), 0.0, 1.0);
    return b;
}

namespace {

// Lower bound from a block family: words W of length p whose every
// concatenation stays legal certify h >= log2|W| / p.
double cycle_lower_bound(const LexSubshift& shift, std::size_t max_p) {
    RelaxedWalker rw(shift);
    double best = 0.0;
    for (std::size_t p = 1; p <= max_p; ++p) {
        if (count_relaxed(shift, p) > (1u << 16)) break;
        std::vector<std::string> cand;
        std::string w;
        rw.walk(w, Ties{}, p, [&](const std::string& word, const Ties&) {
            if (membership(EpSequence("", word), shift)) cand.push_back(word);
            return false;
        });
        if (cand.size() < 2) continue;
        const std::string& lo = cand.front();  // walk order is lexicographic
        const std::string& hi = cand.back();
        const EpSequence lo_inf("", lo), hi_inf("", hi);
        std::size_t k = 0;
        for (const std::string& u : cand) {
            bool ok = true;
            for (std::size_t i = 0; i < p && ok; ++i) {
                EpSequence least = concat(u.substr(i), lo_inf);
                EpSequence most = concat(u.substr(i), hi_inf);
                Order a = lex_compare_ep(shift.lower, least);
                Order b = lex_compare_ep(most, shift.upper);
                ok = a != Order::greater && !(shift.strict_lower && a == Order::equal) && b != Order::greater &&
                     !(shift.strict_upper && b == Order::equal);
            }
            if (ok) ++k;
        }
        if (k >= 2) best = std::max(best, std::log2(static_cast<double>(k)) / static_cast<double>(p));
    }
    return best;
}

EntropyBracket counting_entropy(const LexSubshift& shift, std::size_t depth) {
    EntropyBracket b;
    b.method = EntropyMethod::counting;
    double upper = 1.0;
    for (std::size_t n = 1; n <= depth; ++n) {
        std::uint64_t c = count_relaxed(shift, n);
        if (c == 0) {
            b.empty = true;
            return b;
        }
        upper = std::min(upper, std::log2(static_cast<double>(c)) / static_cast<double>(n));
    }
    b.upper = std::clamp(upper, 0.0, 1.0);
    b.lower = std::min(b.upper, cycle_lower_bound(shift, std::min<std::size_t>(depth, 20)));
    return b;
}

}  // namespace

EntropyBracket entropy(const LexSubshift& shift, const EntropyOptions& opt) {
    using Mode = EntropyOptions::Mode;
    if (opt.mode == Mode::counting) return counting_entropy(shift, opt.counting_depth);
    try {
        return entropy(compile(shift, opt.state_cap), opt.tolerance);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::StateCapExceeded || opt.mode == Mode::automaton) throw;
    }
    return counting_entropy(shift, opt.counting_depth);
}

DimensionBracket dimension(const BetaSpec& beta, const PointSpec& t, const DimensionOptions& opt) {
    if (t.value.lo() < 0.0 || !certainly_less(t.value, Interval(1.0)))
        throw Error(ErrorCode::OutOfRange, "t must lie in [0, 1)");
    auto [l_lo, l_hi] = greedy_bracket(t, beta, opt.horizon);
    auto [u_lo, u_hi] = alpha_bracket(beta, opt.horizon);
    DimensionBracket r;
    r.exact_bounds = l_lo == l_hi && u_lo == u_hi;
    EntropyBracket up = entropy(survivor_shift(l_lo, u_hi), opt.entropy);
    EntropyBracket down = r.exact_bounds ? up : entropy(survivor_shift(l_hi, u_lo), opt.entropy);
    r.h.lower = down.lower;
    r.h.upper = up.upper;
    r.h.empty = up.empty;
    r.h.method = (up.method == EntropyMethod::counting || down.method == EntropyMethod::counting)
                     ? EntropyMethod::counting
                     : EntropyMethod::automaton_exact;
    const Interval lb = beta.value.log2();
    // round outward: divide the lower entropy by the larger log
    r.lower = std::clamp(r.h.lower / lb.hi() * (1 - 1e-15), 0.0, 1.0);
    r.upper = std::clamp(r.h.upper / lb.lo() * (1 + 1e-15), 0.0, 1.0);
    return r;
}

}  // namespace bh
