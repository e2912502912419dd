#include "betaholes/critical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "betaholes/error.hpp"

namespace bh {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::left_endpoint: return "left_endpoint";
        case Regime::inside_farey_low: return "inside_farey_low";
        case Regime::inside_farey_high: return "inside_farey_high";
        case Regime::outside_closure: return "outside_closure";
    }
    return "?";
}

namespace {

void require_farey_reflection(const Word& a) {
    if (!is_nondegenerate_farey(reflect(a)))
        throw Error(ErrorCode::NotFareyReflection, "reflection of " + a.str() + " is not a Farey word");
}

std::string tail(const Word& a) { return a.str().substr(1); }  // a_2 ... a_m

const std::vector<IntervalRecord>& farey_atlas(std::size_t depth) {
    static std::mutex mu;
    static std::map<std::size_t, std::vector<IntervalRecord>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(depth);
    if (it == cache.end()) it = cache.emplace(depth, atlas(depth, true)).first;
    return it->second;
}

Interval one_minus_inv(const Interval& beta) {
    const Interval one(1.0, beta.precision());
    return one - one / beta;
}

}  // namespace

EpSequence t_star_sequence(const Word& a) { return EpSequence("0" + tail(a), a.str()); }

EpSequence t_diamond_sequence(const Word& a) { return EpSequence(plus(Word("0" + tail(a))).str(), "0"); }

TauReport tau_report(const BetaSpec& beta, std::size_t atlas_depth) {
    if (atlas_depth < 2) throw Error(ErrorCode::OutOfRange, "atlas depth must be at least 2");
    TauReport r{beta, Regime::outside_closure, Interval(0.0), Interval(0.0), {}, atlas_depth, false, {}, {}, {}};
    const Interval edge = one_minus_inv(beta.value);

    if (beta.alpha) {
        const EpSequence& alpha = *beta.alpha;
        if (alpha == EpSequence("", "1")) {
            // beta = 2 lies to the right of every closed Farey interval
            r.tau_lower = r.tau_upper = edge;
            r.certified = true;
            r.witnesses.push_back("alpha=(1)");
            return r;
        }
        if (alpha.purely_periodic() && is_nondegenerate_farey(reflect(Word(alpha.period())))) {
            r.regime = Regime::left_endpoint;
            r.tau_lower = r.tau_upper = edge;
            r.certified = true;
            r.generator = Word(alpha.period());
            r.witnesses.push_back("b(1-1/beta)=" + greedy_one_minus_inv_beta(alpha).to_string());
            return r;
        }
    }

    const auto& recs = farey_atlas(atlas_depth);
    for (const IntervalRecord& rec : recs) {
        int where;
        try {
            where = locate(beta, rec);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UndecidableAtPrecision) throw;
            throw Error(ErrorCode::AtlasInconclusive, "beta is within bracket width of an endpoint of the interval for " +
                                                          rec.generator.str());
        }
        if (where != 0) continue;
        const Word& a = rec.generator;
        const EpSequence ts = t_star_sequence(a), td = t_diamond_sequence(a);
        r.generator = a;
        r.t_star = project(ts, beta);
        r.t_diamond = project(td, beta);
        r.witnesses.push_back("generator=" + a.str());
        r.witnesses.push_back("t_star=" + ts.to_string());
        r.witnesses.push_back("t_diamond=" + td.to_string());
        const EpSequence threshold(plus(a).str() + "0" + tail(a), a.str());
        bool low;
        if (beta.alpha) {
            low = ep_less(*beta.alpha, threshold);
        } else {
            auto [lo, hi] = alpha_bracket(beta);
            if (ep_less(hi, threshold))
                low = true;
            else if (ep_leq(threshold, lo))
                low = false;
            else
                throw Error(ErrorCode::AtlasInconclusive, "alpha(beta) is not resolved against " + threshold.to_string());
        }
        r.witnesses.push_back("threshold=" + threshold.to_string());
        r.regime = low ? Regime::inside_farey_low : Regime::inside_farey_high;
        r.tau_lower = *r.t_star;
        r.tau_upper = low ? *r.t_star : *r.t_diamond;
        r.certified = true;
        return r;
    }

    // Not inside any atlas interval: measure the atlas gap around beta.
    Interval left(1.0), right(2.0);
    for (const IntervalRecord& rec : recs) {
        const int where = locate(beta, rec);
        if (where > 0 && certainly_less(left, rec.beta_R.value)) left = rec.beta_R.value;
        if (where < 0 && certainly_less(rec.beta_L.value, right)) right = rec.beta_L.value;
    }
    const double width = right.hi() - left.lo();
    r.witnesses.push_back("atlas_gap=" + fixed(width, 12));
    r.tau_upper = edge;
    if (width < atlas_gap_tolerance) {
        r.tau_lower = edge;
    } else {
        // a deeper Farey interval of length m > depth still has tau >= 1 - 1/beta - beta^-m
        const Interval one(1.0, beta.value.precision());
        r.tau_lower = edge - one / beta.value.pow(static_cast<unsigned>(atlas_depth + 1));
        r.witnesses.push_back("inconclusive_at_depth");
    }
    r.certified = false;
    return r;
}

ZSet z_set(const Word& a) {
    require_farey_reflection(a);
    const Rotation s = lyndon_rotation(a);
    const LexSubshift shift{EpSequence(s.word.str(), "0"), EpSequence::periodic(a), false, false};
    const SubshiftAutomaton aut = compile(shift);

    const std::size_t m = a.size();
    for (std::size_t c = 0; c < aut.scc_good.size(); ++c) {
        if (!aut.scc_good[c]) continue;
        if (aut.scc_rich[c]) throw Error(ErrorCode::FinitenessCertificateFailed, "a recurrent class carries two cycles");
    }
    // cycle states may only leave along their cycle, and cycles must spell rotations of a
    auto cycle_label = [&](int s0) {
        std::string lab;
        int v = s0;
        do {
            int nxt = -1;
            for (int d = 0; d < 2; ++d) {
                int t = aut.next[static_cast<std::size_t>(v)][static_cast<std::size_t>(d)];
                if (t < 0 || !aut.good[static_cast<std::size_t>(t)]) continue;
                if (nxt >= 0)
                    throw Error(ErrorCode::FinitenessCertificateFailed, "a cycle state has a second legal exit");
                nxt = t;
                lab.push_back(static_cast<char>('0' + d));
            }
            v = nxt;
        } while (v != s0);
        return lab;
    };
    const std::string aa = a.str() + a.str();
    ZSet out;
    out.automaton_states = aut.size();
    if (aut.empty()) return out;
    std::function<void(int, std::string&)> walk = [&](int v, std::string& path) {
        const std::size_t vu = static_cast<std::size_t>(v);
        if (aut.scc[vu] >= 0 && aut.scc_good[static_cast<std::size_t>(aut.scc[vu])]) {
            std::string lab = cycle_label(v);
            if (lab.size() != m || aa.find(lab) == std::string::npos)
                throw Error(ErrorCode::FinitenessCertificateFailed, "cycle " + lab + " is not a rotation of " + a.str());
            out.members.emplace_back(path, lab);
            return;
        }
        for (int d = 0; d < 2; ++d) {
            int t = aut.next[vu][static_cast<std::size_t>(d)];
            if (t < 0 || !aut.good[static_cast<std::size_t>(t)]) continue;
            path.push_back(static_cast<char>('0' + d));
            walk(t, path);
            path.pop_back();
        }
    };
    std::string path;
    walk(aut.start, path);
    std::sort(out.members.begin(), out.members.end(),
              [](const EpSequence& x, const EpSequence& y) { return ep_less(x, y); });
    out.members.erase(std::unique(out.members.begin(), out.members.end()), out.members.end());
    return out;
}

TnMember t_n_family(const Word& a, std::size_t N) {
    require_farey_reflection(a);
    if (N == 0) throw Error(ErrorCode::OutOfRange, "N must be at least 1");
    const std::size_t j = lyndon_rotation(a).shift;
    std::string block = "0" + tail(a);
    for (std::size_t k = 0; k < N; ++k) block += a.str();
    block += a.str().substr(0, j);
    const EpSequence t("", block);
    const EpSequence top = EpSequence::periodic(a);
    bool ok = true;
    for (std::size_t n = 0; n < t.orbit_window() && ok; ++n) {
        EpSequence s = t.shift(n);
        ok = ep_leq(t, s) && ep_less(s, top);
    }
    return TnMember{t, ok};
}

bool verify_empty_at_left_endpoint(const Word& a) {
    require_farey_reflection(a);
    const LexSubshift shift{EpSequence(a.reversed().str(), "0"), EpSequence::periodic(a), true, false};
    return compile(shift).empty();
}

}  // namespace bh
