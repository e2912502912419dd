// betaholes: command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

#include "betaholes/bifurcation.hpp"
#include "betaholes/cli.hpp"
#include "betaholes/critical.hpp"
#include "betaholes/error.hpp"

using namespace bh;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int digits = 12;

// Reals are emitted as fixed-notation strings so no precision is lost to JSON doubles.
std::string real(const Interval& v) { return v.mid_string(digits); }
json bracket(const Interval& v) { return json::array({fixed(v.lo(), digits), fixed(v.hi(), digits)}); }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

EpSequence need_alpha(const BetaSpec& b) {
    if (!b.alpha) throw UsageError("this command needs a symbolic beta, written @PRE(PER)");
    return *b.alpha;
}

Interval parse_point(const std::string& text, const BetaSpec& beta) {
    if (text.find('(') != std::string::npos) return project(EpSequence::parse(text), beta);
    return Interval::from_decimal(text);
}

json interval_json(const IntervalRecord& r) {
    return json{{"generator", r.generator.str()},
                {"lyndon", r.lyndon.str()},
                {"beta_L", bracket(r.beta_L.value)},
                {"beta_R", bracket(r.beta_R.value)},
                {"kind", kind_name(r.kind)},
                {"alpha_L", r.alpha_L().to_string()},
                {"alpha_R", r.alpha_R().to_string()}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Beta-expansions, survivor sets with a hole (0,t), and their bifurcation structure"};
    app.require_subcommand(1);
    app.fallthrough();  // --digits may follow the subcommand
    app.add_option("--digits", digits, "decimal digits for printed reals")->check(CLI::Range(0, 40));

    // expand
    std::string x_text, beta_text, mode = "greedy";
    std::size_t n = 32;
    auto* expand = app.add_subcommand("expand", "greedy or quasi-greedy digits of x");
    expand->add_option("--x", x_text, "decimal literal or PRE(PER) sequence")->required();
    expand->add_option("--beta", beta_text, "decimal literal or @PRE(PER)")->required();
    expand->add_option("--n", n, "number of digits")->check(CLI::Range(1, 100000));
    expand->add_option("--mode", mode)->check(CLI::IsMember({"greedy", "quasi"}));

    // alpha
    std::size_t horizon = default_alpha_horizon;
    auto* alpha = app.add_subcommand("alpha", "quasi-greedy expansion of 1");
    alpha->add_option("--beta", beta_text)->required();
    alpha->add_option("--horizon", horizon)->check(CLI::Range(1, 100000));

    // solve-beta
    std::string alpha_text;
    auto* solve = app.add_subcommand("solve-beta", "the base whose alpha is the given sequence");
    solve->add_option("--alpha", alpha_text, "PRE(PER)")->required();

    // admissible
    std::string seq_text;
    auto* admissible = app.add_subcommand("admissible", "Parry admissibility of a sequence");
    admissible->add_option("--x", seq_text, "PRE(PER)")->required();
    auto* adm_alpha = admissible->add_option("--alpha", alpha_text, "PRE(PER)");
    admissible->add_option("--beta", beta_text, "@PRE(PER)")->excludes(adm_alpha);

    // farey
    unsigned level = 0;
    std::string word_text;
    auto* farey = app.add_subcommand("farey", "Farey levels and membership");
    auto* lvl_opt = farey->add_option("--level", level);
    farey->add_option("--check", word_text)->excludes(lvl_opt);

    // factorize
    auto* factorize = app.add_subcommand("factorize", "standard factorization of a Farey word");
    factorize->add_option("--word", word_text)->required();

    // atlas
    std::size_t max_len = 6;
    std::string kind = "farey";
    auto* atlas_cmd = app.add_subcommand("atlas", "basic or Farey parameter intervals");
    atlas_cmd->add_option("--max-len", max_len)->required();
    atlas_cmd->add_option("--kind", kind)->check(CLI::IsMember({"farey", "all"}));

    // staircase
    std::string t_min_text = "0", t_max_text = "edge";
    std::size_t samples = 64, n_max = 20;
    unsigned threads = 0;
    auto* stair = app.add_subcommand("staircase", "dimension of the survivor set on a grid of t");
    stair->add_option("--beta", beta_text)->required();
    stair->add_option("--t-min", t_min_text);
    stair->add_option("--t-max", t_max_text, "decimal, or 'edge' for 1 - 1/beta");
    stair->add_option("--samples", samples);
    stair->add_option("--n-max", n_max, "counting depth")->check(CLI::Range(1, 30));
    stair->add_option("--threads", threads);

    // tau
    std::size_t depth = default_atlas_depth;
    auto* tau = app.add_subcommand("tau", "critical value tau_beta");
    tau->add_option("--beta", beta_text)->required();
    tau->add_option("--atlas-depth", depth)->check(CLI::Range(2, 16));

    // isolated
    auto* isolated = app.add_subcommand("isolated", "is t = pi((word)^inf) isolated in E+ ?");
    isolated->add_option("--word", word_text)->required();
    isolated->add_option("--beta", beta_text)->required();

    // zset
    auto* zset = app.add_subcommand("zset", "the finite set Z for a Farey generator");
    zset->add_option("--word", word_text)->required();

    // classify
    auto* classify = app.add_subcommand("classify", "bifurcation-set membership of t");
    classify->add_option("--t", seq_text, "PRE(PER)")->required();
    classify->add_option("--beta", beta_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*expand) {
            const BetaSpec beta = BetaSpec::parse(beta_text);
            const Interval x = parse_point(x_text, beta);
            const DigitExpansion d = mode == "greedy" ? greedy_digits(x, beta, n) : quasi_greedy_digits(x, beta, n);
            std::cout << d.digits << '\n' << "certified " << d.certified << '\n';
            if (d.exact) std::cout << "exact " << d.exact->to_string() << '\n';
        } else if (*alpha) {
            const BetaSpec beta = BetaSpec::parse(beta_text);
            const AlphaResult r = alpha_of_beta(beta, horizon);
            print(json{{"beta", beta.label},
                       {"sequence", r.sequence ? json(r.sequence->to_string()) : json(nullptr)},
                       {"heuristic", r.heuristic},
                       {"prefix", r.prefix},
                       {"certified", r.certified}});
        } else if (*solve) {
            const BetaSpec b = beta_from_alpha(EpSequence::parse(alpha_text));
            print(json{{"alpha", b.alpha->to_string()}, {"beta", real(b.value)}, {"bracket", bracket(b.value)}});
        } else if (*admissible) {
            if (alpha_text.empty() && beta_text.empty()) throw UsageError("give --alpha or --beta");
            EpSequence a = alpha_text.empty() ? need_alpha(BetaSpec::parse(beta_text)) : EpSequence::parse(alpha_text);
            if (!is_in_Q(a)) throw Error(ErrorCode::NotInQ, a.to_string());
            const EpSequence x = EpSequence::parse(seq_text);
            print(json{{"x", x.to_string()}, {"alpha", a.to_string()}, {"admissible", is_admissible(x, a)}});
        } else if (*farey) {
            if (!word_text.empty()) {
                const Word w(word_text);
                print(json{{"word", w.str()}, {"farey", is_farey(w)}, {"non_degenerate", is_nondegenerate_farey(w)}});
            } else {
                json out = json::array();
                for (const Word& w : farey_level(level).entries) out.push_back(w.str());
                print(json{{"level", level}, {"entries", out}});
            }
        } else if (*factorize) {
            const Word w(word_text);
            auto [u, v] = standard_factorization(w);
            print(json{{"word", w.str()}, {"u", u.str()}, {"v", v.str()}, {"palindrome", check_palindrome_property(w)}});
        } else if (*atlas_cmd) {
            if (max_len < 2 || max_len > 12) throw UsageError("--max-len must lie in [2, 12]");
            const auto recs = atlas(max_len, kind == "farey");
            json out = json::array(), nest = json::array();
            for (const auto& r : recs) out.push_back(interval_json(r));
            // only containments are listed; every other pair is disjoint
            for (std::size_t i = 0; i < recs.size(); ++i)
                for (std::size_t j = 0; j < recs.size(); ++j)
                    if (i != j && nesting_relation(recs[i], recs[j]) == Nesting::first_inside_second)
                        nest.push_back(json{{"inner", recs[i].generator.str()}, {"outer", recs[j].generator.str()}});
            print(json{{"kind", kind}, {"max_len", max_len}, {"intervals", out}, {"nesting", nest}});
        } else if (*stair) {
            if (samples < 2) throw UsageError("--samples must be at least 2");
            StaircaseRequest req{BetaSpec::parse(beta_text)};
            req.t_min = Interval::from_decimal(t_min_text);
            req.t_max_is_edge = t_max_text == "edge";
            if (!req.t_max_is_edge) req.t_max = Interval::from_decimal(t_max_text);
            req.samples = samples;
            req.n_max = n_max;
            req.threads = threads;
            std::vector<StaircaseRow> rows;
            try {
                rows = staircase(req);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            std::cout << staircase_csv(rows, digits);
        } else if (*tau) {
            const BetaSpec beta = BetaSpec::parse(beta_text);
            const TauReport r = tau_report(beta, depth);
            json out{{"beta", beta.label},
                     {"regime", regime_name(r.regime)},
                     {"tau_lower", real(r.tau_lower)},
                     {"tau_upper", real(r.tau_upper)},
                     {"witness_words", r.witnesses},
                     {"atlas_depth", r.atlas_depth},
                     {"certified", r.certified}};
            if (r.generator) out["generator"] = r.generator->str();
            if (r.t_star) out["t_star"] = real(*r.t_star);
            if (r.t_diamond) out["t_diamond"] = real(*r.t_diamond);
            print(out);
        } else if (*isolated) {
            const Word w(word_text);
            const Word lyn = lyndon_rotation(w).word;  // either rotation is accepted
            const BetaSpec beta = BetaSpec::parse(beta_text);
            json out{{"word", w.str()}, {"lyndon", lyn.str()}, {"beta", beta.label},
                     {"classification", isolation_name(classify_isolated(lyn, beta))}};
            if (lyn.size() >= 2) out["interval"] = interval_json(basic_interval(max_rotation(lyn)));
            print(out);
        } else if (*zset) {
            const ZSet z = z_set(Word(word_text));
            json members = json::array();
            for (const auto& m : z.members) members.push_back(m.to_string());
            print(json{{"word", word_text}, {"cardinality", z.members.size()}, {"members", members}});
        } else if (*classify) {
            const BetaSpec beta = BetaSpec::parse(beta_text);
            const EpSequence t = EpSequence::parse(seq_text);
            auto [lo, hi] = alpha_bracket(beta);
            auto verdict = [&](auto&& f) {
                const bool a = f(lo), b = f(hi);
                if (a != b)
                    throw Error(ErrorCode::UndecidableAtPrecision, "alpha(beta) is not known far enough to decide");
                return a;
            };
            print(json{{"t", t.to_string()},
                       {"beta", beta.label},
                       {"admissible", verdict([&](const EpSequence& a) { return is_admissible(t, a); })},
                       {"in_E_plus", verdict([&](const EpSequence& a) { return in_E_plus(t, a); })},
                       {"in_E_zero", verdict([&](const EpSequence& a) { return in_E_zero(t, a); })}});
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
