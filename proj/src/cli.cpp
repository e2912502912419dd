#include "betaholes/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace bh {

namespace {

StaircaseRow row_at(const StaircaseRequest& req, std::size_t i, const Interval& edge) {
    const std::size_t last = req.samples - 1;
    StaircaseRow row;
    DimensionOptions opt;
    opt.entropy.counting_depth = req.n_max;
    if (i == last && req.t_max_is_edge && req.beta.alpha) {
        row.t = edge;
        row.d = dimension(req.beta, PointSpec{greedy_one_minus_inv_beta(*req.beta.alpha), edge}, opt);
        return row;
    }
    const Interval span = (req.t_max_is_edge ? edge : req.t_max) - req.t_min;
    row.t = i == 0 ? req.t_min
                   : req.t_min + span * Interval::from_ratio(static_cast<long>(i), static_cast<long>(last));
    if (certainly_leq(Interval(1.0), row.t)) {
        row.d.h.empty = true;  // the hole (0, 1) leaves only the fixed point 0
        return row;
    }
    row.d = dimension(req.beta, PointSpec{std::nullopt, row.t}, opt);
    return row;
}

}  // namespace

std::vector<StaircaseRow> staircase(const StaircaseRequest& req) {
    if (req.samples < 2) throw std::invalid_argument("a staircase needs at least two samples");
    const Interval one(1.0);
    const Interval edge = one - one / req.beta.value;
    const Interval& top = req.t_max_is_edge ? edge : req.t_max;
    if (req.t_min.lo() < 0.0 || !certainly_less(req.t_min, top) || certainly_less(one, top))
        throw std::invalid_argument("the grid must satisfy 0 <= t_min < t_max <= 1");

    std::vector<StaircaseRow> rows(req.samples);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex mu;
    auto work = [&] {
        for (std::size_t i; (i = next++) < req.samples;) {
            try {
                rows[i] = row_at(req, i, edge);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned n = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, req.samples));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < n; ++k) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string staircase_csv(const std::vector<StaircaseRow>& rows, int digits) {
    std::string out = staircase_header;
    out += '\n';
    for (const auto& r : rows) {
        out += r.t.mid_string(digits) + ',' + fixed(r.d.h.lower, digits) + ',' + fixed(r.d.h.upper, digits) + ',' +
               fixed(r.d.lower, digits) + ',' + fixed(r.d.upper, digits) + ',' +
               (r.d.h.empty ? "empty" : method_name(r.d.h.method)) + '\n';
    }
    return out;
}

}  // namespace bh
