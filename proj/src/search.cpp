#include "arclab/search.hpp"

#include "arclab/combi.hpp"
#include "arclab/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <thread>

namespace arclab {

std::vector<Vek> normalized_points(const Field& f, int k) {
    if (k < 1) throw std::invalid_argument("normalized_points: k must be positive");
    std::vector<Vek> out;
    // First nonzero coordinate pinned to 1, tail coordinates free.
    for (int lead = k - 1; lead >= 0; --lead) {
        const int free = k - lead - 1;
        std::uint64_t total = 1;
        for (int i = 0; i < free; ++i) total *= f.q();
        for (std::uint64_t code = 0; code < total; ++code) {
            Vek v(static_cast<std::size_t>(k), f.zero());
            v[static_cast<std::size_t>(lead)] = f.one();
            std::uint64_t rest = code;
            for (int i = k - 1; i > lead; --i) {
                v[static_cast<std::size_t>(i)] = Fe{static_cast<std::uint32_t>(rest % f.q())};
                rest /= f.q();
            }
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vek> extend_candidates(const Arc& a) {
    const Field& f = a.field();
    const int k = a.k();
    std::vector<Vek> out;
    for (const Vek& x : normalized_points(f, k)) {
        bool ok = true;
        for_each_combination(a.size(), k - 1, [&](const std::vector<int>& ws) {
            if (!ok) return;
            std::vector<Vek> rows;
            rows.reserve(static_cast<std::size_t>(k));
            for (int w : ws) rows.push_back(a[w]);
            rows.push_back(x);
            if (det_rows_destructive(f, rows) == f.zero()) ok = false;
        });
        if (ok) out.push_back(x);
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct BranchOutcome {
    int best_size = 0;
    std::vector<int> best_chosen;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

class BranchRunner {
public:
    BranchRunner(const Field& f, int k, const std::vector<Vek>& master,
                 const std::vector<Vek>& base, std::uint64_t budget,
                 std::optional<Clock::time_point> deadline)
        : f_(f), k_(k), master_(master), budget_(budget), deadline_(deadline),
          current_(base) {}

    /// Explore the branch rooted at master[cands[start]].
    BranchOutcome run(const std::vector<int>& cands, std::size_t start) {
        out_ = BranchOutcome{};
        chosen_.clear();
        if (deadline_ && Clock::now() >= *deadline_) {
            out_.exhausted = true;
            return out_;
        }
        std::vector<int> next = filtered_successors(cands, start);
        chosen_.push_back(cands[start]);
        current_.push_back(master_[static_cast<std::size_t>(cands[start])]);
        dfs(next);
        current_.pop_back();
        chosen_.pop_back();
        return out_;
    }

private:
    void dfs(const std::vector<int>& cands) {
        ++out_.nodes;
        if (static_cast<int>(current_.size()) > out_.best_size) {
            out_.best_size = static_cast<int>(current_.size());
            out_.best_chosen = chosen_;
        }
        if (out_.nodes >= budget_) {
            out_.exhausted = true;
            return;
        }
        if (deadline_ && (out_.nodes & 0xfff) == 0 && Clock::now() >= *deadline_) {
            out_.exhausted = true;
            return;
        }
        const int size = static_cast<int>(current_.size());
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (size + static_cast<int>(cands.size() - i) <= out_.best_size) break;
            std::vector<int> next = filtered_successors(cands, i);
            chosen_.push_back(cands[i]);
            current_.push_back(master_[static_cast<std::size_t>(cands[i])]);
            dfs(next);
            current_.pop_back();
            chosen_.pop_back();
            if (out_.exhausted) return;
        }
    }

    /// Candidates after position `at` still compatible once master[cands[at]]
    /// joins the current points. New constraints are exactly the hyperplanes
    /// spanned by x and each (k-2)-subset of the current points.
    std::vector<int> filtered_successors(const std::vector<int>& cands, std::size_t at) {
        const Vek& x = master_[static_cast<std::size_t>(cands[at])];
        std::vector<LinearForm> forms;
        bool dead = false;
        for_each_combination(static_cast<int>(current_.size()), k_ - 2,
                             [&](const std::vector<int>& zs) {
                                 if (dead) return;
                                 std::vector<Vek> rows;
                                 rows.reserve(static_cast<std::size_t>(k_ - 1));
                                 for (int z : zs) rows.push_back(current_[static_cast<std::size_t>(z)]);
                                 rows.push_back(x);
                                 if (rank_of(f_, rows) < k_ - 1) {
                                     dead = true;
                                     return;
                                 }
                                 forms.push_back(nullspace_forms(f_, rows)[0]);
                             });
        std::vector<int> next;
        if (dead) return next;
        for (std::size_t j = at + 1; j < cands.size(); ++j) {
            const Vek& c = master_[static_cast<std::size_t>(cands[j])];
            bool ok = true;
            for (const LinearForm& form : forms) {
                if (eval(f_, form, c) == f_.zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) next.push_back(cands[j]);
        }
        return next;
    }

    const Field& f_;
    int k_;
    const std::vector<Vek>& master_;
    std::uint64_t budget_;
    std::optional<Clock::time_point> deadline_;
    std::vector<Vek> current_;
    std::vector<int> chosen_;
    BranchOutcome out_;
};

} // namespace

SearchResult max_arc_size(const Field& f, int k, const SearchOptions& opts) {
    if (k < 2) throw std::invalid_argument("max_arc_size: k must be at least 2");
    if (opts.node_budget == 0 || opts.time_budget_seconds < 0.0)
        throw std::invalid_argument("max_arc_size: budgets must be positive");
    const auto t0 = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (opts.time_budget_seconds > 0.0)
        deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(opts.time_budget_seconds));

    const std::vector<Vek> master = normalized_points(f, k);
    std::vector<Vek> base;
    std::vector<int> roots;
    if (opts.naive) {
        roots.resize(master.size());
        for (std::size_t i = 0; i < master.size(); ++i) roots[i] = static_cast<int>(i);
    } else {
        base = bush_frame(f, k).points();
        for (std::size_t i = 0; i < master.size(); ++i) {
            bool ok = true;
            for_each_combination(static_cast<int>(base.size()), k - 1,
                                 [&](const std::vector<int>& ws) {
                                     if (!ok) return;
                                     std::vector<Vek> rows;
                                     for (int w : ws)
                                         rows.push_back(base[static_cast<std::size_t>(w)]);
                                     rows.push_back(master[i]);
                                     if (det_rows_destructive(f, rows) == f.zero()) ok = false;
                                 });
            if (ok) roots.push_back(static_cast<int>(i));
        }
    }

    SearchResult res;
    res.max_size = static_cast<int>(base.size());
    res.witness = base;

    std::vector<BranchOutcome> outcomes(roots.size());
    const int jobs = std::max(1, std::min(opts.jobs, static_cast<int>(roots.size())));
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t b = cursor.fetch_add(1);
            if (b >= roots.size()) break;
            BranchRunner runner(f, k, master, base, opts.node_budget, deadline);
            outcomes[b] = runner.run(roots, b);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (const BranchOutcome& o : outcomes) {
        res.nodes += o.nodes;
        res.budget_exhausted = res.budget_exhausted || o.exhausted;
        if (o.best_size > res.max_size) {
            res.max_size = o.best_size;
            res.witness = base;
            for (int idx : o.best_chosen)
                res.witness.push_back(master[static_cast<std::size_t>(idx)]);
        }
    }

    res.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

} // namespace arclab
