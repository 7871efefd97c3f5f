#include "arclab/identity.hpp"

#include "arclab/combi.hpp"
#include "arclab/rng.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace arclab {

namespace {

using VI = std::vector<int>;

void validate_disjoint_groups(const Arc& arc,
                              std::initializer_list<std::pair<const VI*, const char*>> groups) {
    VI all;
    for (const auto& [g, name] : groups) {
        for (int i : *g) {
            if (i < 0 || i >= arc.size())
                throw std::invalid_argument(std::string(name) + ": index out of range");
            all.push_back(i);
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("configuration groups must be pairwise disjoint");
}

VI sorted_union(const VI& a, const VI& b) {
    VI out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

VI concat(const VI& a, const VI& b) {
    VI out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

/// Rows: point z first, then the listed index groups in order.
Fe det_with_groups(const Field& f, const Arc& arc, int z,
                   std::initializer_list<const VI*> groups) {
    std::vector<Vek> rows;
    rows.reserve(static_cast<std::size_t>(arc.k()));
    rows.push_back(arc[z]);
    for (const VI* g : groups)
        for (int i : *g) rows.push_back(arc[i]);
    return det_rows_destructive(f, rows);
}

void split_by_positions(const VI& seq, const VI& pos, VI& picked, VI& rest) {
    picked.clear();
    rest.clear();
    std::size_t pi = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (pi < pos.size() && pos[pi] == static_cast<int>(i)) {
            picked.push_back(seq[i]);
            ++pi;
        } else {
            rest.push_back(seq[i]);
        }
    }
}

std::vector<std::pair<std::string, VI>> named(
    std::initializer_list<std::pair<const char*, const VI*>> groups) {
    std::vector<std::pair<std::string, VI>> out;
    for (const auto& [name, g] : groups) out.emplace_back(name, *g);
    return out;
}

} // namespace

IdentityReport check_lemma_of_tangents(TangentBundle& tb, const std::vector<int>& d,
                                       int x, int y, int z) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    if (static_cast<int>(d.size()) != arc.k() - 3)
        throw std::invalid_argument("lemma of tangents: |D| must be k-3");
    if (arc.t() < 1)
        throw std::invalid_argument("lemma of tangents: requires t >= 1");
    const VI vx{x}, vy{y}, vz{z};
    validate_disjoint_groups(arc, {{&d, "D"}, {&vx, "x"}, {&vy, "y"}, {&vz, "z"}});

    const VI dx = concat(d, vx), dy = concat(d, vy), dz = concat(d, vz);
    const Fe lhs = f.mul(f.mul(tb.value_at(dx, y), tb.value_at(dy, z)), tb.value_at(dz, x));
    const Fe rhs =
        f.mul(f.minus_one_pow(static_cast<std::uint64_t>(arc.t()) + 1),
              f.mul(f.mul(tb.value_at(dx, z), tb.value_at(dy, x)), tb.value_at(dz, y)));

    IdentityReport rep;
    rep.lemma = "tangents";
    rep.config = named({{"D", &d}, {"x", &vx}, {"y", &vy}, {"z", &vz}});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

IdentityReport check_interpolation(TangentBundle& tb, const std::vector<int>& y,
                                   const std::vector<int>& e) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int k = arc.k();
    const int t = arc.t();
    if (static_cast<int>(y.size()) != k - 2)
        throw std::invalid_argument("interpolation: |Y| must be k-2");
    if (t < 1) throw std::invalid_argument("interpolation: requires t >= 1");
    if (static_cast<int>(e.size()) != t + 2)
        throw std::invalid_argument("interpolation: |E| must be t+2");
    if (arc.size() < k + t)
        throw std::invalid_argument("interpolation: requires |S| >= k+t");
    validate_disjoint_groups(arc, {{&y, "Y"}, {&e, "E"}});

    Fe sum = f.zero();
    for (int a : e) {
        Fe val = tb.value_at(y, a);
        for (int z : e) {
            if (z == a) continue;
            const VI va{a};
            val = f.div(val, det_with_groups(f, arc, z, {&va, &y}));
        }
        sum = f.add(sum, val);
    }

    IdentityReport rep;
    rep.lemma = "interpolation";
    rep.config = named({{"Y", &y}, {"E", &e}});
    rep.lhs = sum;
    rep.rhs = f.zero();
    rep.pass = sum == f.zero();
    return rep;
}

namespace {

void validate_main_config(const Arc& arc, const MainLemmaConfig& cfg) {
    const int k = arc.k();
    const int t = arc.t();
    const int p = static_cast<int>(arc.field().p());
    const int n = static_cast<int>(cfg.a.size());
    const int r = static_cast<int>(cfg.l.size());
    if (static_cast<int>(cfg.d.size()) != k - 1 - r)
        throw std::invalid_argument("main identity: |D| must be k-1-r");
    if (static_cast<int>(cfg.omega.size()) != t + 1 - n)
        throw std::invalid_argument("main identity: |Omega| must be t+1-n");
    if (r < n || r > n + p - 1 || r > t + 2)
        throw std::invalid_argument("main identity: requires n <= r <= n+p-1 and r <= t+2");
    validate_disjoint_groups(arc,
                             {{&cfg.a, "A"}, {&cfg.l, "L"}, {&cfg.d, "D"}, {&cfg.omega, "Omega"}});
}

// Left-hand terms of the main identity, one per B subset of L, positions in
// lexicographic order; no sign simplification.
std::vector<Fe> main_lhs_terms_impl(TangentBundle& tb, const MainLemmaConfig& cfg) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int t = arc.t();
    const int n = static_cast<int>(cfg.a.size());
    const int r = static_cast<int>(cfg.l.size());

    std::vector<Fe> terms;
    VI b, lmb;
    for_each_combination(r, n, [&](const VI& pos) {
        split_by_positions(cfg.l, pos, b, lmb);
        const bool odd = sigma(b, cfg.l, t) & 1;
        SegreQuery sq{cfg.a, b, sorted_union(cfg.d, lmb)};
        Fe val = segre_product(tb, sq);
        for (int z : concat(cfg.omega, b))
            val = f.div(val, det_with_groups(f, arc, z, {&cfg.a, &lmb, &cfg.d}));
        terms.push_back(odd ? f.neg(val) : val);
    });
    return terms;
}

} // namespace

std::vector<Fe> main_lemma_lhs_terms(TangentBundle& tb, const MainLemmaConfig& cfg) {
    validate_main_config(tb.arc(), cfg);
    return main_lhs_terms_impl(tb, cfg);
}

IdentityReport check_main_lemma(TangentBundle& tb, const MainLemmaConfig& cfg) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    validate_main_config(arc, cfg);
    const int t = arc.t();
    const int n = static_cast<int>(cfg.a.size());
    const int r = static_cast<int>(cfg.l.size());

    Fe lhs = f.zero();
    for (const Fe& term : main_lhs_terms_impl(tb, cfg)) lhs = f.add(lhs, term);

    Fe rhs_sum = f.zero();
    const VI d_sorted = sorted_union(cfg.d, {});
    VI delta, rest;
    for_each_combination(static_cast<int>(cfg.omega.size()), r - n, [&](const VI& pos) {
        split_by_positions(cfg.omega, pos, delta, rest);
        SegreQuery sq{concat(cfg.a, delta), cfg.l, d_sorted};
        Fe val = segre_product(tb, sq);
        for (int z : concat(rest, cfg.l))
            val = f.div(val, det_with_groups(f, arc, z, {&cfg.a, &delta, &cfg.d}));
        rhs_sum = f.add(rhs_sum, val);
    });
    const std::uint64_t expo = static_cast<std::uint64_t>(r - n) *
                               (static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(t) +
                                static_cast<std::uint64_t>(n) + 1);
    const Fe rhs = f.mul(f.minus_one_pow(expo), rhs_sum);

    IdentityReport rep;
    rep.lemma = "main";
    rep.config = named({{"A", &cfg.a}, {"L", &cfg.l}, {"D", &cfg.d}, {"Omega", &cfg.omega}});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

namespace {

void validate_twotothen_config(const Arc& arc, const TwoToTheNConfig& cfg) {
    const int k = arc.k();
    const int p = static_cast<int>(arc.field().p());
    const int m = static_cast<int>(cfg.x.size());
    const int n = static_cast<int>(cfg.a.size()) + m;
    if (arc.size() != static_cast<int>(arc.field().q()) + 2)
        throw std::invalid_argument("hyperoval identity: requires |S| = q+2");
    if (static_cast<int>(cfg.y.size()) != m)
        throw std::invalid_argument("hyperoval identity: |X| and |Y| must agree");
    if (static_cast<int>(cfg.l.size()) != k - 1 - m)
        throw std::invalid_argument("hyperoval identity: |L| must be k-1-m");
    if (static_cast<int>(cfg.omega.size()) != k - 2 - n)
        throw std::invalid_argument("hyperoval identity: |Omega| must be k-2-n");
    if (n + p < k)
        throw std::invalid_argument("hyperoval identity: requires n >= k-p");
    validate_disjoint_groups(arc, {{&cfg.a, "A"},
                                   {&cfg.l, "L"},
                                   {&cfg.omega, "Omega"},
                                   {&cfg.x, "X"},
                                   {&cfg.y, "Y"}});
}

std::vector<Fe> twotothen_terms_impl(TangentBundle& tb, const TwoToTheNConfig& cfg) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int t = arc.t();
    const int m = static_cast<int>(cfg.x.size());
    const int nm = static_cast<int>(cfg.a.size()); // n - m

    std::vector<Fe> terms;
    VI b, lmb, xt, xc, yt, yc;
    for_each_combination(static_cast<int>(cfg.l.size()), nm, [&](const VI& pos) {
        split_by_positions(cfg.l, pos, b, lmb);
        const std::uint64_t s1 = sigma(b, cfg.l, t);
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            xt.clear();
            xc.clear();
            yt.clear();
            yc.clear();
            for (int i = 0; i < m; ++i) {
                if (mask & (1u << i)) {
                    xt.push_back(cfg.x[static_cast<std::size_t>(i)]);
                    yt.push_back(cfg.y[static_cast<std::size_t>(i)]);
                } else {
                    xc.push_back(cfg.x[static_cast<std::size_t>(i)]);
                    yc.push_back(cfg.y[static_cast<std::size_t>(i)]);
                }
            }
            const std::uint64_t s2 = sigma(xt, cfg.x, t);
            const bool odd = (s1 + s2 + std::popcount(mask)) & 1;
            SegreQuery sq{concat(cfg.a, yt), concat(b, xt), sorted_union(lmb, xc)};
            Fe val = segre_product(tb, sq);
            for (int z : concat(concat(cfg.omega, b), concat(xt, yc)))
                val = f.div(val, det_with_groups(f, arc, z, {&cfg.a, &xc, &yt, &lmb}));
            terms.push_back(odd ? f.neg(val) : val);
        }
    });
    return terms;
}

} // namespace

std::vector<Fe> twotothen_terms(TangentBundle& tb, const TwoToTheNConfig& cfg) {
    validate_twotothen_config(tb.arc(), cfg);
    return twotothen_terms_impl(tb, cfg);
}

IdentityReport check_twotothen(TangentBundle& tb, const TwoToTheNConfig& cfg) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    validate_twotothen_config(arc, cfg);

    Fe sum = f.zero();
    for (const Fe& term : twotothen_terms_impl(tb, cfg)) sum = f.add(sum, term);

    IdentityReport rep;
    rep.lemma = "twotothen";
    rep.config = named(
        {{"A", &cfg.a}, {"L", &cfg.l}, {"Omega", &cfg.omega}, {"X", &cfg.x}, {"Y", &cfg.y}});
    rep.lhs = sum;
    rep.rhs = f.zero();
    rep.pass = sum == f.zero();
    return rep;
}

IdentityReport check_laplace(const Field& f, const std::vector<Vek>& w,
                             const std::vector<Vek>& x_vectors,
                             const std::vector<Vek>& l_vectors, const Vek& y) {
    const std::size_t k = y.size();
    if (k == 0) throw std::invalid_argument("laplace: zero dimension");
    const std::size_t n = x_vectors.size();
    if (w.size() != n + 1) throw std::invalid_argument("laplace: |W| must be |X|+1");
    if (l_vectors.size() + n + 1 != k)
        throw std::invalid_argument("laplace: |L| must be k-|X|-1");
    for (const std::vector<Vek>* group : {&w, &x_vectors, &l_vectors})
        for (const Vek& v : *group)
            if (v.size() != k) throw std::invalid_argument("laplace: vector length mismatch");

    std::vector<Vek> rows;
    rows.reserve(k);
    auto det_of = [&](const Vek* first, const std::vector<Vek>* mid, std::size_t skip,
                      const std::vector<Vek>& tail) {
        rows.clear();
        if (first) rows.push_back(*first);
        if (mid)
            for (std::size_t i = 0; i < mid->size(); ++i)
                if (i != skip) rows.push_back((*mid)[i]);
        rows.insert(rows.end(), tail.begin(), tail.end());
        return det_rows_destructive(f, rows);
    };

    Fe lhs = f.zero();
    for (std::size_t j = 0; j < n + 1; ++j) {
        const Fe left = det_of(&y, &w, j, l_vectors);
        rows.clear();
        rows.push_back(w[j]);
        rows.insert(rows.end(), x_vectors.begin(), x_vectors.end());
        rows.insert(rows.end(), l_vectors.begin(), l_vectors.end());
        const Fe right = det_rows_destructive(f, rows);
        Fe term = f.mul(left, right);
        if (j % 2 == 1) term = f.neg(term);
        lhs = f.add(lhs, term);
    }
    const Fe det_wl = det_of(nullptr, &w, w.size(), l_vectors);
    rows.clear();
    rows.push_back(y);
    rows.insert(rows.end(), x_vectors.begin(), x_vectors.end());
    rows.insert(rows.end(), l_vectors.begin(), l_vectors.end());
    const Fe det_yxl = det_rows_destructive(f, rows);
    const Fe rhs = f.mul(det_wl, det_yxl);

    IdentityReport rep;
    rep.lemma = "laplace";
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    rep.note = "k=" + std::to_string(k) + " n=" + std::to_string(n);
    return rep;
}

IdentityReport check_appendix(TangentBundle& tb, const AppendixConfig& cfg) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int k = arc.k();
    const int t = arc.t();
    const int p = static_cast<int>(f.p());
    const int r = static_cast<int>(cfg.l.size());
    if (r < 1 || r > t + 2 || r > p - 1)
        throw std::invalid_argument("tail identity: requires 1 <= r <= min(p-1, t+2)");
    if (static_cast<int>(cfg.d.size()) != k - 1 - r)
        throw std::invalid_argument("tail identity: |D| must be k-1-r");
    if (static_cast<int>(cfg.omega.size()) != t + 2)
        throw std::invalid_argument("tail identity: |Omega| must be t+2");
    validate_disjoint_groups(arc, {{&cfg.l, "L"}, {&cfg.d, "D"}, {&cfg.omega, "Omega"}});

    const VI l_tail(cfg.l.begin() + 1, cfg.l.end());
    const VI d_sorted = sorted_union(cfg.d, {});
    Fe sum = f.zero();
    VI delta, rest;
    for_each_combination(static_cast<int>(cfg.omega.size()), r, [&](const VI& pos) {
        split_by_positions(cfg.omega, pos, delta, rest);
        SegreQuery sq{delta, cfg.l, d_sorted};
        Fe val = segre_product(tb, sq);
        for (int z : concat(rest, l_tail))
            val = f.div(val, det_with_groups(f, arc, z, {&delta, &cfg.d}));
        sum = f.add(sum, val);
    });

    IdentityReport rep;
    rep.lemma = "appendix";
    rep.config = named({{"L", &cfg.l}, {"D", &cfg.d}, {"Omega", &cfg.omega}});
    rep.lhs = sum;
    rep.rhs = f.zero();
    rep.pass = sum == f.zero();
    return rep;
}

namespace {

IdentityReport swap_report(TangentBundle& tb, const SegreQuery& query, std::size_t pos,
                           bool in_a) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const std::vector<int>& seq = in_a ? query.a : query.b;
    if (pos + 1 >= seq.size())
        throw std::invalid_argument("swap: position has no adjacent successor");

    SegreQuery swapped = query;
    std::vector<int>& target = in_a ? swapped.a : swapped.b;
    std::swap(target[pos], target[pos + 1]);

    const Fe base = segre_product(tb, query);
    const Fe lhs = segre_product(tb, swapped);
    const Fe rhs =
        f.mul(f.minus_one_pow(static_cast<std::uint64_t>(arc.t()) + 1), base);

    IdentityReport rep;
    rep.lemma = in_a ? "numerator-swap" : "denominator-swap";
    const VI pos_v{static_cast<int>(pos)};
    rep.config = named({{"A", &query.a}, {"B", &query.b}, {"D", &query.d}, {"pos", &pos_v}});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

} // namespace

IdentityReport check_numerator_swap(TangentBundle& tb, const SegreQuery& query,
                                    std::size_t pos) {
    return swap_report(tb, query, pos, true);
}

IdentityReport check_denominator_swap(TangentBundle& tb, const SegreQuery& query,
                                      std::size_t pos) {
    return swap_report(tb, query, pos, false);
}

IdentityReport check_switch(TangentBundle& tb, const std::vector<int>& d,
                            const std::vector<int>& a, const std::vector<int>& b,
                            int x, int y) {
    const Arc& arc = tb.arc();
    const Field& f = arc.field();
    const int k = arc.k();
    const int nb = static_cast<int>(b.size());
    if (static_cast<int>(a.size()) != nb - 1)
        throw std::invalid_argument("switch: |A| must be |B|-1");
    if (static_cast<int>(d.size()) != k - 2 - nb)
        throw std::invalid_argument("switch: |D| must be k-2-|B|");
    const VI vx{x}, vy{y};
    validate_disjoint_groups(arc, {{&d, "D"}, {&a, "A"}, {&b, "B"}, {&vx, "x"}, {&vy, "y"}});

    const VI db = concat(d, b);
    SegreQuery left_q{concat(vx, a), b, sorted_union(d, vy)};
    const Fe lhs = f.mul(f.div(tb.value_at(db, y), tb.value_at(db, x)),
                         segre_product(tb, left_q));
    SegreQuery right_q{concat(vy, a), b, sorted_union(d, vx)};
    const Fe rhs = f.mul(f.minus_one_pow(static_cast<std::uint64_t>(arc.t()) + 1),
                         segre_product(tb, right_q));

    IdentityReport rep;
    rep.lemma = "switch";
    rep.config = named({{"D", &d}, {"A", &a}, {"B", &b}, {"x", &vx}, {"y", &vy}});
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.pass = lhs == rhs;
    return rep;
}

std::optional<Lemma> lemma_from_name(std::string_view name) {
    if (name == "tangents") return Lemma::Tangents;
    if (name == "interpolation") return Lemma::Interpolation;
    if (name == "signs") return Lemma::Signs;
    if (name == "switch") return Lemma::Switch;
    if (name == "main") return Lemma::Main;
    if (name == "twotothen") return Lemma::TwoToTheN;
    if (name == "laplace") return Lemma::Laplace;
    if (name == "appendix") return Lemma::Appendix;
    return std::nullopt;
}

std::string_view lemma_name(Lemma lemma) {
    switch (lemma) {
        case Lemma::Tangents: return "tangents";
        case Lemma::Interpolation: return "interpolation";
        case Lemma::Signs: return "signs";
        case Lemma::Switch: return "switch";
        case Lemma::Main: return "main";
        case Lemma::TwoToTheN: return "twotothen";
        case Lemma::Laplace: return "laplace";
        case Lemma::Appendix: return "appendix";
    }
    return "unknown";
}

namespace {

struct GroupSpec {
    int size = 0;
    bool ordered = false;
};

std::uint64_t count_group_configs(int n, std::span<const GroupSpec> specs) {
    std::uint64_t count = 1;
    int rem = n;
    for (const GroupSpec& g : specs) {
        if (g.size > rem) return 0;
        count = sat_mul(count, g.ordered
                                   ? sat_perm(static_cast<std::uint64_t>(rem),
                                              static_cast<std::uint64_t>(g.size))
                                   : sat_comb(static_cast<std::uint64_t>(rem),
                                              static_cast<std::uint64_t>(g.size)));
        rem -= g.size;
    }
    return count;
}

template <class Fn>
void enumerate_groups(const VI& pool, std::span<const GroupSpec> specs, std::size_t gi,
                      std::vector<VI>& acc, const Fn& fn) {
    if (gi == specs.size()) {
        fn(acc);
        return;
    }
    const int m = specs[gi].size;
    if (m > static_cast<int>(pool.size())) return;
    for_each_combination(static_cast<int>(pool.size()), m, [&](const VI& pos) {
        VI chosen, rest;
        split_by_positions(pool, pos, chosen, rest);
        if (!specs[gi].ordered) {
            acc.push_back(std::move(chosen));
            enumerate_groups(rest, specs, gi + 1, acc, fn);
            acc.pop_back();
        } else {
            do {
                acc.push_back(chosen);
                enumerate_groups(rest, specs, gi + 1, acc, fn);
                acc.pop_back();
            } while (std::next_permutation(chosen.begin(), chosen.end()));
        }
    });
}

std::vector<VI> draw_groups(Rng& rng, int n, std::span<const GroupSpec> specs) {
    VI pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    std::vector<VI> out;
    std::size_t off = 0;
    for (const GroupSpec& g : specs) {
        VI grp(pool.begin() + static_cast<std::ptrdiff_t>(off),
               pool.begin() + static_cast<std::ptrdiff_t>(off + static_cast<std::size_t>(g.size)));
        off += static_cast<std::size_t>(g.size);
        if (!g.ordered) std::sort(grp.begin(), grp.end());
        out.push_back(std::move(grp));
    }
    return out;
}

struct Recorder {
    SuiteResult* res;
    std::size_t keep;
    void add(IdentityReport&& rep) {
        ++res->total;
        if (rep.pass) {
            ++res->passed;
        } else if (!res->first_fail) {
            res->first_fail = rep;
        }
        if (res->reports.size() < keep) res->reports.push_back(std::move(rep));
    }
};

struct SuiteCell {
    std::vector<GroupSpec> specs;
    std::uint64_t checks_per_config = 1;
    std::function<void(const std::vector<VI>&, Recorder&)> run;
};

void evaluate_parallel(const std::vector<SuiteCell>& cells,
                       const std::vector<std::pair<std::size_t, std::vector<VI>>>& configs,
                       int jobs, Recorder& rec) {
    std::vector<SuiteResult> partial(configs.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= configs.size()) break;
            Recorder local{&partial[i], rec.keep};
            cells[configs[i].first].run(configs[i].second, local);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    for (SuiteResult& part : partial) {
        rec.res->total += part.total;
        rec.res->passed += part.passed;
        if (part.first_fail && !rec.res->first_fail) rec.res->first_fail = part.first_fail;
        for (IdentityReport& rep : part.reports) {
            if (rec.res->reports.size() >= rec.keep) break;
            rec.res->reports.push_back(std::move(rep));
        }
    }
}

SuiteResult run_celled_suite(int n_points, Lemma lemma, std::vector<SuiteCell> cells,
                             const SamplingPolicy& policy) {
    SuiteResult res;
    res.lemma = lemma;

    std::erase_if(cells, [&](const SuiteCell& c) {
        return count_group_configs(n_points, c.specs) == 0;
    });
    std::uint64_t count = 0;
    for (const SuiteCell& c : cells) {
        const std::uint64_t cc =
            sat_mul(count_group_configs(n_points, c.specs), c.checks_per_config);
        count = (count > (1ull << 62) - cc) ? (1ull << 62) : count + cc;
    }
    res.config_count = count;
    if (cells.empty() || count == 0) {
        res.no_valid_config = true;
        return res;
    }

    Recorder rec{&res, policy.keep_reports};
    const bool parallel = policy.jobs > 1;
    std::vector<std::pair<std::size_t, std::vector<VI>>> configs;
    if (count <= policy.exhaustive_budget) {
        res.exhaustive = true;
        VI pool(static_cast<std::size_t>(n_points));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<VI> acc;
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            enumerate_groups(pool, cells[ci].specs, 0, acc,
                             [&](const std::vector<VI>& groups) {
                                 if (parallel)
                                     configs.emplace_back(ci, groups);
                                 else
                                     cells[ci].run(groups, rec);
                             });
    } else {
        // Round-robin over the cells keeps every structural case covered
        // deterministically for any fixed seed.
        Rng rng(policy.seed);
        for (std::uint64_t i = 0; i < policy.samples; ++i) {
            const std::size_t ci = static_cast<std::size_t>(i % cells.size());
            std::vector<VI> groups = draw_groups(rng, n_points, cells[ci].specs);
            if (parallel)
                configs.emplace_back(ci, std::move(groups));
            else
                cells[ci].run(groups, rec);
        }
    }
    if (parallel) evaluate_parallel(cells, configs, policy.jobs, rec);
    return res;
}

} // namespace

SuiteResult run_laplace_suite(const Field& f, int max_k, const SamplingPolicy& policy) {
    SuiteResult res;
    res.lemma = Lemma::Laplace;
    if (max_k < 2) {
        res.no_valid_config = true;
        return res;
    }
    res.config_count = policy.samples;
    Recorder rec{&res, policy.keep_reports};
    Rng rng(policy.seed);
    auto random_vek = [&](std::size_t k) {
        Vek v(k);
        for (Fe& c : v) c = Fe{static_cast<std::uint32_t>(rng.below(f.q()))};
        return v;
    };
    for (std::uint64_t s = 0; s < policy.samples; ++s) {
        const std::size_t k = 2 + static_cast<std::size_t>(rng.below(
                                      static_cast<std::uint64_t>(max_k - 1)));
        const std::size_t n = static_cast<std::size_t>(rng.below(k));
        std::vector<Vek> w, x, l;
        for (std::size_t i = 0; i < n + 1; ++i) w.push_back(random_vek(k));
        for (std::size_t i = 0; i < n; ++i) x.push_back(random_vek(k));
        for (std::size_t i = 0; i < k - n - 1; ++i) l.push_back(random_vek(k));
        Vek y;
        if (s % 2 == 1) {
            // Force y into span(X u L): the right side's second factor vanishes.
            y.assign(k, f.zero());
            for (const std::vector<Vek>* grp : {&x, &l})
                for (const Vek& v : *grp) {
                    const Fe c = Fe{static_cast<std::uint32_t>(rng.below(f.q()))};
                    for (std::size_t i = 0; i < k; ++i)
                        y[i] = f.add(y[i], f.mul(c, v[i]));
                }
        } else {
            y = random_vek(k);
        }
        IdentityReport rep = check_laplace(f, w, x, l, y);
        if (s % 2 == 1) rep.note += " degenerate";
        rec.add(std::move(rep));
    }
    return res;
}

SuiteResult run_suite(TangentBundle& tb, Lemma lemma, const SamplingPolicy& policy) {
    const Arc& arc = tb.arc();
    // Workers share the bundle read-only; fill the cache up front.
    if (policy.jobs > 1 && lemma != Lemma::Laplace) tb.prebuild();
    const int n_points = arc.size();
    const int k = arc.k();
    const int t = arc.t();
    const int p = static_cast<int>(arc.field().p());
    std::vector<SuiteCell> cells;

    switch (lemma) {
        case Lemma::Tangents: {
            if (k >= 3 && t >= 1) {
                SuiteCell c;
                c.specs = {{k - 3, false}, {1, false}, {1, false}, {1, false}};
                c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                    rec.add(check_lemma_of_tangents(tb, g[0], g[1][0], g[2][0], g[3][0]));
                };
                cells.push_back(std::move(c));
            }
            break;
        }
        case Lemma::Interpolation: {
            if (k >= 2 && t >= 1) {
                SuiteCell c;
                c.specs = {{k - 2, false}, {t + 2, false}};
                c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                    rec.add(check_interpolation(tb, g[0], g[1]));
                };
                cells.push_back(std::move(c));
            }
            break;
        }
        case Lemma::Signs: {
            for (int nn = 2; nn <= std::min(policy.max_n, k - 1); ++nn) {
                SuiteCell c;
                c.specs = {{k - nn - 1, false}, {nn, true}, {nn, true}};
                c.checks_per_config = 2 * static_cast<std::uint64_t>(nn - 1);
                c.run = [&tb, nn](const std::vector<VI>& g, Recorder& rec) {
                    const SegreQuery q{g[1], g[2], g[0]};
                    for (int pos = 0; pos + 1 < nn; ++pos) {
                        rec.add(check_numerator_swap(tb, q, static_cast<std::size_t>(pos)));
                        rec.add(check_denominator_swap(tb, q, static_cast<std::size_t>(pos)));
                    }
                };
                cells.push_back(std::move(c));
            }
            break;
        }
        case Lemma::Switch: {
            for (int nn = 1; nn <= std::min(policy.max_n, k - 2); ++nn) {
                SuiteCell c;
                c.specs = {{k - 2 - nn, false}, {nn - 1, true}, {nn, true}, {1, false}, {1, false}};
                c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                    rec.add(check_switch(tb, g[0], g[1], g[2], g[3][0], g[4][0]));
                };
                cells.push_back(std::move(c));
            }
            break;
        }
        case Lemma::Main: {
            for (int n = 0; n <= std::min(policy.max_n, t + 1); ++n) {
                const int rmax = std::min({n + p - 1, t + 2, k - 1});
                for (int r = n; r <= rmax; ++r) {
                    SuiteCell c;
                    c.specs = {{n, false}, {r, false}, {k - 1 - r, false}, {t + 1 - n, false}};
                    c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                        rec.add(check_main_lemma(tb, MainLemmaConfig{g[0], g[1], g[2], g[3]}));
                    };
                    cells.push_back(std::move(c));
                }
            }
            break;
        }
        case Lemma::TwoToTheN: {
            if (n_points == static_cast<int>(arc.field().q()) + 2) {
                for (int n = std::max(k - p, 0); n <= std::min(policy.max_n, k - 2); ++n) {
                    for (int m = 0; m <= std::min(n, k - 1); ++m) {
                        SuiteCell c;
                        c.specs = {{n - m, false},
                                   {k - 1 - m, false},
                                   {k - 2 - n, false},
                                   {m, false},
                                   {m, false}};
                        c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                            rec.add(check_twotothen(
                                tb, TwoToTheNConfig{g[0], g[1], g[2], g[3], g[4]}));
                        };
                        cells.push_back(std::move(c));
                    }
                }
            }
            break;
        }
        case Lemma::Laplace:
            return run_laplace_suite(arc.field(), k, policy);
        case Lemma::Appendix: {
            for (int r = 1; r <= std::min({p - 1, t + 2, k - 1}); ++r) {
                SuiteCell c;
                c.specs = {{r, false}, {k - 1 - r, false}, {t + 2, false}};
                c.run = [&tb](const std::vector<VI>& g, Recorder& rec) {
                    rec.add(check_appendix(tb, AppendixConfig{g[0], g[1], g[2]}));
                };
                cells.push_back(std::move(c));
            }
            break;
        }
    }
    return run_celled_suite(n_points, lemma, std::move(cells), policy);
}

} // namespace arclab
