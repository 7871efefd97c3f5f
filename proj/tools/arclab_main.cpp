// arclab: exact computations with arcs in F_q^k. Subcommands cover field
// inspection, arc construction, MDS checking, tangent censuses, identity
// verification, exhaustive search, duality, and canned suites.
//
// Exit codes: 0 pass, 1 verification or data failure, 2 usage error,
// 3 node budget exhausted.
#include "arclab/arc.hpp"
#include "arclab/combi.hpp"
#include "arclab/identity.hpp"
#include "arclab/io.hpp"
#include "arclab/search.hpp"
#include "arclab/tangent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace arclab;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

json points_json(const std::vector<Vek>& pts) {
    json rows = json::array();
    for (const Vek& v : pts) {
        json row = json::array();
        for (const Fe& c : v) row.push_back(c.code);
        rows.push_back(std::move(row));
    }
    return rows;
}

json form_json(const LinearForm& form) {
    json row = json::array();
    for (const Fe& c : form.coeffs) row.push_back(c.code);
    return row;
}

std::string join_codes(const Vek& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i].code);
    }
    return s;
}

std::string config_string(const IdentityReport& rep) {
    std::string s;
    for (const auto& [name, idx] : rep.config) {
        if (!s.empty()) s += ' ';
        s += name + "=(";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(idx[static_cast<std::size_t>(i)]);
        }
        s += ')';
    }
    return s;
}

json report_json(const IdentityReport& rep) {
    json cfg = json::object();
    for (const auto& [name, idx] : rep.config) cfg[name] = idx;
    json j{{"lemma", rep.lemma},
           {"config", std::move(cfg)},
           {"lhs", rep.lhs.code},
           {"rhs", rep.rhs.code},
           {"pass", rep.pass}};
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

void emit_arc(const Field& f, int k, const std::vector<Vek>& pts, const std::string& out_path,
              bool as_json) {
    std::ostringstream buf;
    if (as_json)
        save_arc_json(buf, f, k, pts);
    else
        save_arc_text(buf, f, k, pts);
    if (out_path.empty()) {
        std::cout << buf.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << buf.str();
    }
}

struct VerifyArgs {
    std::string arc_path;
    std::uint32_t p = 0, h = 1;
    int max_k = 4;
    std::string lemma;
    bool exhaustive = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;
    int max_n = 2;
    int jobs = 1;
    std::size_t keep_reports = static_cast<std::size_t>(-1);
    bool json_out = false;
};

int run_verify(const VerifyArgs& args) {
    const auto lemma = lemma_from_name(args.lemma);
    if (!lemma) throw CLI::ValidationError("--lemma", "unknown lemma tag " + args.lemma);

    SamplingPolicy policy;
    policy.seed = args.seed;
    policy.max_n = args.max_n;
    policy.jobs = args.jobs;
    policy.keep_reports = args.keep_reports;
    if (args.budget) policy.exhaustive_budget = args.budget;
    if (args.exhaustive) policy.exhaustive_budget = UINT64_MAX;
    if (args.samples) {
        policy.samples = args.samples;
        policy.exhaustive_budget = 0;
    }

    SuiteResult res;
    std::string subject;
    std::optional<Arc> arc;
    if (!args.arc_path.empty()) {
        arc.emplace(to_arc(load_arc_file(args.arc_path)));
        TangentBundle tb(*arc);
        res = run_suite(tb, *lemma, policy);
        subject = args.arc_path;
    } else if (*lemma == Lemma::Laplace) {
        if (args.p == 0) throw CLI::ValidationError("--p", "laplace without --arc needs a field");
        const Field f = Field::make(args.p, args.h);
        res = run_laplace_suite(f, args.max_k, policy);
        subject = "GF(" + std::to_string(f.q()) + ") k<=" + std::to_string(args.max_k);
    } else {
        throw CLI::ValidationError("--arc", "this lemma verifies against an arc file");
    }

    const char* mode = res.no_valid_config ? "none" : (res.exhaustive ? "exhaustive" : "sampled");
    if (args.json_out) {
        json reports = json::array();
        for (const IdentityReport& rep : res.reports) reports.push_back(report_json(rep));
        json out{{"lemma", std::string(lemma_name(res.lemma))},
                 {"subject", subject},
                 {"mode", mode},
                 {"seed", policy.seed},
                 {"config_count", res.config_count},
                 {"total", res.total},
                 {"passed", res.passed},
                 {"no_valid_config", res.no_valid_config},
                 {"first_fail", res.first_fail ? report_json(*res.first_fail) : json(nullptr)},
                 {"reports", std::move(reports)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "lemma=" << lemma_name(res.lemma) << " subject=" << subject
                  << " mode=" << mode << " seed=" << policy.seed
                  << " configs=" << res.config_count << '\n';
        json reports = json::array();
        for (const IdentityReport& rep : res.reports) reports.push_back(report_json(rep));
        std::cout << reports.dump(2) << '\n';
        if (res.no_valid_config) {
            std::cout << "NO VALID CONFIG\n";
        } else if (res.all_pass()) {
            std::cout << "PASS " << res.passed << '/' << res.total << '\n';
        } else {
            std::cout << "FAIL " << (res.total - res.passed) << '/' << res.total;
            if (res.first_fail)
                std::cout << " (first counterexample: " << config_string(*res.first_fail)
                          << " lhs=" << res.first_fail->lhs.code
                          << " rhs=" << res.first_fail->rhs.code << ')';
            std::cout << '\n';
        }
    }
    return res.no_valid_config || res.all_pass() ? kExitPass : kExitFail;
}

Arc construct_named(const std::string& type, const Field& f, int k) {
    if (type == "nrc") return nrc(f, k);
    if (type == "hyperoval") return hyperoval(f);
    return bush_frame(f, k);
}

struct SuiteItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

int run_profile(const std::string& profile, bool json_out) {
    std::vector<SuiteItem> items;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        items.push_back({name, pass, detail});
        if (!json_out)
            std::cout << (pass ? "[ok]   " : "[FAIL] ") << name << ": " << detail << '\n';
    };
    auto suite_detail = [](const SuiteResult& r) {
        std::ostringstream os;
        os << (r.exhaustive ? "exhaustive " : "sampled ") << r.passed << '/' << r.total;
        return os.str();
    };

    {
        bool ok = true;
        for (std::uint32_t q : {8u, 9u}) {
            const Field f = (q == 8) ? Field::make(2, 3) : Field::make(3, 2);
            for (std::uint32_t c = 1; c < f.q(); ++c)
                ok = ok && f.mul(f.element(c), f.inv(f.element(c))) == f.one();
        }
        add("field-inverses", ok, "GF(8), GF(9)");
    }
    // Every identity suite over the normal rational curves of GF(5), GF(7),
    // GF(8) at k = 3, plus random Laplace instances on each field.
    for (const auto& [pp, hh] : {std::pair{5u, 1u}, {7u, 1u}, {2u, 3u}}) {
        const Field f = Field::make(pp, hh);
        const Arc a = nrc(f, 3);
        TangentBundle tb(a);
        const std::string tag = "nrc-q" + std::to_string(f.q()) + "k3-";
        for (Lemma lm : {Lemma::Tangents, Lemma::Interpolation, Lemma::Signs, Lemma::Switch,
                         Lemma::Main, Lemma::TwoToTheN, Lemma::Appendix}) {
            SamplingPolicy pol;
            pol.keep_reports = 0;
            const SuiteResult r = run_suite(tb, lm, pol);
            const bool ok = r.all_pass() || r.no_valid_config;
            add(tag + std::string(lemma_name(lm)), ok,
                r.no_valid_config ? "no valid configuration" : suite_detail(r));
        }
        SamplingPolicy pol;
        pol.samples = 500;
        pol.keep_reports = 0;
        const SuiteResult r = run_laplace_suite(f, 4, pol);
        add("laplace-q" + std::to_string(f.q()), r.all_pass(), suite_detail(r));
    }
    {
        bool ok = true;
        std::string detail;
        const int expected[] = {4, 4, 6, 6};
        const std::pair<std::uint32_t, std::uint32_t> fields[] = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};
        for (int i = 0; i < 4; ++i) {
            const Field f = Field::make(fields[i].first, fields[i].second);
            const SearchResult r = max_arc_size(f, 3);
            ok = ok && r.max_size == expected[i];
            if (!detail.empty()) detail += ' ';
            detail += "q" + std::to_string(f.q()) + "=" + std::to_string(r.max_size);
        }
        add("search-k3-small", ok, detail);
    }
    {
        const Field f7 = Field::make(7, 1);
        const Arc a = nrc(f7, 3);
        const Arc d = dual_arc(a);
        const bool ok = mds_check(d).pass && d.size() == 8 && d.k() == 5;
        add("dual-nrc73", ok, "n=8 k=5 mds");
    }

    if (profile == "full") {
        {
            const Field f9 = Field::make(3, 2);
            const Arc a = nrc(f9, 4);
            TangentBundle tb(a);
            SamplingPolicy pol;
            pol.samples = 500;
            pol.exhaustive_budget = 0;
            pol.keep_reports = 0;
            const SuiteResult r = run_suite(tb, Lemma::Tangents, pol);
            add("tangents-nrc94-sampled", r.all_pass(), suite_detail(r));
        }
        {
            const Field f11 = Field::make(11, 1);
            const Arc a = nrc(f11, 5);
            TangentBundle tb(a);
            SamplingPolicy pol;
            pol.samples = 200;
            pol.exhaustive_budget = 0;
            pol.keep_reports = 0;
            const SuiteResult r = run_suite(tb, Lemma::Main, pol);
            add("main-nrc115-sampled", r.all_pass(), suite_detail(r));
        }
        for (std::uint32_t h : {1u, 2u}) {
            const Field f = Field::make(2, h);
            const Arc hv = hyperoval(f);
            TangentBundle tb(hv);
            SamplingPolicy pol;
            pol.keep_reports = 0;
            const SuiteResult r = run_suite(tb, Lemma::TwoToTheN, pol);
            add("twotothen-hyperoval-gf" + std::to_string(f.q()), r.all_pass(),
                suite_detail(r));
        }
        {
            bool ok = true;
            std::string detail;
            struct Case {
                std::uint32_t p, h;
                int k, expect;
            };
            const Case cases[] = {{7, 1, 3, 8}, {2, 3, 3, 10}, {3, 2, 3, 10},
                                  {3, 1, 4, 5}, {5, 1, 4, 6}, {7, 1, 4, 8}};
            for (const Case& c : cases) {
                const Field f = Field::make(c.p, c.h);
                const SearchResult r = max_arc_size(f, c.k);
                ok = ok && r.max_size == c.expect;
                if (!detail.empty()) detail += ' ';
                detail += "k" + std::to_string(c.k) + "q" + std::to_string(f.q()) + "=" +
                          std::to_string(r.max_size);
            }
            add("search-table", ok, detail);
        }
        {
            bool ok = true;
            for (const auto& [p, h] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
                const Field f = Field::make(p, h);
                SearchOptions naive;
                naive.naive = true;
                ok = ok && max_arc_size(f, 3).max_size == max_arc_size(f, 3, naive).max_size;
            }
            add("search-naive-crosscheck", ok, "k=3 q<=4");
        }
    }

    bool all = true;
    for (const SuiteItem& it : items) all = all && it.pass;
    if (json_out) {
        json arr = json::array();
        for (const SuiteItem& it : items)
            arr.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
        json out{{"profile", profile}, {"pass", all}, {"items", std::move(arr)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (all ? "PASS" : "FAIL") << ' '
                  << std::count_if(items.begin(), items.end(),
                                   [](const SuiteItem& it) { return it.pass; })
                  << '/' << items.size() << '\n';
    }
    return all ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with arcs in finite vector spaces"};
    app.require_subcommand(1);
    // Long help only: --h is taken by the extension-degree option.
    app.set_help_flag("--help", "print help");

    // field
    auto* cmd_field = app.add_subcommand("field", "show field parameters and modulus");
    cmd_field->set_help_flag("--help", "print help");
    std::uint32_t f_p = 0, f_h = 1;
    bool f_json = false;
    cmd_field->add_option("--p", f_p, "characteristic (prime)")->required();
    cmd_field->add_option("--h", f_h, "extension degree");
    cmd_field->add_flag("--json", f_json, "emit one JSON object");

    // construct
    auto* cmd_con = app.add_subcommand("construct", "build a named arc");
    cmd_con->set_help_flag("--help", "print help");
    std::string c_type;
    std::uint32_t c_p = 0, c_h = 1;
    int c_k = 3;
    std::string c_out;
    bool c_json = false;
    cmd_con->add_option("type", c_type, "nrc | hyperoval | frame")
        ->required()
        ->check(CLI::IsMember({"nrc", "hyperoval", "frame"}));
    cmd_con->add_option("--p", c_p, "characteristic (prime)")->required();
    cmd_con->add_option("--h", c_h, "extension degree");
    cmd_con->add_option("--k", c_k, "dimension");
    cmd_con->add_option("-o,--out", c_out, "output file (default stdout)");
    cmd_con->add_flag("--json", c_json, "emit JSON instead of text rows");

    // mds-check
    auto* cmd_mds = app.add_subcommand("mds-check", "test the arc property of a point file");
    cmd_mds->set_help_flag("--help", "print help");
    std::string m_file;
    bool m_json = false;
    cmd_mds->add_option("file", m_file, "arc file (text or JSON)")->required();
    cmd_mds->add_flag("--json", m_json, "emit one JSON object");

    // tangents
    auto* cmd_tan = app.add_subcommand("tangents", "tangent forms or full census");
    cmd_tan->set_help_flag("--help", "print help");
    std::string t_file;
    std::vector<int> t_y;
    bool t_json = false;
    cmd_tan->add_option("file", t_file, "arc file (text or JSON)")->required();
    cmd_tan->add_option("--y", t_y, "comma-separated point indices of Y, |Y| = k-2")
        ->delimiter(',');
    cmd_tan->add_flag("--json", t_json, "emit one JSON object");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "check an identity over many configurations");
    cmd_ver->set_help_flag("--help", "print help");
    VerifyArgs v;
    cmd_ver->add_option("--lemma", v.lemma,
                        "tangents | interpolation | signs | switch | main | twotothen | "
                        "laplace | appendix")
        ->required();
    cmd_ver->add_option("--arc", v.arc_path, "arc file the identity is evaluated on");
    cmd_ver->add_option("--p", v.p, "characteristic, laplace without --arc");
    cmd_ver->add_option("--h", v.h, "extension degree");
    cmd_ver->add_option("--k", v.max_k, "max dimension for laplace");
    auto* ex_flag = cmd_ver->add_flag("--exhaustive", v.exhaustive, "force full enumeration");
    cmd_ver->add_option("--samples", v.samples, "force sampling with this many draws")
        ->excludes(ex_flag);
    cmd_ver->add_option("--seed", v.seed, "sampling seed (logged in the output)");
    cmd_ver->add_option("--budget", v.budget, "exhaustive-if-at-most budget");
    cmd_ver->add_option("--max-n", v.max_n, "sequence length cap for signs/switch/main");
    cmd_ver->add_option("--jobs", v.jobs, "parallel width (results are identical)");
    cmd_ver->add_option("--keep-reports", v.keep_reports, "cap on reports in the output");
    cmd_ver->add_flag("--json", v.json_out, "emit one JSON object");

    // search
    auto* cmd_sea = app.add_subcommand("search", "largest arc size by exhaustive search");
    cmd_sea->set_help_flag("--help", "print help");
    std::uint32_t s_p = 0, s_h = 1;
    int s_k = 3, s_jobs = 1;
    std::uint64_t s_budget = 0;
    bool s_naive = false, s_json = false;
    cmd_sea->add_option("--p", s_p, "characteristic (prime)")->required();
    cmd_sea->add_option("--h", s_h, "extension degree");
    cmd_sea->add_option("--k", s_k, "dimension")->required();
    cmd_sea->add_flag("--naive", s_naive, "search without the frame root (slow)");
    cmd_sea->add_option("--budget", s_budget, "node budget per root branch");
    cmd_sea->add_option("--jobs", s_jobs, "worker threads (results are identical)");
    cmd_sea->add_flag("--json", s_json, "emit one JSON object");

    // dual
    auto* cmd_dual = app.add_subcommand("dual", "dual arc of an arc file");
    cmd_dual->set_help_flag("--help", "print help");
    std::string d_file, d_out;
    bool d_json = false;
    cmd_dual->add_option("file", d_file, "arc file (text or JSON)")->required();
    cmd_dual->add_option("-o,--out", d_out, "output file (default stdout)");
    cmd_dual->add_flag("--json", d_json, "emit JSON instead of text rows");

    // suite
    auto* cmd_suite = app.add_subcommand("suite", "canned verification battery");
    cmd_suite->set_help_flag("--help", "print help");
    std::string profile = "quick";
    bool suite_json = false;
    cmd_suite->add_option("--profile", profile, "quick | full")
        ->check(CLI::IsMember({"quick", "full"}));
    cmd_suite->add_flag("--json", suite_json, "emit one JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*cmd_field) {
            const Field f = Field::make(f_p, f_h);
            if (f_json) {
                json mod = json::array();
                for (std::uint32_t c : f.modulus()) mod.push_back(c);
                json out{{"p", f.p()},
                         {"h", f.h()},
                         {"q", f.q()},
                         {"modulus", f.modulus_string()},
                         {"modulus_codes", std::move(mod)}};
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "GF(" << f.q() << "): p=" << f.p() << " h=" << f.h()
                          << " modulus=" << f.modulus_string() << '\n';
            }
            return kExitPass;
        }

        if (*cmd_con) {
            const Field f = Field::make(c_p, c_h);
            const Arc a = construct_named(c_type, f, c_k);
            emit_arc(f, a.k(), a.points(), c_out, c_json);
            return kExitPass;
        }

        if (*cmd_mds) {
            const ArcData data = load_arc_file(m_file);
            const MdsResult r = mds_check(data.field, data.k, data.points);
            if (m_json) {
                json out{{"mds", r.pass},
                         {"n", data.points.size()},
                         {"k", data.k},
                         {"q", data.field.q()},
                         {"witness", r.witness}};
                std::cout << out.dump(2) << '\n';
            } else if (r.pass) {
                std::cout << "MDS: yes (n=" << data.points.size() << " k=" << data.k
                          << " q=" << data.field.q() << ")\n";
            } else {
                std::cout << "MDS: no, dependent k-subset at indices";
                for (int i : r.witness) std::cout << ' ' << i;
                std::cout << '\n';
            }
            return r.pass ? kExitPass : kExitFail;
        }

        if (*cmd_tan) {
            const Arc a = to_arc(load_arc_file(t_file));
            if (!cmd_tan->count("--y")) {
                json per_y = json::array();
                for_each_combination(a.size(), a.k() - 2, [&](const std::vector<int>& y) {
                    const TangentCensus cen = secant_tangent_census(a, y);
                    per_y.push_back({{"Y", y}, {"count", cen.tangent_count}});
                });
                json out{{"t", a.t()}, {"per_Y", std::move(per_y)}};
                std::cout << out.dump(2) << '\n';
                return kExitPass;
            }
            const TangentCensus cen = secant_tangent_census(a, t_y);
            if (t_json) {
                json tangents = json::array();
                for (const LinearForm& form : cen.tangents) tangents.push_back(form_json(form));
                json unis = json::array();
                for (const auto& u : cen.unisecants)
                    unis.push_back({{"form", form_json(u.form)}, {"point", u.point}});
                json out{{"Y", t_y},
                         {"t", cen.tangent_count},
                         {"tangents", std::move(tangents)},
                         {"unisecants", std::move(unis)}};
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "t=" << cen.tangent_count << '\n';
                for (const LinearForm& form : cen.tangents)
                    std::cout << "tangent: " << join_codes(form.coeffs) << '\n';
                for (const auto& u : cen.unisecants)
                    std::cout << "unisecant: " << join_codes(u.form.coeffs) << " -> point "
                              << u.point << '\n';
            }
            return kExitPass;
        }

        if (*cmd_ver) return run_verify(v);

        if (*cmd_sea) {
            const Field f = Field::make(s_p, s_h);
            SearchOptions opts;
            opts.naive = s_naive;
            opts.jobs = s_jobs;
            if (s_budget) opts.node_budget = s_budget;
            const SearchResult r = max_arc_size(f, s_k, opts);
            if (s_json) {
                json out{{"max", r.max_size},
                         {"witness", points_json(r.witness)},
                         {"nodes", r.nodes},
                         {"elapsed", r.elapsed_seconds},
                         {"budget_exhausted", r.budget_exhausted},
                         {"jobs", s_jobs},
                         {"naive", s_naive}};
                std::cout << out.dump(2) << '\n';
            } else {
                std::cout << "max=" << r.max_size << '\n';
                for (const Vek& pt : r.witness) std::cout << join_codes(pt) << '\n';
                const json stats{{"nodes", r.nodes}, {"elapsed", r.elapsed_seconds}};
                std::cout << stats.dump() << '\n';
            }
            return r.budget_exhausted ? kExitBudget : kExitPass;
        }

        if (*cmd_dual) {
            const Arc a = to_arc(load_arc_file(d_file));
            const Arc d = dual_arc(a);
            emit_arc(d.field(), d.k(), d.points(), d_out, d_json);
            return kExitPass;
        }

        if (*cmd_suite) return run_profile(profile, suite_json);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
