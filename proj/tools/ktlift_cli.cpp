// Command-line driver: decomposition queries, verification sweeps over
// parameter grids, and cache management. Reports are JSON lines on stdout;
// a per-verdict summary goes to stderr.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ktlift/cache.hpp"
#include "ktlift/cohomology.hpp"
#include "ktlift/errors.hpp"

namespace {

using json = nlohmann::json;
using namespace ktlift;

constexpr const char* kVersion = "ktlift/1.0.0";

// ---------------------------------------------------------------- config

struct RunConfig {
    std::vector<int> p{1, 2};
    std::vector<int> n{2, 3, 4, 5, 6};
    std::vector<int> m{2, 3, 4, 5, 6};
    std::vector<int> r{0, 1, 2, 3};
    std::vector<int> rprime{0, 1, 2, 3, 4};
    std::vector<int> t{0, 1, 2};
    int mu_size = 2;
    int mu_depth = 2;
    int cutoff = 3;
    int jobs = 1;
    std::string cache_path;
    std::string output;
};

std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty range: " + s);
    return out;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read config file " + path);
    json j = json::parse(in);
    auto range = [&](const char* key, std::vector<int>& dst) {
        if (!j.contains(key)) return;
        if (j[key].is_string())
            dst = parse_range(j[key].get<std::string>());
        else
            dst = j[key].get<std::vector<int>>();
    };
    range("p", cfg.p);
    range("n", cfg.n);
    range("m", cfg.m);
    range("r", cfg.r);
    range("rprime", cfg.rprime);
    range("t", cfg.t);
    if (j.contains("mu_size")) cfg.mu_size = j["mu_size"].get<int>();
    if (j.contains("mu_depth")) cfg.mu_depth = j["mu_depth"].get<int>();
    if (j.contains("cutoff")) cfg.cutoff = j["cutoff"].get<int>();
    if (j.contains("jobs")) cfg.jobs = j["jobs"].get<int>();
    if (j.contains("cache")) cfg.cache_path = j["cache"].get<std::string>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
}

// ---------------------------------------------------------------- records

const char* verdict_word(Verdict v) {
    switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Vanish: return "VANISH_MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Skipped: return "SKIPPED";
    }
    return "SKIPPED";
}

json record_from_report(const GammaReport& rep, json params) {
    json rec;
    rec["check"] = rep.check;
    rec["params"] = std::move(params);
    rec["verdict"] = verdict_word(rep.verdict);
    rec["reason"] = rep.reason;
    rec["diff"] = rep.diff;
    rec["cutoff"] = rep.cutoff;
    rec["version"] = kVersion;
    if (!rep.candidate.empty()) rec["candidate"] = rep.candidate;
    if (rep.degree >= 0) rec["degree"] = rep.degree;
    if (rep.hom_dim >= 0) rec["hom_dim"] = rep.hom_dim;
    return rec;
}

json simple_record(const std::string& check, json params,
                   const std::string& verdict, const std::string& reason,
                   std::vector<std::string> diff, int cutoff) {
    json rec;
    rec["check"] = check;
    rec["params"] = std::move(params);
    rec["verdict"] = verdict;
    rec["reason"] = reason;
    rec["diff"] = diff;
    rec["cutoff"] = cutoff;
    rec["version"] = kVersion;
    return rec;
}

bool guard_error(const Error& e) {
    switch (e.kind()) {
    case ErrKind::OutsideStableCombinatorics:
    case ErrKind::InvalidParams:
    case ErrKind::InvalidRank:
    case ErrKind::NotDominant:
    case ErrKind::NotInPattern:
        return true;
    default:
        return false;
    }
}

// ---------------------------------------------------------------- runner

using Task = std::function<json()>;

int run_tasks(const std::vector<Task>& tasks, const RunConfig& cfg,
              const std::string& suite) {
    std::vector<json> results(tasks.size());
    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        int jobs = std::min<int>(cfg.jobs, static_cast<int>(tasks.size()));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << "cannot open output file " << cfg.output << "\n";
            return 2;
        }
        out = &file;
    }
    std::map<std::string, int> counts;
    for (const auto& rec : results) {
        *out << rec.dump() << "\n";
        counts[rec["verdict"].get<std::string>()]++;
    }
    std::cerr << "suite=" << suite;
    for (const char* v : {"MATCH", "VANISH_MATCH", "MISMATCH", "SKIPPED"})
        std::cerr << " " << v << "=" << counts[v];
    std::cerr << "\n";
    return counts["MISMATCH"] > 0 ? 1 : 0;
}

/// Wraps a grid-point computation: fills elapsed_ms, maps stray guard
/// errors to SKIPPED.
Task make_task(std::function<json()> body) {
    return [body = std::move(body)]() {
        auto start = std::chrono::steady_clock::now();
        json rec;
        try {
            rec = body();
        } catch (const Error& e) {
            rec = simple_record("error", json::object(),
                                guard_error(e) ? "SKIPPED" : "MISMATCH",
                                e.what(), {}, 0);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        rec["elapsed_ms"] = ms;
        return rec;
    };
}

std::vector<Part> mu_grid(const RunConfig& cfg, int extra_depth_cap = -1) {
    int depth = cfg.mu_depth;
    if (extra_depth_cap >= 0) depth = std::min(depth, extra_depth_cap);
    return partitions_up_to(cfg.mu_size, depth);
}

// ---------------------------------------------------------------- suites

std::vector<Task> build_thm11(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int m : cfg.m) {
                if ((n + m) % 2 != 0) continue;
                for (int r : cfg.r) {
                    if (r < 0 || r > m) continue;
                    json params = {{"p", p}, {"n", n}, {"m", m}, {"r", r}};
                    int cutoff = cfg.cutoff;
                    tasks.push_back(make_task([=]() {
                        return record_from_report(
                            verify_thm11(p, n, m, r, cutoff), params);
                    }));
                }
            }
    return tasks;
}

std::vector<Task> build_prop32(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int r : cfg.r)
                for (int rp : cfg.rprime) {
                    int m = r + rp;
                    if ((n + m) % 2 != 0) continue;
                    for (const Part& mu :
                         mu_grid(cfg, std::min(p, rp / 2))) {
                        json params = {{"p", p},
                                       {"n", n},
                                       {"r", r},
                                       {"rprime", rp},
                                       {"mu", part_to_string(mu)}};
                        int cutoff = cfg.cutoff;
                        tasks.push_back(make_task([=]() {
                            OLabel lab = OLabel::make(rp, mu, 0);
                            return record_from_report(
                                verify_prop32(p, n, r, rp, lab, cutoff),
                                params);
                        }));
                    }
                }
    return tasks;
}

std::vector<Task> build_thm12(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int r : cfg.r)
                for (int rp : cfg.rprime) {
                    int m = r + rp;
                    if ((n + m) % 2 != 0) continue;
                    for (int t : cfg.t) {
                        if (t < 0 || t > r) continue;
                        for (const Part& mu :
                             mu_grid(cfg, std::min(p, rp / 2))) {
                            json params = {{"p", p},       {"n", n},
                                           {"r", r},       {"rprime", rp},
                                           {"t", t},
                                           {"mu", part_to_string(mu)}};
                            int cutoff = cfg.cutoff;
                            tasks.push_back(make_task([=]() {
                                OLabel lab = OLabel::make(rp, mu, 0);
                                return record_from_report(
                                    verify_thm12(p, n, r, rp, t, lab,
                                                 cutoff),
                                    params);
                            }));
                        }
                    }
                }
    return tasks;
}

std::vector<Task> build_thm14(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int m : cfg.m) {
                if ((n + m) % 2 != 0) continue;
                for (int r : cfg.r) {
                    if (r < 0 || r > m) continue;
                    for (const Part& mu : mu_grid(cfg)) {
                        json params = {{"p", p},
                                       {"n", n},
                                       {"r", r},
                                       {"m", m},
                                       {"mu", part_to_string(mu)}};
                        int cutoff = cfg.cutoff;
                        tasks.push_back(make_task([=]() {
                            return record_from_report(
                                verify_thm14(p, n, r, m, mu, cutoff),
                                params);
                        }));
                    }
                }
            }
    return tasks;
}

std::vector<Task> build_lemma41(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int m : cfg.m) {
                if ((n + m) % 2 != 0) continue;
                for (int r : cfg.r) {
                    if (r < 0 || r > m) continue;
                    for (const Part& mu : mu_grid(cfg, cfg.mu_depth)) {
                        if (part_depth(mu) > p) continue;
                        json params = {{"p", p},
                                       {"n", n},
                                       {"r", r},
                                       {"m", m},
                                       {"mu", part_to_string(mu)}};
                        int cutoff = cfg.cutoff;
                        tasks.push_back(make_task([=]() {
                            return record_from_report(
                                verify_lemma41(p, n, r, m, mu, cutoff),
                                params);
                        }));
                    }
                }
            }
    return tasks;
}

std::vector<Task> build_lemma31(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int r : cfg.r)
                for (int rp : cfg.rprime) {
                    int m = r + rp;
                    if ((n + m) % 2 != 0) continue;
                    for (const Part& mu :
                         mu_grid(cfg, std::min(p, rp / 2))) {
                        json params = {{"p", p},
                                       {"n", n},
                                       {"r", r},
                                       {"rprime", rp},
                                       {"mu", part_to_string(mu)}};
                        int cutoff = cfg.cutoff;
                        tasks.push_back(make_task([=]() {
                            try {
                                OLabel lab = OLabel::make(rp, mu, 0);
                                auto [chi, regular] =
                                    infchar_theta_lift(p, n, r, rp, lab);
                                if (rp < 2 * p) {
                                    return simple_record(
                                        "lemma31", params,
                                        regular ? "MISMATCH" : "MATCH",
                                        regular
                                            ? "expected singular character " +
                                                  chi.to_string()
                                            : "singular as asserted",
                                        {}, cutoff);
                                }
                                try {
                                    xi(lab, p, n, r);
                                } catch (const Error& e) {
                                    if (e.kind() == ErrKind::NotDominant)
                                        return simple_record(
                                            "lemma31", params, "SKIPPED",
                                            "xi(mu) not dominant; "
                                            "regularity not asserted",
                                            {}, cutoff);
                                    throw;
                                }
                                return simple_record(
                                    "lemma31", params,
                                    regular ? "MATCH" : "MISMATCH",
                                    regular ? "regular as asserted"
                                            : "expected regular character " +
                                                  chi.to_string(),
                                    {}, cutoff);
                            } catch (const Error& e) {
                                if (!guard_error(e)) throw;
                                return simple_record("lemma31", params,
                                                     "SKIPPED", e.what(), {},
                                                     cutoff);
                            }
                        }));
                    }
                }
    return tasks;
}

std::vector<Task> build_infchar_corr(const RunConfig& cfg) {
    std::vector<Task> tasks;
    for (int p : cfg.p)
        for (int n : cfg.n)
            for (int r : cfg.r)
                for (int rp : cfg.rprime) {
                    if (rp < 2) continue; // source algebra needs rank >= 1
                    int m = r + rp;
                    if ((n + m) % 2 != 0) continue;
                    for (const Part& mu :
                         mu_grid(cfg, std::min(p, rp / 2))) {
                        json params = {{"p", p},
                                       {"n", n},
                                       {"r", r},
                                       {"rprime", rp},
                                       {"mu", part_to_string(mu)}};
                        int cutoff = cfg.cutoff;
                        tasks.push_back(make_task([=]() {
                            try {
                                OLabel lab = OLabel::make(rp, mu, 0);
                                InfChar direct =
                                    infchar_theta_lift(p, n, r, rp, lab)
                                        .first;
                                InfChar corr = thm11_infchar_corr(
                                    infchar_of(lab), rp, n + r, p);
                                bool ok = direct == corr;
                                std::vector<std::string> diff;
                                if (!ok)
                                    diff.push_back(direct.to_string() +
                                                   " vs " + corr.to_string());
                                return simple_record(
                                    "infchar_corr", params,
                                    ok ? "MATCH" : "MISMATCH",
                                    ok ? "characters agree"
                                       : "characters differ",
                                    diff, cutoff);
                            } catch (const Error& e) {
                                if (!guard_error(e)) throw;
                                return simple_record("infchar_corr", params,
                                                     "SKIPPED", e.what(), {},
                                                     cutoff);
                            }
                        }));
                    }
                }
    return tasks;
}

std::vector<Task> build_numerology(const RunConfig& cfg) {
    std::vector<Task> tasks;
    int r = cfg.r.front();
    int m = cfg.m.front();
    for (int p : cfg.p)
        for (int n : cfg.n) {
            if (2 * p > n) continue;
            json params = {{"p", p}, {"n", n}, {"r", r}, {"m", m}};
            tasks.push_back(make_task([=]() {
                AqData d = aq_numerology(p, n, r, m);
                bool ok = d.s0 + d.s1 == d.s0prime &&
                          d.s0 == p * (n - 2 * p) + p * (p - 1) / 2 &&
                          d.s0prime == p * (n - p - 1);
                std::vector<std::string> diff;
                if (!ok)
                    diff.push_back("s0=" + std::to_string(d.s0) +
                                   " s1=" + std::to_string(d.s1) +
                                   " s0prime=" + std::to_string(d.s0prime));
                return simple_record("numerology", params,
                                     ok ? "MATCH" : "MISMATCH",
                                     ok ? "s0 + s1 = s0prime" : "identity fails",
                                     diff, 0);
            }));
        }
    return tasks;
}

std::vector<Task> build_oracles(const RunConfig& cfg) {
    std::vector<Task> tasks;
    auto add = [&](const std::string& name, std::function<void(std::vector<std::string>&, int&)> body) {
        tasks.push_back(make_task([=]() {
            std::vector<std::string> failures;
            int cases = 0;
            body(failures, cases);
            return simple_record(
                "oracle_" + name, {{"cases", cases}},
                failures.empty() ? "MATCH" : "MISMATCH",
                failures.empty() ? std::to_string(cases) + " cases conserved"
                                 : "conservation failures",
                failures, cfg.cutoff);
        }));
    };

    add("lr_symmetry", [](std::vector<std::string>& bad, int& cases) {
        for (const Part& lam : partitions_up_to(5, 5))
            for (const Part& mu : partitions_up_to(part_size(lam), 5)) {
                if (!contains(lam, mu)) continue;
                for (const Part& nu :
                     partitions_of(part_size(lam) - part_size(mu), 5)) {
                    ++cases;
                    if (lr_coeff(lam, mu, nu) != lr_coeff(lam, nu, mu))
                        bad.push_back(part_to_string(lam) + "/" +
                                      part_to_string(mu));
                }
            }
    });

    add("littlewood_restrict_dim",
        [&](std::vector<std::string>& bad, int& cases) {
            for (int n : cfg.n)
                for (const Part& lam : partitions_up_to(5, n)) {
                    try {
                        KTypeSum res = littlewood_restrict(lam, n);
                        ++cases;
                        if (res.total_dim() != gl_dim(lam, n))
                            bad.push_back("n=" + std::to_string(n) + " " +
                                          part_to_string(lam));
                    } catch (const Error&) {
                    }
                }
        });

    add("newell_littlewood_dim",
        [&](std::vector<std::string>& bad, int& cases) {
            for (int n : cfg.n)
                for (const Part& a : partitions_up_to(3, n / 2))
                    for (const Part& b : partitions_up_to(3, n / 2))
                        for (int ea : {0, 1})
                            for (int eb : {0, 1}) {
                                try {
                                    OLabel la = OLabel::make(n, a, ea);
                                    OLabel lb = OLabel::make(n, b, eb);
                                    if (la.eps != ea || lb.eps != eb)
                                        continue;
                                    KTypeSum prod =
                                        newell_littlewood(la, lb);
                                    ++cases;
                                    if (prod.total_dim() !=
                                        o_dim(la) * o_dim(lb))
                                        bad.push_back(
                                            "n=" + std::to_string(n) + " " +
                                            la.to_string() + " x " +
                                            lb.to_string());
                                } catch (const Error&) {
                                }
                            }
        });

    add("stable_o_branch_dim",
        [&](std::vector<std::string>& bad, int& cases) {
            for (int n : cfg.n)
                for (int a = 0; a <= n; ++a)
                    for (const Part& lam : partitions_up_to(4, n / 2)) {
                        try {
                            OLabel x = OLabel::make(n, lam, 0);
                            KTypeSum dec = stable_o_branch(x, a, n - a);
                            ++cases;
                            if (dec.total_dim() != o_dim(x))
                                bad.push_back("O(" + std::to_string(n) +
                                              ")->" + std::to_string(a) +
                                              "+" + std::to_string(n - a) +
                                              " " + part_to_string(lam));
                        } catch (const Error&) {
                        }
                    }
        });

    add("branch_one_step_dim",
        [&](std::vector<std::string>& bad, int& cases) {
            for (int n : cfg.n) {
                if (n < 2) continue;
                for (const Part& lam : partitions_up_to(3, n / 2))
                    for (int eps : {0, 1}) {
                        OLabel x = OLabel::make(n, lam, eps);
                        if (x.eps != eps) continue;
                        ++cases;
                        std::int64_t sum = 0;
                        for (const OLabel& y : branch_one_step(x))
                            sum += o_dim(y);
                        if (sum != o_dim(x))
                            bad.push_back(x.to_string() + " over O(" +
                                          std::to_string(n) + ")");
                    }
            }
        });

    add("skew_cauchy_dim", [](std::vector<std::string>& bad, int& cases) {
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                for (int N = 0; N <= p * q; ++N) {
                    ++cases;
                    std::int64_t sum = 0;
                    for (const auto& [nu, nuc] : skew_cauchy(N, p, q))
                        sum += gl_dim(nu, p) * gl_dim(nuc, q);
                    if (sum != binomial(p * q, N))
                        bad.push_back("p=" + std::to_string(p) +
                                      " q=" + std::to_string(q) +
                                      " N=" + std::to_string(N));
                }
    });

    return tasks;
}

// ---------------------------------------------------------------- queries

std::pair<int, int> parse_group_pair(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos || s.empty() || s[0] != 'O' ||
        s.find('O', x) == std::string::npos)
        throw CLI::ValidationError("expected a group pair like O3xO3: " + s);
    return {std::stoi(s.substr(1, x - 1)), std::stoi(s.substr(x + 2))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact K-type combinatorics for orthogonal theta lifts"};
    app.require_subcommand(1);

    std::string cache_flag;
    app.add_option("--cache", cache_flag, "LR cache file path");

    bool as_json = false;

    // branch
    auto* cmd_branch = app.add_subcommand(
        "branch", "Restrict an O(n)-irreducible to O(n-1) or to O(a) x O(b)");
    std::string br_from, br_to, br_label;
    cmd_branch->add_option("--from", br_from, "source group, e.g. O6")
        ->required();
    cmd_branch->add_option("--to", br_to,
                           "target: Ok for one-step interlacing, OaxOb for "
                           "the stable two-factor branching")
        ->required();
    cmd_branch->add_option("--label", br_label, "label, e.g. \"[2,1]\" or \"d*[2]\"")
        ->required();
    cmd_branch->add_flag("--json", as_json, "machine-readable output");

    // lr
    auto* cmd_lr =
        app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    std::string lr_lam, lr_mu, lr_nu;
    cmd_lr->add_option("--lam", lr_lam)->required();
    cmd_lr->add_option("--mu", lr_mu)->required();
    cmd_lr->add_option("--nu", lr_nu)->required();

    // theta
    auto* cmd_theta = app.add_subcommand(
        "theta",
        "K-types of the theta lift of the trivial character; the index runs "
        "over l_p >= max((n-m)/2, 0) (lower bound flagged in the README)");
    int th_p = 1, th_n = 2, th_m = 4, th_cutoff = 2;
    cmd_theta->add_option("--p", th_p)->required();
    cmd_theta->add_option("--n", th_n)->required();
    cmd_theta->add_option("--m", th_m)->required();
    cmd_theta->add_option("--cutoff", th_cutoff);
    cmd_theta->add_flag("--json", as_json);

    // omega
    auto* cmd_omega = app.add_subcommand(
        "omega", "K-types of the lift of L(mu) to O(n) x O(r)");
    int om_p = 1, om_n = 2, om_r = 2, om_rprime = 2, om_cutoff = 2;
    std::string om_mu = "[]";
    cmd_omega->add_option("--p", om_p)->required();
    cmd_omega->add_option("--n", om_n)->required();
    cmd_omega->add_option("--r", om_r)->required();
    cmd_omega->add_option("--rprime", om_rprime)->required();
    cmd_omega->add_option("--mu", om_mu, "O(rprime)-label");
    cmd_omega->add_option("--cutoff", om_cutoff);
    cmd_omega->add_flag("--json", as_json);

    // cache
    auto* cmd_cache = app.add_subcommand("cache", "cache management");
    auto* cache_stats = cmd_cache->add_subcommand("stats", "print cache stats");
    auto* cache_clear = cmd_cache->add_subcommand("clear", "delete the cache");
    cmd_cache->require_subcommand(1);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    cmd_verify
        ->add_option("suite", suite,
                     "one of prop32, thm11, thm12, thm14, lemma31, lemma41, "
                     "infchar_corr, numerology, oracles")
        ->required();
    std::string v_p, v_n, v_m, v_r, v_rprime, v_t, v_config;
    RunConfig cfg;
    cmd_verify->add_option("--p", v_p, "range, e.g. 1..2 or 1,3");
    cmd_verify->add_option("--n", v_n, "range");
    cmd_verify->add_option("--m", v_m, "range");
    cmd_verify->add_option("--r", v_r, "range");
    cmd_verify->add_option("--rprime", v_rprime, "range");
    cmd_verify->add_option("--t", v_t, "range");
    int v_mu_size = -1, v_mu_depth = -1, v_cutoff = -1, v_jobs = -1;
    cmd_verify->add_option("--mu-size", v_mu_size);
    cmd_verify->add_option("--mu-depth", v_mu_depth);
    cmd_verify->add_option("--cutoff", v_cutoff);
    cmd_verify->add_option("--jobs", v_jobs, "worker threads");
    cmd_verify->add_option("--config", v_config, "JSON config file");
    cmd_verify->add_option("--output", cfg.output, "report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cache_path =
        cache_flag.empty() ? lr_cache::default_path() : cache_flag;

    try {
        if (cmd_cache->parsed()) {
            if (cache_stats->parsed()) {
                lr_cache::load(cache_path);
                json j = {{"path", cache_path},
                          {"entries", lr_cache::size()},
                          {"version", lr_cache::kFileVersion}};
                std::cout << j.dump() << "\n";
            } else if (cache_clear->parsed()) {
                lr_cache::clear_memory();
                std::error_code ec;
                std::filesystem::remove(cache_path, ec);
                std::cout << "cleared " << cache_path << "\n";
            }
            return 0;
        }

        lr_cache::load(cache_path);
        int exit_code = 0;

        if (cmd_lr->parsed()) {
            std::int64_t c =
                lr_coeff(part_from_string(lr_lam), part_from_string(lr_mu),
                         part_from_string(lr_nu));
            std::cout << c << "\n";
        } else if (cmd_branch->parsed()) {
            if (br_from.empty() || br_from[0] != 'O')
                throw Error(ErrKind::InvalidParams, "expected --from Ok");
            int n = std::stoi(br_from.substr(1));
            OLabel x = olabel_from_string(br_label, n);
            if (br_to.find('x') != std::string::npos) {
                auto [a, b] = parse_group_pair(br_to);
                if (a + b != n)
                    throw Error(ErrKind::InvalidParams,
                                "target ranks must sum to the source rank");
                KTypeSum dec = stable_o_branch(x, a, b);
                if (x.eps) dec = dec.twist_slot(0).twist_slot(1);
                std::cout << (as_json ? json(dec.to_string()).dump()
                                      : dec.to_string())
                          << "\n";
            } else {
                int k = std::stoi(br_to.substr(1));
                if (k != n - 1)
                    throw Error(ErrKind::InvalidParams,
                                "one-step branching targets O(n-1)");
                std::ostringstream os;
                bool first = true;
                for (const OLabel& y : branch_one_step(x)) {
                    if (!first) os << " + ";
                    first = false;
                    os << y.to_string();
                }
                std::cout << (as_json ? json(os.str()).dump() : os.str())
                          << "\n";
            }
        } else if (cmd_theta->parsed()) {
            KTypeSum s = theta_ktypes_extended({th_p, th_n, th_m}, th_cutoff);
            std::cout << (as_json ? json(s.to_string()).dump() : s.to_string())
                      << "\n";
        } else if (cmd_omega->parsed()) {
            OLabel mu = olabel_from_string(om_mu, om_rprime);
            KTypeSum s =
                omega_ktypes(om_p, om_n, om_r, om_rprime, mu, om_cutoff);
            std::cout << (as_json ? json(s.to_string()).dump() : s.to_string())
                      << "\n";
        } else if (cmd_verify->parsed()) {
            if (!v_config.empty()) apply_config_file(cfg, v_config);
            if (!v_p.empty()) cfg.p = parse_range(v_p);
            if (!v_n.empty()) cfg.n = parse_range(v_n);
            if (!v_m.empty()) cfg.m = parse_range(v_m);
            if (!v_r.empty()) cfg.r = parse_range(v_r);
            if (!v_rprime.empty()) cfg.rprime = parse_range(v_rprime);
            if (!v_t.empty()) cfg.t = parse_range(v_t);
            if (v_mu_size >= 0) cfg.mu_size = v_mu_size;
            if (v_mu_depth >= 0) cfg.mu_depth = v_mu_depth;
            if (v_cutoff >= 0) cfg.cutoff = v_cutoff;
            if (v_jobs >= 0) cfg.jobs = v_jobs;
            if (cfg.cutoff < 1)
                throw CLI::ValidationError("cutoff must be >= 1");

            std::vector<Task> tasks;
            if (suite == "thm11") tasks = build_thm11(cfg);
            else if (suite == "prop32") tasks = build_prop32(cfg);
            else if (suite == "thm12") tasks = build_thm12(cfg);
            else if (suite == "thm14") tasks = build_thm14(cfg);
            else if (suite == "lemma31") tasks = build_lemma31(cfg);
            else if (suite == "lemma41") tasks = build_lemma41(cfg);
            else if (suite == "infchar_corr") tasks = build_infchar_corr(cfg);
            else if (suite == "numerology") tasks = build_numerology(cfg);
            else if (suite == "oracles") tasks = build_oracles(cfg);
            else {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            exit_code = run_tasks(tasks, cfg, suite);
        }

        lr_cache::save(cache_path);
        return exit_code;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
