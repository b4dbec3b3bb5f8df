#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "minpoly/appendix.hpp"
#include "minpoly/criterion.hpp"
#include "minpoly/numth.hpp"
#include "minpoly/serialize.hpp"
#include "minpoly/theorems.hpp"
#include "minpoly/witness.hpp"

namespace {

using namespace minpoly;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;    // mathematically false, not an error
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;    // invariant violation (arithmetic bug)

constexpr long kCacheSchemaVersion = 1;
constexpr const char* kDefaultCachePath = "minpoly_census_cache.jsonl";

std::string cache_path_from_options(const std::string& flag_value)
{
    if (!flag_value.empty())
        return flag_value;
    if (const char* env = std::getenv("MINPOLY_CACHE"); env && *env)
        return env;
    return kDefaultCachePath;
}

// Loads the JSON-lines census cache; any malformed line or schema mismatch
// discards the whole cache so it gets rebuilt.
std::map<long, theorems::CensusRecord> load_cache(const std::string& path, bool& corrupt)
{
    corrupt = false;
    std::map<long, theorems::CensusRecord> entries;
    std::ifstream in(path);
    if (!in)
        return entries;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        try {
            const json j = json::parse(line);
            if (j.at("schema_version").get<long>() != kCacheSchemaVersion)
                throw std::runtime_error("schema version mismatch");
            const long n = j.at("N").get<long>();
            entries[n] = serialize::census_record_from_json(j.at("record"));
            if (entries[n].N != n)
                throw std::runtime_error("key/record mismatch");
        } catch (const std::exception& e) {
            std::cerr << "warning: census cache " << path
                      << " is corrupt (" << e.what() << "); rebuilding\n";
            corrupt = true;
            return {};
        }
    }
    return entries;
}

void save_cache(const std::string& path, const std::map<long, theorems::CensusRecord>& entries)
{
    std::ofstream out(path, std::ios::trunc);
    for (const auto& [n, record] : entries) {
        json j{{"schema_version", kCacheSchemaVersion},
               {"N", n},
               {"record", serialize::census_record_to_json(record)}};
        out << j.dump() << '\n';
    }
}

void print_report_text(const criterion::CriterionReport& r)
{
    std::cout << "N=" << r.query.N << " a=" << r.query.a << " b=" << r.query.b
              << " -> " << (r.holds ? "holds" : "fails") << '\n';
    if (r.gcd_value)
        std::cout << "gcd{c_n} = " << r.gcd_value->get_str() << '\n';
    std::cout << "p\trequired\tn_p\tachieved\n";
    for (const auto& check : r.per_prime) {
        std::cout << check.p << '\t' << check.required << '\t';
        if (check.n_p)
            std::cout << *check.n_p;
        else
            std::cout << '-';
        std::cout << '\t' << check.achieved << '\n';
    }
}

int run(int argc, char** argv)
{
    CLI::App app{"Exact computations with polynomials of minimal positive "
                 "integral over [0,1] with prescribed divisors"};
    app.require_subcommand(1);

    // criterion
    long cr_N = 0, cr_a = 0, cr_b = 0;
    bool cr_verify = false, cr_json = false;
    auto* cmd_criterion = app.add_subcommand(
        "criterion", "Decide whether some P in S_N is divisible by x^a (1-x)^b");
    cmd_criterion->add_option("N", cr_N)->required();
    cmd_criterion->add_option("a", cr_a)->required();
    cmd_criterion->add_option("b", cr_b)->required();
    cmd_criterion->add_flag("--verify", cr_verify,
                            "cross-check the per-prime path against the gcd path");
    cmd_criterion->add_flag("--json", cr_json, "machine-readable output");

    // construct
    long co_N = 0, co_a = 0, co_b = 0, co_count = 1;
    std::string co_out;
    auto* cmd_construct = app.add_subcommand(
        "construct", "Construct certified members of S_N divisible by x^a (1-x)^b");
    cmd_construct->add_option("N", co_N)->required();
    cmd_construct->add_option("a", co_a)->required();
    cmd_construct->add_option("b", co_b)->required();
    cmd_construct->add_option("--count", co_count, "number of distinct witnesses");
    cmd_construct->add_option("--out", co_out, "write JSON lines to this file");

    // verify-main
    long vm_from = 0, vm_to = 0;
    auto* cmd_verify_main = app.add_subcommand(
        "verify-main", "Verify the constructive main-theorem proof for a range of N");
    cmd_verify_main->add_option("--from", vm_from)->required();
    cmd_verify_main->add_option("--to", vm_to)->required();

    // census
    long ce_from = 0, ce_to = 0;
    std::string ce_cache, ce_csv;
    auto* cmd_census = app.add_subcommand(
        "census", "Maximal a+b admitting a divisor x^a (1-x)^b, per N");
    cmd_census->add_option("--from", ce_from)->required();
    cmd_census->add_option("--to", ce_to)->required();
    cmd_census->add_option("--cache", ce_cache, "cache file (JSON lines)");
    cmd_census->add_option("--csv", ce_csv, "also write records as CSV");

    // appendix
    long ap_nmax = 200;
    bool ap_long = false, ap_json = false;
    std::string ap_witness_dir;
    auto* cmd_appendix = app.add_subcommand(
        "appendix", "Trinomial-divisor solvability scan over 3..nmax");
    cmd_appendix->add_option("--nmax", ap_nmax, "upper end of the scan");
    cmd_appendix->add_flag("--long", ap_long, "allow nmax > 200 (slow run)");
    cmd_appendix->add_flag("--json", ap_json, "machine-readable output");
    cmd_appendix->add_option("--witness-dir", ap_witness_dir,
                             "write one witness JSON file per N");

    // gsn-check
    long gsn_upto = 0;
    auto* cmd_gsn = app.add_subcommand(
        "gsn-check", "Check lcm(1..N) >= 4^floor((N-1)/2) for all N up to a bound");
    cmd_gsn->add_option("N", gsn_upto)->required();

    // psi-factors
    long pf_N = 0;
    bool pf_json = false;
    auto* cmd_psi = app.add_subcommand(
        "psi-factors", "Prime-power factorization and value of lcm(1..N)");
    cmd_psi->add_option("N", pf_N)->required();
    cmd_psi->add_flag("--json", pf_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_criterion->parsed()) {
        if (cr_N < 1 || cr_a < 0 || cr_b < 0 || cr_a + cr_b >= cr_N) {
            std::cerr << "error: requires N >= 1, a, b >= 0 and a + b < N\n";
            return kExitUsage;
        }
        const criterion::DivisorQuery q{cr_N, cr_a, cr_b};
        auto report = criterion::decide_by_primes(q);
        if (cr_verify) {
            const auto [holds, gcd] = criterion::decide_by_gcd(q);
            report.gcd_value = gcd;
            if (holds != report.holds) {
                std::cerr << "internal error: gcd and per-prime paths disagree\n";
                return kExitInternal;
            }
        }
        if (cr_json)
            std::cout << serialize::criterion_report_to_json(report).dump() << '\n';
        else
            print_report_text(report);
        return report.holds ? kExitOk : kExitNegative;
    }

    if (cmd_construct->parsed()) {
        if (co_N < 1 || co_a < 0 || co_b < 0 || co_a + co_b >= co_N || co_count < 1) {
            std::cerr << "error: requires N >= 1, a, b >= 0, a + b < N, count >= 1\n";
            return kExitUsage;
        }
        const criterion::DivisorQuery q{co_N, co_a, co_b};
        std::vector<witness::Witness> family;
        try {
            family = witness::enumerate_family(q, co_count);
        } catch (const witness::CriterionFailure& e) {
            std::cerr << "criterion fails:\n";
            print_report_text(e.report);
            return kExitNegative;
        } catch (const witness::FamilyExhausted& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitNegative;
        }
        std::ofstream file;
        if (!co_out.empty()) {
            file.open(co_out, std::ios::trunc);
            if (!file) {
                std::cerr << "error: cannot open " << co_out << '\n';
                return kExitUsage;
            }
        }
        std::ostream& out = co_out.empty() ? std::cout : file;
        for (const auto& w : family)
            out << serialize::witness_to_json(w).dump() << '\n';
        return kExitOk;
    }

    if (cmd_verify_main->parsed()) {
        if (vm_from < 1 || vm_from > vm_to) {
            std::cerr << "error: requires 1 <= from <= to\n";
            return kExitUsage;
        }
        bool all_ok = true;
        for (long N = vm_from; N <= vm_to; ++N) {
            try {
                const auto w = theorems::verify_main_theorem(N);
                std::cout << "N=" << N << " OK  (a=" << w.query.a
                          << ", b=" << w.query.b << ", deg=" << w.expanded.degree()
                          << ")\n";
            } catch (const std::exception& e) {
                std::cout << "N=" << N << " FAIL  " << e.what() << '\n';
                all_ok = false;
            }
        }
        return all_ok ? kExitOk : kExitNegative;
    }

    if (cmd_census->parsed()) {
        if (ce_from < 1 || ce_from > ce_to) {
            std::cerr << "error: requires 1 <= from <= to\n";
            return kExitUsage;
        }
        const std::string path = cache_path_from_options(ce_cache);
        bool corrupt = false;
        auto entries = load_cache(path, corrupt);
        bool dirty = corrupt;
        for (long N = ce_from; N <= ce_to; ++N) {
            if (!entries.count(N)) {
                entries[N] = theorems::census_one(N);
                dirty = true;
            }
        }
        if (dirty)
            save_cache(path, entries);
        std::optional<std::ofstream> csv;
        if (!ce_csv.empty()) {
            csv.emplace(ce_csv, std::ios::trunc);
            if (!*csv) {
                std::cerr << "error: cannot open " << ce_csv << '\n';
                return kExitUsage;
            }
            *csv << theorems::census_csv_header() << '\n';
        }
        for (long N = ce_from; N <= ce_to; ++N) {
            const auto& r = entries.at(N);
            std::cout << theorems::census_record_csv(r) << '\n';
            if (csv)
                *csv << theorems::census_record_csv(r) << '\n';
        }
        return kExitOk;
    }

    if (cmd_appendix->parsed()) {
        if (ap_nmax < 3) {
            std::cerr << "error: the appendix scan starts at N = 3; nmax must be >= 3\n";
            return kExitUsage;
        }
        if (ap_nmax > 200 && !ap_long) {
            std::cerr << "error: nmax > 200 requires --long\n";
            return kExitUsage;
        }
        std::function<void(long)> progress;
        if (ap_long)
            progress = [](long N) {
                if (N % 50 == 0)
                    std::cerr << "... N = " << N << '\n';
            };
        appendix::AppendixResult result;
        if (ap_witness_dir.empty()) {
            result = appendix::replicate_appendix(ap_nmax, progress);
        } else {
            result.n_max = ap_nmax;
            for (long N = 3; N <= ap_nmax; ++N) {
                const auto w = appendix::solve_for_N(N);
                if (!w.solvable) {
                    result.exceptions.push_back(N);
                } else {
                    json ys = json::array();
                    for (const auto& yi : w.y)
                        ys.push_back(yi.get_str());
                    const json j{{"N", N},
                                 {"A", w.query.A},
                                 {"B", w.query.B},
                                 {"C", w.query.C},
                                 {"y", std::move(ys)},
                                 {"poly", w.expanded.to_string()}};
                    std::ofstream f(ap_witness_dir + "/witness_" + std::to_string(N) +
                                    ".json");
                    f << j.dump() << '\n';
                }
                ++result.checked;
                if (progress)
                    progress(N);
            }
        }
        if (ap_json) {
            std::cout << serialize::appendix_result_to_json(result, ap_witness_dir).dump()
                      << '\n';
        } else if (result.exceptions.empty()) {
            std::cout << "no exceptions up to " << ap_nmax << '\n';
        } else {
            std::cout << "exceptions:";
            for (long N : result.exceptions)
                std::cout << ' ' << N;
            std::cout << '\n';
        }
        return result.exceptions.empty() ? kExitOk : kExitNegative;
    }

    if (cmd_gsn->parsed()) {
        if (gsn_upto < 1) {
            std::cerr << "error: N must be >= 1\n";
            return kExitUsage;
        }
        for (long N = 1; N <= gsn_upto; ++N) {
            if (!theorems::gsn_inequality_check(N)) {
                std::cout << "FAIL at N=" << N << '\n';
                return kExitNegative;
            }
        }
        std::cout << "OK: lcm(1..N) >= 4^floor((N-1)/2) for all N <= " << gsn_upto
                  << '\n';
        return kExitOk;
    }

    if (cmd_psi->parsed()) {
        if (pf_N < 1) {
            std::cerr << "error: N must be >= 1\n";
            return kExitUsage;
        }
        const auto fact = numth::lcm_range(pf_N);
        if (pf_json) {
            json factors = json::object();
            for (const auto& [p, e] : fact.factors)
                factors[std::to_string(p)] = e;
            std::cout << json{{"N", pf_N},
                              {"factors", std::move(factors)},
                              {"value", fact.value().get_str()}}
                             .dump()
                      << '\n';
        } else {
            std::cout << "lcm(1.." << pf_N << ") =";
            if (fact.factors.empty())
                std::cout << " 1";
            for (std::size_t i = 0; i < fact.factors.size(); ++i)
                std::cout << (i ? " * " : " ") << fact.factors[i].first << '^'
                          << fact.factors[i].second;
            std::cout << "\n= " << fact.value().get_str() << '\n';
        }
        return kExitOk;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return kExitUsage;
    } catch (const minpoly::InexactDivisionError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const minpoly::witness::CertificationError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const minpoly::theorems::TheoremViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
