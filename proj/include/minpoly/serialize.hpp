#pragma once

#include <json.hpp>

#include "minpoly/appendix.hpp"
#include "minpoly/criterion.hpp"
#include "minpoly/theorems.hpp"
#include "minpoly/witness.hpp"

// JSON wire formats. Big integers are serialized as decimal strings.

namespace minpoly::serialize {

using nlohmann::json;

inline json criterion_report_to_json(const criterion::CriterionReport& r)
{
    json primes = json::array();
    for (const auto& check : r.per_prime) {
        json entry{{"p", check.p}, {"required", check.required}};
        if (check.n_p)
            entry["n_p"] = *check.n_p;
        else
            entry["n_p"] = nullptr;
        entry["achieved"] = check.achieved;
        primes.push_back(std::move(entry));
    }
    json out{{"N", r.query.N}, {"a", r.query.a}, {"b", r.query.b},
             {"holds", r.holds}, {"primes", std::move(primes)}};
    out["gcd"] = r.gcd_value ? json(r.gcd_value->get_str()) : json(nullptr);
    return out;
}

inline json witness_to_json(const witness::Witness& w)
{
    json ys = json::array();
    for (const auto& yn : w.y)
        ys.push_back(yn.get_str());
    const BigInt ell = numth::lcm_range(w.query.N).value();
    return json{{"N", w.query.N},
                {"a", w.query.a},
                {"b", w.query.b},
                {"y", std::move(ys)},
                {"poly", w.expanded.to_string()},
                {"integral", "1/" + ell.get_str()}};
}

inline json census_record_to_json(const theorems::CensusRecord& r)
{
    json pairs = json::array();
    for (const auto& [a, b] : r.attaining_pairs)
        pairs.push_back(json::array({a, b}));
    return json{{"N", r.N},
                {"max_sum", r.max_sum},
                {"pairs", std::move(pairs)},
                {"ratio_num", r.ratio.get_num().get_str()},
                {"ratio_den", r.ratio.get_den().get_str()}};
}

inline theorems::CensusRecord census_record_from_json(const json& j)
{
    theorems::CensusRecord r;
    r.N = j.at("N").get<long>();
    r.max_sum = j.at("max_sum").get<long>();
    for (const auto& pair : j.at("pairs"))
        r.attaining_pairs.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
    r.ratio = Rational(BigInt(j.at("ratio_num").get<std::string>()),
                       BigInt(j.at("ratio_den").get<std::string>()));
    r.ratio.canonicalize();
    return r;
}

inline json appendix_result_to_json(const appendix::AppendixResult& r,
                                    const std::string& witnesses_path = {})
{
    json out{{"n_max", r.n_max},
             {"checked", r.checked},
             {"exceptions", r.exceptions}};
    if (!witnesses_path.empty())
        out["witnesses_path"] = witnesses_path;
    return out;
}

} // namespace minpoly::serialize
