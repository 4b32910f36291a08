#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "claw/errors.hpp"
#include "claw/expr.hpp"
#include "claw/system.hpp"

namespace claw {

/// Build a system/entropy pair from a plug-in expression document:
/// { "name":, "k":, "d":, "l":, "domain": [[lo,hi] x k],
///   "A": [[expr x l] x (d+1)], "B": [expr x l], "q": [expr x (d+1)] }
/// Expressions use variables u1..uk with +, -, *, /, ^, pow, exp, log;
/// derivatives come from forward-mode AD on the parsed trees.
inline std::pair<ConservationSystem, EntropyPair> system_from_json(const nlohmann::json& j) {
    ConservationSystem sys;
    EntropyPair ep;
    try {
        sys.name = j.value("name", std::string("user-system"));
        sys.k = j.at("k").get<int>();
        sys.d = j.at("d").get<int>();
        sys.l = j.at("l").get<int>();
        if (sys.k < 1 || sys.d < 1 || sys.l < 1)
            throw data_error("system file: k, d, l must be positive");
        const auto box = j.at("domain").get<std::vector<std::vector<double>>>();
        if (static_cast<int>(box.size()) != sys.k)
            throw data_error("system file: domain box needs k rows");
        for (const auto& row : box) {
            if (row.size() != 2 || !(row[0] < row[1]))
                throw data_error("system file: each domain row must be [lo, hi] with lo < hi");
            sys.domain.lo.push_back(row[0]);
            sys.domain.hi.push_back(row[1]);
        }

        const auto parse_list = [&](const nlohmann::json& arr, int expect,
                                    const char* what) -> std::vector<expr::NodePtr> {
            if (!arr.is_array() || static_cast<int>(arr.size()) != expect)
                throw data_error(std::string("system file: ") + what + " needs " +
                                 std::to_string(expect) + " expressions");
            std::vector<expr::NodePtr> nodes;
            for (const auto& e : arr) nodes.push_back(expr::parse(e.get<std::string>(), sys.k));
            return nodes;
        };

        const auto& A = j.at("A");
        if (!A.is_array() || static_cast<int>(A.size()) != sys.d + 1)
            throw data_error("system file: A needs d+1 flux maps");
        for (const auto& ai : A)
            sys.flux.push_back(expr::map_from_expressions(parse_list(ai, sys.l, "A[i]"), sys.k));

        ep.k = sys.k;
        ep.d = sys.d;
        ep.l = sys.l;
        ep.B = expr::map_from_expressions(parse_list(j.at("B"), sys.l, "B"), sys.k);
        const auto& q = j.at("q");
        if (!q.is_array() || static_cast<int>(q.size()) != sys.d + 1)
            throw data_error("system file: q needs d+1 entropy fluxes");
        for (const auto& qi : q)
            ep.q.push_back(expr::map_from_expressions(parse_list(nlohmann::json::array({qi}), 1, "q[i]"),
                                                      sys.k));
    } catch (const data_error&) {
        throw;
    } catch (const std::exception& e) {
        throw data_error("system file: " + std::string(e.what()));
    }
    sys.evolvable = false;
    return {std::move(sys), std::move(ep)};
}

inline std::pair<ConservationSystem, EntropyPair> load_system_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw data_error("load_system_file: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw data_error("load_system_file: malformed JSON: " + std::string(e.what()));
    }
    return system_from_json(j);
}

} // namespace claw
