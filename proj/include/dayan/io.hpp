#pragma once

// Text and JSON encodings shared by the command-line tool and its tests.
// Big numbers always travel as decimal strings in JSON.

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "dayan/contfrac.hpp"
#include "dayan/core_arith.hpp"
#include "dayan/crt.hpp"
#include "dayan/dayan.hpp"

namespace dayan::io {

using json = nlohmann::ordered_json;

inline json state_to_json(const StateMatrix& s) {
    return json::array({s.x11.str(), s.x12.str(), s.x21.str(), s.x22.str()});
}

/// {"a", "m", "u", "steps": [{"i", "branch", "q", "r", "state": [x11, x12, x21, x22]}]}
inline json trace_to_json(const DayanTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"i", s.index},
                         {"branch", to_string(s.branch)},
                         {"q", s.quotient.str()},
                         {"r", s.remainder.str()},
                         {"state", state_to_json(s.state_after)}});
    }
    return {{"a", t.multiplicand.str()},
            {"m", t.modulus.str()},
            {"u", t.result.str()},
            {"steps", std::move(steps)}};
}

/// Inverse of trace_to_json; the u field is taken as given.
inline DayanTrace trace_from_json(const json& j) {
    auto num = [](const json& v) { return Natural::parse(v.get<std::string>()); };
    DayanTrace t{num(j.at("m")), num(j.at("a")), {}, num(j.at("u"))};
    for (const auto& s : j.at("steps")) {
        const auto& st = s.at("state");
        const std::string branch = s.at("branch").get<std::string>();
        if (branch != "upper" && branch != "lower") {
            throw domain_error("unknown branch '" + branch + "'");
        }
        t.steps.push_back({s.at("i").get<std::size_t>(),
                           branch == "upper" ? Branch::upper : Branch::lower,
                           num(s.at("q")),
                           num(s.at("r")),
                           {num(st.at(0)), num(st.at(1)), num(st.at(2)), num(st.at(3))}});
    }
    return t;
}

inline Natural parse_decimal(std::string_view token) {
    if (token.empty()) throw domain_error("empty number");
    for (const char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw domain_error("not a decimal number: '" + std::string(token) + "'");
        }
    }
    return Natural::parse(token);
}

/// "r:m" as given on the command line.
inline Congruence parse_congruence_arg(std::string_view arg) {
    const auto colon = arg.find(':');
    if (colon == std::string_view::npos) {
        throw domain_error("expected r:m, got '" + std::string(arg) + "'");
    }
    return {Natural::parse(arg.substr(0, colon)), Natural::parse(arg.substr(colon + 1))};
}

/// One "r m" pair per line, decimal. '#' starts a comment; blank lines are skipped.
inline std::vector<Congruence> read_congruences(std::istream& in) {
    std::vector<Congruence> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string r, m, extra;
        if (!(fields >> r)) continue;
        if (!(fields >> m) || (fields >> extra)) {
            throw domain_error("line " + std::to_string(lineno) + ": expected 'r m'");
        }
        out.emplace_back(parse_decimal(r), parse_decimal(m));
    }
    return out;
}

/// Reads "name = value" records where a value may continue over following
/// lines (long digit blocks). '#' lines are comments. Names are kept as written.
inline std::map<std::string, Natural> read_named_numbers(std::istream& in) {
    std::map<std::string, std::string> raw;
    std::string current;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (const auto eq = line.find('='); eq != std::string::npos) {
            std::string name = line.substr(0, eq);
            name.erase(0, name.find_first_not_of(" \t"));
            name.erase(name.find_last_not_of(" \t") + 1);
            if (name.empty()) throw domain_error("missing name before '='");
            current = name;
            raw[current] = line.substr(eq + 1);
        } else if (current.empty()) {
            throw domain_error("value continuation before any 'name =' line");
        } else {
            raw[current] += line;
        }
    }
    std::map<std::string, Natural> out;
    for (const auto& [name, text] : raw) out.emplace(name, Natural::parse(text));
    return out;
}

} // namespace dayan::io
