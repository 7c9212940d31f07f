#pragma once

// Command-line front end. run() takes the argument list (without argv[0])
// and writes to the given streams so it can be driven from tests.
//
// Exit codes: 0 success, 1 domain error (not invertible, unsolvable,
// unparsable input), 2 usage error.

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dayan/bench.hpp"
#include "dayan/contfrac.hpp"
#include "dayan/crt.hpp"
#include "dayan/dayan.hpp"
#include "dayan/ext_euclid.hpp"
#include "dayan/io.hpp"
#include "dayan/wiener.hpp"

namespace dayan::cli {

namespace detail {

using io::json;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline std::string matrix(const StateMatrix& s) {
    return "[" + s.x11.str() + " " + s.x12.str() + "; " + s.x21.str() + " " + s.x22.str() + "]";
}

inline std::ifstream open_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    return in;
}

struct InvArgs {
    std::string a, m, algo = "dayan";
    bool raw = false;
};

inline void cmd_inv(const InvArgs& args, bool as_json, std::ostream& out) {
    if (args.raw && args.algo != "euclid") {
        throw usage_error("--raw is only meaningful with --algo euclid");
    }
    const Natural a = Natural::parse(args.a);
    const Natural m = Natural::parse(args.m);
    if (args.algo == "euclid") {
        const EuclidRun run = euclid_inverse(a, m);
        if (as_json) {
            emit(out, {{"a", a.str()}, {"m", m.str()}, {"algo", "euclid"},
                       {"u", run.normalized.str()}, {"raw", run.raw.str()},
                       {"iterations", run.iterations}});
        } else {
            out << (args.raw ? run.raw.str() : run.normalized.str()) << '\n';
        }
        return;
    }
    const DayanTrace t = dayan_inverse(a, m);
    if (as_json) {
        emit(out, {{"a", a.str()}, {"m", m.str()}, {"algo", "dayan"}, {"u", t.result.str()},
                   {"steps", t.steps.size()}});
    } else {
        out << t.result << '\n';
    }
}

inline void cmd_gcd(const std::string& a_text, const std::string& m_text, bool as_json,
                    std::ostream& out) {
    const Natural a = Natural::parse(a_text);
    const Natural m = Natural::parse(m_text);
    const auto [cert, trace] = dayan_gcd(a, m);
    if (as_json) {
        emit(out, {{"a", a.str()}, {"m", m.str()}, {"d", cert.d.str()}, {"u", cert.u.str()},
                   {"v", cert.v.str()}, {"steps", trace.steps.size()}});
    } else {
        out << "d = " << cert.d << '\n' << "u = " << cert.u << '\n' << "v = " << cert.v << '\n';
    }
}

inline void cmd_trace(const std::string& a_text, const std::string& m_text, bool as_json,
                      std::ostream& out) {
    const DayanTrace t = dayan_inverse(Natural::parse(a_text), Natural::parse(m_text));
    if (as_json) {
        emit(out, io::trace_to_json(t));
        return;
    }
    out << "0 start " << matrix(StateMatrix::initial(t.multiplicand, t.modulus)) << '\n';
    for (const auto& s : t.steps) {
        out << s.index << ' ' << to_string(s.branch) << " q=" << s.quotient << " r=" << s.remainder
            << ' ' << matrix(s.state_after) << '\n';
    }
    out << "u = " << t.result << '\n';
}

inline void cmd_cf(const std::string& a_text, const std::string& m_text, bool as_json,
                   std::ostream& out) {
    const Natural a = Natural::parse(a_text);
    const Natural m = Natural::parse(m_text);
    const ContinuedFraction cf = cf_expand(a, m);
    const auto direct = convergents(cf);
    // The trace exists only for coprime pairs.
    std::vector<Convergent> traced;
    if (gcd(a, m).is_one()) traced = convergents_from_trace(dayan_inverse(a, m));

    if (as_json) {
        json partials = json::array();
        for (const auto& u : cf.partials) partials.push_back(u.str());
        json convs = json::array();
        for (const auto& c : direct) {
            json entry = {{"k", c.k}, {"alpha", c.alpha.str()}, {"beta", c.beta.str()}};
            if (c.k <= traced.size()) {
                entry["trace_cell"] = c.k % 2 == 1 ? "x21" : "x11";
                entry["trace_match"] = traced[c.k - 1] == c;
            }
            convs.push_back(std::move(entry));
        }
        emit(out, {{"a", a.str()}, {"m", m.str()}, {"partials", std::move(partials)},
                   {"convergents", std::move(convs)}});
        return;
    }
    out << "[0;";
    for (std::size_t i = 0; i < cf.partials.size(); ++i) {
        out << (i == 0 ? " " : ", ") << cf.partials[i];
    }
    out << "]\n";
    for (const auto& c : direct) {
        out << c.k << ' ' << c.alpha << '/' << c.beta;
        if (c.k <= traced.size()) {
            out << " step " << c.k << ' ' << (c.k % 2 == 1 ? "x21" : "x11");
            if (!(traced[c.k - 1] == c)) out << " MISMATCH";
        }
        out << '\n';
    }
}

struct CrtArgs {
    std::vector<std::string> pairs;
    std::string file;
    std::string method = "bezout";
};

inline void cmd_crt(const CrtArgs& args, bool as_json, std::ostream& out) {
    std::vector<Congruence> items;
    if (!args.file.empty()) {
        auto in = open_file(args.file);
        items = io::read_congruences(in);
    }
    for (const auto& p : args.pairs) items.push_back(io::parse_congruence_arg(p));
    if (items.empty()) throw usage_error("no congruences given");
    const CongruenceSystem system(std::move(items));

    if (args.method == "bezout") {
        const CrtSolution sol = solve_bezout(system);
        if (as_json) {
            emit(out, {{"x0", sol.x0.str()}, {"M", sol.modulus.str()}, {"method", "bezout"}});
        } else {
            out << "x ≡ " << sol.x0 << " (mod " << sol.modulus << ")\n";
        }
        return;
    }

    const auto [sol, cert] = solve_dayan(system);
    if (as_json) {
        json basis = json::array();
        for (const auto& f : cert.basis.factors) basis.push_back(f.str());
        json mult = json::array();
        for (const auto& v : cert.multipliers) mult.push_back(v.str());
        emit(out, {{"x0", sol.x0.str()},
                   {"M", sol.modulus.str()},
                   {"method", "dayan"},
                   {"certificate",
                    {{"basis", std::move(basis)},
                     {"multipliers", std::move(mult)},
                     {"g", cert.g.str()},
                     {"kind", to_string(cert.kind)}}}});
        return;
    }
    out << "x ≡ " << sol.x0 << " (mod " << sol.modulus << ")\n";
    out << "basis";
    for (const auto& f : cert.basis.factors) out << ' ' << f;
    out << "\nmultipliers";
    for (const auto& v : cert.multipliers) out << ' ' << v;
    out << "\nsum = 1 + " << cert.g << '*' << sol.modulus << " (" << to_string(cert.kind) << ")\n";
}

struct WienerArgs {
    std::string n, e, key_file;
};

inline void cmd_wiener(const WienerArgs& args, bool as_json, std::ostream& out) {
    Natural n, e;
    if (!args.key_file.empty()) {
        if (!args.n.empty()) throw usage_error("give either N e or --key-file, not both");
        auto in = open_file(args.key_file);
        const auto fields = io::read_named_numbers(in);
        auto pick = [&fields](const char* upper, const char* lower) {
            if (auto it = fields.find(upper); it != fields.end()) return it->second;
            if (auto it = fields.find(lower); it != fields.end()) return it->second;
            throw domain_error(std::string("key file has no '") + upper + "' entry");
        };
        n = pick("N", "n");
        e = pick("e", "E");
    } else {
        if (args.n.empty() || args.e.empty()) throw usage_error("wiener needs N and e");
        n = Natural::parse(args.n);
        e = Natural::parse(args.e);
    }

    const WienerResult r = wiener_attack(RsaPublicKey(n, e));
    if (as_json) {
        json j = {{"found", r.found}, {"candidates", r.candidates_tried}};
        if (r.found) {
            j["step"] = r.step;
            j["d"] = r.d.str();
            j["k"] = r.k.str();
            j["p"] = r.p.str();
            j["q"] = r.q.str();
            j["phi"] = r.phi.str();
        }
        emit(out, j);
        return;
    }
    if (!r.found) {
        out << "no small private exponent found (" << r.candidates_tried << " candidates)\n";
        return;
    }
    out << "found d at step " << r.step << '\n'
        << "d = " << r.d << '\n'
        << "k = " << r.k << '\n'
        << "p = " << r.p << '\n'
        << "q = " << r.q << '\n'
        << "phi = " << r.phi << '\n';
}

struct BenchArgs {
    std::vector<std::size_t> bits{64, 256, 1024};
    std::size_t trials = 100;
    std::uint64_t seed = 1;
};

inline void cmd_bench(const BenchArgs& args, bool as_json, std::ostream& out) {
    const BenchReport report = bench(args.bits, args.trials, args.seed);
    if (as_json) {
        json rows = json::array();
        auto algo = [](const AlgorithmStats& s) {
            return json{{"iterations",
                         {{"min", s.iteration_summary.min},
                          {"median", s.iteration_summary.median},
                          {"max", s.iteration_summary.max}}},
                        {"nanos", {{"min", s.nanos.min}, {"median", s.nanos.median}, {"max", s.nanos.max}}}};
        };
        for (const auto& row : report.rows) {
            rows.push_back({{"bits", row.bits},
                            {"trials", row.trials},
                            {"disagreements", row.disagreements},
                            {"dayan", algo(row.dayan)},
                            {"euclid", algo(row.euclid)}});
        }
        emit(out, {{"seed", report.seed}, {"rows", std::move(rows)}});
        return;
    }
    out << "bits trials algo iter_min iter_median iter_max ns_min ns_median ns_max\n";
    for (const auto& row : report.rows) {
        auto line = [&](const char* name, const AlgorithmStats& s) {
            out << row.bits << ' ' << row.trials << ' ' << name << ' ' << s.iteration_summary.min << ' '
                << s.iteration_summary.median << ' ' << s.iteration_summary.max << ' ' << s.nanos.min
                << ' ' << s.nanos.median << ' ' << s.nanos.max << '\n';
        };
        line("dayan", row.dayan);
        line("euclid", row.euclid);
        if (row.disagreements != 0) {
            out << "# " << row.disagreements << " disagreements at " << row.bits << " bits\n";
        }
    }
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using namespace detail;

    CLI::App app{"DaYan deriving-one toolkit: modular inverses, traces, continued fractions, CRT, Wiener"};
    app.name("dayan");
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of plain text");
    app.fallthrough();

    InvArgs inv;
    auto* inv_cmd = app.add_subcommand("inv", "Modular inverse a^-1 mod m");
    inv_cmd->add_option("a", inv.a)->required();
    inv_cmd->add_option("m", inv.m)->required();
    inv_cmd->add_option("--algo", inv.algo, "dayan or euclid")->check(CLI::IsMember({"dayan", "euclid"}));
    inv_cmd->add_flag("--raw", inv.raw, "Print the signed value before normalization (euclid only)");

    std::string a_text, m_text;
    auto* gcd_cmd = app.add_subcommand("gcd", "gcd(a, m) with Bezout coefficients");
    gcd_cmd->add_option("a", a_text)->required();
    gcd_cmd->add_option("m", m_text)->required();

    auto* trace_cmd = app.add_subcommand("trace", "Step-by-step DaYan trace");
    trace_cmd->add_option("a", a_text)->required();
    trace_cmd->add_option("m", m_text)->required();

    auto* cf_cmd = app.add_subcommand("cf", "Continued fraction of a/m and its convergents");
    cf_cmd->add_option("a", a_text)->required();
    cf_cmd->add_option("m", m_text)->required();

    CrtArgs crt;
    auto* crt_cmd = app.add_subcommand("crt", "Solve x = r_i (mod m_i)");
    crt_cmd->add_option("congruences", crt.pairs, "r:m pairs");
    crt_cmd->add_option("--file", crt.file, "File of 'r m' lines");
    crt_cmd->add_option("--method", crt.method, "bezout or dayan")->check(CLI::IsMember({"bezout", "dayan"}));

    WienerArgs wiener;
    auto* wiener_cmd = app.add_subcommand("wiener", "Small private exponent attack on (N, e)");
    wiener_cmd->add_option("N", wiener.n);
    wiener_cmd->add_option("e", wiener.e);
    wiener_cmd->add_option("--key-file", wiener.key_file, "File with 'N = ...' and 'e = ...' entries");

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "Compare DaYan and extended Euclid");
    bench_cmd->add_option("--bits", bench_args.bits, "Bit sizes")->delimiter(',');
    bench_cmd->add_option("--trials", bench_args.trials)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench_args.seed);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "dayan: " << e.what() << '\n' << app.help();
        return 2;
    }

    try {
        if (*inv_cmd) cmd_inv(inv, as_json, out);
        else if (*gcd_cmd) cmd_gcd(a_text, m_text, as_json, out);
        else if (*trace_cmd) cmd_trace(a_text, m_text, as_json, out);
        else if (*cf_cmd) cmd_cf(a_text, m_text, as_json, out);
        else if (*crt_cmd) cmd_crt(crt, as_json, out);
        else if (*wiener_cmd) cmd_wiener(wiener, as_json, out);
        else if (*bench_cmd) cmd_bench(bench_args, as_json, out);
    } catch (const usage_error& e) {
        err << "dayan: " << e.what() << '\n' << app.help();
        return 2;
    } catch (const domain_error& e) {
        err << e.what() << '\n';
        return 1;
    } catch (const contract_violation& e) {
        err << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace dayan::cli
