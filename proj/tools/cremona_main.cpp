#include <cctype>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cremona/homaloidal.hpp"
#include "cremona/monomial.hpp"
#include "cremona/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace cremona;

namespace {

// exit codes: 0 ok, 1 parse/arithmetic error, 2 not a proper homaloidal
// type, 3 invalid matrix, 4 verification failure
constexpr int kExitParse = 1;
constexpr int kExitNotProper = 2;
constexpr int kExitMatrix = 3;
constexpr int kExitVerify = 4;

json type_json(const HomaloidalType& t) {
    return json{{"type", format_type(t)}, {"degree", t.degree()}, {"mults", t.mults()}};
}

json chain_json(const PredecessorChain& c) {
    json arr = json::array();
    for (const auto& s : c.steps) arr.push_back(type_json(s));
    return arr;
}

std::string chain_text(const PredecessorChain& c) {
    std::string out;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        if (i) out += " -> ";
        out += format_type(c.steps[i]);
    }
    return out;
}

std::string trace_text(const std::vector<HudsonStep>& trace) {
    std::string out;
    for (size_t i = 0; i < trace.size(); ++i) {
        if (i) out += " -> ";
        out += format_raw_type(trace[i].degree, trace[i].mults);
    }
    return out;
}

struct LabelBook {
    std::map<int64_t, std::vector<HomaloidalType>> by_degree;

    const std::vector<HomaloidalType>& of_degree(int64_t d) {
        auto it = by_degree.find(d);
        if (it == by_degree.end()) it = by_degree.emplace(d, enumerate_types(d)).first;
        return it->second;
    }
    std::string label(const HomaloidalType& t) {
        const auto& list = of_degree(t.degree());
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == t)
                return i == 0 ? std::to_string(t.degree())
                              : std::to_string(t.degree()) + "." + std::to_string(i);
        return "?";
    }
};

IntMatrix2 matrix_or_word(const std::string& input, bool* was_word = nullptr) {
    std::string_view sv(input);
    size_t i = 0;
    while (i < sv.size() && std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
    if (i < sv.size() && sv[i] == '[') {
        if (was_word) *was_word = false;
        return parse_matrix(input);
    }
    if (was_word) *was_word = true;
    return word_matrix(parse_word(input));
}

int run(int argc, char** argv) {
    CLI::App app{"exact lengths of plane Cremona transformations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string type_arg, degree_arg, matrix_arg, scope_arg = "all", word_arg;
    bool with_chain = false, with_trace = false;

    auto* cmd_length = app.add_subcommand("length", "length of a homaloidal type");
    cmd_length->add_option("type", type_arg)->required();
    cmd_length->add_flag("--chain", with_chain, "also print the predecessor chain");

    auto* cmd_chain = app.add_subcommand("chain", "predecessor chain down to (1)");
    cmd_chain->add_option("type", type_arg)->required();

    auto* cmd_wright = app.add_subcommand("wright", "distance in the Wright graph");
    cmd_wright->add_option("type", type_arg)->required();

    auto* cmd_hudson = app.add_subcommand("hudson", "Hudson properness test with descent trace");
    cmd_hudson->add_option("type", type_arg)->required();
    with_trace = true;
    cmd_hudson->add_flag("--trace,!--no-trace", with_trace, "print the descent trace (default on)");

    auto* cmd_table = app.add_subcommand("table", "all types of a degree with lengths and predecessors");
    cmd_table->add_option("degree", degree_arg)->required();

    auto* cmd_enum = app.add_subcommand("enumerate", "all proper types of a degree");
    cmd_enum->add_option("degree", degree_arg)->required();

    auto* cmd_mlen = app.add_subcommand("mono-length", "length of a monomial map");
    cmd_mlen->add_option("matrix", matrix_arg)->required();

    auto* cmd_mdyn = app.add_subcommand("mono-dyn", "dynamical length of a monomial map");
    cmd_mdyn->add_option("matrix", matrix_arg)->required();

    auto* cmd_factor = app.add_subcommand("factor", "free-monoid factorization into L/R blocks");
    cmd_factor->add_option("matrix", matrix_arg)->required();

    auto* cmd_cf = app.add_subcommand("cf", "continued fractions of an ordered matrix (or word -> matrix)");
    cmd_cf->add_option("matrix", matrix_arg)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run the oracle agreement suites");
    cmd_verify->add_option("scope", scope_arg)->check(CLI::IsMember({"predecessor", "length", "words", "all"}));

    CLI11_PARSE(app, argc, argv);

    if (*cmd_length || *cmd_chain || *cmd_wright) {
        HomaloidalType t = parse_type(type_arg);
        bool want_chain = *cmd_chain || with_chain;
        auto c = want_chain ? chain(t) : PredecessorChain{};
        int64_t len = want_chain ? c.length() : length(t);
        if (as_json) {
            json out = type_json(t);
            out["length"] = len;
            if (want_chain) out["chain"] = chain_json(c);
            if (*cmd_wright) out["wright_distance"] = wright_distance(t);
            std::cout << out.dump(2) << "\n";
        } else if (*cmd_wright) {
            std::cout << "wright distance: " << wright_distance(t) << "\n";
        } else {
            std::cout << "type: " << format_type(t) << "\n";
            std::cout << "length: " << len << "\n";
            if (want_chain) std::cout << "chain: " << chain_text(c) << "\n";
        }
        return 0;
    }

    if (*cmd_hudson) {
        auto [d, mults] = parse_raw_type(type_arg);
        LatticeClass probe(d, [&] {
            std::map<PointLabel, int64_t> mm;
            for (size_t i = 0; i < mults.size(); ++i)
                mm[PointLabel{static_cast<int32_t>(i)}] = mults[i];
            return mm;
        }());
        if (!noether_check(probe)) {
            if (as_json)
                std::cout << json{{"type", format_raw_type(d, mults)},
                                  {"noether", false},
                                  {"proper", false}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "input: " << format_raw_type(d, mults) << "\n"
                          << "noether: violated\n"
                          << "verdict: not proper\n";
            return kExitNotProper;
        }
        auto res = hudson_test(d, mults);
        if (as_json) {
            json steps = json::array();
            for (const auto& s : res.trace)
                steps.push_back({{"degree", s.degree}, {"mults", s.mults}});
            std::cout << json{{"type", format_raw_type(d, mults)},
                              {"noether", true},
                              {"proper", res.proper},
                              {"trace", steps}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "input: " << format_raw_type(d, mults) << "\n"
                      << "noether: ok\n"
                      << "verdict: " << (res.proper ? "proper" : "not proper") << "\n";
            if (with_trace) std::cout << "trace: " << trace_text(res.trace) << "\n";
        }
        return res.proper ? 0 : kExitNotProper;
    }

    if (*cmd_table || *cmd_enum) {
        int64_t d = 0;
        try {
            d = std::stoll(degree_arg);
        } catch (const std::exception&) {
            throw ParseError("degree must be an integer");
        }
        if (d < 1) throw ParseError("degree must be >= 1");
        auto diag = [](const HomaloidalType& t) {
            std::cerr << "note: |S| >= 3 for " << format_type(t) << "\n";
        };
        auto types = enumerate_types(d, diag);
        if (*cmd_enum) {
            if (as_json) {
                json arr = json::array();
                for (const auto& t : types) arr.push_back(type_json(t));
                std::cout << json{{"degree", d}, {"count", types.size()}, {"types", arr}}.dump(2)
                          << "\n";
            } else {
                for (const auto& t : types) std::cout << format_type(t) << "\n";
            }
            return 0;
        }
        LabelBook book;
        book.by_degree.emplace(d, types);
        json rows = json::array();
        for (size_t i = 0; i < types.size(); ++i) {
            const auto& t = types[i];
            std::string label = i == 0 ? std::to_string(d)
                                       : std::to_string(d) + "." + std::to_string(i);
            int64_t len = length(t);
            std::string pr = "-", cas;
            if (t.degree() > 1) {
                auto p = predecessor(t);
                auto cp = castelnuovo_predecessor(t);
                pr = book.label(p);
                if (!(cp == p)) cas = book.label(cp);
            }
            if (as_json) {
                json row = {{"label", label},
                            {"type", format_type(t)},
                            {"degree", t.degree()},
                            {"mults", t.mults()},
                            {"length", len},
                            {"pred_label", t.degree() > 1 ? json(pr) : json(nullptr)},
                            {"castelnuovo_label", cas.empty() ? json(nullptr) : json(cas)}};
                rows.push_back(row);
            } else {
                std::cout << label << " | " << format_type(t) << " | " << len << " | " << pr;
                if (!cas.empty()) std::cout << " (" << cas << ")";
                std::cout << "\n";
            }
        }
        if (as_json)
            std::cout << json{{"degree", d}, {"count", types.size()}, {"rows", rows}}.dump(2)
                      << "\n";
        return 0;
    }

    if (*cmd_mlen) {
        IntMatrix2 m = matrix_or_word(matrix_arg);
        auto res = gl2_length(m);
        bool ok = res.witness.verifies(m);
        if (as_json) {
            std::cout << json{{"matrix", format_matrix(m)},
                              {"length", res.length},
                              {"witness",
                               {{"sign", res.witness.sign},
                                {"A", format_matrix(res.witness.A)},
                                {"B", format_matrix(res.witness.B)},
                                {"word", format_word(res.witness.word)}}},
                              {"verified", ok}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "matrix: " << format_matrix(m) << "\n"
                      << "length: " << res.length << "\n"
                      << "witness: sign=" << (res.witness.sign > 0 ? "+1" : "-1")
                      << " A=" << format_matrix(res.witness.A)
                      << " B=" << format_matrix(res.witness.B) << " word="
                      << (res.witness.word.empty() ? std::string("(empty)")
                                                   : format_word(res.witness.word))
                      << " verified=" << (ok ? "yes" : "NO") << "\n";
        }
        return ok ? 0 : kExitVerify;
    }

    if (*cmd_mdyn) {
        IntMatrix2 m = matrix_or_word(matrix_arg);
        Rational r = dynamical_length(m);
        if (as_json)
            std::cout << json{{"matrix", format_matrix(m)},
                              {"dynamical_length", r.str()},
                              {"num", r.num},
                              {"den", r.den}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "matrix: " << format_matrix(m) << "\n"
                      << "dynamical length: " << r.str() << "\n";
        return 0;
    }

    if (*cmd_factor) {
        bool was_word = false;
        IntMatrix2 m = matrix_or_word(matrix_arg, &was_word);
        auto f = factor_word(m);
        if (as_json)
            std::cout << json{{"matrix", format_matrix(m)},
                              {"word", format_word(f.word)},
                              {"tau_flipped", f.tau_flipped},
                              {"degree", monomial_degree(m)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "matrix: " << format_matrix(m) << "\n"
                      << "word: " << (f.word.empty() ? std::string("(empty)") : format_word(f.word))
                      << "\n"
                      << "tau flipped: " << (f.tau_flipped ? "yes" : "no") << "\n"
                      << "degree: " << monomial_degree(m) << "\n";
        return 0;
    }

    if (*cmd_cf) {
        bool was_word = false;
        std::string_view sv(matrix_arg);
        size_t i = 0;
        while (i < sv.size() && std::isspace(static_cast<unsigned char>(sv[i]))) ++i;
        if (i < sv.size() && sv[i] != '[') {
            // word -> matrix direction
            auto w = parse_word(matrix_arg);
            IntMatrix2 m = cf_to_word(w.exponents);
            if (as_json)
                std::cout << json{{"word", format_word(w)}, {"matrix", format_matrix(m)}}.dump(2)
                          << "\n";
            else
                std::cout << "word: " << format_word(w) << "\n"
                          << "matrix: " << format_matrix(m) << "\n";
            return 0;
        }
        IntMatrix2 m = parse_matrix(matrix_arg);
        auto cf = ordered_to_cf(m);
        auto fmt_cf = [](const std::vector<int64_t>& v) {
            std::string s = "[" + std::to_string(v[0]) + ";";
            for (size_t k = 1; k < v.size(); ++k) s += (k == 1 ? " " : ", ") + std::to_string(v[k]);
            return s + "]";
        };
        if (as_json)
            std::cout << json{{"matrix", format_matrix(m)},
                              {"b_over_a", {{"num", m.b}, {"den", m.a}, {"cf", cf.upper}}},
                              {"d_over_c", {{"num", m.d}, {"den", m.c}, {"cf", cf.lower}}}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "matrix: " << format_matrix(m) << "\n"
                      << "b/a: " << m.b << "/" << m.a << " = " << fmt_cf(cf.upper) << "\n"
                      << "d/c: " << m.d << "/" << m.c << " = " << fmt_cf(cf.lower) << "\n";
        return 0;
    }

    if (*cmd_verify) {
        bool ok = true;
        auto report = [&](const std::string& name, const VerifyReport& rep) {
            if (rep.ok()) {
                std::cout << name << ": ok (" << rep.cases << " cases)\n";
            } else {
                ok = false;
                std::cout << name << ": FAILED (" << rep.failures.size() << " of " << rep.cases
                          << " cases)\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            }
        };
        if (scope_arg == "predecessor" || scope_arg == "all")
            report("predecessor", verify_predecessor());
        if (scope_arg == "length" || scope_arg == "all") report("length", verify_length());
        if (scope_arg == "words" || scope_arg == "all") report("words", verify_words());
        return ok ? 0 : kExitVerify;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const NotProperError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.trace.empty()) std::cerr << "trace: " << trace_text(e.trace) << "\n";
        return kExitNotProper;
    } catch (const NegativeEntryError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NoetherViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const MatrixError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMatrix;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
