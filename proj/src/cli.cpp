#include "slp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "slp/derivation.hpp"
#include "slp/errors.hpp"
#include "slp/factorize.hpp"
#include "slp/fibonacci.hpp"
#include "slp/oracle.hpp"
#include "slp/repair.hpp"
#include "slp/serialize.hpp"
#include "slp/strategy_graph.hpp"
#include "slp/verify.hpp"

namespace slp::cli {

namespace {

using nlohmann::json;

struct WordInput {
    std::string literal;
    std::string file;
};

void add_word_input(CLI::App* cmd, WordInput& in) {
    cmd->add_option("input", in.literal, "word literal or generator spec (fib:N, p:N, q:N, optional @ba)");
    cmd->add_option("-f,--file", in.file, "read the word from a file");
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read " + path);
    return {std::istreambuf_iterator<char>(f), {}};
}

std::string strip_newline(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    return s;
}

Word generate(const std::string& spec) {
    static const std::regex pattern(R"(^(fib|p|q):(\d+)(@ba)?$)");
    std::smatch m;
    if (!std::regex_match(spec, m, pattern)) return Word::from_string(spec);
    const int order = std::stoi(m[2].str());
    const auto alphabet = m[3].matched ? OrderedAlphabet::ba() : OrderedAlphabet::ab();
    if (m[1] == "fib") return fib_word(order, alphabet);
    if (m[1] == "p") return p_word(order, alphabet);
    return q_word(order, alphabet);
}

Word resolve(const WordInput& in) {
    if (in.literal.empty() == in.file.empty()) throw CLI::ValidationError("input", "give exactly one of INPUT or --file");
    Word w = in.file.empty() ? generate(in.literal) : Word::from_string(strip_newline(read_file(in.file)));
    if (w.empty()) throw DomainError("the input word is empty");
    return w;
}

Grammar read_grammar(const std::string& path) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("grammar file is not JSON: ") + e.what());
    }
    auto g = grammar_from_json(doc);
    require_valid(g);
    return g;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (auto a : allowed) {
        if (format == a) return;
    }
    throw CLI::ValidationError("--format", "format '" + format + "' is not available for this command");
}

std::string grammar_line(const Grammar& g) { return to_text(g); }

std::size_t oracle_budget(std::size_t fallback) {
    if (const char* env = std::getenv("SLPKIT_ORACLE_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw DomainError("SLPKIT_ORACLE_BUDGET must be a number");
        }
    }
    return fallback;
}

json summary_json(const OracleResult& r, std::optional<std::size_t> count) {
    json out{{"g_star", r.g_star}, {"lower_bound", r.lower_bound}, {"upper_bound", r.upper_bound}};
    out["count"] = count ? json(*count) : json(nullptr);
    return out;
}

std::string report_row(const CheckReport& r) {
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(18) << r.claim << " " << r.range;
    if (r.counterexample) s << "\n      counterexample: " << *r.counterexample;
    return s.str();
}

std::vector<std::string> split_claims(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream s(text);
    std::string item;
    while (std::getline(s, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grammar compression toolkit: RePair, LZ factorizations, smallest-grammar search"};
    app.name("slpkit");
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    app.fallthrough();

    WordInput in;
    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "print a word");
    add_word_input(gen, in);
    gen->callback([&] {
        action = [&] {
            require_format(format, {"text", "json"});
            auto w = resolve(in);
            if (format == "json") out << json{{"word", w.str()}, {"length", w.size()}}.dump() << "\n";
            else out << w.str() << "\n";
            return ok;
        };
    });

    std::string policy = "first";
    bool trace = false;
    auto* rp = app.add_subcommand("repair", "compress with RePair");
    add_word_input(rp, in);
    rp->add_option("--policy", policy, "tie-break among most frequent bigrams")->check(CLI::IsMember({"first", "lex"}));
    rp->add_flag("--trace", trace, "print the replacement steps");
    rp->callback([&] {
        action = [&] {
            require_format(format, {"text", "json"});
            auto result = repair(resolve(in), policy == "lex" ? TieBreak::lexicographic : TieBreak::first_occurrence);
            if (format == "json") {
                auto doc = grammar_to_json(result.grammar);
                if (trace) {
                    std::istringstream lines(result.trace.to_text());
                    std::string line;
                    doc["trace"] = json::array();
                    while (std::getline(lines, line)) doc["trace"].push_back(line);
                }
                out << doc.dump() << "\n";
            } else {
                if (trace) out << result.trace.to_text();
                out << grammar_line(result.grammar) << "\n";
                out << "size " << result.grammar.size() << "\n";
            }
            return ok;
        };
    });

    std::size_t final_cap = RepairEnumerationOptions{}.max_final_length;
    auto* ra = app.add_subcommand("repair-all", "every RePair grammar up to equivalence, one per line");
    add_word_input(ra, in);
    ra->add_option("--max-final", final_cap, "longest final sequence whose bracketings are enumerated");
    ra->callback([&] {
        action = [&] {
            require_format(format, {"text", "json"});
            RepairEnumerationOptions options;
            options.max_final_length = final_cap;
            auto e = enumerate_repair(resolve(in), options);
            for (const auto& g : e.grammars) out << (format == "json" ? grammar_to_json(g).dump() : grammar_line(g)) << "\n";
            return ok;
        };
    });

    auto add_factorizer = [&](const char* name, const char* help, Factorization (*f)(const Word&)) {
        auto* cmd = app.add_subcommand(name, help);
        add_word_input(cmd, in);
        cmd->callback([&, f] {
            action = [&, f] {
                require_format(format, {"text", "json"});
                auto fact = f(resolve(in));
                out << (format == "json" ? factorization_to_json(fact).dump() : fact.to_text()) << "\n";
                return ok;
            };
        });
    };
    add_factorizer("lz", "LZ-factorization", lz_factorize);
    add_factorizer("cfact", "C-factorization", c_factorize);
    add_factorizer("sg", "semi-greedy factorization", [](const Word& w) { return semi_greedy(w); });

    std::string grammar_file;
    auto* gf = app.add_subcommand("gfact", "g-factorization of a grammar (JSON file, - for stdin)");
    gf->add_option("grammar", grammar_file, "grammar JSON")->required();
    gf->callback([&] {
        action = [&] {
            auto g = read_grammar(grammar_file);
            if (format == "dot") out << partial_derivation_tree(g).to_dot();
            else if (format == "json") out << factorization_to_json(g_factorization(g)).dump() << "\n";
            else out << g_factorization(g).to_text() << "\n";
            return ok;
        };
    });

    auto* ex = app.add_subcommand("expand", "the word derived by a grammar (JSON file, - for stdin)");
    ex->add_option("grammar", grammar_file, "grammar JSON")->required();
    ex->callback([&] {
        action = [&] {
            auto g = read_grammar(grammar_file);
            if (format == "dot") out << derivation_tree(g).to_dot();
            else if (format == "json") out << json{{"word", expand(g).str()}}.dump() << "\n";
            else out << expand(g).str() << "\n";
            return ok;
        };
    });

    bool enumerate = false;
    std::optional<std::size_t> budget;
    auto* orc = app.add_subcommand("oracle", "exact smallest grammar size");
    add_word_input(orc, in);
    orc->add_flag("--enumerate", enumerate, "list every smallest grammar");
    orc->add_option("--budget", budget, "longest input the search accepts");
    orc->callback([&] {
        action = [&] {
            require_format(format, {"text", "json"});
            auto w = resolve(in);
            OracleOptions options;
            options.max_length = budget ? *budget : oracle_budget(enumerate ? kEnumerateMaxLength : options.max_length);
            if (!enumerate) {
                auto r = solve_smallest(w, options);
                if (format == "json") out << summary_json(r, std::nullopt).dump() << "\n";
                else out << "g* " << r.g_star << "\nlower bound " << r.lower_bound << "\nupper bound " << r.upper_bound << "\n";
                return ok;
            }
            auto e = enumerate_smallest(w, options);
            if (format == "json") {
                out << summary_json(e.summary, e.grammars.size()).dump() << "\n";
                for (const auto& g : e.grammars) out << grammar_to_json(g).dump() << "\n";
            } else {
                out << "g* " << e.summary.g_star << "\ncount " << e.grammars.size() << "\n";
                for (const auto& g : e.grammars) out << grammar_line(g) << "\n";
            }
            return ok;
        };
    });

    int order = 0;
    auto* gr = app.add_subcommand("graph", "strategy graph of RePair on F_n");
    gr->add_option("n", order, "order n >= 6")->required();
    gr->callback([&] {
        action = [&] {
            auto g = strategy_graph(order);
            if (format == "json") {
                json doc{{"source", g.source().label()}, {"paths", g.path_count()}};
                for (const auto& v : g.vertices()) doc["vertices"].push_back(v.label());
                for (const auto& e : g.edges()) doc["edges"].push_back({e.from.label(), e.to.label()});
                for (const auto& s : g.sinks()) doc["sinks"].push_back(s.label());
                out << doc.dump() << "\n";
            } else {
                out << g.to_dot();
            }
            return ok;
        };
    });

    std::string claims = "all";
    int n_max = 12;
    std::uint64_t seed = 0;
    auto* vf = app.add_subcommand("verify", "run claim checks");
    vf->add_option("--claims", claims, "comma-separated claim ids, 'cases' or 'all'");
    vf->add_option("--nmax", n_max, "largest order to sweep");
    vf->add_option("--seed", seed, "seed for randomized sweeps");
    vf->add_flag("--list", [&](std::int64_t) {
        action = [&] {
            for (const auto& id : claim_ids()) out << id << "\n";
            return ok;
        };
    }, "list claim ids");
    vf->callback([&] {
        if (action) return;
        action = [&] {
            require_format(format, {"text", "json"});
            auto reports = run_suite(split_claims(claims), n_max, seed);
            bool all = true;
            for (const auto& r : reports) {
                all = all && r.passed;
                out << (format == "json" ? report_to_json(r).dump() : report_row(r)) << "\n";
            }
            return all ? ok : check_failed;
        };
    });

    std::vector<std::string> argv_storage{"slpkit"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return action ? action() : static_cast<int>(usage_error);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage_error;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what();
        if (e.bracket()) err << " (g* in [" << e.bracket()->lower << ", " << e.bracket()->upper << "])";
        err << "\n";
        return resource_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace slp::cli
