#include "slp/serialize.hpp"

#include "slp/errors.hpp"

namespace slp {

nlohmann::json grammar_to_json(const Grammar& g) {
    nlohmann::json productions = nlohmann::json::array();
    for (const auto& p : g.productions()) {
        nlohmann::json rule;
        rule["lhs"] = g.name(p.lhs);
        if (p.is_unary()) {
            rule["rhs"] = std::string(1, static_cast<char>(p.terminal().code()));
        } else {
            rule["rhs"] = {g.name(p.pair().left), g.name(p.pair().right)};
        }
        productions.push_back(std::move(rule));
    }
    return {{"start", g.name(g.start())}, {"productions", std::move(productions)}};
}

Grammar grammar_from_json(const nlohmann::json& doc) {
    auto bad = [](const std::string& what) { return DomainError("grammar JSON: " + what); };
    if (!doc.is_object()) throw bad("expected an object");
    if (!doc.contains("start") || !doc["start"].is_string()) throw bad("missing string field \"start\"");
    if (!doc.contains("productions") || !doc["productions"].is_array()) {
        throw bad("missing array field \"productions\"");
    }
    GrammarBuilder b;
    for (const auto& rule : doc["productions"]) {
        if (!rule.is_object() || !rule.contains("lhs") || !rule["lhs"].is_string() || !rule.contains("rhs")) {
            throw bad("each production needs \"lhs\" and \"rhs\"");
        }
        auto lhs = rule["lhs"].get<std::string>();
        const auto& rhs = rule["rhs"];
        if (rhs.is_string()) {
            auto text = rhs.get<std::string>();
            if (text.size() != 1) throw bad("unary rhs of " + lhs + " must be a single character");
            b.unary(lhs, Symbol::terminal(static_cast<unsigned char>(text[0])));
        } else if (rhs.is_array() && rhs.size() == 2 && rhs[0].is_string() && rhs[1].is_string()) {
            b.binary(lhs, rhs[0].get<std::string>(), rhs[1].get<std::string>());
        } else {
            throw bad("rhs of " + lhs + " must be a character or a pair of names");
        }
    }
    return b.build(doc["start"].get<std::string>());
}

nlohmann::json factorization_to_json(const Factorization& f) {
    nlohmann::json phrases = nlohmann::json::array();
    for (const auto& p : f.phrases()) phrases.push_back(p.str());
    return {{"phrases", std::move(phrases)}};
}

} // namespace slp
