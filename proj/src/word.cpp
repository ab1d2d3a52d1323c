#include "slp/word.hpp"

#include <algorithm>
#include <unordered_set>

namespace slp {

Word Word::from_string(std::string_view text) {
    std::vector<Symbol> symbols;
    symbols.reserve(text.size());
    for (char c : text) symbols.push_back(Symbol::terminal(static_cast<unsigned char>(c)));
    return Word(std::move(symbols));
}

Word Word::substr(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos) throw DomainError("substring out of range");
    return Word(std::vector<Symbol>(symbols_.begin() + pos, symbols_.begin() + pos + len));
}

std::size_t Word::distinct_symbols() const {
    return std::unordered_set<Symbol>(symbols_.begin(), symbols_.end()).size();
}

std::vector<Symbol> Word::alphabet() const {
    std::vector<Symbol> out;
    std::unordered_set<Symbol> seen;
    for (auto s : symbols_) {
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

bool Word::contains(Symbol s) const { return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end(); }

bool Word::has_nonterminals() const {
    return std::any_of(symbols_.begin(), symbols_.end(), [](Symbol s) { return s.is_nonterminal(); });
}

std::string Word::str() const {
    std::string out;
    out.reserve(symbols_.size());
    for (auto s : symbols_) {
        if (s.is_terminal()) {
            out.push_back(static_cast<char>(s.code()));
        } else {
            out += s.name();
        }
    }
    return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
    std::vector<Symbol> out;
    out.reserve(lhs.size() + rhs.size());
    out.insert(out.end(), lhs.begin(), lhs.end());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return Word(std::move(out));
}

} // namespace slp
