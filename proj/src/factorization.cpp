#include "slp/factorization.hpp"

#include "slp/errors.hpp"

namespace slp {

std::string_view to_string(FactorizationKind kind) {
    switch (kind) {
    case FactorizationKind::lz: return "lz";
    case FactorizationKind::c: return "c";
    case FactorizationKind::semi_greedy: return "sg";
    case FactorizationKind::g: return "g";
    }
    return "?";
}

Factorization::Factorization(Word subject, std::vector<std::size_t> ends, FactorizationKind kind)
    : subject_(std::move(subject)), ends_(std::move(ends)), kind_(kind) {
    if (subject_.empty()) {
        if (!ends_.empty()) throw DomainError("factorization of the empty word has no phrases");
        return;
    }
    std::size_t prev = 0;
    for (auto e : ends_) {
        if (e <= prev) throw DomainError("factorization phrases must be non-empty and increasing");
        prev = e;
    }
    if (prev != subject_.size()) throw DomainError("factorization phrases must cover the subject");
}

Factorization Factorization::from_lengths(Word subject, std::span<const std::size_t> lengths,
                                          FactorizationKind kind) {
    std::vector<std::size_t> ends;
    ends.reserve(lengths.size());
    std::size_t pos = 0;
    for (auto len : lengths) ends.push_back(pos += len);
    return Factorization(std::move(subject), std::move(ends), kind);
}

std::vector<Word> Factorization::phrases() const {
    std::vector<Word> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) out.push_back(phrase(k));
    return out;
}

std::vector<std::size_t> Factorization::lengths() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t k = 0; k < size(); ++k) out.push_back(phrase_length(k));
    return out;
}

std::string Factorization::to_text() const {
    std::string out;
    for (std::size_t k = 0; k < size(); ++k) {
        if (k > 0) out.push_back('|');
        out += phrase(k).str();
    }
    return out;
}

} // namespace slp
