#include "slp/morphism.hpp"

#include <algorithm>

namespace slp {

Morphism::Morphism(std::vector<std::pair<Symbol, Word>> images, bool identity_elsewhere)
    : images_(std::move(images)), identity_elsewhere_(identity_elsewhere) {
    std::sort(images_.begin(), images_.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i].second.empty()) throw DomainError("morphism images must be non-empty");
        if (i > 0 && images_[i - 1].first == images_[i].first) {
            throw DomainError("morphism lists symbol " + images_[i].first.name() + " twice");
        }
    }
}

Morphism Morphism::fibonacci(OrderedAlphabet ab) {
    auto a = ab.first(), b = ab.second();
    return Morphism({{a, Word{a, b}}, {b, Word{a}}});
}

Morphism Morphism::pi(OrderedAlphabet ab) {
    auto a = ab.first(), b = ab.second();
    return Morphism({{a, Word{a, b}}, {b, Word{a, b, b}}});
}

Morphism Morphism::theta(OrderedAlphabet ab) {
    auto a = ab.first(), b = ab.second();
    return Morphism({{a, Word{a, a, b}}, {b, Word{a, b}}});
}

const Word* Morphism::find(Symbol s) const {
    auto it = std::lower_bound(images_.begin(), images_.end(), s,
                               [](const auto& entry, Symbol key) { return entry.first < key; });
    if (it == images_.end() || it->first != s) return nullptr;
    return &it->second;
}

bool Morphism::in_domain(Symbol s) const { return identity_elsewhere_ || find(s) != nullptr; }

Word Morphism::image(Symbol s) const {
    if (const Word* w = find(s)) return *w;
    if (identity_elsewhere_) return Word{s};
    throw DomainError("symbol " + s.name() + " is outside the morphism's domain");
}

Word Morphism::operator()(const Word& w) const {
    std::vector<Symbol> out;
    out.reserve(w.size() * 2);
    for (auto s : w) {
        if (const Word* img = find(s)) {
            out.insert(out.end(), img->begin(), img->end());
        } else if (identity_elsewhere_) {
            out.push_back(s);
        } else {
            throw DomainError("symbol " + s.name() + " is outside the morphism's domain");
        }
    }
    return Word(std::move(out));
}

Word Morphism::power(const Word& w, int times) const {
    if (times < 0) throw DomainError("negative morphism power");
    Word out = w;
    for (int i = 0; i < times; ++i) out = (*this)(out);
    return out;
}

Word apply_morphism(const Morphism& m, const Word& w) { return m(w); }

Morphism reverse_phi(Symbol x, Word y) {
    if (y.empty()) throw DomainError("reverse_phi needs a non-empty replacement");
    return Morphism({{x, std::move(y)}}, /*identity_elsewhere=*/true);
}

} // namespace slp
