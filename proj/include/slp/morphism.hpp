#pragma once

#include <utility>
#include <vector>

#include "slp/word.hpp"

namespace slp {

/// A string morphism: symbol -> non-empty word, applied symbol-wise.
///
/// A morphism either has a declared domain (applying it to a symbol outside
/// the domain is a DomainError) or acts as the identity outside its listed
/// images, which is how the substitution X -> y is represented.
class Morphism {
public:
    Morphism(std::vector<std::pair<Symbol, Word>> images, bool identity_elsewhere = false);

    /// phi^(a,b): a -> ab, b -> a.
    static Morphism fibonacci(OrderedAlphabet ab);
    /// pi^(a,b): a -> ab, b -> abb.
    static Morphism pi(OrderedAlphabet ab);
    /// theta^(a,b): a -> aab, b -> ab.
    static Morphism theta(OrderedAlphabet ab);

    bool in_domain(Symbol s) const;
    bool identity_elsewhere() const noexcept { return identity_elsewhere_; }

    /// Image of a single symbol.
    Word image(Symbol s) const;

    Word operator()(const Word& w) const;

    /// The morphism applied `times` times.
    Word power(const Word& w, int times) const;

private:
    const Word* find(Symbol s) const;

    std::vector<std::pair<Symbol, Word>> images_; // sorted by symbol
    bool identity_elsewhere_;
};

Word apply_morphism(const Morphism& m, const Word& w);

/// psi_{X->y}: replaces every X by y and fixes every other symbol.
Morphism reverse_phi(Symbol x, Word y);

} // namespace slp
