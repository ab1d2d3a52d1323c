#pragma once

#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "slp/morphism.hpp"
#include "slp/word.hpp"

namespace slp {

using BigInt = boost::multiprecision::cpp_int;

/// f_i with f_1 = f_2 = 1.
BigInt fib_number(int i);

/// Longest word the generators will build. Default 10^7 symbols.
std::size_t generator_length_cap();
void set_generator_length_cap(std::size_t cap);

/// F_i^(a,b): F_1 = b, F_2 = a, F_i = F_{i-1} F_{i-2}.
Word fib_word(int i, OrderedAlphabet ab = OrderedAlphabet::ab());
/// P_i^(a,b) = pi^{i-1}(a); |P_i| = f_{2i-1}.
Word p_word(int i, OrderedAlphabet ab = OrderedAlphabet::ab());
/// Q_i^(a,b) = theta^{i-1}(a); |Q_i| = f_{2i}.
Word q_word(int i, OrderedAlphabet ab = OrderedAlphabet::ab());

/// w[|w|] w[1..|w|-1].
Word right_rotation(const Word& w);
Word reverse(const Word& w);

} // namespace slp
