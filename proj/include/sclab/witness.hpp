#ifndef SCLAB_WITNESS_HPP
#define SCLAB_WITNESS_HPP

#include <string_view>
#include <vector>

#include "sclab/automata.hpp"

namespace sclab {

/// Which symbol of {a,b,c,d} plays which role in a Brzozowski automaton.
struct LetterRoles {
    char cycle = 'a';         ///< (0, 1, ..., n-1)
    char transposition = 'b'; ///< (n-2, n-1)
    char contraction = 'c';   ///< 1 -> 0, everything else fixed
    char identity = 'd';

    /// Throws InvalidArgument unless the four symbols are distinct letters
    /// of {a,b,c,d}.
    void validate() const;
};

/// The alphabet shared by every witness automaton: "abcd".
const Alphabet& witness_alphabet();

/// Brzozowski automaton on states 0..n-1, initial 0, final {n-1}.
/// Throws SizeTooSmall if n < 3.
Dfa brzozowski(std::size_t n, const LetterRoles& roles = {});

struct WitnessTriple {
    Dfa a; ///< m states, roles (cycle a, transposition c, contraction b, identity d)
    Dfa b; ///< n states, roles (a, b, c, d)
    Dfa c; ///< p states, roles (cycle d, transposition b, contraction c, identity a)
};

/// Throws SizeTooSmall unless m, n, p >= 3.
WitnessTriple witness_triple(std::size_t m, std::size_t n, std::size_t p);

/// Transformation of the states: entry q is the image of q.
using Transformation = std::vector<State>;

Transformation word_action(const Dfa& d, std::span<const Symbol> word);
/// Throws UnknownSymbol.
Transformation word_action(const Dfa& d, std::string_view word);

bool is_permutation(const Transformation& t);

} // namespace sclab

#endif
