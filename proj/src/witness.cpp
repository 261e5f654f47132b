#include "sclab/witness.hpp"

#include <algorithm>
#include <numeric>

namespace sclab {

void LetterRoles::validate() const
{
    std::string letters{cycle, transposition, contraction, identity};
    std::string sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != "abcd")
        throw InvalidArgument("letter roles must be a permutation of a, b, c, d (got \"" +
                              letters + "\")");
}

const Alphabet& witness_alphabet()
{
    static const Alphabet sigma("abcd");
    return sigma;
}

Dfa brzozowski(std::size_t n, const LetterRoles& roles)
{
    if (n < 3)
        throw SizeTooSmall("Brzozowski automata need at least 3 states");
    roles.validate();
    const Alphabet& sigma = witness_alphabet();
    const std::size_t k = sigma.size();
    const Symbol cycle = sigma.index_of(roles.cycle);
    const Symbol transposition = sigma.index_of(roles.transposition);
    const Symbol contraction = sigma.index_of(roles.contraction);
    const Symbol identity = sigma.index_of(roles.identity);

    std::vector<State> delta(n * k);
    for (State q = 0; q < n; ++q) {
        delta[q * k + cycle] = static_cast<State>((q + 1) % n);
        State swapped = q;
        if (q == n - 2)
            swapped = static_cast<State>(n - 1);
        else if (q == n - 1)
            swapped = static_cast<State>(n - 2);
        delta[q * k + transposition] = swapped;
        delta[q * k + contraction] = q == 1 ? 0 : q;
        delta[q * k + identity] = q;
    }
    const State final_state = static_cast<State>(n - 1);
    return Dfa::from_final_list(sigma, n, 0, std::span(&final_state, 1), std::move(delta));
}

WitnessTriple witness_triple(std::size_t m, std::size_t n, std::size_t p)
{
    if (m < 3 || n < 3 || p < 3)
        throw SizeTooSmall("the witness triple needs m, n, p >= 3");
    return {
        brzozowski(m, {'a', 'c', 'b', 'd'}),
        brzozowski(n, {'a', 'b', 'c', 'd'}),
        brzozowski(p, {'d', 'b', 'c', 'a'}),
    };
}

Transformation word_action(const Dfa& d, std::span<const Symbol> word)
{
    Transformation t(d.state_count());
    std::iota(t.begin(), t.end(), State(0));
    for (Symbol s : word) {
        if (s >= d.alphabet().size())
            throw InvalidArgument("symbol index out of range");
        for (auto& q : t)
            q = d.next(q, s);
    }
    return t;
}

Transformation word_action(const Dfa& d, std::string_view word)
{
    return word_action(d, d.alphabet().word(word));
}

bool is_permutation(const Transformation& t)
{
    std::vector<bool> hit(t.size(), false);
    for (State q : t) {
        if (q >= t.size() || hit[q])
            return false;
        hit[q] = true;
    }
    return true;
}

} // namespace sclab
