#include "sclab/automata.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace sclab {

namespace {

void require_same_alphabet(const Alphabet& x, const Alphabet& y)
{
    if (!(x == y))
        throw AlphabetMismatch();
}

bool is_sorted_unique(const StateSet& s)
{
    return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

void check_states(const StateSet& s, std::size_t state_count, const char* what)
{
    if (!is_sorted_unique(s))
        throw InvalidArgument(std::string(what) + " must be sorted and duplicate free");
    if (!s.empty() && s.back() >= state_count)
        throw InvalidArgument(std::string(what) + " refers to a state out of range");
}

// Dense bitset over NFA states, used as the subset key in determinize.
using SubsetKey = std::vector<std::uint64_t>;

struct SubsetKeyHash {
    std::size_t operator()(const SubsetKey& k) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : k) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Refinable partition for Hopcroft's algorithm. Each block occupies the
// range [first, end) of `elems`; the prefix [first, mid) holds marked states.
class Partition {
public:
    explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0)
    {
        for (std::size_t i = 0; i < n; ++i) {
            elems_[i] = static_cast<State>(i);
            loc_[i] = i;
        }
        if (n > 0) {
            first_.push_back(0);
            mid_.push_back(0);
            end_.push_back(n);
        }
    }

    std::size_t block_count() const noexcept { return first_.size(); }
    std::size_t block_of(State q) const noexcept { return block_of_[q]; }
    std::size_t size(std::size_t b) const noexcept { return end_[b] - first_[b]; }
    std::span<const State> members(std::size_t b) const
    {
        return {elems_.data() + first_[b], size(b)};
    }

    /// Returns true if q's block had no marked state before.
    bool mark(State q)
    {
        std::size_t b = block_of_[q];
        std::size_t i = loc_[q];
        if (i < mid_[b])
            return false;
        std::size_t j = mid_[b]++;
        std::swap(elems_[i], elems_[j]);
        loc_[elems_[i]] = i;
        loc_[elems_[j]] = j;
        return j == first_[b];
    }

    /// Splits off the marked part of b as a new block and returns its index,
    /// or nothing if all or none of b is marked. Clears the marks.
    std::optional<std::size_t> split(std::size_t b)
    {
        if (mid_[b] == end_[b] || mid_[b] == first_[b]) {
            mid_[b] = first_[b];
            return std::nullopt;
        }
        std::size_t nb = first_.size();
        first_.push_back(first_[b]);
        end_.push_back(mid_[b]);
        mid_.push_back(first_[b]);
        first_[b] = mid_[b];
        for (std::size_t i = first_[nb]; i < end_[nb]; ++i)
            block_of_[elems_[i]] = nb;
        return nb;
    }

private:
    std::vector<State> elems_;
    std::vector<std::size_t> loc_;
    std::vector<std::size_t> block_of_;
    std::vector<std::size_t> first_, mid_, end_;
};

// Hopcroft partition refinement. Returns the class index of every state.
std::vector<std::size_t> hopcroft_classes(const Dfa& d)
{
    const std::size_t n = d.state_count();
    const std::size_t k = d.alphabet().size();

    // Inverse transitions in CSR form, per symbol.
    std::vector<std::size_t> inv_start(k * (n + 1), 0);
    std::vector<State> inv(k * n);
    for (Symbol s = 0; s < k; ++s) {
        std::size_t* start = inv_start.data() + s * (n + 1);
        for (State q = 0; q < n; ++q)
            ++start[d.next(q, s) + 1];
        for (std::size_t t = 0; t < n; ++t)
            start[t + 1] += start[t];
        std::vector<std::size_t> fill(start, start + n);
        for (State q = 0; q < n; ++q)
            inv[s * n + fill[d.next(q, s)]++] = q;
    }
    auto preds = [&](Symbol s, State t) {
        const std::size_t* start = inv_start.data() + s * (n + 1);
        return std::span<const State>(inv.data() + s * n + start[t], start[t + 1] - start[t]);
    };

    Partition part(n);
    for (State q = 0; q < n; ++q)
        if (d.is_final(q))
            part.mark(q);
    part.split(0);

    std::vector<std::pair<std::size_t, Symbol>> work;
    std::vector<bool> pending; // indexed by block * k + symbol
    auto push = [&](std::size_t b, Symbol s) {
        if (pending.size() < (b + 1) * k)
            pending.resize((b + 1) * k, false);
        if (!pending[b * k + s]) {
            pending[b * k + s] = true;
            work.emplace_back(b, s);
        }
    };
    if (part.block_count() == 2) {
        std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
        for (Symbol s = 0; s < k; ++s)
            push(smaller, s);
    }

    std::vector<State> splitter;
    std::vector<std::size_t> touched;
    while (!work.empty()) {
        auto [b, s] = work.back();
        work.pop_back();
        pending[b * k + s] = false;

        auto m = part.members(b);
        splitter.assign(m.begin(), m.end());
        touched.clear();
        for (State t : splitter)
            for (State q : preds(s, t))
                if (part.mark(q))
                    touched.push_back(part.block_of(q));

        for (std::size_t y : touched) {
            auto nb = part.split(y);
            if (!nb)
                continue;
            for (Symbol c = 0; c < k; ++c) {
                bool y_pending = pending.size() > y * k + c && pending[y * k + c];
                if (y_pending)
                    push(*nb, c);
                else
                    push(part.size(*nb) <= part.size(y) ? *nb : y, c);
            }
        }
    }

    std::vector<std::size_t> cls(n);
    for (State q = 0; q < n; ++q)
        cls[q] = part.block_of(q);
    return cls;
}

} // namespace

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols))
{
    std::string sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("alphabet symbols must be distinct");
}

std::optional<Symbol> Alphabet::find(char c) const noexcept
{
    auto pos = symbols_.find(c);
    if (pos == std::string::npos)
        return std::nullopt;
    return static_cast<Symbol>(pos);
}

Symbol Alphabet::index_of(char c) const
{
    if (auto s = find(c))
        return *s;
    throw UnknownSymbol(c);
}

Word Alphabet::word(std::string_view text) const
{
    Word w;
    w.reserve(text.size());
    for (char c : text)
        w.push_back(index_of(c));
    return w;
}

// --------------------------------------------------------------------- Dfa

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State initial, std::vector<bool> finals,
         std::vector<State> delta)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_(initial),
      finals_(std::move(finals)), delta_(std::move(delta))
{
    if (state_count_ == 0)
        throw InvalidArgument("a complete DFA needs at least one state");
    if (initial_ >= state_count_)
        throw InvalidArgument("initial state out of range");
    if (finals_.size() != state_count_)
        throw InvalidArgument("final mask size differs from the state count");
    if (delta_.size() != state_count_ * alphabet_.size())
        throw InvalidArgument("transition table is not complete");
    for (State t : delta_)
        if (t >= state_count_)
            throw InvalidArgument("transition target out of range");
}

Dfa Dfa::from_final_list(Alphabet alphabet, std::size_t state_count, State initial,
                         std::span<const State> finals, std::vector<State> delta)
{
    std::vector<bool> mask(state_count, false);
    for (State f : finals) {
        if (f >= state_count)
            throw InvalidArgument("final state out of range");
        mask[f] = true;
    }
    return Dfa(std::move(alphabet), state_count, initial, std::move(mask), std::move(delta));
}

StateSet Dfa::finals() const
{
    StateSet out;
    for (State q = 0; q < state_count_; ++q)
        if (finals_[q])
            out.push_back(q);
    return out;
}

// --------------------------------------------------------------------- Nfa

Nfa::Nfa(Alphabet alphabet, std::size_t state_count, StateSet initials, StateSet finals,
         std::vector<StateSet> delta)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initials_(std::move(initials)),
      finals_(std::move(finals)), delta_(std::move(delta))
{
    check_states(initials_, state_count_, "initial set");
    check_states(finals_, state_count_, "final set");
    if (delta_.size() != state_count_ * alphabet_.size())
        throw InvalidArgument("transition table is not complete");
    for (const auto& img : delta_)
        check_states(img, state_count_, "transition image");
}

bool Nfa::is_final(State q) const
{
    return std::binary_search(finals_.begin(), finals_.end(), q);
}

// --------------------------------------------------------------- BooleanOp

namespace {

struct OpInfo {
    std::string_view name;
    std::string_view label;
};

constexpr std::array<OpInfo, 16> op_table{{
    {"empty", "∅"},
    {"and", "N∩P"},
    {"n_minus_p", "N∩P̄"},
    {"n", "N"},
    {"p_minus_n", "N̄∩P"},
    {"p", "P"},
    {"xor", "N⊕P"},
    {"or", "N∪P"},
    {"nor", "N̄∩P̄"},
    {"xnor", "N̄⊕P"},
    {"not_p", "P̄"},
    {"n_or_not_p", "N∪P̄"},
    {"not_n", "N̄"},
    {"not_n_or_p", "N̄∪P"},
    {"nand", "N̄∪P̄"},
    {"all", "Σ*"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 18> op_aliases{{
    {"intersection", "and"},
    {"inter", "and"},
    {"∩", "and"},
    {"union", "or"},
    {"∪", "or"},
    {"symdiff", "xor"},
    {"⊕", "xor"},
    {"difference", "n_minus_p"},
    {"minus", "n_minus_p"},
    {"diff", "n_minus_p"},
    {"rdiff", "p_minus_n"},
    {"iff", "xnor"},
    {"equiv", "xnor"},
    {"implies", "not_n_or_p"},
    {"converse", "n_or_not_p"},
    {"false", "empty"},
    {"true", "all"},
    {"universe", "all"},
}};

} // namespace

std::optional<BooleanOp> BooleanOp::parse(std::string_view name)
{
    for (const auto& [alias, canonical] : op_aliases)
        if (alias == name) {
            name = canonical;
            break;
        }
    for (unsigned code = 0; code < count; ++code)
        if (op_table[code].name == name || op_table[code].label == name)
            return BooleanOp(code);
    return std::nullopt;
}

bool BooleanOp::is_degenerate() const noexcept
{
    // Depends on at most one argument iff flipping either argument never
    // changes the result, or flipping the other one never does.
    bool depends_n = false, depends_p = false;
    for (unsigned x = 0; x < 2; ++x) {
        depends_n |= (*this)(false, x) != (*this)(true, x);
        depends_p |= (*this)(x, false) != (*this)(x, true);
    }
    return !(depends_n && depends_p);
}

std::string_view BooleanOp::name() const noexcept { return op_table[code_].name; }

std::string_view BooleanOp::label() const noexcept { return op_table[code_].label; }

std::vector<BooleanOp> all_boolean_ops()
{
    std::vector<BooleanOp> ops;
    for (unsigned code = 0; code < BooleanOp::count; ++code)
        ops.emplace_back(code);
    return ops;
}

std::vector<BooleanOp> non_degenerate_ops()
{
    std::vector<BooleanOp> ops;
    for (auto op : all_boolean_ops())
        if (!op.is_degenerate())
            ops.push_back(op);
    return ops;
}

std::vector<std::pair<std::string_view, std::string_view>> boolean_op_aliases()
{
    return {op_aliases.begin(), op_aliases.end()};
}

// -------------------------------------------------------------- operations

Dfa accessible(const Dfa& d)
{
    const std::size_t k = d.alphabet().size();
    std::vector<State> index(d.state_count(), State(-1));
    std::vector<State> order{d.initial()};
    index[d.initial()] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Symbol s = 0; s < k; ++s) {
            State t = d.next(order[head], s);
            if (index[t] == State(-1)) {
                index[t] = static_cast<State>(order.size());
                order.push_back(t);
            }
        }

    std::vector<bool> finals(order.size());
    std::vector<State> delta(order.size() * k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        finals[i] = d.is_final(order[i]);
        for (Symbol s = 0; s < k; ++s)
            delta[i * k + s] = index[d.next(order[i], s)];
    }
    return Dfa(d.alphabet(), order.size(), 0, std::move(finals), std::move(delta));
}

Dfa determinize(const Nfa& n)
{
    const std::size_t k = n.alphabet().size();
    const std::size_t words = (n.state_count() + 63) / 64;
    auto key_of = [&](const StateSet& s) {
        SubsetKey key(words, 0);
        for (State q : s)
            key[q / 64] |= std::uint64_t(1) << (q % 64);
        return key;
    };

    std::unordered_map<SubsetKey, State, SubsetKeyHash> index;
    std::vector<StateSet> subsets;
    auto intern = [&](StateSet s) {
        auto [it, fresh] = index.try_emplace(key_of(s), static_cast<State>(subsets.size()));
        if (fresh)
            subsets.push_back(std::move(s));
        return it->second;
    };

    intern(n.initials());
    std::vector<State> delta;
    std::vector<bool> finals;
    StateSet image;
    for (std::size_t head = 0; head < subsets.size(); ++head) {
        const StateSet current = subsets[head];
        finals.push_back(std::any_of(current.begin(), current.end(),
                                     [&](State q) { return n.is_final(q); }));
        for (Symbol s = 0; s < k; ++s) {
            image.clear();
            for (State q : current) {
                const auto& img = n.next(q, s);
                image.insert(image.end(), img.begin(), img.end());
            }
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            delta.push_back(intern(image));
        }
    }
    return Dfa(n.alphabet(), subsets.size(), 0, std::move(finals), std::move(delta));
}

Dfa minimize(const Dfa& d)
{
    const Dfa acc = accessible(d);
    const std::size_t k = acc.alphabet().size();
    const auto cls = hopcroft_classes(acc);

    // Renumber classes by BFS over the quotient from the initial class.
    std::size_t class_count = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<State> rep(class_count, State(-1));
    for (State q = 0; q < acc.state_count(); ++q)
        if (rep[cls[q]] == State(-1))
            rep[cls[q]] = q;

    std::vector<State> index(class_count, State(-1));
    std::vector<std::size_t> order{cls[acc.initial()]};
    index[order[0]] = 0;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Symbol s = 0; s < k; ++s) {
            std::size_t c = cls[acc.next(rep[order[head]], s)];
            if (index[c] == State(-1)) {
                index[c] = static_cast<State>(order.size());
                order.push_back(c);
            }
        }

    std::vector<bool> finals(class_count);
    std::vector<State> delta(class_count * k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        State q = rep[order[i]];
        finals[i] = acc.is_final(q);
        for (Symbol s = 0; s < k; ++s)
            delta[i * k + s] = index[cls[acc.next(q, s)]];
    }
    return Dfa(acc.alphabet(), class_count, 0, std::move(finals), std::move(delta));
}

Nfa catenate(const Dfa& a, const Dfa& b)
{
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t k = a.alphabet().size();
    const auto shift = static_cast<State>(a.state_count());
    const State b_init = shift + b.initial();
    const std::size_t total = a.state_count() + b.state_count();

    StateSet initials{a.initial()};
    if (a.is_final(a.initial()))
        initials.push_back(b_init);

    StateSet finals;
    if (b.is_final(b.initial()))
        for (State q : a.finals())
            finals.push_back(q);
    for (State q : b.finals())
        finals.push_back(shift + q);

    std::vector<StateSet> delta(total * k);
    for (State q = 0; q < a.state_count(); ++q)
        for (Symbol s = 0; s < k; ++s) {
            State t = a.next(q, s);
            auto& img = delta[q * k + s];
            img.push_back(t);
            if (a.is_final(t))
                img.push_back(b_init);
        }
    for (State q = 0; q < b.state_count(); ++q)
        for (Symbol s = 0; s < k; ++s)
            delta[(shift + q) * k + s] = {shift + b.next(q, s)};

    return Nfa(a.alphabet(), total, std::move(initials), std::move(finals), std::move(delta));
}

Dfa boolean_product(const Dfa& b, const Dfa& c, BooleanOp op)
{
    require_same_alphabet(b.alphabet(), c.alphabet());
    const std::size_t k = b.alphabet().size();
    const std::size_t nc = c.state_count();
    const std::size_t total = b.state_count() * nc;

    std::vector<bool> finals(total);
    std::vector<State> delta(total * k);
    for (State q = 0; q < b.state_count(); ++q)
        for (State r = 0; r < nc; ++r) {
            std::size_t i = q * nc + r;
            finals[i] = op(b.is_final(q), c.is_final(r));
            for (Symbol s = 0; s < k; ++s)
                delta[i * k + s] = static_cast<State>(b.next(q, s) * nc + c.next(r, s));
        }
    auto initial = static_cast<State>(b.initial() * nc + c.initial());
    return Dfa(b.alphabet(), total, initial, std::move(finals), std::move(delta));
}

Dfa complement(const Dfa& d)
{
    std::vector<bool> finals = d.final_mask();
    finals.flip();
    return Dfa(d.alphabet(), d.state_count(), d.initial(), std::move(finals), d.table());
}

bool equivalent(const Dfa& a, const Dfa& b)
{
    require_same_alphabet(a.alphabet(), b.alphabet());
    const std::size_t k = a.alphabet().size();
    const std::uint64_t nb = b.state_count();
    std::unordered_set<std::uint64_t> seen;
    std::deque<std::pair<State, State>> queue;
    auto visit = [&](State x, State y) {
        if (seen.insert(x * nb + y).second)
            queue.emplace_back(x, y);
    };
    visit(a.initial(), b.initial());
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        if (a.is_final(x) != b.is_final(y))
            return false;
        for (Symbol s = 0; s < k; ++s)
            visit(a.next(x, s), b.next(y, s));
    }
    return true;
}

bool accepts(const Dfa& d, std::span<const Symbol> word)
{
    State q = d.initial();
    for (Symbol s : word) {
        if (s >= d.alphabet().size())
            throw InvalidArgument("symbol index out of range");
        q = d.next(q, s);
    }
    return d.is_final(q);
}

bool accepts(const Dfa& d, std::string_view word)
{
    return accepts(d, d.alphabet().word(word));
}

bool accepts(const Nfa& n, std::span<const Symbol> word)
{
    std::vector<bool> current(n.state_count(), false);
    for (State q : n.initials())
        current[q] = true;
    for (Symbol s : word) {
        if (s >= n.alphabet().size())
            throw InvalidArgument("symbol index out of range");
        std::vector<bool> next(n.state_count(), false);
        for (State q = 0; q < n.state_count(); ++q)
            if (current[q])
                for (State t : n.next(q, s))
                    next[t] = true;
        current = std::move(next);
    }
    for (State f : n.finals())
        if (current[f])
            return true;
    return false;
}

Nfa to_nfa(const Dfa& d)
{
    const std::size_t k = d.alphabet().size();
    std::vector<StateSet> delta(d.state_count() * k);
    for (State q = 0; q < d.state_count(); ++q)
        for (Symbol s = 0; s < k; ++s)
            delta[q * k + s] = {d.next(q, s)};
    return Nfa(d.alphabet(), d.state_count(), {d.initial()}, d.finals(), std::move(delta));
}

} // namespace sclab
