#include "sclab/io.hpp"

#include <algorithm>

namespace sclab::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what)
{
    throw InvalidArgument("automaton document: " + what);
}

const json& field(const json& doc, const char* name)
{
    if (!doc.is_object())
        schema_error("expected an object");
    auto it = doc.find(name);
    if (it == doc.end())
        schema_error(std::string("missing field \"") + name + "\"");
    return *it;
}

State state_value(const json& v, std::size_t state_count, const char* what)
{
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= state_count)
        schema_error(std::string(what) + " must be a state index below " +
                     std::to_string(state_count));
    return v.get<State>();
}

StateSet state_list(const json& v, std::size_t state_count, const char* what)
{
    if (!v.is_array())
        schema_error(std::string(what) + " must be an array");
    StateSet out;
    for (const auto& x : v)
        out.push_back(state_value(x, state_count, what));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Alphabet alphabet_of(const json& doc)
{
    const json& a = field(doc, "alphabet");
    if (!a.is_array())
        schema_error("alphabet must be an array");
    std::string symbols;
    for (const auto& s : a) {
        if (!s.is_string() || s.get<std::string>().size() != 1)
            schema_error("alphabet entries must be 1-character strings");
        symbols += s.get<std::string>()[0];
    }
    return Alphabet(symbols);
}

std::size_t state_count_of(const json& doc)
{
    const json& s = field(doc, "states");
    if (!s.is_number_unsigned() || s.get<std::uint64_t>() == 0)
        schema_error("states must be a positive integer");
    return s.get<std::size_t>();
}

const json& transitions_for(const json& doc, char symbol, std::size_t state_count)
{
    const json& t = field(doc, "transitions");
    if (!t.is_object())
        schema_error("transitions must be an object");
    auto it = t.find(std::string(1, symbol));
    if (it == t.end())
        schema_error(std::string("no transitions for symbol '") + symbol + "'");
    if (!it->is_array() || it->size() != state_count)
        schema_error(std::string("transitions for '") + symbol + "' must list every state");
    return *it;
}

ordered_json alphabet_json(const Alphabet& a)
{
    ordered_json out = ordered_json::array();
    for (char c : a.symbols())
        out.push_back(std::string(1, c));
    return out;
}

} // namespace

ordered_json to_json(const Dfa& d)
{
    ordered_json doc;
    doc["alphabet"] = alphabet_json(d.alphabet());
    doc["states"] = d.state_count();
    doc["initial"] = d.initial();
    doc["finals"] = d.finals();
    ordered_json trans = ordered_json::object();
    for (Symbol s = 0; s < d.alphabet().size(); ++s) {
        ordered_json row = ordered_json::array();
        for (State q = 0; q < d.state_count(); ++q)
            row.push_back(d.next(q, s));
        trans[std::string(1, d.alphabet().symbol(s))] = std::move(row);
    }
    doc["transitions"] = std::move(trans);
    return doc;
}

ordered_json to_json(const Nfa& n)
{
    ordered_json doc;
    doc["alphabet"] = alphabet_json(n.alphabet());
    doc["states"] = n.state_count();
    doc["initials"] = n.initials();
    doc["finals"] = n.finals();
    ordered_json trans = ordered_json::object();
    for (Symbol s = 0; s < n.alphabet().size(); ++s) {
        ordered_json row = ordered_json::array();
        for (State q = 0; q < n.state_count(); ++q)
            row.push_back(n.next(q, s));
        trans[std::string(1, n.alphabet().symbol(s))] = std::move(row);
    }
    doc["transitions"] = std::move(trans);
    return doc;
}

Dfa dfa_from_json(const json& doc)
{
    Alphabet sigma = alphabet_of(doc);
    const std::size_t count = state_count_of(doc);
    const State initial = state_value(field(doc, "initial"), count, "initial");
    const StateSet finals = state_list(field(doc, "finals"), count, "finals");
    std::vector<State> delta(count * sigma.size());
    for (Symbol s = 0; s < sigma.size(); ++s) {
        const json& row = transitions_for(doc, sigma.symbol(s), count);
        for (State q = 0; q < count; ++q)
            delta[q * sigma.size() + s] = state_value(row[q], count, "transition target");
    }
    return Dfa::from_final_list(std::move(sigma), count, initial, finals, std::move(delta));
}

Nfa nfa_from_json(const json& doc)
{
    Alphabet sigma = alphabet_of(doc);
    const std::size_t count = state_count_of(doc);
    StateSet initials = state_list(field(doc, "initials"), count, "initials");
    StateSet finals = state_list(field(doc, "finals"), count, "finals");
    std::vector<StateSet> delta(count * sigma.size());
    for (Symbol s = 0; s < sigma.size(); ++s) {
        const json& row = transitions_for(doc, sigma.symbol(s), count);
        for (State q = 0; q < count; ++q)
            delta[q * sigma.size() + s] = state_list(row[q], count, "transition targets");
    }
    return Nfa(std::move(sigma), count, std::move(initials), std::move(finals), std::move(delta));
}

bool is_nfa_document(const json& doc) { return doc.is_object() && doc.contains("initials"); }

json parse_document(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(std::string("malformed document: ") + e.what());
    }
}

std::string_view status_of(const VerificationReport& r) { return r.passed() ? "PASS" : "FAILED"; }

ordered_json to_json(const VerificationReport& r, bool with_timing)
{
    ordered_json doc;
    doc["m"] = r.m;
    doc["n"] = r.n;
    doc["p"] = r.p;
    doc["op"] = r.op.name();
    doc["computed_sc"] = std::to_string(r.computed_sc);
    doc["predicted"] = r.predicted.str();
    doc["bound_only"] = r.bound_only;
    doc["accessible_count"] = std::to_string(r.accessible_count);
    doc["saturated_state_count"] = std::to_string(r.saturated_state_count);
    if (with_timing)
        doc["elapsed_ms"] = std::to_string(r.elapsed.count());
    doc["status"] = status_of(r);
    return doc;
}

std::string to_csv_row(const VerificationReport& r)
{
    return std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + std::to_string(r.p) + ',' +
           std::string(r.op.name()) + ',' + std::to_string(r.computed_sc) + ',' +
           r.predicted.str() + ',' + (r.bound_only ? "true" : "false") + ',' +
           std::string(status_of(r));
}

} // namespace sclab::io
