#include "advlab/serialize.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "advlab/error.hpp"

namespace advlab {

namespace {

const char *move_name(WorkMove m) {
    switch (m) {
    case WorkMove::Left: return "left";
    case WorkMove::Right: return "right";
    default: return "stay";
    }
}

Json symbol_json(DottedSymbol a) { return {{"base", std::string(1, a.base)}, {"marked", a.marked}}; }

Json alphabet_json(const std::vector<DottedSymbol> &alphabet) {
    Json out = Json::array();
    for (const auto &a : alphabet)
        out.push_back(symbol_json(a));
    return out;
}

void only_fields(const Json &obj, std::initializer_list<const char *> allowed,
                 const std::string &where) {
    if (!obj.is_object())
        throw ParseError(where + ": expected an object");
    for (const auto &[key, _] : obj.items())
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char *a) { return key == a; }) == allowed.end())
            throw ParseError(where + ": unknown field '" + key + "'");
}

const Json &field(const Json &obj, const char *key, const std::string &where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

template <class T> T get_as(const Json &value, const std::string &where) {
    try {
        return value.get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(where + ": " + e.what());
    }
}

DottedSymbol symbol_from(const Json &j, const std::string &where) {
    only_fields(j, {"base", "marked"}, where);
    const auto base = get_as<std::string>(field(j, "base", where), where);
    if (base.size() != 1)
        throw ParseError(where + ": base must be a single character");
    return {base[0], get_as<bool>(field(j, "marked", where), where)};
}

std::vector<DottedSymbol> alphabet_from(const Json &j, const std::string &where) {
    if (!j.is_array())
        throw ParseError(where + ": alphabet must be an array");
    std::vector<DottedSymbol> out;
    for (const auto &a : j)
        out.push_back(symbol_from(a, where + " alphabet"));
    return out;
}

std::map<std::string, std::uint32_t> index_names(const std::vector<std::string> &names,
                                                 const std::string &where) {
    std::map<std::string, std::uint32_t> out;
    for (std::uint32_t i = 0; i < names.size(); ++i)
        if (!out.emplace(names[i], i).second)
            throw ParseError(where + ": duplicate name '" + names[i] + "'");
    return out;
}

std::uint32_t lookup(const std::map<std::string, std::uint32_t> &names, const Json &j,
                     const std::string &where) {
    const auto name = get_as<std::string>(j, where);
    auto it = names.find(name);
    if (it == names.end())
        throw ParseError(where + ": unknown name '" + name + "'");
    return it->second;
}

std::vector<std::string> track_state_names(std::size_t count) {
    std::vector<std::string> names;
    for (std::size_t s = 0; s < count; ++s)
        names.push_back("q" + std::to_string(s));
    return names;
}

Machine dfa_from_json(const Json &doc) {
    const std::string where = "dfa";
    only_fields(doc, {"type", "states", "start", "accepting", "alphabet", "transitions"}, where);
    const auto names = get_as<std::vector<std::string>>(field(doc, "states", where), where);
    const auto index = index_names(names, where);
    const auto alphabet = alphabet_from(field(doc, "alphabet", where), where);
    std::vector<bool> accepting(names.size(), false);
    for (const auto &a : field(doc, "accepting", where))
        accepting[lookup(index, a, where + " accepting")] = true;

    constexpr auto kUnset = static_cast<Dfa::State>(-1);
    std::vector<Dfa::State> table(names.size() * alphabet.size(), kUnset);
    for (const auto &t : field(doc, "transitions", where)) {
        only_fields(t, {"from", "on", "to"}, where + " transition");
        const auto from = lookup(index, field(t, "from", where), where);
        const auto on = symbol_from(field(t, "on", where), where + " transition");
        const auto col = std::find(alphabet.begin(), alphabet.end(), on) - alphabet.begin();
        if (static_cast<std::size_t>(col) == alphabet.size())
            throw ParseError(where + ": transition on a symbol outside the alphabet");
        auto &cell = table[from * alphabet.size() + col];
        if (cell != kUnset)
            throw ParseError(where + ": duplicate transition from '" + names[from] + "'");
        cell = lookup(index, field(t, "to", where), where);
    }
    if (std::find(table.begin(), table.end(), kUnset) != table.end())
        throw ParseError(where + ": transition table is not total");
    try {
        return Dfa(names, lookup(index, field(doc, "start", where), where), std::move(accepting),
                   alphabet, std::move(table));
    } catch (const PreconditionError &e) {
        throw ParseError(e.what());
    }
}

Machine tm_from_json(const Json &doc) {
    const std::string where = "tm";
    only_fields(doc,
                {"type", "states", "start", "accepting", "reject", "alphabet", "work_alphabet",
                 "blank", "space_cap", "transitions"},
                where);
    const auto names = get_as<std::vector<std::string>>(field(doc, "states", where), where);
    const auto index = index_names(names, where);
    const auto work = get_as<std::vector<std::string>>(field(doc, "work_alphabet", where), where);
    const auto work_index = index_names(work, where + " work alphabet");
    const auto alphabet = alphabet_from(field(doc, "alphabet", where), where);
    const auto &acc = field(doc, "accepting", where);
    if (!acc.is_array() || acc.size() != 1)
        throw ParseError(where + ": exactly one accepting state is required");
    const auto accept = lookup(index, acc[0], where);
    const auto reject = lookup(index, field(doc, "reject", where), where);
    const auto blank =
        static_cast<std::uint16_t>(lookup(work_index, field(doc, "blank", where), where));
    std::optional<std::size_t> cap;
    if (doc.contains("space_cap"))
        cap = get_as<std::size_t>(doc["space_cap"], where);

    const std::size_t cols = alphabet.size() + 1;
    std::vector<TmAction> table;
    table.reserve(names.size() * cols * work.size());
    for (std::uint32_t s = 0; s < names.size(); ++s)
        for (std::size_t c = 0; c < cols; ++c)
            for (std::uint16_t w = 0; w < work.size(); ++w)
                table.push_back({reject, w, WorkMove::Stay, InputMove::Stay});
    std::vector<bool> seen(table.size(), false);

    for (const auto &t : field(doc, "transitions", where)) {
        only_fields(t, {"from", "on", "read", "to", "write", "work_move", "input_move"},
                    where + " transition");
        const auto from = lookup(index, field(t, "from", where), where);
        const auto &on = field(t, "on", where);
        std::size_t col;
        if (on.contains("end")) {
            only_fields(on, {"end"}, where + " transition");
            if (!get_as<bool>(on["end"], where))
                throw ParseError(where + ": \"end\" must be true");
            col = alphabet.size();
        } else {
            const auto sym = symbol_from(on, where + " transition");
            col = std::find(alphabet.begin(), alphabet.end(), sym) - alphabet.begin();
            if (col == alphabet.size())
                throw ParseError(where + ": transition on a symbol outside the alphabet");
        }
        const auto read = lookup(work_index, field(t, "read", where), where);
        const auto slot = (from * cols + col) * work.size() + read;
        if (seen[slot])
            throw ParseError(where + ": duplicate transition from '" + names[from] + "'");
        seen[slot] = true;
        auto &a = table[slot];
        a.next = lookup(index, field(t, "to", where), where);
        a.write = static_cast<std::uint16_t>(lookup(work_index, field(t, "write", where), where));
        const auto wm = get_as<std::string>(field(t, "work_move", where), where);
        if (wm == "left")
            a.work_move = WorkMove::Left;
        else if (wm == "right")
            a.work_move = WorkMove::Right;
        else if (wm != "stay")
            throw ParseError(where + ": work_move must be left, stay or right");
        const auto im = get_as<std::string>(field(t, "input_move", where), where);
        if (im == "right")
            a.input_move = InputMove::Right;
        else if (im != "stay")
            throw ParseError(where + ": input_move must be stay or right");
    }
    try {
        return OneWayTm(names, lookup(index, field(doc, "start", where), where), accept, reject,
                        alphabet, work, blank, std::move(table), cap);
    } catch (const PreconditionError &e) {
        throw ParseError(e.what());
    }
}

Machine track_from_json(const Json &doc) {
    const std::string where = "track";
    only_fields(doc, {"type", "states", "start", "accepting", "alphabet", "t", "transitions"},
                where);
    const auto names = get_as<std::vector<std::string>>(field(doc, "states", where), where);
    const auto index = index_names(names, where);
    const auto alphabet = alphabet_from(field(doc, "alphabet", where), where);
    std::string input;
    for (const auto &a : alphabet) {
        if (a.marked)
            throw ParseError(where + ": track machines read unmarked input");
        input.push_back(a.base);
    }
    const auto t = get_as<unsigned>(field(doc, "t", where), where);
    std::vector<bool> accepting(names.size(), false);
    for (const auto &a : field(doc, "accepting", where))
        accepting[lookup(index, a, where + " accepting")] = true;

    constexpr auto kUnset = static_cast<TrackDfa::State>(-1);
    std::vector<TrackDfa::State> table(names.size() * input.size() * t, kUnset);
    for (const auto &tr : field(doc, "transitions", where)) {
        only_fields(tr, {"from", "on", "to"}, where + " transition");
        const auto from = lookup(index, field(tr, "from", where), where);
        const auto &on = field(tr, "on", where);
        only_fields(on, {"base", "track"}, where + " transition");
        const auto base = get_as<std::string>(field(on, "base", where), where);
        const auto digit = get_as<std::string>(field(on, "track", where), where);
        const auto a = base.size() == 1 ? input.find(base[0]) : std::string::npos;
        if (a == std::string::npos || digit.size() != 1 || digit[0] < '0' ||
            static_cast<unsigned>(digit[0] - '0') >= t)
            throw ParseError(where + ": transition on a symbol outside the alphabet");
        auto &cell = table[(from * input.size() + a) * t + (digit[0] - '0')];
        if (cell != kUnset)
            throw ParseError(where + ": duplicate transition from '" + names[from] + "'");
        cell = lookup(index, field(tr, "to", where), where);
    }
    if (std::find(table.begin(), table.end(), kUnset) != table.end())
        throw ParseError(where + ": transition table is not total");
    try {
        return TrackDfa(input, t, lookup(index, field(doc, "start", where), where),
                        std::move(accepting), std::move(table));
    } catch (const Error &e) {
        throw ParseError(e.what());
    }
}

Json positions_json(const std::vector<std::size_t> &positions) {
    Json out = Json::array();
    for (auto p : positions)
        out.push_back(p);
    return out;
}

} // namespace

Json to_json(const Dfa &machine) {
    Json accepting = Json::array();
    for (Dfa::State s = 0; s < machine.state_count(); ++s)
        if (machine.accepting(s))
            accepting.push_back(machine.state_name(s));
    Json transitions = Json::array();
    for (Dfa::State s = 0; s < machine.state_count(); ++s)
        for (std::size_t c = 0; c < machine.alphabet().size(); ++c)
            transitions.push_back({{"from", machine.state_name(s)},
                                   {"on", symbol_json(machine.alphabet()[c])},
                                   {"to", machine.state_name(machine.next(s, c))}});
    return {{"type", "dfa"},
            {"states", machine.state_names()},
            {"start", machine.state_name(machine.start())},
            {"accepting", std::move(accepting)},
            {"alphabet", alphabet_json(machine.alphabet())},
            {"transitions", std::move(transitions)}};
}

Json to_json(const OneWayTm &machine) {
    Json transitions = Json::array();
    const auto &work = machine.work_alphabet();
    for (std::uint32_t s = 0; s < machine.state_count(); ++s) {
        for (std::size_t c = 0; c < machine.input_columns(); ++c) {
            const Json on = c == machine.end_column() ? Json{{"end", true}}
                                                      : symbol_json(machine.input_alphabet()[c]);
            for (std::uint16_t w = 0; w < work.size(); ++w) {
                const auto &a = machine.action(s, c, w);
                if (a == TmAction{machine.reject(), w, WorkMove::Stay, InputMove::Stay})
                    continue;
                transitions.push_back(
                    {{"from", machine.state_name(s)},
                     {"on", on},
                     {"read", work[w]},
                     {"to", machine.state_name(a.next)},
                     {"write", work[a.write]},
                     {"work_move", move_name(a.work_move)},
                     {"input_move", a.input_move == InputMove::Right ? "right" : "stay"}});
            }
        }
    }
    Json out{{"type", "tm"},
             {"states", machine.state_names()},
             {"start", machine.state_name(machine.start())},
             {"accepting", Json::array({machine.state_name(machine.accept())})},
             {"reject", machine.state_name(machine.reject())},
             {"alphabet", alphabet_json(machine.input_alphabet())},
             {"work_alphabet", work},
             {"blank", work[machine.blank()]},
             {"transitions", std::move(transitions)}};
    if (machine.space_cap())
        out["space_cap"] = *machine.space_cap();
    return out;
}

Json to_json(const TrackDfa &machine) {
    const auto names = track_state_names(machine.state_count());
    Json accepting = Json::array();
    Json alphabet = Json::array();
    for (char c : machine.input_alphabet())
        alphabet.push_back(symbol_json({c, false}));
    for (std::size_t s = 0; s < machine.state_count(); ++s)
        if (machine.accepting(static_cast<TrackDfa::State>(s)))
            accepting.push_back(names[s]);
    Json transitions = Json::array();
    const unsigned t = machine.track_alphabet_size();
    for (std::size_t s = 0; s < machine.state_count(); ++s)
        for (std::size_t a = 0; a < machine.input_alphabet().size(); ++a)
            for (unsigned d = 0; d < t; ++d)
                transitions.push_back(
                    {{"from", names[s]},
                     {"on",
                      {{"base", std::string(1, machine.input_alphabet()[a])},
                       {"track", std::string(1, static_cast<char>('0' + d))}}},
                     {"to", names[machine.next(static_cast<TrackDfa::State>(s), a * t + d)]}});
    return {{"type", "track"},
            {"states", names},
            {"start", names[machine.start()]},
            {"accepting", std::move(accepting)},
            {"alphabet", std::move(alphabet)},
            {"t", t},
            {"transitions", std::move(transitions)}};
}

Json to_json(const Machine &machine) {
    return std::visit([](const auto &m) { return to_json(m); }, machine);
}

Machine machine_from_json(const Json &doc) {
    if (!doc.is_object())
        throw ParseError("machine: expected an object");
    const auto type = get_as<std::string>(field(doc, "type", "machine"), "machine");
    if (type == "dfa")
        return dfa_from_json(doc);
    if (type == "tm")
        return tm_from_json(doc);
    if (type == "track")
        return track_from_json(doc);
    throw ParseError("machine: unknown type '" + type + "'");
}

Json advice_to_json(const AdviceScheme &advice, std::size_t max_n) {
    Json entries = Json::array();
    Json out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        Json value = std::visit(
            [n](const auto &a) -> Json {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, PrefixAdvice> || std::is_same_v<T, TrackAdvice>) {
                    return a(n);
                } else if constexpr (std::is_same_v<T, InkdotAdvice>) {
                    return positions_json(a(n).positions());
                } else {
                    Json dist = Json::array();
                    for (const auto &wp : a(n))
                        dist.push_back(
                            {{"positions", positions_json(wp.positions)}, {"p", to_string(wp.p)}});
                    return dist;
                }
            },
            advice);
        entries.push_back({{"n", n}, {"value", std::move(value)}});
    }
    std::visit(
        [&](const auto &a) {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, PrefixAdvice>) {
                out["kind"] = "prefix";
            } else if constexpr (std::is_same_v<T, TrackAdvice>) {
                out["kind"] = "track";
                out["t"] = a.alphabet_size();
            } else if constexpr (std::is_same_v<T, InkdotAdvice>) {
                out["kind"] = "inkdot";
            } else {
                out["kind"] = "randomized";
            }
        },
        advice);
    out["entries"] = std::move(entries);
    return out;
}

AdviceScheme advice_from_json(const Json &doc) {
    const std::string where = "advice";
    only_fields(doc, {"kind", "t", "entries"}, where);
    const auto kind = get_as<std::string>(field(doc, "kind", where), where);
    if (doc.contains("t") && kind != "track")
        throw ParseError(where + ": only track advice has an alphabet size");
    std::map<std::size_t, Json> table;
    for (const auto &e : field(doc, "entries", where)) {
        only_fields(e, {"n", "value"}, where + " entry");
        const auto n = get_as<std::size_t>(field(e, "n", where), where);
        if (!table.emplace(n, field(e, "value", where)).second)
            throw ParseError(where + ": duplicate entry for n = " + std::to_string(n));
    }

    try {
        if (kind == "prefix" || kind == "track") {
            std::map<std::size_t, std::string> strings;
            for (const auto &[n, v] : table)
                strings[n] = get_as<std::string>(v, where);
            if (kind == "prefix") {
                const std::size_t k = strings.empty() ? 0 : strings.begin()->second.size();
                return PrefixAdvice(k, [strings, k](std::size_t n) {
                    auto it = strings.find(n);
                    return it == strings.end() ? std::string(k, '0') : it->second;
                });
            }
            const auto t = get_as<unsigned>(field(doc, "t", where), where);
            return TrackAdvice(t, [strings](std::size_t n) {
                auto it = strings.find(n);
                return it == strings.end() ? std::string(n, '0') : it->second;
            });
        }
        if (kind == "inkdot") {
            std::map<std::size_t, InkdotPattern> patterns;
            std::size_t most = 0;
            for (const auto &[n, v] : table) {
                patterns[n] = InkdotPattern(n, get_as<std::vector<std::size_t>>(v, where));
                most = std::max(most, patterns[n].size());
            }
            return InkdotAdvice([most](std::size_t n) { return std::min(most, n); },
                                [patterns](std::size_t n) {
                                    auto it = patterns.find(n);
                                    return it == patterns.end() ? InkdotPattern::empty(n)
                                                                : it->second;
                                });
        }
        if (kind == "randomized") {
            std::map<std::size_t, PatternDistribution> dists;
            std::size_t most = 0;
            for (const auto &[n, v] : table) {
                if (!v.is_array())
                    throw ParseError(where + ": a distribution must be an array");
                PatternDistribution dist;
                for (const auto &item : v) {
                    only_fields(item, {"positions", "p"}, where + " distribution");
                    WeightedPattern wp{
                        get_as<std::vector<std::size_t>>(field(item, "positions", where), where),
                        parse_probability(get_as<std::string>(field(item, "p", where), where))};
                    most = std::max(most, wp.positions.size());
                    dist.push_back(std::move(wp));
                }
                dists[n] = std::move(dist);
            }
            return RandomizedInkdotAdvice([most](std::size_t n) { return std::min(most, n); },
                                          [dists](std::size_t n) {
                                              auto it = dists.find(n);
                                              return it == dists.end()
                                                         ? PatternDistribution{{{}, 1}}
                                                         : it->second;
                                          });
        }
    } catch (const AdviceMismatchError &e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": unknown kind '" + kind + "'");
}

Json to_json(const AdvisedMachine &am, std::size_t max_n) {
    return {{"name", am.name},
            {"oracle", am.oracle},
            {"states", state_count(am.machine)},
            {"machine", to_json(am.machine)},
            {"advice", advice_to_json(am.advice, max_n)}};
}

Json to_json(const RecognitionReport &report) {
    Json out{{"kind", "recognition"},
             {"max_len", report.max_len},
             {"agree", report.agree},
             {"strings_checked", report.strings_checked},
             {"counterexample", nullptr}};
    if (report.counterexample) {
        const auto &c = *report.counterexample;
        out["counterexample"] = {{"word", c.word},
                                 {"advice", c.advice},
                                 {"machine_accepts", to_string(c.machine_accepts)},
                                 {"oracle_member", c.oracle_member}};
    }
    return out;
}

Json to_json(const SeparationCertificate &certificate) {
    Json out{{"kind", "separation"},
             {"oracle", certificate.oracle},
             {"q", certificate.q},
             {"b", certificate.b},
             {"N", certificate.max_len},
             {"outcome", certificate.witness_found ? "witness" : "none_exists"},
             {"searched", certificate.machines_searched},
             {"machine_space", certificate.machine_space},
             {"patterns_per_length", certificate.patterns_per_length},
             {"tuple_space", certificate.tuple_space},
             {"witness", nullptr}};
    if (certificate.witness) {
        Json advice = Json::array();
        for (const auto &p : certificate.witness_advice)
            advice.push_back({{"n", p.length()}, {"value", positions_json(p.positions())}});
        out["witness"] = {{"machine", to_json(*certificate.witness)},
                          {"advice", {{"kind", "inkdot"}, {"entries", std::move(advice)}}}};
    }
    return out;
}

Json to_json(const EquivalenceClassReport &report) {
    Json groups = Json::array();
    for (const auto &g : report.groups)
        groups.push_back({{"n", g.n}, {"prefix_len", g.prefix_len}, {"classes", g.classes}});
    return {{"kind", "classes"},
            {"N", report.max_len},
            {"groups", std::move(groups)},
            {"max_group_count", report.max_group_count}};
}

} // namespace advlab
