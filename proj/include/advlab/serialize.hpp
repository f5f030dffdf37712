#pragma once

#include <cstddef>

#include "json.hpp"

#include "advlab/advice.hpp"
#include "advlab/constructions.hpp"
#include "advlab/verify.hpp"

namespace advlab {

using Json = nlohmann::json;

// Machine format:
//   {"type":"dfa"|"tm"|"track", "states":[...], "start":name, "accepting":[...],
//    "alphabet":[{"base":"0","marked":false}, ...], "transitions":[...]}
// TM transitions also carry "read", "write", "work_move", "input_move";
// the end signal is written as "on":{"end":true}, and a TM transition that is
// left out goes to the reject state without touching the tape. Track machines
// carry "t" and read "on":{"base":"0","track":"2"}. Unknown fields are rejected.

Json to_json(const Dfa &machine);
Json to_json(const OneWayTm &machine);
Json to_json(const TrackDfa &machine);
Json to_json(const Machine &machine);

/// Throws ParseError on malformed input or unknown fields.
Machine machine_from_json(const Json &doc);

// Advice format:
//   {"kind":"prefix"|"track"|"inkdot"|"randomized",
//    "t":int (track only), "entries":[{"n":int, "value": string | [positions] | [{"positions":[...],"p":"a/b"}]}]}

/// Entries for every n in [0, max_n].
Json advice_to_json(const AdviceScheme &advice, std::size_t max_n);

/// Rebuilds a table-backed advice function; lengths missing from the table
/// get empty advice (prefix advice: the all-zero string). Throws ParseError.
AdviceScheme advice_from_json(const Json &doc);

Json to_json(const AdvisedMachine &am, std::size_t max_n);
Json to_json(const RecognitionReport &report);
Json to_json(const SeparationCertificate &certificate);
Json to_json(const EquivalenceClassReport &report);

} // namespace advlab
