#pragma once

#include "knead/recurrence.hpp"

#include <string>

namespace knead {

/// Parsed and validated recurrence document: the JSON front-door format
/// of the CLI.
struct RecurrenceDocument {
    Recurrence rec;
    InitialCondition initial;
    int truncation = 64;
};

/// Parses a JSON document. Throws SchemaError on malformed JSON or any
/// schema violation (wrong shapes, duplicate indices, bad kinds, ...).
RecurrenceDocument parse_document(const std::string& text);

} // namespace knead
