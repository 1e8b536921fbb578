#pragma once

#include <stdexcept>
#include <string>

#include "minklab/compact_set.hpp"
#include "minklab/harness.hpp"
#include "minklab/measures.hpp"

namespace minklab {

// Input rejection (malformed JSON, decimal literals, schema violations).
// Messages carry the JSON path and, when derivable, the source line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set files: {"dim": n, "rep": "points"|"boxes"|"intervals", "data": [...]}.
// Every coordinate is a rational string "p" or "p/q"; bare JSON numbers and
// decimal strings are rejected to avoid silent rounding. A "cross" object
// (n, p, side1, side2) is carried through when present.
CompactSet parse_set(const std::string& json_text);
std::string serialize_set(const CompactSet& s);

std::string serialize_measure(const MeasureResult& r);

// Reports serialize with deterministic field order; runtime lives in the
// "sidecar" object, the one field excluded from the byte-identity contract.
std::string serialize_report(const Report& r);

// CSV columns: k,delta,d_lo,d_hi,c,k_delta,k_d_lo,k_d_hi,k_c. Interval
// certified delta/c report their upper bound in the single-value columns.
std::string rate_table_csv(const RateTable& t);
std::string serialize_rate_table(const RateTable& t);

}  // namespace minklab
