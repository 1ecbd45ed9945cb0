#pragma once

#include <string>

#include "qfbq/identities.hpp"
#include "qfbq/sequences.hpp"

namespace qfbq {

/// JSON emission. Scalars are serialized as their canonical grammar strings
/// (floats as decimal scientific strings), never as JSON numbers, so output
/// is lossless and byte-identical across runs. Field order is fixed.

/// {"c0": "...", "c1": "...", "c2": "...", "c3": "..."}
std::string to_json(const Bicomplex& x);

/// {"n": 3, "kind": "BF", "value": {...}}
std::string to_json(const SequenceTerm& term);

/// One verification report line, e.g.
/// {"identity": "Cassini", "alpha": "1", "q": "2", "n": 1,
///  "lhs": {...}, "rhs_closed": {...}, "rhs_oracle": {...},
///  "verdict": "ExactMatch"}
/// Honsberger and d'Ocagne add "m", Catalan adds "r"; skipped cases carry
/// "reason" and omit the value fields.
std::string to_json(const IdentityReport& report);

/// {"checked": N, "matched": N, "mismatched": N, "skipped": N}
std::string to_json(const GridSummary& summary);

std::string sequence_kind_label(SequenceKind kind);

/// CSV row "n,c0,c1,c2,c3" for a sequence term; coefficients use the same
/// canonical scalar strings (they never contain commas or quotes).
std::string to_csv_row(const SequenceTerm& term);
std::string csv_header();

}  // namespace qfbq
