#include "qfbq/serialize.hpp"

#include <json.hpp>

namespace qfbq {

namespace {

using Json = nlohmann::ordered_json;

Json bicomplex_json(const Bicomplex& x) {
    return Json{{"c0", to_string(x.c(0))},
                {"c1", to_string(x.c(1))},
                {"c2", to_string(x.c(2))},
                {"c3", to_string(x.c(3))}};
}

}  // namespace

std::string to_json(const Bicomplex& x) { return bicomplex_json(x).dump(); }

std::string sequence_kind_label(SequenceKind kind) {
    return kind == SequenceKind::QFib ? "BF" : "BL";
}

std::string to_json(const SequenceTerm& term) {
    Json j{{"n", term.n},
           {"kind", sequence_kind_label(term.kind)},
           {"value", bicomplex_json(term.value)}};
    return j.dump();
}

std::string to_json(const IdentityReport& report) {
    Json j;
    j["identity"] = to_string(report.name);
    j["alpha"] = to_string(report.alpha);
    j["q"] = to_string(report.q);
    j["n"] = report.n;
    if (report.second) {
        const char* key = report.name == IdentityKind::Catalan ? "r" : "m";
        j[key] = *report.second;
    }
    if (report.lhs) j["lhs"] = bicomplex_json(*report.lhs);
    if (report.rhs_closed) j["rhs_closed"] = bicomplex_json(*report.rhs_closed);
    if (report.rhs_oracle) j["rhs_oracle"] = bicomplex_json(*report.rhs_oracle);
    j["verdict"] = to_string(report.verdict);
    if (!report.reason.empty()) j["reason"] = report.reason;
    return j.dump();
}

std::string to_json(const GridSummary& summary) {
    Json j{{"checked", summary.checked},
           {"matched", summary.matched},
           {"mismatched", summary.mismatched},
           {"skipped", summary.skipped}};
    return j.dump();
}

std::string to_csv_row(const SequenceTerm& term) {
    std::string row = std::to_string(term.n);
    for (int k = 0; k < 4; ++k) row += "," + to_string(term.value.c(k));
    return row;
}

std::string csv_header() { return "n,c0,c1,c2,c3"; }

}  // namespace qfbq
