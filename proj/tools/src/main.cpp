// Command-line front end: sequence tables, identity verification grids,
// EGF evaluation, and the classical Fibonacci limit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or config error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "qfbq/errors.hpp"
#include "qfbq/identities.hpp"
#include "qfbq/reference.hpp"
#include "qfbq/sequences.hpp"
#include "qfbq/serialize.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

/// Config error tied to a specific flag; maps to exit 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    long lo = 0;
    long hi = 0;
};

Range parse_range(const std::string& flag, const std::string& text) {
    auto fail = [&](const std::string& why) -> Range {
        throw UsageError(flag + ": " + why + " (got \"" + text + "\")");
    };
    std::string lo_part = text;
    std::string hi_part = text;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        lo_part = text.substr(0, dots);
        hi_part = text.substr(dots + 2);
    }
    if (lo_part.empty() || hi_part.empty()) return fail("expected a..b");
    for (const std::string& part : {lo_part, hi_part}) {
        for (char ch : part) {
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return fail("range bounds must be non-negative integers");
        }
    }
    Range r{std::stol(lo_part), std::stol(hi_part)};
    if (r.lo > r.hi) return fail("empty range");
    return r;
}

qfbq::ExactScalar parse_scalar_flag(const std::string& flag, const std::string& text) {
    try {
        return qfbq::parse_scalar(text);
    } catch (const qfbq::Error& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

qfbq::QParams make_params(const std::string& alpha_text, const std::string& q_text) {
    qfbq::ExactScalar alpha = parse_scalar_flag("--alpha", alpha_text);
    qfbq::ExactScalar q = parse_scalar_flag("--q", q_text);
    try {
        return qfbq::QParams(alpha, q);
    } catch (const qfbq::Error& e) {
        throw UsageError(std::string("--alpha/--q: ") + e.what());
    }
}

/// Output sink: --out PATH or standard output.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("--out: cannot open \"" + path + "\" for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

Json bicomplex_json(const qfbq::Bicomplex& x) { return Json::parse(qfbq::to_json(x)); }

int cmd_gen(const std::string& kind_text, const std::string& alpha_text,
            const std::string& q_text, const std::string& n_text,
            const std::string& format, const std::string& out_path) {
    qfbq::QParams p = make_params(alpha_text, q_text);
    Range n_range = parse_range("--n", n_text);
    qfbq::SequenceKind kind =
        kind_text == "BF" ? qfbq::SequenceKind::QFib : qfbq::SequenceKind::QLucas;

    std::vector<qfbq::SequenceTerm> terms;
    for (long n = n_range.lo; n <= n_range.hi; ++n) {
        qfbq::Bicomplex value = kind == qfbq::SequenceKind::QFib ? qfbq::qfib(n, p)
                                                                 : qfbq::qlucas(n, p);
        terms.push_back(qfbq::SequenceTerm{n, kind, value});
    }

    Sink sink(out_path);
    if (format == "csv") {
        sink.stream() << qfbq::csv_header() << "\n";
        for (const auto& term : terms) sink.stream() << qfbq::to_csv_row(term) << "\n";
    } else {
        Json arr = Json::array();
        for (const auto& term : terms) arr.push_back(Json::parse(qfbq::to_json(term)));
        sink.stream() << arr.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& alpha_text, const std::string& q_text,
               const std::string& n_text, const std::string& m_text,
               const std::string& r_text, const std::string& out_path) {
    qfbq::QParams p = make_params(alpha_text, q_text);
    Range n_range = parse_range("--n", n_text);
    Range m_range = parse_range("--m", m_text);
    std::optional<qfbq::IndexSpan> r_span;
    if (!r_text.empty()) {
        Range r_range = parse_range("--r", r_text);
        r_span = qfbq::IndexSpan{r_range.lo, r_range.hi};
    }

    auto reports = qfbq::verify_grid({p}, qfbq::IndexSpan{n_range.lo, n_range.hi},
                                     qfbq::IndexSpan{m_range.lo, m_range.hi}, r_span);
    qfbq::GridSummary summary = qfbq::summarize(reports);

    Sink sink(out_path);
    for (const auto& report : reports) sink.stream() << qfbq::to_json(report) << "\n";
    sink.stream() << qfbq::to_json(summary) << "\n";
    return summary.mismatched == 0 ? kExitOk : kExitVerificationFailure;
}

int cmd_egf(const std::string& alpha_text, const std::string& q_text,
            const std::string& t_text, long terms, long precision_bits,
            const std::string& out_path) {
    qfbq::QParams p = make_params(alpha_text, q_text);
    qfbq::ExactScalar t = parse_scalar_flag("--t", t_text);
    if (terms < 0) throw UsageError("--N: must be >= 0");
    if (precision_bits < 64) throw UsageError("--precision: must be >= 64 bits");

    qfbq::Bicomplex partial = qfbq::egf_partial(terms, t, p);
    qfbq::Bicomplex closed = qfbq::egf_closed(t, p, precision_bits);
    qfbq::Bicomplex partial_f = qfbq::to_bigfloat(partial, precision_bits);

    Json diff;
    const char* keys[4] = {"c0", "c1", "c2", "c3"};
    for (int k = 0; k < 4; ++k) {
        qfbq::BigFloat d =
            (partial_f.c(k).bigfloat() - closed.c(k).bigfloat()).abs();
        diff[keys[k]] = d.str();
    }

    Json out;
    out["N"] = terms;
    out["t"] = qfbq::to_string(t);
    out["precision"] = precision_bits;
    out["partial"] = bicomplex_json(partial);
    out["closed"] = bicomplex_json(closed);
    out["abs_diff"] = diff;

    Sink sink(out_path);
    sink.stream() << out.dump(2) << "\n";
    return kExitOk;
}

int cmd_limit(const std::string& n_text, const std::string& out_path) {
    Range n_range = parse_range("--n", n_text);
    qfbq::QParams p = qfbq::classical_params();

    Sink sink(out_path);
    bool all_match = true;
    for (long n = n_range.lo; n <= n_range.hi; ++n) {
        qfbq::Bicomplex value = qfbq::qfib(n, p);
        Json fib = Json::array();
        bool match = true;
        for (long k = 0; k < 4; ++k) {
            qfbq::Integer f = qfbq::ref::fibonacci(n + k);
            fib.push_back(f.get_str());
            if (value.c(static_cast<int>(k)) !=
                qfbq::ExactScalar(qfbq::Rational(f)))
                match = false;
        }
        all_match = all_match && match;
        Json line;
        line["n"] = n;
        line["value"] = bicomplex_json(value);
        line["fibonacci"] = fib;
        line["match"] = match;
        sink.stream() << line.dump() << "\n";
    }
    return all_match ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed Fibonacci/Lucas bicomplex sequences: tables, identity "
                 "verification, EGF evaluation, classical limit"};
    app.require_subcommand(1);

    std::string kind, alpha, q, n_text, m_text, r_text, t_text, format = "json", out_path;
    long terms = 0;
    long precision_bits = 256;

    CLI::App* gen = app.add_subcommand("gen", "Emit a table of sequence terms");
    gen->add_option("--kind", kind, "Sequence kind: BF (q-Fibonacci) or BL (q-Lucas)")
        ->required()
        ->check(CLI::IsMember({"BF", "BL"}));
    gen->add_option("--alpha", alpha, "Scalar alpha (grammar: e.g. 2, -7/3, 1/2+1/2*sqrt5)")
        ->required();
    gen->add_option("--q", q, "Scalar q, must differ from 1")->required();
    gen->add_option("--n", n_text, "Inclusive index range a..b")->required();
    gen->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    gen->add_option("--out", out_path, "Output path (default: standard output)");

    CLI::App* verify = app.add_subcommand("verify", "Check the product identities on a grid");
    verify->add_option("--alpha", alpha, "Scalar alpha")->required();
    verify->add_option("--q", q, "Scalar q, must differ from 1")->required();
    verify->add_option("--n", n_text, "Inclusive n range a..b")->required();
    verify->add_option("--m", m_text, "Inclusive m range a..b")->required();
    verify->add_option("--r", r_text, "Inclusive r range a..b (default: 0..n per case)");
    verify->add_option("--out", out_path, "Output path");

    CLI::App* egf = app.add_subcommand("egf", "Compare EGF partial sum against the closed form");
    egf->add_option("--alpha", alpha, "Scalar alpha")->required();
    egf->add_option("--q", q, "Scalar q, must differ from 1")->required();
    egf->add_option("--t", t_text, "Evaluation point (exact scalar)")->required();
    egf->add_option("--N", terms, "Partial sum truncation order")->required();
    egf->add_option("--precision", precision_bits, "Float precision in bits (>= 64)");
    egf->add_option("--out", out_path, "Output path");

    CLI::App* limit = app.add_subcommand(
        "limit", "Classical parameters: compare against Fibonacci numbers");
    limit->add_option("--n", n_text, "Inclusive index range a..b")->required();
    limit->add_option("--out", out_path, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(kind, alpha, q, n_text, format, out_path);
        if (verify->parsed()) return cmd_verify(alpha, q, n_text, m_text, r_text, out_path);
        if (egf->parsed()) return cmd_egf(alpha, q, t_text, terms, precision_bits, out_path);
        if (limit->parsed()) return cmd_limit(n_text, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qfbq::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
