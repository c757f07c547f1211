#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walks/natural.hpp"
#include "walks/oracle.hpp"
#include "walks/walk.hpp"

namespace walks::catalog {

enum class Source { Table3, Text, Computed };

[[nodiscard]] std::string_view to_string(Source s);
[[nodiscard]] Source parse_source(std::string_view s);

struct SequenceRecord {
    WalkType type;
    std::vector<Natural> terms;  // terms[n] for n = 0, 1, ...
    Source source = Source::Computed;
    std::optional<std::string> oeis_id;
    bool even_only_star = false;
    bool absolute_values_note = false;
};

/// One record per non-comment line: `<type> <source> <star-flag> <terms>`,
/// with star-flag `*` or `-` and terms comma-separated. Throws InputError.
[[nodiscard]] std::vector<SequenceRecord> parse_golden(std::string_view text);
[[nodiscard]] std::string format_golden_line(const SequenceRecord& record);

/// The embedded golden text, exactly as shipped in data/table3.golden.
[[nodiscard]] std::string_view table3_golden_text();

/// The 25 published three-dimensional rows, aaa through bee, with their
/// sequence identifiers attached.
[[nodiscard]] const std::vector<SequenceRecord>& golden_table3();

struct Table2Entry {
    WalkType type;
    std::string oeis_id;
    bool even_only = false;
};

/// The 15 two-dimensional types and their cited identifiers. No terms are
/// published for these; they are checked by oracle/formula agreement.
[[nodiscard]] const std::vector<Table2Entry>& table2_map();

/// A closed form known for a type, when there is one.
struct NamedForm {
    std::string name;
    Natural value;
};
[[nodiscard]] std::optional<NamedForm> named_closed_form(const WalkType& type, int n);

/// A published closed form that the oracle does not reproduce; reported as a
/// note instead of a failure.
[[nodiscard]] std::optional<NamedForm> disputed_closed_form(const WalkType& type, int n);

enum class Status { Agree, Mismatch, Skipped };

struct VerificationRow {
    int n = 0;
    std::optional<Natural> oracle;
    std::optional<Natural> formula;
    std::optional<NamedForm> closed;
    std::optional<Natural> golden;
    Status status = Status::Agree;
    bool golden_mismatch = false;
    std::string detail;
};

struct VerificationReport {
    WalkType type;
    std::vector<VerificationRow> rows;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;

    [[nodiscard]] bool any_mismatch() const;
    [[nodiscard]] bool any_golden_mismatch() const;
};

/// Cross-checks oracle, general formula, named closed form and golden term
/// for n = 0..n_max. Golden terms come from golden_table3() when the type is
/// listed there. Oracle guard failures become Skipped rows plus a warning.
[[nodiscard]] VerificationReport verify(const WalkType& type, int n_max, const oracle::Guards& guards = {});

/// verify() for every golden row, limited to its printed terms. Rows are
/// evaluated concurrently and returned in table order. When a row's printed
/// terms disagree with its oracle, the report notes any other row whose
/// computed counts match them instead.
[[nodiscard]] std::vector<VerificationReport> verify_table3(int n_max, const oracle::Guards& guards = {});

/// Lines `type n oracle formula closed golden status`, "-" for absent values.
[[nodiscard]] std::string format_structured(const VerificationReport& report);
/// Structured lines followed by NOTE/WARN lines and a one-line summary.
[[nodiscard]] std::string format_text(const VerificationReport& report);

}  // namespace walks::catalog
