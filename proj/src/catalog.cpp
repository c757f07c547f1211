#include "walks/catalog.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "walks/closedforms.hpp"
#include "walks/exactmath.hpp"

namespace walks::catalog {

namespace detail {
extern const std::string_view kTable3Golden;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> fields(std::string_view line) {
    std::vector<std::string_view> out;
    for (auto f : split(line, ' ')) {
        if (!trim(f).empty()) {
            out.push_back(trim(f));
        }
    }
    return out;
}

const std::map<std::string, std::string>& table3_ids() {
    static const std::map<std::string, std::string> ids{
        {"aaa", "A064037"}, {"aae", "A145867"}, {"acd", "A145847"}, {"add", "A000108"}, {"ade", "A002212"},
        {"aee", "A005572"}, {"bbb", "A002896"}, {"bbc", "A138547"}, {"bbe", "A202814"}, {"bcd", "A150500"},
        {"bdd", "A000984"}, {"bde", "A026375"}, {"bee", "A081671"},
    };
    return ids;
}

std::string show(const std::optional<Natural>& v) { return v ? v->to_string() : "-"; }

std::string_view status_word(Status s) {
    switch (s) {
        case Status::Agree: return "agree";
        case Status::Mismatch: return "mismatch";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

/// Oracle counts for 0..n_max, as far as the guards allow.
std::vector<Natural> guarded_sequence(const WalkType& type, int n_max, const oracle::Guards& guards,
                                      std::vector<std::string>& warnings) {
    try {
        return oracle::sequence_dp(type, n_max, guards);
    } catch (const GuardExceeded&) {
    }
    std::vector<Natural> partial;
    for (int n = 0; n <= n_max; ++n) {
        try {
            partial.push_back(oracle::count_dp(type, n, guards));
        } catch (const GuardExceeded& e) {
            warnings.push_back("oracle skipped for n >= " + std::to_string(n) + ": " + e.what());
            break;
        }
    }
    return partial;
}

const SequenceRecord* find_golden(const WalkType& type) {
    for (const auto& rec : golden_table3()) {
        if (rec.type == type) {
            return &rec;
        }
    }
    return nullptr;
}

}  // namespace

std::string_view to_string(Source s) {
    switch (s) {
        case Source::Table3: return "table3";
        case Source::Text: return "text";
        case Source::Computed: return "computed";
    }
    return "computed";
}

Source parse_source(std::string_view s) {
    if (s == "table3") return Source::Table3;
    if (s == "text") return Source::Text;
    if (s == "computed") return Source::Computed;
    throw InputError("unknown sequence source '" + std::string(s) + "'");
}

std::vector<SequenceRecord> parse_golden(std::string_view text) {
    std::vector<SequenceRecord> out;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto f = fields(line);
        const auto where = " on golden line " + std::to_string(line_no);
        if (f.size() != 4) {
            throw InputError("expected 4 fields" + where);
        }
        SequenceRecord rec;
        rec.type = WalkType::parse(f[0]);
        rec.source = parse_source(f[1]);
        if (f[2] != "*" && f[2] != "-") {
            throw InputError("star flag must be '*' or '-'" + where);
        }
        rec.even_only_star = f[2] == "*";
        for (auto term : split(f[3], ',')) {
            try {
                rec.terms.push_back(Natural::from_string(trim(term)));
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string(e.what()) + where);
            }
        }
        if (rec.terms.empty() || !(rec.terms.front() == Natural(1))) {
            throw InputError("sequence must start with 1 (the empty walk)" + where);
        }
        if (rec.even_only_star) {
            for (std::size_t n = 1; n < rec.terms.size(); n += 2) {
                if (!rec.terms[n].is_zero()) {
                    throw InputError("starred sequence has a nonzero odd term" + where);
                }
            }
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string format_golden_line(const SequenceRecord& record) {
    std::string line = record.type.letters() + " " + std::string(to_string(record.source)) + " " +
                       (record.even_only_star ? "*" : "-") + " ";
    for (std::size_t i = 0; i < record.terms.size(); ++i) {
        if (i > 0) {
            line += ",";
        }
        line += record.terms[i].to_string();
    }
    return line;
}

std::string_view table3_golden_text() { return detail::kTable3Golden; }

const std::vector<SequenceRecord>& golden_table3() {
    static const std::vector<SequenceRecord> records = [] {
        auto recs = parse_golden(detail::kTable3Golden);
        for (auto& rec : recs) {
            const auto& ids = table3_ids();
            if (auto it = ids.find(rec.type.letters()); it != ids.end()) {
                rec.oeis_id = it->second;
            }
            rec.absolute_values_note = rec.type.letters() == "bbc";
        }
        return recs;
    }();
    return records;
}

const std::vector<Table2Entry>& table2_map() {
    static const std::vector<Table2Entry> entries = [] {
        const std::pair<const char*, const char*> raw[] = {
            {"aa", "A005568*"}, {"ab", "A000891*"}, {"ac", "A001700"}, {"ad", "A001006"}, {"ae", "A000108"},
            {"bb", "A002894*"}, {"bc", "A018224"},  {"bd", "A002426"}, {"be", "A000984"}, {"cc", "A005566"},
            {"cd", "A005773"},  {"ce", "A001700"},  {"dd", "A000079"}, {"de", "A000244"}, {"ee", "A000302"},
        };
        std::vector<Table2Entry> out;
        for (auto [type, id] : raw) {
            std::string_view sid = id;
            const bool star = sid.back() == '*';
            if (star) {
                sid.remove_suffix(1);
            }
            out.push_back({WalkType::parse(type), std::string(sid), star});
        }
        return out;
    }();
    return entries;
}

std::optional<NamedForm> named_closed_form(const WalkType& type, int n) {
    const auto t = type.letters();
    const bool even = n % 2 == 0;
    auto even_only = [&](std::string name, auto&& f) -> NamedForm {
        return {std::move(name), even ? f() : Natural(0)};
    };
    if (t == "a") return even_only("C(n/2)", [&] { return catalan(n / 2); });
    if (t == "b") return even_only("binom(n,n/2)", [&] { return central_binomial_even(n / 2); });
    if (t == "c") return NamedForm{"binom(n,floor(n/2))", central_binomial_any(n)};
    if (t == "aa") return even_only("C(n/2)*C(n/2+1)", [&] { return closedforms::aa_closed(n); });
    if (t == "ab") return even_only("C(n/2)*binom(n+1,n/2)", [&] { return closedforms::ab_closed(n); });
    if (t == "ac") return NamedForm{"sum C_i*A(n-2i)*binom(n,2i)", closedforms::quadrant_axis_sum(n)};
    if (t == "ad") return NamedForm{"motzkin(n)", motzkin(n)};
    if (t == "ae" || t == "add") return NamedForm{"C(n+1)", catalan(n + 1)};
    if (t == "be") return NamedForm{"binom(2n,n)", central_binomial_even(n)};
    if (t == "ce") return NamedForm{"binom(2n+1,n)", closedforms::halfplane_closed(n)};
    if (t == "ace") return NamedForm{"ace double sum", closedforms::ace3d_count(n)};
    if (std::all_of(t.begin(), t.end(), [](char c) { return c == 'd' || c == 'e'; })) {
        const auto r = static_cast<std::uint64_t>(type.free_direction_count());
        return NamedForm{std::to_string(r) + "^n", Natural::pow(r, static_cast<std::uint64_t>(n))};
    }
    return std::nullopt;
}

std::optional<NamedForm> disputed_closed_form(const WalkType& type, int n) {
    if (type.letters() == "ac") {
        return NamedForm{"binom(2n+1,n)", closedforms::halfplane_closed(n)};
    }
    return std::nullopt;
}

bool VerificationReport::any_mismatch() const {
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.status == Status::Mismatch; });
}

bool VerificationReport::any_golden_mismatch() const {
    return std::any_of(rows.begin(), rows.end(), [](const auto& r) { return r.golden_mismatch; });
}

VerificationReport verify(const WalkType& type, int n_max, const oracle::Guards& guards) {
    if (n_max < 0) {
        throw InputError("n_max must be nonnegative");
    }
    VerificationReport report{type, {}, {}, {}};
    const auto oracle_counts = guarded_sequence(type, n_max, guards, report.warnings);
    const SequenceRecord* golden = find_golden(type);

    std::vector<std::string> disputed_misses;
    std::string disputed_name;
    for (int n = 0; n <= n_max; ++n) {
        VerificationRow row;
        row.n = n;
        if (static_cast<std::size_t>(n) < oracle_counts.size()) {
            row.oracle = oracle_counts[static_cast<std::size_t>(n)];
        }
        row.formula = closedforms::general_count(type, n);
        row.closed = named_closed_form(type, n);
        if (golden != nullptr && static_cast<std::size_t>(n) < golden->terms.size()) {
            row.golden = golden->terms[static_cast<std::size_t>(n)];
        }

        const Natural& reference = row.oracle ? *row.oracle : *row.formula;
        const char* reference_name = row.oracle ? "oracle" : "formula";
        std::vector<std::string> problems;
        if (row.oracle && !(*row.formula == reference)) {
            problems.push_back("formula " + row.formula->to_string());
        }
        if (row.closed && !(row.closed->value == reference)) {
            problems.push_back(row.closed->name + " " + row.closed->value.to_string());
        }
        if (row.golden && !(*row.golden == reference)) {
            problems.push_back("golden " + row.golden->to_string());
            row.golden_mismatch = true;
        }
        if (!problems.empty()) {
            row.status = Status::Mismatch;
            std::string detail;
            for (const auto& p : problems) {
                detail += (detail.empty() ? "" : ", ") + p;
            }
            row.detail = detail + " != " + reference_name + " " + reference.to_string();
        } else if (!row.oracle) {
            row.status = Status::Skipped;
        }

        if (auto disputed = disputed_closed_form(type, n); disputed && !(disputed->value == reference)) {
            disputed_name = disputed->name;
            disputed_misses.push_back("n=" + std::to_string(n) + ": " + disputed->value.to_string() + " vs " +
                                      reference.to_string());
        }
        report.rows.push_back(std::move(row));
    }
    if (!disputed_misses.empty()) {
        std::string note = "published closed form " + disputed_name + " for type " + type.letters() +
                           " is not reproduced by the oracle (";
        for (std::size_t i = 0; i < disputed_misses.size(); ++i) {
            note += (i ? "; " : "") + disputed_misses[i];
        }
        note += ")";
        report.notes.push_back(std::move(note));
    }
    return report;
}

std::vector<VerificationReport> verify_table3(int n_max, const oracle::Guards& guards) {
    const auto& records = golden_table3();
    std::vector<std::future<VerificationReport>> jobs;
    jobs.reserve(records.size());
    for (const auto& rec : records) {
        const int limit = std::min(n_max, static_cast<int>(rec.terms.size()) - 1);
        jobs.push_back(std::async(std::launch::async, [&rec, limit, guards] { return verify(rec.type, limit, guards); }));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(jobs.size());
    for (auto& job : jobs) {
        reports.push_back(job.get());
    }

    for (auto& report : reports) {
        if (!report.any_golden_mismatch()) {
            continue;
        }
        const auto* printed = find_golden(report.type);
        const int limit = static_cast<int>(report.rows.size()) - 1;
        for (const auto& other : records) {
            if (other.type == report.type) {
                continue;
            }
            std::vector<std::string> scratch;
            const auto counts = guarded_sequence(other.type, limit, guards, scratch);
            const bool same = counts.size() == report.rows.size() &&
                              std::equal(counts.begin(), counts.end(), printed->terms.begin());
            if (same) {
                report.notes.push_back("printed terms for " + report.type.letters() + " (n = 0.." +
                                       std::to_string(limit) + ") equal the computed counts of type " +
                                       other.type.letters());
            }
        }
    }
    return reports;
}

std::string format_structured(const VerificationReport& report) {
    std::ostringstream out;
    const auto t = report.type.letters();
    for (const auto& row : report.rows) {
        out << t << ' ' << row.n << ' ' << show(row.oracle) << ' ' << show(row.formula) << ' '
            << (row.closed ? row.closed->value.to_string() : "-") << ' ' << show(row.golden) << ' '
            << status_word(row.status) << '\n';
    }
    return out.str();
}

std::string format_text(const VerificationReport& report) {
    std::ostringstream out;
    const auto t = report.type.letters();
    out << format_structured(report);
    for (const auto& row : report.rows) {
        if (row.status == Status::Mismatch) {
            out << "MISMATCH " << t << " n=" << row.n << ": " << row.detail << '\n';
        }
    }
    for (const auto& note : report.notes) {
        out << "NOTE " << t << ": " << note << '\n';
    }
    for (const auto& warning : report.warnings) {
        out << "WARN " << t << ": " << warning << '\n';
    }
    const auto mismatches = std::count_if(report.rows.begin(), report.rows.end(),
                                          [](const auto& r) { return r.status == Status::Mismatch; });
    const auto skipped = std::count_if(report.rows.begin(), report.rows.end(),
                                       [](const auto& r) { return r.status == Status::Skipped; });
    out << "SUMMARY " << t << ": " << report.rows.size() << " values, " << mismatches << " mismatch, " << skipped
        << " skipped\n";
    return out.str();
}

}  // namespace walks::catalog
