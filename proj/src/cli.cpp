#include "qpi/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpi/report_json.hpp"
#include "qpi/tables.hpp"

namespace qpi {

namespace {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name)
{
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    return Format::Text;
}

std::string fmt_ms(double ms)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", ms);
    return buf;
}

size_t edit_distance(std::string_view a, std::string_view b)
{
    std::vector<size_t> row(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        size_t diag = row[0];
        row[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            const size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                               diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::vector<std::string> suggest_ids(std::string_view near)
{
    std::vector<std::pair<size_t, std::string>> ranked;
    for (const IdentityEntry& e : registry())
        ranked.emplace_back(edit_distance(near, e.id), e.id);
    std::sort(ranked.begin(), ranked.end());
    std::vector<std::string> out;
    for (size_t i = 0; i < ranked.size() && i < 3; ++i)
        out.push_back(ranked[i].second);
    return out;
}

int unknown_id(std::string_view id, std::ostream& err)
{
    err << "unknown identity id '" << id << "'";
    auto hints = suggest_ids(id);
    if (!hints.empty()) {
        err << "; did you mean";
        for (size_t i = 0; i < hints.size(); ++i)
            err << (i ? ", " : " ") << "'" << hints[i] << "'";
    }
    err << "?\n";
    return 2;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void print_report_text(const VerificationReport& rep, std::ostream& out)
{
    out << rep.id << "  " << kind_name(rep.kind) << "  order=" << rep.order << "  "
        << status_name(rep.status);
    if (rep.first_divergent_exponent)
        out << "  first divergence at q^" << *rep.first_divergent_exponent;
    out << "  (" << fmt_ms(rep.ms) << " ms)\n";
}

int emit_reports(const std::vector<VerificationReport>& reports, Format format, std::ostream& out)
{
    switch (format) {
    case Format::Text:
        for (const auto& rep : reports)
            print_report_text(rep, out);
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports)
            arr.push_back(report_to_json(rep));
        out << arr.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "id,kind,order,status,first_divergent_exponent,ms\n";
        for (const auto& rep : reports) {
            out << csv_field(rep.id) << "," << kind_name(rep.kind) << "," << rep.order << ","
                << status_name(rep.status) << ",";
            if (rep.first_divergent_exponent)
                out << *rep.first_divergent_exponent;
            out << "," << fmt_ms(rep.ms) << "\n";
        }
        break;
    }
    return exit_code_for(reports);
}

int cmd_verify(const std::string& id, bool all, int order, int ceiling, Format format,
               std::ostream& out, std::ostream& err)
{
    if (all == !id.empty()) {
        err << "verify needs exactly one of --id or --all\n";
        return 2;
    }
    std::vector<VerificationReport> reports;
    if (all) {
        reports = verify_all(order, ceiling);
    } else {
        if (!find_entry(id))
            return unknown_id(id, err);
        reports.push_back(verify(id, order, ceiling));
    }
    return emit_reports(reports, format, out);
}

int cmd_table(int table_id, Format format, std::ostream& out, std::ostream& err)
{
    std::vector<TableSection> sections;
    try {
        sections = example_table(table_id);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
    switch (format) {
    case Format::Text:
        for (const auto& sec : sections) {
            out << sec.title << " (norm " << sec.norm << ")\n";
            for (const auto& row : sec.rows) {
                out << "  " << row.partition;
                if (row.witness > 0)
                    out << "  n=" << row.witness;
                out << "  " << row.weight.str() << "\n";
            }
            out << "  total: " << sec.total.str() << "\n";
        }
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& sec : sections) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : sec.rows) {
                nlohmann::json r{{"partition", row.partition}, {"weight", row.weight.str()}};
                if (row.witness > 0)
                    r["witness"] = row.witness;
                rows.push_back(std::move(r));
            }
            arr.push_back({{"title", sec.title},
                           {"norm", sec.norm},
                           {"rows", std::move(rows)},
                           {"total", sec.total.str()}});
        }
        out << arr.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "section,norm,partition,witness,weight\n";
        for (const auto& sec : sections) {
            for (const auto& row : sec.rows) {
                out << csv_field(sec.title) << "," << sec.norm << "," << csv_field(row.partition)
                    << ",";
                if (row.witness > 0)
                    out << row.witness;
                out << "," << row.weight.str() << "\n";
            }
            out << csv_field(sec.title) << "," << sec.norm << ",TOTAL,," << sec.total.str()
                << "\n";
        }
        break;
    }
    return 0;
}

int cmd_coeffs(const std::string& id, int side, int order, Format format, std::ostream& out,
               std::ostream& err)
{
    const IdentityEntry* entry = find_entry(id);
    if (!entry)
        return unknown_id(id, err);
    QSeries series(0);
    try {
        series = build_side(id, side, order);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    const Side& s = entry->sides[static_cast<size_t>(side)];
    switch (format) {
    case Format::Text:
        out << id << " side " << side << " (" << tag_name(s.tag) << ", " << s.label << ")\n";
        for (int k = 0; k <= series.order(); ++k)
            out << "  q^" << k << ": " << series[k].str() << "\n";
        break;
    case Format::Json: {
        std::vector<std::string> coeffs;
        for (int k = 0; k <= series.order(); ++k)
            coeffs.push_back(series[k].str());
        nlohmann::json j{{"id", id},
                         {"side", side},
                         {"tag", tag_name(s.tag)},
                         {"label", s.label},
                         {"order", series.order()},
                         {"coeffs", std::move(coeffs)}};
        out << j.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "exponent,coefficient\n";
        for (int k = 0; k <= series.order(); ++k)
            out << k << "," << csv_field(series[k].str()) << "\n";
        break;
    }
    return 0;
}

int cmd_list(Format format, std::ostream& out)
{
    switch (format) {
    case Format::Text:
        for (const IdentityEntry& e : registry()) {
            out << e.id << "  [" << kind_name(e.kind) << ", " << e.sides.size() << " sides]\n";
            out << "    " << e.statement << "\n";
            if (!e.source.empty())
                out << "    source: " << e.source << "\n";
        }
        break;
    case Format::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const IdentityEntry& e : registry()) {
            nlohmann::json sides = nlohmann::json::array();
            for (const Side& s : e.sides)
                sides.push_back({{"tag", tag_name(s.tag)}, {"label", s.label}});
            arr.push_back({{"id", e.id},
                           {"kind", kind_name(e.kind)},
                           {"statement", e.statement},
                           {"source", e.source},
                           {"sides", std::move(sides)},
                           {"max_enum_norm", e.max_enum_norm}});
        }
        out << arr.dump(2) << "\n";
        break;
    }
    case Format::Csv:
        out << "id,kind,sides,statement\n";
        for (const IdentityEntry& e : registry())
            out << csv_field(e.id) << "," << kind_name(e.kind) << "," << e.sides.size() << ","
                << csv_field(e.statement) << "\n";
        break;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact checker for weighted partition identities and their q-series"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string id;
    bool all = false;
    int order = 20;
    int ceiling = 20;
    int table_id = 0;
    int side = 0;

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "rebuild every side of an identity and compare coefficients");
    verify_cmd->add_option("--id", id, "identity id (see 'list')");
    verify_cmd->add_flag("--all", all, "verify the whole registry");
    verify_cmd->add_option("--order", order, "q-series truncation order")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--enum-ceiling", ceiling, "largest norm enumeration sides cover")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* table_cmd =
        app.add_subcommand("table", "print a fully worked weighted count at a fixed norm");
    table_cmd->add_option("--id", table_id, "table id: 2, 3, 4 or 7")->required();
    table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* coeffs_cmd =
        app.add_subcommand("coeffs", "print the coefficients of one side of an identity");
    coeffs_cmd->add_option("--id", id, "identity id")->required();
    coeffs_cmd->add_option("--side", side, "side index, 0-based")->required();
    coeffs_cmd->add_option("--order", order, "q-series truncation order")
        ->check(CLI::PositiveNumber);
    coeffs_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    CLI::App* list_cmd = app.add_subcommand("list", "list every identity in the registry");
    list_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    std::vector<const char*> argv;
    argv.push_back("qpi");
    for (const std::string& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Format fmt = parse_format(format);
        if (verify_cmd->parsed())
            return cmd_verify(id, all, order, ceiling, fmt, out, err);
        if (table_cmd->parsed())
            return cmd_table(table_id, fmt, out, err);
        if (coeffs_cmd->parsed())
            return cmd_coeffs(id, side, order, fmt, out, err);
        if (list_cmd->parsed())
            return cmd_list(fmt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand given\n";
    return 2;
}

}  // namespace qpi
