#include <charconv>
#include <span>

#include "symplane/cli/output.hpp"

namespace symplane::cli {

namespace {

std::string quote_if_needed(std::string field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

std::string cell(const json& v) {
    if (v.is_null()) return {};
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) return format_double(v.get<double>());
    if (v.is_number()) return v.dump();
    if (v.is_string()) return quote_if_needed(v.get<std::string>());
    return quote_if_needed(v.dump());
}

void append_row(std::string& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += "\r\n";
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return {buf, res.ptr};
}

std::string to_csv(const RunReport& report) {
    std::string out;
    const json& results = report.results;
    if (report.subcommand == "crank") {
        append_row(out, std::vector<std::string>{"phi", "s", "psi", "psi_unwrapped", "s_dot", "psi_dot", "s_ddot",
                                                 "psi_ddot", "e_psi_x", "e_psi_y", "singular", "near_singular"});
        for (const json& row : results.at("states")) {
            const json& e = row.at("e_psi");
            append_row(out, std::vector<std::string>{
                                cell(row.at("phi")), cell(row.at("s")), cell(row.at("psi")),
                                cell(row.at("psi_unwrapped")), cell(row.at("s_dot")), cell(row.at("psi_dot")),
                                cell(row.at("s_ddot")), cell(row.at("psi_ddot")), e.is_null() ? "" : cell(e.at(0)),
                                e.is_null() ? "" : cell(e.at(1)), cell(row.at("singular")),
                                cell(row.at("near_singular"))});
        }
    } else if (report.subcommand == "oscillator") {
        append_row(out, std::vector<std::string>{"t", "q", "p", "energy"});
        for (const json& row : results.at("states"))
            append_row(out, std::vector<std::string>{cell(row.at("t")), cell(row.at("q")), cell(row.at("p")),
                                                     cell(row.at("energy"))});
    } else if (report.subcommand == "identities") {
        append_row(out, std::vector<std::string>{"identity", "max_abs_residual", "max_scaled_residual", "tolerance"});
        const json& scaled = results.at("max_scaled_residual");
        for (const auto& [name, value] : report.residuals.items())
            append_row(out, std::vector<std::string>{name, cell(value), cell(scaled.at(name)),
                                                     cell(results.at("tolerance"))});
    } else {
        throw Error(ErrorCode::InvalidArgument, "CSV output is only available for crank, oscillator and identities");
    }
    return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool pending = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (quoted) {
            if (ch != '"') {
                field += ch;
            } else if (i + 1 < text.size() && text[i + 1] == '"') {
                field += '"';
                ++i;
            } else {
                quoted = false;
            }
            continue;
        }
        switch (ch) {
            case '"': quoted = true; pending = true; break;
            case ',':
                row.push_back(std::move(field));
                field.clear();
                pending = true;
                break;
            case '\r': break;
            case '\n':
                row.push_back(std::move(field));
                field.clear();
                rows.push_back(std::move(row));
                row.clear();
                pending = false;
                break;
            default: field += ch; pending = true;
        }
    }
    if (pending) {
        row.push_back(std::move(field));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace symplane::cli
