#include <hilbert_euler/cli.hpp>

#include <algorithm>
#include <charconv>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include <hilbert_euler/partitions.hpp>
#include <hilbert_euler/series.hpp>
#include <hilbert_euler/strata.hpp>

namespace hilbert_euler::cli {

namespace {

using json = nlohmann::ordered_json;

// A column is rendered as a JSON integer, a JSON string or a JSON bool.
// Big integers are always strings.
enum class column_kind { integer, text, boolean };

struct column {
    std::string name;
    column_kind kind;
};

struct row_table {
    std::vector<column> columns;
    std::vector<std::vector<std::string>> rows;
};

json cell_to_json(const std::string& cell, column_kind kind)
{
    switch (kind) {
    case column_kind::integer:
        return std::stoll(cell);
    case column_kind::boolean:
        return cell == "true";
    case column_kind::text:
        break;
    }
    return cell;
}

json rows_to_json(const row_table& table)
{
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            obj[table.columns[c].name] = cell_to_json(row[c], table.columns[c].kind);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_csv(const row_table& table, std::ostream& out)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c].name;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << row[c];
        }
        out << '\n';
    }
}

void write_aligned(const row_table& table, std::ostream& out)
{
    std::vector<std::size_t> widths;
    for (const auto& col : table.columns) {
        widths.push_back(col.name.size());
    }
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    auto emit = [&](auto cell_at) {
        for (std::size_t c = 0; c < widths.size(); ++c) {
            const std::string& cell = cell_at(c);
            out << (c ? "  " : "") << std::string(widths[c] - cell.size(), ' ') << cell;
        }
        out << '\n';
    };
    emit([&](std::size_t c) -> const std::string& { return table.columns[c].name; });
    for (const auto& row : table.rows) {
        emit([&](std::size_t c) -> const std::string& { return row[c]; });
    }
}

std::string range_text(const int_range& r)
{
    return std::to_string(r.first) + ".." + std::to_string(r.last);
}

} // namespace

std::optional<int_range> parse_range(std::string_view text)
{
    const auto sep = text.find("..");
    if (sep == std::string_view::npos) {
        return std::nullopt;
    }
    auto parse_bound = [](std::string_view part) -> std::optional<std::int64_t> {
        std::int64_t value = 0;
        const auto* end = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(part.data(), end, value);
        if (part.empty() || ec != std::errc{} || ptr != end) {
            return std::nullopt;
        }
        return value;
    };
    const auto first = parse_bound(text.substr(0, sep));
    const auto last = parse_bound(text.substr(sep + 2));
    if (!first || !last) {
        return std::nullopt;
    }
    return int_range{*first, *last};
}

std::string_view mode_name(output_mode m)
{
    switch (m) {
    case output_mode::product:
        return "product";
    case output_mode::strata:
        return "strata";
    case output_mode::both:
        return "both";
    case output_mode::macdonald:
        return "macdonald";
    case output_mode::breakdown:
        break;
    }
    return "breakdown";
}

int cmd_compute(const cli_config& config, std::ostream& out, std::ostream& err)
{
    const auto e = config.euler_char;
    const auto max_n = config.max_n;
    row_table table;
    int status = exit_success;

    switch (config.mode) {
    case output_mode::product: {
        table.columns = {{"n", column_kind::integer}, {"value", column_kind::text}};
        const auto coeffs = euler_product(e, max_n).integer_coefficients();
        for (unsigned n = 0; n <= max_n; ++n) {
            table.rows.push_back({std::to_string(n), to_string(coeffs[n])});
        }
        break;
    }
    case output_mode::strata:
        table.columns = {{"n", column_kind::integer}, {"value", column_kind::text}};
        for (unsigned n = 0; n <= max_n; ++n) {
            table.rows.push_back({std::to_string(n), to_string(hilbert_euler_strata(n, e))});
        }
        break;
    case output_mode::both: {
        table.columns = {{"n", column_kind::integer},
                         {"strata", column_kind::text},
                         {"product", column_kind::text},
                         {"match", column_kind::boolean}};
        const auto coeffs = euler_product(e, max_n).integer_coefficients();
        for (unsigned n = 0; n <= max_n; ++n) {
            const auto strata = hilbert_euler_strata(n, e);
            const bool match = strata == coeffs[n];
            if (!match) {
                err << "route mismatch at n=" << n << ": strata=" << strata << " product=" << coeffs[n] << '\n';
                status = exit_failure;
            }
            table.rows.push_back({std::to_string(n), to_string(strata), to_string(coeffs[n]), match ? "true" : "false"});
        }
        break;
    }
    case output_mode::macdonald:
        table.columns = {{"n", column_kind::integer}, {"value", column_kind::text}};
        for (unsigned n = 0; n <= max_n; ++n) {
            table.rows.push_back({std::to_string(n), to_string(symmetric_euler_strata(n, e))});
        }
        break;
    case output_mode::breakdown:
        table.columns = {{"n", column_kind::integer},
                         {"partition", column_kind::text},
                         {"stratum_euler", column_kind::text},
                         {"fiber_euler", column_kind::text},
                         {"tilde_euler", column_kind::text}};
        for (unsigned n = 0; n <= max_n; ++n) {
            for (const auto& report : stratum_reports(n, e)) {
                table.rows.push_back({std::to_string(n), report.nu.to_string(), to_string(report.stratum_euler),
                                      to_string(report.fiber_euler), to_string(report.tilde_euler)});
            }
        }
        break;
    }

    switch (config.format) {
    case output_format::json: {
        json doc = json::object();
        doc["euler_char"] = e;
        doc["max_n"] = max_n;
        doc["mode"] = mode_name(config.mode);
        doc["rows"] = rows_to_json(table);
        out << doc.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        write_csv(table, out);
        break;
    case output_format::table:
        out << "# e(X) = " << e << ", mode = " << mode_name(config.mode) << '\n';
        write_aligned(table, out);
        break;
    }
    return status;
}

int cmd_verify(const cli_config& config, std::ostream& out)
{
    const auto report = run_all(config.verify);

    switch (config.format) {
    case output_format::json: {
        json doc = json::object();
        doc["grid"] = {{"euler_chars", range_text(config.verify.euler_chars)},
                       {"point_counts", range_text(config.verify.point_counts)}};
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"name", c.name},
                              {"cell", c.cell},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"pass", c.passed}});
        }
        doc["checks"] = std::move(checks);
        doc["summary"] = {{"passed", report.passed}, {"failed", report.failed}, {"all_passed", report.all_passed()}};
        out << doc.dump(2) << '\n';
        break;
    }
    case output_format::csv:
        out << "name,cell,expected,actual,pass\n";
        for (const auto& c : report.checks) {
            // cell contains a comma
            out << c.name << ",\"" << c.cell << "\"," << c.expected << ',' << c.actual << ','
                << (c.passed ? "true" : "false") << '\n';
        }
        break;
    case output_format::table: {
        std::map<std::string, std::pair<std::size_t, std::size_t>> per_check;
        for (const auto& c : report.checks) {
            auto& [passed, failed] = per_check[c.name];
            ++(c.passed ? passed : failed);
            if (!c.passed) {
                out << "FAIL " << c.name << " [" << c.cell << "] expected " << c.expected << ", got " << c.actual
                    << '\n';
            }
        }
        out << "grid e=" << range_text(config.verify.euler_chars) << " n=" << range_text(config.verify.point_counts)
            << '\n';
        for (const auto& [name, counts] : per_check) {
            out << "  " << name << ": " << counts.first << " passed, " << counts.second << " failed\n";
        }
        if (report.all_passed()) {
            out << "all passed (" << report.passed << " checks)\n";
        } else {
            out << report.failed << " of " << report.checks.size() << " checks failed\n";
        }
        break;
    }
    }
    return report.all_passed() ? exit_success : exit_failure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    cli_config config;

    CLI::App app{"Euler characteristics of Hilbert schemes of points on a surface", "hilbert-euler"};
    app.require_subcommand(0, 1);

    const std::map<std::string, output_mode> modes{{"product", output_mode::product},
                                                   {"strata", output_mode::strata},
                                                   {"both", output_mode::both},
                                                   {"macdonald", output_mode::macdonald},
                                                   {"breakdown", output_mode::breakdown}};
    const std::map<std::string, output_format> formats{
        {"table", output_format::table}, {"json", output_format::json}, {"csv", output_format::csv}};

    app.add_option("-e,--euler-char", config.euler_char, "Topological Euler characteristic e(X) of the surface");
    app.add_option("-n,--max-n", config.max_n, "Largest number of points")->check(CLI::NonNegativeNumber);
    app.add_option("--mode", config.mode, "product | strata | both | macdonald | breakdown")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    app.add_option("--format", config.format, "table | json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    app.add_subcommand("compute", "Tabulate e(X^[n]) for n = 0..max-n (default)")->fallthrough();

    auto* verify = app.add_subcommand("verify", "Check every identity over a grid of (e, n) cells");
    verify->fallthrough();
    std::string grid_e = range_text(config.verify.euler_chars);
    std::string grid_n = range_text(config.verify.point_counts);
    std::string negative_control = "none";
    auto range_check = [](const std::string& text) -> std::string {
        return parse_range(text) ? std::string{} : "expected a range of the form a..b, got '" + text + "'";
    };
    verify->add_option("--grid-e", grid_e, "Range of Euler characteristics, e.g. -6..24")->check(range_check);
    verify->add_option("--grid-n", grid_n, "Range of point counts, e.g. 0..30")->check(range_check);
    verify
        ->add_option("--negative-control", negative_control,
                     "Corrupt the strata route to exercise the harness: none | power | no-fiber")
        ->check(CLI::IsMember({"none", "power", "no-fiber"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        if (verify->parsed()) {
            config.verify.euler_chars = *parse_range(grid_e);
            config.verify.point_counts = *parse_range(grid_n);
            if (!config.verify.point_counts.empty() && config.verify.point_counts.first < 0) {
                err << "--grid-n: point counts must be non-negative\n";
                return exit_usage;
            }
            if (negative_control == "power") {
                config.verify.negative_control = mutation::power_for_falling_factorial;
            } else if (negative_control == "no-fiber") {
                config.verify.negative_control = mutation::drop_fiber_factor;
            }
            return cmd_verify(config, out);
        }
        return cmd_compute(config, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
}

} // namespace hilbert_euler::cli
