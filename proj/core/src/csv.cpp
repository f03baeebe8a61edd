#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "twinga/errors.hpp"
#include "twinga/experiment.hpp"

namespace twinga {

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw ExportError("cannot open " + file.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) throw ExportError("write failed for " + file.string());
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
T parse_field(std::string_view text, const std::filesystem::path& file, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ExportError(file.string() + ":" + std::to_string(line) + ": malformed field '" + std::string(text) +
                          "'");
    return value;
}

/// Reads all data rows after checking the header; each row must have `columns` fields.
std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& file, std::string_view header,
                                                std::size_t columns) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ExportError("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line) || line != header)
        throw ExportError(file.string() + ":1: unexpected header");
    std::vector<std::vector<std::string>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split(line);
        if (fields.size() != columns)
            throw ExportError(file.string() + ":" + std::to_string(line_no) + ": expected " +
                              std::to_string(columns) + " fields");
        rows.emplace_back(fields.begin(), fields.end());
    }
    return rows;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc{}) throw ExportError("number formatting failed");
    return std::string(buf, ptr);
}

std::string summary_row(const RunLabel& label, const AggregateStats& stats) {
    std::string row = label.function;
    row += ',';
    row += to_string(label.mode);
    row += ',' + std::to_string(stats.n_trials);
    row += ',' + format_number(stats.mean_best);
    row += ',' + format_number(stats.max_best);
    row += ',' + format_number(stats.cv_percent);
    row += ',' + format_number(stats.mean_convergence_generation);
    return row;
}

void write_summary_csv(std::span<const SummaryLine> lines, const std::filesystem::path& file) {
    auto out = open_for_write(file);
    out << kSummaryHeader << '\n';
    for (const auto& l : lines) out << summary_row(l.label, l.stats) << '\n';
    finish(out, file);
}

ExportPaths export_csv(std::span<const TrialRecord> records, const AggregateStats& stats, const RunLabel& label,
                       const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) throw ExportError("cannot create " + directory.string() + ": " + ec.message());

    const std::string stem = label.stem();
    ExportPaths paths{directory / (stem + ".generations.csv"), directory / (stem + ".trials.csv"),
                      directory / (stem + ".summary.csv")};

    {
        auto out = open_for_write(paths.generations);
        out << kGenerationsHeader << '\n';
        for (const auto& r : records)
            for (const auto& e : r.entries)
                out << r.trial_index << ',' << e.generation << ',' << format_number(e.best_fitness) << ','
                    << format_number(e.second_best_fitness) << ',' << format_number(e.avg_fitness) << ','
                    << format_number(e.p_twin) << '\n';
        finish(out, paths.generations);
    }
    {
        auto out = open_for_write(paths.trials);
        out << kTrialsHeader << '\n';
        for (const auto& r : records)
            out << r.trial_index << ',' << format_number(r.reported_best) << ',' << r.convergence_generation
                << '\n';
        finish(out, paths.trials);
    }
    const SummaryLine line{label, stats};
    write_summary_csv(std::span(&line, 1), paths.summary);
    return paths;
}

TrialsFile read_trials_csv(const std::filesystem::path& file) {
    TrialsFile t;
    std::size_t line = 1;
    for (const auto& row : read_rows(file, kTrialsHeader, 3)) {
        ++line;
        t.trial.push_back(parse_field<int>(row[0], file, line));
        t.final_best.push_back(parse_field<double>(row[1], file, line));
        t.convergence_generation.push_back(parse_field<int>(row[2], file, line));
    }
    return t;
}

std::vector<GenerationRow> read_generations_csv(const std::filesystem::path& file) {
    std::vector<GenerationRow> out;
    std::size_t line = 1;
    for (const auto& row : read_rows(file, kGenerationsHeader, 6)) {
        ++line;
        GenerationRow g;
        g.trial = parse_field<int>(row[0], file, line);
        g.entry.generation = parse_field<int>(row[1], file, line);
        g.entry.best_fitness = parse_field<double>(row[2], file, line);
        g.entry.second_best_fitness = parse_field<double>(row[3], file, line);
        g.entry.avg_fitness = parse_field<double>(row[4], file, line);
        g.entry.p_twin = parse_field<double>(row[5], file, line);
        out.push_back(g);
    }
    return out;
}

std::vector<SummaryLine> read_summary_csv(const std::filesystem::path& file) {
    std::vector<SummaryLine> out;
    std::size_t line = 1;
    for (const auto& row : read_rows(file, kSummaryHeader, 7)) {
        ++line;
        SummaryLine s;
        s.label.function = row[0];
        const auto mode = parse_mode(row[1]);
        if (!mode) throw ExportError(file.string() + ":" + std::to_string(line) + ": unknown mode " + row[1]);
        s.label.mode = *mode;
        s.stats.n_trials = parse_field<int>(row[2], file, line);
        s.stats.mean_best = parse_field<double>(row[3], file, line);
        s.stats.max_best = parse_field<double>(row[4], file, line);
        s.stats.cv_percent = parse_field<double>(row[5], file, line);
        s.stats.mean_convergence_generation = parse_field<double>(row[6], file, line);
        out.push_back(s);
    }
    return out;
}

}  // namespace twinga
