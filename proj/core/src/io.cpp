#include "busca/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace busca {

namespace {

RawSeries parse_jsonl_record(const std::string& line, int line_number) {
    const auto obj = nlohmann::json::parse(line);
    if (!obj.is_object()) throw std::runtime_error("record is not a JSON object");
    RawSeries raw;
    raw.id = obj.contains("id") ? obj.at("id").get<std::string>()
                                : "line" + std::to_string(line_number);
    if (!obj.contains("timestamps") || !obj.at("timestamps").is_array())
        throw std::runtime_error("missing 'timestamps' array");
    raw.timestamps = obj.at("timestamps").get<std::vector<double>>();
    if (obj.contains("a")) raw.window_start = obj.at("a").get<double>();
    if (obj.contains("b")) raw.window_end = obj.at("b").get<double>();
    return raw;
}

} // namespace

SeriesFile read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw_error(ErrorKind::kIoError, "cannot open input file: " + path);

    SeriesFile out;
    std::string line;
    bool jsonl = false;
    // Sniff the first non-blank character.
    {
        std::ifstream probe(path);
        char c;
        while (probe.get(c)) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            jsonl = c == '{';
            break;
        }
    }

    if (jsonl) {
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            try {
                out.series.push_back(parse_jsonl_record(line, line_number));
            } catch (const std::exception& e) {
                out.errors.push_back(path + ":" + std::to_string(line_number) + ": " +
                                     e.what());
            }
        }
    } else {
        RawSeries raw;
        raw.id = std::filesystem::path(path).stem().string();
        int line_number = 0;
        bool ok = true;
        while (std::getline(in, line)) {
            ++line_number;
            const auto start = line.find_first_not_of(" \t\r\n");
            if (start == std::string::npos) continue;
            std::size_t consumed = 0;
            double value = 0.0;
            try {
                value = std::stod(line.substr(start), &consumed);
            } catch (const std::exception&) {
                out.errors.push_back(path + ":" + std::to_string(line_number) +
                                     ": not a number: " + line);
                ok = false;
                break;
            }
            raw.timestamps.push_back(value);
        }
        if (ok) out.series.push_back(std::move(raw));
    }
    return out;
}

EventSeries validate_raw(const RawSeries& raw) {
    return validate_series(raw.timestamps, raw.window_start, raw.window_end, raw.id);
}

void write_series_jsonl(std::ostream& out, const EventSeries& series) {
    nlohmann::json obj;
    obj["id"] = series.id();
    obj["timestamps"] = std::vector<double>(series.timestamps().begin(),
                                            series.timestamps().end());
    obj["a"] = series.window_start();
    obj["b"] = series.window_end();
    out << obj.dump() << '\n';
}

void write_labels_csv_header(std::ostream& out) {
    out << "id,timestamp,label\n";
}

void write_labels_csv(std::ostream& out, const EventSeries& series,
                      const LabelAssignment& labels) {
    const auto ts = series.timestamps();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out << csv_escape(series.id()) << ',' << format_number(ts[i]) << ','
            << to_string(labels.labels[i]) << '\n';
    }
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

void write_csv_row(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out << ',';
        out << csv_escape(fields[i]);
    }
    out << '\n';
}

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw_error(ErrorKind::kIoError, "cannot open CSV file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        field += '"';
                        ++i;
                    } else {
                        quoted = false;
                    }
                } else {
                    field += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else {
                field += c;
            }
        }
        fields.push_back(std::move(field));
        rows.push_back(std::move(fields));
    }
    return rows;
}

} // namespace busca
