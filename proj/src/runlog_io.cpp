#include "seedga/runlog_io.hpp"

#include <charconv>

#include "seedga/errors.hpp"

namespace seedga {

namespace {

template <class T>
T parse_number(const std::string& text, std::size_t line, const char* column) {
    T value{};
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError("line " + std::to_string(line) + ": bad " + column + " '" + text + "'");
    }
    return value;
}

} // namespace

std::string csv_field(std::string_view text) {
    const bool quote = text.find_first_of(",\"\r\n") != std::string_view::npos ||
                       (!text.empty() && (text.front() == ' ' || text.back() == ' '));
    if (!quote) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split_csv_record(std::string_view line) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else if (c != '\r') {
            fields.back() += c;
        }
    }
    if (quoted) {
        throw ParseError("unterminated quoted CSV field");
    }
    return fields;
}

std::vector<GenerationRecord> parse_generation_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || split_csv_record(line) != split_csv_record(kGenerationCsvHeader)) {
        throw ParseError("generation log must start with '" + std::string(kGenerationCsvHeader) + "'");
    }
    std::vector<GenerationRecord> records;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_record(line);
        if (fields.size() != 4) {
            throw ParseError("line " + std::to_string(line_number) + ": expected 4 fields");
        }
        records.push_back({parse_number<std::size_t>(fields[0], line_number, "generation"),
                           parse_number<double>(fields[1], line_number, "best_fitness"),
                           parse_number<double>(fields[2], line_number, "mean_fitness"),
                           std::move(fields[3])});
    }
    return records;
}

template <>
PermutationChromosome chromosome_from_text<PermutationChromosome>(std::string_view text) {
    return parse_chromosome_tour(text);
}

template <>
StringChromosome chromosome_from_text<StringChromosome>(std::string_view text) {
    return StringChromosome{std::string(text)};
}

} // namespace seedga
