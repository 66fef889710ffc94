#include "tqmem/serialize.hpp"

#include "tqmem/errors.hpp"

#include <json.hpp>

#include <array>
#include <cerrno>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>

namespace tqm {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kCsvDigits = 12;
constexpr std::size_t kColumns = 13;

using Fields = std::array<double BoundsSample::*, kColumns>;

// Same order as kCsvHeader.
constexpr Fields kFields = {
    &BoundsSample::t,       &BoundsSample::alpha,   &BoundsSample::u_berta,
    &BoundsSample::u_adabi, &BoundsSample::delta,   &BoundsSample::k_berta,
    &BoundsSample::k_adabi, &BoundsSample::s_qb,    &BoundsSample::s_rb,
    &BoundsSample::s_ab,    &BoundsSample::i_ab,    &BoundsSample::i_qb,
    &BoundsSample::i_rb,
};

std::array<std::string_view, kColumns> column_names() {
    std::array<std::string_view, kColumns> names;
    std::string_view rest = kCsvHeader;
    for (std::size_t i = 0; i < kColumns; ++i) {
        const auto comma = rest.find(',');
        names[i] = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    return names;
}

void append_number(std::string& out, double value) {
    std::array<char, 32> buf;
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                         std::chars_format::general, kCsvDigits);
    if (ec != std::errc{}) {
        throw DomainError("emit_csv: cannot format value");
    }
    out.append(buf.data(), end);
}

double parse_number(std::string_view field, std::size_t line) {
    double value = 0.0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw DomainError("parse_csv: line " + std::to_string(line) + ": bad number '" +
                          std::string(field) + "'");
    }
    return value;
}

ordered_json config_to_json(const ExperimentConfig& config) {
    const auto& env = config.environment;
    const auto vec = [](const Eigen::Vector3d& v) { return ordered_json::array({v(0), v(1), v(2)}); };
    ordered_json j;
    j["environment"] = {{"kind", std::string(to_string(env.kind))},
                        {"s", env.s},
                        {"coupling", env.coupling},
                        {"gamma0", env.gamma0},
                        {"n_sc", env.n_sc},
                        {"epsilon", env.epsilon}};
    j["initial_state"] = {{"c1", config.initial_state.c1},
                          {"c2", config.initial_state.c2},
                          {"c3", config.initial_state.c3}};
    j["pair"] = {{"q", vec(config.pair.q().bloch())},
                 {"r", vec(config.pair.r().bloch())},
                 {"complementarity", config.pair.complementarity()}};
    j["t_max"] = config.t_max;
    j["steps"] = config.steps;
    j["format"] = std::string(to_string(config.format));
    return j;
}

}  // namespace

std::string emit_csv(std::span<const BoundsSample> samples) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& sample : samples) {
        for (std::size_t i = 0; i < kColumns; ++i) {
            if (i > 0) {
                out += ',';
            }
            append_number(out, sample.*kFields[i]);
        }
        out += '\n';
    }
    return out;
}

std::string emit_json(std::span<const BoundsSample> samples, const ExperimentConfig& config) {
    const auto names = column_names();
    ordered_json rows = ordered_json::array();
    for (const auto& sample : samples) {
        ordered_json row;
        for (std::size_t i = 0; i < kColumns; ++i) {
            row[std::string(names[i])] = sample.*kFields[i];
        }
        rows.push_back(std::move(row));
    }
    ordered_json doc;
    doc["config"] = config_to_json(config);
    doc["samples"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string emit(std::span<const BoundsSample> samples, const ExperimentConfig& config) {
    if (samples.empty()) {
        throw DomainError("emit: no samples");
    }
    return config.format == OutputFormat::csv ? emit_csv(samples) : emit_json(samples, config);
}

std::vector<BoundsSample> parse_csv(std::string_view text) {
    std::vector<BoundsSample> samples;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line_no == 1) {
            if (line != kCsvHeader) {
                throw DomainError("parse_csv: unexpected header '" + std::string(line) + "'");
            }
            continue;
        }
        if (line.empty()) {
            continue;
        }
        BoundsSample sample;
        std::string_view rest = line;
        for (std::size_t i = 0; i < kColumns; ++i) {
            const auto comma = rest.find(',');
            if ((comma == std::string_view::npos) != (i + 1 == kColumns)) {
                throw DomainError("parse_csv: line " + std::to_string(line_no) +
                                  ": expected " + std::to_string(kColumns) + " fields");
            }
            sample.*kFields[i] = parse_number(rest.substr(0, comma), line_no);
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        samples.push_back(sample);
    }
    if (line_no == 0) {
        throw DomainError("parse_csv: empty input");
    }
    return samples;
}

std::vector<BoundsSample> parse_json(std::string_view text) {
    const auto names = column_names();
    std::vector<BoundsSample> samples;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& row : doc.at("samples")) {
            BoundsSample sample;
            for (std::size_t i = 0; i < kColumns; ++i) {
                sample.*kFields[i] = row.at(std::string(names[i])).get<double>();
            }
            samples.push_back(sample);
        }
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("parse_json: ") + e.what());
    }
    return samples;
}

void write_output(std::string_view bytes, const std::string& path) {
    if (path == "-") {
        std::cout.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        std::cout.flush();
        if (!std::cout) {
            throw IoError("cannot write to standard output");
        }
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
    }
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.close();
    if (!file) {
        throw IoError("error while writing '" + path + "'");
    }
}

}  // namespace tqm
