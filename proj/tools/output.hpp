#pragma once

// Plumbing shared by the subcommands: number formatting, CSV tables and the
// stdout / --out sink.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace tspine::cli {

enum class Format { Json, Csv };

constexpr int kSignificantDigits = 15;

// Shortest text for x at 15 significant digits, locale independent.
inline std::string format_number(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, kSignificantDigits);
    return std::string(buf, res.ptr);
}

// Rounds to 15 significant digits so that the JSON writer (shortest round
// trip) never prints more and re-serializing is a fixed point.
inline nlohmann::json num(double x) {
    if (!std::isfinite(x)) return nullptr;
    const std::string s = format_number(x);
    double y = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), y);
    return y;
}

inline nlohmann::json num(std::optional<double> x) { return x ? num(*x) : nlohmann::json(nullptr); }

using Cell = std::variant<std::monostate, double, long long, std::string>;

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

inline std::string csv_cell(const Cell& c) {
    struct V {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double x) const { return format_number(x); }
        std::string operator()(long long x) const { return std::to_string(x); }
        std::string operator()(const std::string& s) const { return csv_field(s); }
    };
    return std::visit(V{}, c);
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) {
        if (row.size() != header.size()) throw std::logic_error("csv row width does not match header");
        rows.push_back(std::move(row));
    }

    void write(std::ostream& os) const {
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
        os << '\n';
        for (const auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
            os << '\n';
        }
    }
};

inline Cell opt_cell(std::optional<double> x) { return x ? Cell(*x) : Cell(std::monostate{}); }

class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }

    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

    void emit(const nlohmann::json& j) { stream() << j.dump(2) << '\n'; finish(); }
    void emit(const Table& t) { t.write(stream()); finish(); }

private:
    void finish() {
        stream().flush();
        if (!stream()) throw std::runtime_error("write to output failed");
    }

    std::ofstream file_;
};

}  // namespace tspine::cli
