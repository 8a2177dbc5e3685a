#include "wcpswf/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wcpswf {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_eigenpairs_json(std::ostream& os, const std::vector<CpswfEigenpair>& pairs) {
    os << "{\n  \"pairs\": [";
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& e = pairs[p];
        os << (p == 0 ? "\n" : ",\n");
        os << "    {\"parity\": \"" << (e.parity == Parity::Even ? "even" : "odd")
           << "\", \"N\": " << e.N << ", \"k\": " << e.k << ", \"m\": " << e.m
           << ", \"alpha\": " << format_float(e.alpha) << ", \"c\": " << format_float(e.c)
           << ", \"chi\": " << format_float(e.chi) << ", \"trunc\": " << e.trunc
           << ", \"coeffs\": [";
        for (std::size_t i = 0; i < e.coeffs.size(); ++i) {
            if (i) os << ", ";
            os << format_float(e.coeffs[i]);
        }
        os << "]}";
    }
    os << "\n  ]\n}\n";
}

std::string eigenpairs_to_json(const std::vector<CpswfEigenpair>& pairs) {
    std::ostringstream ss;
    write_eigenpairs_json(ss, pairs);
    return ss.str();
}

std::vector<CpswfEigenpair> read_eigenpairs_json(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("eigenpair JSON parse error: ") + e.what());
    }
    if (!doc.contains("pairs") || !doc["pairs"].is_array())
        throw std::invalid_argument("eigenpair JSON: missing \"pairs\" array");
    std::vector<CpswfEigenpair> out;
    for (const auto& j : doc["pairs"]) {
        CpswfEigenpair e;
        const std::string parity = j.at("parity").get<std::string>();
        if (parity == "even")
            e.parity = Parity::Even;
        else if (parity == "odd")
            e.parity = Parity::Odd;
        else
            throw std::invalid_argument("eigenpair JSON: parity must be even|odd");
        e.N = j.at("N").get<int>();
        e.k = j.at("k").get<int>();
        e.m = j.at("m").get<int>();
        e.alpha = j.at("alpha").get<double>();
        e.c = j.at("c").get<double>();
        e.chi = j.at("chi").get<double>();
        e.trunc = j.at("trunc").get<int>();
        e.coeffs = j.at("coeffs").get<std::vector<double>>();
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<CpswfEigenpair> read_eigenpairs_json_string(const std::string& text) {
    std::istringstream ss(text);
    return read_eigenpairs_json(ss);
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << format_float(values[i]);
    }
    os << '\n';
}

} // namespace wcpswf
