#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matrix.hpp"
#include "scalar.hpp"

namespace krawtchouk {

enum class Format { csv, json };

template <field_scalar S>
S scalar_from_string(const std::string& text) {
    return scalar_traits<S>::from_rational(rational_from_string(text));
}

/// CSV signals are one value per line; JSON signals are an array of strings
/// in the exact backend ("27/16" does not fit a JSON number losslessly) and
/// an array of numbers in the float backend. Readers accept both element
/// kinds regardless of backend.
template <field_scalar S>
Signal<S> read_signal(std::istream& in, Format format) {
    Signal<S> out;
    if (format == Format::csv) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            out.push_back(scalar_from_string<S>(line.substr(start)));
        }
        return out;
    }
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_array()) throw std::invalid_argument("read_signal: expected a JSON array");
    for (const auto& e : j) {
        if (e.is_string())
            out.push_back(scalar_from_string<S>(e.get<std::string>()));
        else if (e.is_number())
            out.push_back(scalar_from_string<S>(nlohmann::json(e).dump()));
        else
            throw std::invalid_argument("read_signal: array elements must be numbers or strings");
    }
    return out;
}

namespace detail {

template <field_scalar S>
nlohmann::json scalar_to_json(const S& v) {
    if constexpr (scalar_traits<S>::exact)
        return scalar_traits<S>::str(v);
    else
        return scalar_traits<S>::to_double(v);
}

}  // namespace detail

template <field_scalar S>
void write_signal(std::ostream& out, const Signal<S>& f, Format format) {
    if (format == Format::csv) {
        for (const auto& v : f) out << scalar_traits<S>::str(v) << '\n';
        return;
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& v : f) j.push_back(detail::scalar_to_json(v));
    out << j.dump() << '\n';
}

/// Matrices are row-major: CSV rows are comma-separated lines, JSON is an
/// array of row arrays.
template <field_scalar S>
void write_matrix(std::ostream& out, const Matrix<S>& m, Format format) {
    if (format == Format::csv) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (j) out << ',';
                out << scalar_traits<S>::str(m(i, j));
            }
            out << '\n';
        }
        return;
    }
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(detail::scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    out << rows.dump() << '\n';
}

}  // namespace krawtchouk
