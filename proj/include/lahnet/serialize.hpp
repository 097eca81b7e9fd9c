#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "lahnet/bigint.hpp"
#include "lahnet/errors.hpp"
#include "lahnet/exact_matrix.hpp"
#include "lahnet/lah.hpp"
#include "lahnet/lgv.hpp"
#include "lahnet/network.hpp"
#include "lahnet/variation.hpp"

// Machine formats carry every integer of arbitrary size as a decimal
// string; JSON numbers are reserved for small structural values
// (dimensions, indices, counts of samples). Rationale: a JSON number
// cannot hold 20! faithfully in every consumer.

namespace lahnet {

using json = nlohmann::ordered_json;

inline json matrix_to_json(const ExactMatrix& M) {
    json rows = json::array();
    for (std::size_t i = 1; i <= M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 1; j <= M.cols(); ++j) row.push_back(to_decimal(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ExactMatrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty()) {
        throw DimensionError("matrix JSON must be a non-empty array of arrays");
    }
    std::vector<std::vector<BigInt>> entries;
    for (const json& row : rows) {
        if (!row.is_array()) throw DimensionError("matrix JSON must be a non-empty array of arrays");
        std::vector<BigInt> parsed;
        for (const json& cell : row) parsed.push_back(parse_decimal(cell.get<std::string>()));
        entries.push_back(std::move(parsed));
    }
    return ExactMatrix::from_rows(entries);
}

inline std::string matrix_to_csv(const ExactMatrix& M) {
    std::string out;
    for (std::size_t i = 1; i <= M.rows(); ++i) {
        for (std::size_t j = 1; j <= M.cols(); ++j) {
            if (j > 1) out += ',';
            out += to_decimal(M.at(i, j));
        }
        out += '\n';
    }
    return out;
}

// Accepts the CSV form above and the compact CLI form "1,0;2,1" with ';'
// between rows.
inline ExactMatrix matrix_from_text(const std::string& text) {
    std::vector<std::vector<BigInt>> rows;
    std::vector<BigInt> row;
    std::string cell;
    auto flush_cell = [&] {
        std::size_t begin = cell.find_first_not_of(" \t");
        if (begin == std::string::npos) {
            if (!row.empty()) throw DimensionError("matrix text has an empty cell");
            return;
        }
        std::size_t end = cell.find_last_not_of(" \t");
        row.push_back(parse_decimal(cell.substr(begin, end - begin + 1)));
    };
    auto flush_row = [&] {
        flush_cell();
        cell.clear();
        if (!row.empty()) rows.push_back(std::move(row));
        row.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_cell();
            cell.clear();
            if (row.empty()) throw DimensionError("matrix text has an empty cell");
        } else if (c == ';' || c == '\n') {
            flush_row();
        } else {
            cell += c;
        }
    }
    flush_row();
    if (rows.empty()) throw DimensionError("matrix text is empty");
    return ExactMatrix::from_rows(rows);
}

inline json network_to_json(const Network& net) {
    json doc;
    doc["n"] = net.n();
    json vertices = json::array();
    for (std::size_t v = 0; v < net.vertex_count(); ++v) vertices.push_back(net.label(v));
    doc["vertices"] = std::move(vertices);
    json edges = json::array();
    for (const Edge& e : net.edges()) {
        json edge;
        edge["tail"] = net.label(e.tail);
        edge["head"] = net.label(e.head);
        edge["weight"] = to_decimal(e.weight);
        edges.push_back(std::move(edge));
    }
    doc["edges"] = std::move(edges);
    json sources = json::array();
    for (std::size_t v : net.sources()) sources.push_back(net.label(v));
    doc["sources"] = std::move(sources);
    json sinks = json::array();
    for (std::size_t v : net.sinks()) sinks.push_back(net.label(v));
    doc["sinks"] = std::move(sinks);
    return doc;
}

inline json index_set_to_json(const IndexSet& s) {
    json values = json::array();
    for (std::size_t i : s) values.push_back(i);
    return values;
}

inline json lindstrom_report_to_json(const LindstromReport& r) {
    json doc;
    doc["I"] = index_set_to_json(r.I);
    doc["J"] = index_set_to_json(r.J);
    doc["minor"] = to_decimal(r.minor);
    doc["family_sum"] = to_decimal(r.family_sum);
    doc["equal"] = r.equal;
    doc["family_count"] = to_decimal(r.family_count);
    return doc;
}

inline json tnn_report_to_json(const TnnReport& r) {
    json doc;
    doc["rows"] = r.rows;
    doc["cols"] = r.cols;
    doc["checked_minor_count"] = to_decimal(r.checked_minor_count);
    doc["is_tnn"] = r.is_tnn;
    if (r.witness) {
        json witness;
        witness["rows"] = index_set_to_json(r.witness->rows);
        witness["cols"] = index_set_to_json(r.witness->cols);
        witness["value"] = to_decimal(r.witness->value);
        doc["witness"] = std::move(witness);
    } else {
        doc["witness"] = nullptr;
    }
    return doc;
}

inline json variation_report_to_json(const VariationReport& r) {
    json doc;
    doc["sample_count"] = r.sample_count;
    doc["seed"] = std::to_string(r.seed);
    doc["entry_bound"] = r.entry_bound;
    doc["generator"] = r.generator;
    doc["violation_count"] = r.violations.size();
    json violations = json::array();
    for (const VariationViolation& v : r.violations) {
        json item;
        json input = json::array();
        for (const BigInt& entry : v.input) input.push_back(to_decimal(entry));
        item["input"] = std::move(input);
        item["input_variation"] = v.input_variation;
        item["output_variation"] = v.output_variation;
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    doc["max_drop"] = r.max_drop;
    return doc;
}

inline json identity_report_to_json(const IdentityReport& r) {
    json doc;
    doc["n"] = r.n;
    doc["holds"] = r.holds;
    if (r.mismatch) {
        json mismatch;
        mismatch["degree"] = r.mismatch->degree;
        mismatch["lhs"] = to_decimal(r.mismatch->lhs);
        mismatch["rhs"] = to_decimal(r.mismatch->rhs);
        doc["mismatch"] = std::move(mismatch);
    } else {
        doc["mismatch"] = nullptr;
    }
    return doc;
}

}  // namespace lahnet
