// Copyright 2026 The fockc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * File formats: unitary JSON, compile reports, outcome JSON, occupation
 * strings.
 *
 * Unitary file: { "m": 3, "re": [[...], ...], "im": [[...], ...] }
 */

#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "circuit.hpp"
#include "compiler.hpp"
#include "fock.hpp"
#include "sim.hpp"

namespace fockc {

using json = nlohmann::json;

[[nodiscard]] inline std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading '" + path + "'");
    }
    return buf.str();
}

inline void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw IoError("error while writing '" + path + "'");
    }
}

[[nodiscard]] inline json unitary_to_json(const ComplexMatrix &u) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        json rr = json::array();
        json ri = json::array();
        for (Eigen::Index j = 0; j < u.cols(); ++j) {
            rr.push_back(u(i, j).real());
            ri.push_back(u(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return {{"m", u.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parses the unitary JSON document. Shape is validated here; unitarity is
/// left to the caller.
[[nodiscard]] inline ComplexMatrix unitary_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("re") || !doc.contains("im")) {
        throw ParseError("unitary file: expected an object with keys m, re, im");
    }
    if (!doc["m"].is_number_integer() || doc["m"].get<long long>() < 1) {
        throw ParseError("unitary file: m must be a positive integer");
    }
    const auto m = static_cast<std::size_t>(doc["m"].get<long long>());
    auto read_part = [&](const char *key) {
        const json &part = doc[key];
        if (!part.is_array() || part.size() != m) {
            throw ParseError(std::string("unitary file: '") + key + "' must have m rows");
        }
        Eigen::MatrixXd out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
        for (std::size_t i = 0; i < m; ++i) {
            if (!part[i].is_array() || part[i].size() != m) {
                throw ParseError(std::string("unitary file: row ") + std::to_string(i) + " of '" +
                                 key + "' must have m entries");
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (!part[i][j].is_number()) {
                    throw ParseError("unitary file: non-numeric entry");
                }
                out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    part[i][j].get<double>();
            }
        }
        return out;
    };
    const Eigen::MatrixXd re = read_part("re");
    const Eigen::MatrixXd im = read_part("im");
    ComplexMatrix u(re.rows(), re.cols());
    u.real() = re;
    u.imag() = im;
    return u;
}

[[nodiscard]] inline ComplexMatrix read_unitary_file(const std::string &path) {
    const std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("unitary file '" + path + "': " + e.what());
    }
    return unitary_from_json(doc);
}

inline void write_unitary_file(const std::string &path, const ComplexMatrix &u) {
    write_text_file(path, unitary_to_json(u).dump(2) + "\n");
}

/// "2,1,0" -> (2, 1, 0).
[[nodiscard]] inline FockState parse_occupations(std::string_view text) {
    FockState s;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ') {
            item.remove_prefix(1);
        }
        while (!item.empty() && item.back() == ' ') {
            item.remove_suffix(1);
        }
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
            throw ParseError("occupation list '" + std::string(text) +
                             "': expected comma-separated non-negative integers");
        }
        s.occupations.push_back(value);
        if (comma == text.size()) {
            break;
        }
        start = comma + 1;
    }
    return s;
}

[[nodiscard]] inline json compile_report_json(const CompiledInterferometer &compiled,
                                              const TruncationConfig &config,
                                              std::optional<std::uint64_t> seed) {
    const CircuitStats s = stats(compiled.circuit);
    json seed_value = nullptr;
    if (seed.has_value()) {
        seed_value = seed.value();
    }
    json elements = json::array();
    for (std::size_t i = 0; i < compiled.blocks.size(); ++i) {
        const auto &e = compiled.decomposition.elements[i];
        const auto &b = compiled.blocks[i];
        elements.push_back({{"position", e.position},
                            {"mode_lo", e.mode_lo},
                            {"theta", e.theta},
                            {"phi", e.phi},
                            {"depth", b.depth},
                            {"gate_count", b.gates.size()},
                            {"cnot_count", b.cnot_count},
                            {"reconstruction_error", b.reconstruction_error}});
    }
    json report = {
        {"qubit_count", s.qubit_count},
        {"depth", s.depth},
        {"gate_count", s.gate_count},
        {"cnot_count", s.cnot_count},
        {"modes", compiled.decomposition.modes},
        {"elements", std::move(elements)},
        {"output_phases", compiled.decomposition.output_phases},
        {"timing",
         {{"matrix_exponentiation_ms", compiled.timings.matrix_exponentiation_ms},
          {"circuit_synthesis_ms", compiled.timings.circuit_synthesis_ms},
          {"total_ms", compiled.timings.total_ms}}},
        {"config",
         {{"n", config.photons()},
          {"mode", std::string(to_string(config.mode()))},
          {"qubits_per_mode", config.qubits_per_mode()},
          {"seed", std::move(seed_value)}}},
    };
    return report;
}

[[nodiscard]] inline json distribution_json(const OutcomeDistribution &dist) {
    json entries = json::array();
    for (const auto &[state, p] : dist.entries) {
        entries.push_back({{"occupation", state.occupations}, {"probability", p}});
    }
    return entries;
}

[[nodiscard]] inline json counts_json(const std::map<FockState, std::size_t> &counts) {
    json entries = json::array();
    for (const auto &[state, c] : counts) {
        entries.push_back({{"occupation", state.occupations}, {"count", c}});
    }
    return entries;
}

} // namespace fockc
