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
 * Interferometer circuits over m registers of w qubits, their statistics,
 * and an OpenQASM 2.0 subset (`cx`, `u3`) reader/writer.
 *
 * Global qubit j belongs to mode j / w and holds bit j % w of that mode's
 * occupation, so measured bitstrings decode directly with decode_fock.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clements.hpp"
#include "fock.hpp"
#include "gate.hpp"
#include "synth.hpp"

namespace fockc {

enum class SegmentKind { Beamsplitter, OutputPhase };

/// Gate range [begin, end) that came from one beamsplitter element or from
/// the output phase of one mode.
struct Segment {
    SegmentKind kind = SegmentKind::Beamsplitter;
    std::size_t index = 0; ///< element position or mode index
    std::size_t begin = 0;
    std::size_t end = 0;

    friend bool operator==(const Segment &, const Segment &) = default;
};

struct CircuitLayout {
    std::size_t modes = 0;
    TruncationConfig config;

    friend bool operator==(const CircuitLayout &, const CircuitLayout &) = default;
};

struct Circuit {
    std::size_t qubits = 0;
    std::vector<Gate> gates;
    CircuitLayout layout;
    std::vector<Segment> segments;
};

struct CircuitStats {
    std::size_t depth = 0;
    std::size_t gate_count = 0;
    std::size_t cnot_count = 0;
    std::size_t qubit_count = 0;
    std::vector<std::size_t> per_element_depths; ///< one per beamsplitter segment
};

namespace detail {
inline void append_remapped(Circuit &c, const SynthesisResult &block, std::size_t offset,
                            SegmentKind kind, std::size_t index) {
    const std::size_t begin = c.gates.size();
    for (Gate g : block.gates) {
        g.target += offset;
        if (g.is_cx()) {
            g.control += offset;
        }
        c.gates.push_back(g);
    }
    c.segments.push_back({kind, index, begin, c.gates.size()});
}
} // namespace detail

/// Places each beamsplitter block on the registers of its two modes, in
/// decomposition order, and appends the per-mode output phases.
[[nodiscard]] inline Circuit assemble(const ClementsDecomposition &d,
                                      std::span<const SynthesisResult> blocks,
                                      std::span<const SynthesisResult> mode_phases,
                                      const TruncationConfig &config) {
    const std::size_t w = config.qubits_per_mode();
    if (blocks.size() != d.elements.size()) {
        throw AssemblyError("assemble: " + std::to_string(blocks.size()) + " blocks for " +
                            std::to_string(d.elements.size()) + " elements");
    }
    if (mode_phases.size() != d.modes) {
        throw AssemblyError("assemble: need one output-phase circuit per mode");
    }
    Circuit c;
    c.qubits = d.modes * w;
    c.layout = {d.modes, config};
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto &e = d.elements[i];
        if (blocks[i].qubits != 2 * w) {
            throw AssemblyError("assemble: block " + std::to_string(i) + " has " +
                                std::to_string(blocks[i].qubits) + " qubits, expected " +
                                std::to_string(2 * w));
        }
        if (e.mode_lo + 1 >= d.modes) {
            throw AssemblyError("assemble: element outside the mode range");
        }
        detail::append_remapped(c, blocks[i], e.mode_lo * w, SegmentKind::Beamsplitter,
                                e.position);
    }
    for (std::size_t k = 0; k < d.modes; ++k) {
        if (mode_phases[k].qubits != w) {
            throw AssemblyError("assemble: output-phase circuit width mismatch");
        }
        detail::append_remapped(c, mode_phases[k], k * w, SegmentKind::OutputPhase, k);
    }
    return c;
}

[[nodiscard]] inline CircuitStats stats(const Circuit &c) {
    CircuitStats s;
    s.depth = circuit_depth(c.gates, c.qubits);
    s.gate_count = c.gates.size();
    s.cnot_count = cnot_count(c.gates);
    s.qubit_count = c.qubits;
    for (const auto &seg : c.segments) {
        if (seg.kind == SegmentKind::Beamsplitter) {
            s.per_element_depths.push_back(circuit_depth(
                std::span<const Gate>(c.gates).subspan(seg.begin, seg.end - seg.begin), c.qubits));
        }
    }
    return s;
}

namespace detail {
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}
} // namespace detail

/// OpenQASM 2.0 text with `cx` and `u3` statements. Layout and segment
/// boundaries travel as `// fockc` comments, which other readers ignore.
[[nodiscard]] inline std::string export_qasm(const Circuit &c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    if (c.layout.modes > 0) {
        out += "// fockc layout modes=" + std::to_string(c.layout.modes) +
               " photons=" + std::to_string(c.layout.config.photons()) +
               " qubits_per_mode=" + std::to_string(c.layout.config.qubits_per_mode()) +
               " expansion=" + std::string(to_string(c.layout.config.mode())) + "\n";
    }
    out += "qreg q[" + std::to_string(c.qubits) + "];\n";
    std::size_t next_segment = 0;
    for (std::size_t i = 0; i <= c.gates.size(); ++i) {
        while (next_segment < c.segments.size() && c.segments[next_segment].begin == i) {
            const auto &seg = c.segments[next_segment];
            out += "// fockc segment ";
            out += seg.kind == SegmentKind::Beamsplitter ? "beamsplitter " : "phase ";
            out += std::to_string(seg.index) + " " + std::to_string(seg.end - seg.begin) + "\n";
            ++next_segment;
        }
        if (i == c.gates.size()) {
            break;
        }
        const auto &g = c.gates[i];
        if (g.is_cx()) {
            out += "cx q[" + std::to_string(g.control) + "],q[" + std::to_string(g.target) + "];\n";
        } else {
            out += "u3(" + detail::format_double(g.theta) + "," + detail::format_double(g.phi) +
                   "," + detail::format_double(g.lambda) + ") q[" + std::to_string(g.target) +
                   "];\n";
        }
    }
    return out;
}

namespace detail {

class QasmCursor {
  public:
    QasmCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    bool try_consume(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view token) {
        if (!try_consume(token)) {
            fail("expected '" + std::string(token) + "'");
        }
    }
    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected identifier");
        }
        return std::string(text_.substr(start, pos_ - start));
    }
    std::size_t integer() {
        skip_space();
        std::size_t value = 0;
        const auto [ptr, ec] =
            std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) {
            fail("expected integer");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    double real() {
        skip_space();
        const std::string rest(text_.substr(pos_));
        char *end = nullptr;
        const double value = std::strtod(rest.c_str(), &end);
        if (end == rest.c_str()) {
            fail("expected number");
        }
        pos_ += static_cast<std::size_t>(end - rest.c_str());
        return value;
    }
    std::size_t qubit(std::string_view reg) {
        if (identifier() != reg) {
            fail("unknown register");
        }
        expect("[");
        const std::size_t q = integer();
        expect("]");
        return q;
    }
    [[noreturn]] void fail(const std::string &why) const {
        throw ParseError("qasm line " + std::to_string(line_) + ": " + why);
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
};

inline void parse_fockc_comment(std::string_view comment, Circuit &c,
                                std::vector<std::pair<Segment, std::size_t>> &pending_segments) {
    std::istringstream in{std::string(comment)};
    std::string tag, kind;
    in >> tag >> kind;
    if (tag != "fockc") {
        return;
    }
    if (kind == "layout") {
        std::size_t modes = 0, photons = 0, w = 0;
        std::string expansion = "pad";
        std::string field;
        while (in >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) {
                continue;
            }
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            if (key == "modes") {
                modes = std::stoul(value);
            } else if (key == "photons") {
                photons = std::stoul(value);
            } else if (key == "qubits_per_mode") {
                w = std::stoul(value);
            } else if (key == "expansion") {
                expansion = value;
            }
        }
        const TruncationConfig config(photons, expansion == "expand"
                                                   ? ExpansionMode::ExpandTruncation
                                                   : ExpansionMode::PadToPowerOfTwo);
        if (config.qubits_per_mode() != w) {
            throw ParseError("qasm layout: qubits_per_mode does not match photons");
        }
        c.layout = {modes, config};
    } else if (kind == "segment") {
        std::string which;
        std::size_t index = 0, length = 0;
        in >> which >> index >> length;
        const SegmentKind sk =
            which == "phase" ? SegmentKind::OutputPhase : SegmentKind::Beamsplitter;
        pending_segments.push_back({Segment{sk, index, 0, 0}, length});
    }
}

} // namespace detail

/// Reads the subset written by export_qasm: header, one `qreg`, `cx` and `u3`.
[[nodiscard]] inline Circuit parse_qasm(std::string_view text) {
    Circuit c;
    bool have_register = false;
    std::string reg_name;
    std::vector<std::pair<Segment, std::size_t>> pending_segments;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t stop = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, stop - start);
        start = stop + 1;
        ++line_no;

        const std::size_t comment = line.find("//");
        if (comment != std::string_view::npos) {
            detail::parse_fockc_comment(line.substr(comment + 2), c, pending_segments);
            line = line.substr(0, comment);
        }
        std::size_t s0 = 0;
        while (s0 < line.size()) {
            std::size_t semi = line.find(';', s0);
            if (semi == std::string_view::npos) {
                semi = line.size();
            }
            const std::string_view stmt = line.substr(s0, semi - s0);
            s0 = semi + 1;
            detail::QasmCursor cur(stmt, line_no);
            if (cur.done()) {
                continue;
            }
            if (cur.try_consume("OPENQASM")) {
                if (cur.real() != 2.0) {
                    cur.fail("only OPENQASM 2.0 is supported");
                }
                continue;
            }
            if (cur.try_consume("include")) {
                continue;
            }
            const std::string op = cur.identifier();
            if (op == "qreg") {
                if (have_register) {
                    cur.fail("only one quantum register is supported");
                }
                reg_name = cur.identifier();
                cur.expect("[");
                c.qubits = cur.integer();
                cur.expect("]");
                have_register = true;
            } else if (op == "cx" || op == "CX") {
                if (!have_register) {
                    cur.fail("gate before qreg");
                }
                const std::size_t ctrl = cur.qubit(reg_name);
                cur.expect(",");
                const std::size_t tgt = cur.qubit(reg_name);
                if (ctrl == tgt || ctrl >= c.qubits || tgt >= c.qubits) {
                    cur.fail("invalid cx operands");
                }
                c.gates.push_back(Gate::cx(ctrl, tgt));
            } else if (op == "u3" || op == "U") {
                if (!have_register) {
                    cur.fail("gate before qreg");
                }
                cur.expect("(");
                const double theta = cur.real();
                cur.expect(",");
                const double phi = cur.real();
                cur.expect(",");
                const double lambda = cur.real();
                cur.expect(")");
                const std::size_t q = cur.qubit(reg_name);
                if (q >= c.qubits) {
                    cur.fail("qubit index out of range");
                }
                c.gates.push_back(Gate::u3(q, theta, phi, lambda));
            } else {
                cur.fail("unsupported statement '" + op + "'");
            }
            if (!cur.done()) {
                cur.fail("trailing characters");
            }
        }
        if (stop == text.size()) {
            break;
        }
    }
    if (!have_register) {
        throw ParseError("qasm: no qreg declaration");
    }

    std::size_t offset = 0;
    for (auto &[seg, length] : pending_segments) {
        seg.begin = offset;
        seg.end = offset + length;
        offset = seg.end;
        c.segments.push_back(seg);
    }
    if (!c.segments.empty() && offset != c.gates.size()) {
        throw ParseError("qasm: segment annotations do not cover the gate list");
    }
    if (c.layout.modes > 0 && c.layout.modes * c.layout.config.qubits_per_mode() != c.qubits) {
        throw ParseError("qasm: layout does not match register size");
    }
    return c;
}

} // namespace fockc
