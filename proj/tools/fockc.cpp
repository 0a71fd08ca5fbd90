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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <fockc/cli.hpp>

namespace {

void add_source_flags(CLI::App &cmd, fockc::cli::InterferometerSource &src) {
    auto *file = cmd.add_option("--unitary", src.unitary_path, "Unitary JSON file {m, re, im}");
    auto *rnd = cmd.add_option("--random-modes", src.random_modes,
                               "Use a Haar-random interferometer on this many modes");
    file->excludes(rnd);
    cmd.add_option("--seed", src.seed, "Seed for --random-modes");
    cmd.add_flag("--strict", src.strict,
                 "Require unitarity to 1e-10 and skip projection onto the unitary group");
}

void add_expansion_flags(CLI::App &cmd, fockc::ExpansionMode &mode) {
    auto *expand = cmd.add_flag_callback(
        "--expand", [&mode] { mode = fockc::ExpansionMode::ExpandTruncation; },
        "Raise the truncation to the register capacity 2^w - 1");
    auto *pad = cmd.add_flag_callback(
        "--pad", [&mode] { mode = fockc::ExpansionMode::PadToPowerOfTwo; },
        "Zero-pad ladder operators truncated at n (default)");
    expand->excludes(pad);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fockc: compile linear optical interferometers into {CNOT, U3} circuits"};
    app.require_subcommand(1);

    fockc::cli::CompileOptions compile;
    auto *c = app.add_subcommand("compile", "Compile an interferometer for a photon budget");
    add_source_flags(*c, compile.source);
    c->add_option("--photons", compile.photons, "Maximum total photon number n")->required();
    add_expansion_flags(*c, compile.mode);
    c->add_option("--out", compile.qasm_out, "Output OpenQASM 2.0 file");
    c->add_option("--report", compile.report_out, "Output compile report JSON");

    fockc::cli::SimulateOptions simulate;
    auto *s = app.add_subcommand("simulate", "Simulate a compiled circuit on a Fock input");
    s->add_option("--circuit", simulate.circuit_path, "OpenQASM circuit file")->required();
    s->add_option("--input", simulate.input, "Occupations, e.g. 2,1,0")->required();
    s->add_option("--shots", simulate.shots, "Number of measurement samples");
    s->add_option("--seed", simulate.seed, "Sampling seed");
    s->add_option("--out", simulate.out, "Output JSON file (default: stdout)");

    fockc::cli::VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Compile, simulate and compare with permanents");
    add_source_flags(*v, verify.source);
    v->add_option("--photons", verify.photons, "Maximum total photon number n")->required();
    add_expansion_flags(*v, verify.mode);
    v->add_option("--input", verify.input, "Occupations, e.g. 2,1,0")->required();
    v->add_option("--shots", verify.shots, "Also sample this many shots and report their distance");
    v->add_option("--shot-seed", verify.shot_seed, "Sampling seed for --shots");

    fockc::cli::ScalingOptions scaling;
    auto *sc = app.add_subcommand("scaling", "Depth and timing versus photon number");
    sc->add_option("--modes", scaling.modes, "Interferometer modes")->capture_default_str();
    sc->add_option("--photons-list", scaling.photons_list, "Comma-separated photon numbers")
        ->required();
    sc->add_option("--samples", scaling.samples, "Random interferometers per photon number")
        ->capture_default_str();
    sc->add_option("--seed", scaling.seed, "Base seed");
    add_expansion_flags(*sc, scaling.mode);
    sc->add_option("--csv", scaling.csv_out, "Output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return fockc::cli::kInvalidInput;
    }

    if (c->parsed()) {
        return fockc::cli::cmd_compile(compile, std::cout, std::cerr);
    }
    if (s->parsed()) {
        return fockc::cli::cmd_simulate(simulate, std::cout, std::cerr);
    }
    if (v->parsed()) {
        return fockc::cli::cmd_verify(verify, std::cout, std::cerr);
    }
    return fockc::cli::cmd_scaling(scaling, std::cout, std::cerr);
}
