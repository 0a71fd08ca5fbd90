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

// Two photons on a balanced beamsplitter: compile, simulate, and print the
// bunching statistics next to the permanent prediction.

#include <iomanip>
#include <iostream>
#include <numbers>

#include <fockc/fockc.hpp>

int main() {
    using namespace fockc;

    const ComplexMatrix splitter = beamsplitter_matrix(std::numbers::pi / 4.0, 0.0);
    const TruncationConfig config(2);
    const auto compiled = compile_interferometer(splitter, config);
    const CircuitStats st = stats(compiled.circuit);

    const FockState input{{1, 1}};
    const auto simulated =
        probabilities(run(compiled.circuit, input), 2, config, input.total());
    const auto exact = exact_distribution(splitter, input);

    std::cout << "circuit: " << st.qubit_count << " qubits, depth " << st.depth << ", "
              << st.cnot_count << " CNOTs\n";
    std::cout << std::setprecision(6) << std::fixed;
    for (const auto &[state, p] : simulated.entries) {
        std::cout << "P(" << to_string(state) << ") = " << p << "   permanent: "
                  << exact.entries.at(state) << "\n";
    }
}
