// Copyright 2026 The holo-ee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOEE_ERRORS_H
#define HOLOEE_ERRORS_H

#include <stdexcept>
#include <string>

namespace holoee {

/// Bad argument to an operation (duplicate qubit, wrong size, unsupported gate kind).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A value failed its type invariants (non-Hermitian matrix, negative eigenvalue, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request exceeds the desk-scale limits of a backend.
struct UnsupportedScaleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Tensor-network contraction annihilated the state.
struct ContractionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration / input file.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decoherence compensation produced a matrix that cannot be normalized.
struct CompensationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Broken internal assumption.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace holoee

#endif  // HOLOEE_ERRORS_H
