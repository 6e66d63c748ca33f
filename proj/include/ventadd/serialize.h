// Copyright 2026 The ventadd authors
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

#ifndef VENTADD_SERIALIZE_H
#define VENTADD_SERIALIZE_H

#include <string>

#include "ventadd/circuit.h"

namespace ventadd {

/// Versioned structured-text (JSON) document:
///   {version, n, offset?, record_count, layout: [{name,start,len}],
///    instructions: [{kind, target, qcontrols: [{qubit,pol}],
///                    parity_groups: [{qubits,pol}], cond, record}]}
/// Expressions serialize as '^'-joined terms, e.g. "1^r3^d5". Output is
/// byte-deterministic for a given circuit.
std::string circuit_to_text(const Circuit &circuit);
Circuit circuit_from_text(const std::string &text);

/// Human-readable column diagram: one line per qubit, time left to right.
/// '@' is a plain control, 'o' an inverted one, '@(expr)' an expression
/// polarity, '#' a parity-group member; '?expr' marks a classical condition.
std::string render_diagram(const Circuit &circuit);

}  // namespace ventadd

#endif
