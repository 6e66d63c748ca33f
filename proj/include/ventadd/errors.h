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

#ifndef VENTADD_ERRORS_H
#define VENTADD_ERRORS_H

#include <stdexcept>
#include <string>

namespace ventadd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Register width outside the range a construction supports.
struct WidthError : Error {
    using Error::Error;
};

/// Simulation would exceed the configured qubit or branch budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

struct SerializationError : Error {
    using Error::Error;
};

}  // namespace ventadd

#endif
