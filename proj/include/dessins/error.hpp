// Copyright 2026 The dessins Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dessins {

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource limit (group order, coset count, vertex count) was hit.
/// The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A computed result contradicts a property the caller relies on, e.g. the sum
/// of two hyperplanes is not a hyperplane. The CLI maps this to exit code 1.
class PropertyFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace dessins
