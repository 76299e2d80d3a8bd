// Copyright 2026 The qmur Authors
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

#ifndef QMUR_ERRORS_HPP
#define QMUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmur {

/// Violated precondition or construction invariant.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A pair of observables that is not jointly measurable was passed where
/// joint measurability is required.
class IncompatiblePair : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two axes that should span a plane are collinear.
class DegeneratePlane : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent evaluation routes disagreed beyond tolerance. Always a bug.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmur

#endif  // QMUR_ERRORS_HPP
