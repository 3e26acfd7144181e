/*
 * Copyright 2026 The advlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ADVLAB_ERRORS_H_
#define ADVLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace advlab {

// Malformed or out-of-contract input: bad files, mismatched universes,
// parameters out of range. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A protocol state machine broke the execution contract (e.g. decided twice).
class ProtocolFault : public std::logic_error {
 public:
  explicit ProtocolFault(const std::string& what) : std::logic_error(what) {}
};

// Fallback live-set selection found no live set inside the participation.
class SelectionImpossible : public std::runtime_error {
 public:
  explicit SelectionImpossible(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace advlab

#endif  // ADVLAB_ERRORS_H_
