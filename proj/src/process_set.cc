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

#include "advlab/process_set.h"

#include <sstream>

namespace advlab {

void CheckUniverseSize(int n) {
  if (n < 1 || n > kMaxProcesses) {
    throw InputError("universe size must be in 1.." +
                     std::to_string(kMaxProcesses) + ", got " +
                     std::to_string(n));
  }
}

ProcessSet::ProcessSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  CheckUniverseSize(n);
  if ((bits >> n) != 0) {
    throw InputError("process set has members outside 1.." + std::to_string(n));
  }
}

ProcessSet ProcessSet::Full(int n) {
  CheckUniverseSize(n);
  return ProcessSet(n, (1u << n) - 1);
}

ProcessSet ProcessSet::Of(int n, std::initializer_list<ProcessId> members) {
  return Of(n, std::vector<ProcessId>(members));
}

ProcessSet ProcessSet::Of(int n, const std::vector<ProcessId>& members) {
  CheckUniverseSize(n);
  std::uint32_t bits = 0;
  for (ProcessId p : members) {
    if (p < 1 || p > n) {
      throw InputError("process id " + std::to_string(p) + " outside 1.." +
                       std::to_string(n));
    }
    bits |= 1u << (p - 1);
  }
  return ProcessSet(n, bits);
}

void ProcessSet::require_same_universe(const ProcessSet& other) const {
  if (n_ != other.n_) {
    throw InputError("process sets over different universes (n=" +
                     std::to_string(n_) + " vs n=" + std::to_string(other.n_) +
                     ")");
  }
}

bool ProcessSet::subset_of(const ProcessSet& other) const {
  require_same_universe(other);
  return (bits_ & ~other.bits_) == 0;
}

bool ProcessSet::intersects(const ProcessSet& other) const {
  require_same_universe(other);
  return (bits_ & other.bits_) != 0;
}

ProcessSet ProcessSet::with(ProcessId p) const {
  if (p < 1 || p > n_) throw InputError("process id out of range");
  return ProcessSet(n_, bits_ | (1u << (p - 1)));
}

ProcessSet ProcessSet::without(ProcessId p) const {
  if (p < 1 || p > n_) throw InputError("process id out of range");
  return ProcessSet(n_, bits_ & ~(1u << (p - 1)));
}

ProcessSet ProcessSet::operator|(const ProcessSet& other) const {
  require_same_universe(other);
  return ProcessSet(n_, bits_ | other.bits_);
}

ProcessSet ProcessSet::operator&(const ProcessSet& other) const {
  require_same_universe(other);
  return ProcessSet(n_, bits_ & other.bits_);
}

ProcessSet ProcessSet::operator-(const ProcessSet& other) const {
  require_same_universe(other);
  return ProcessSet(n_, bits_ & ~other.bits_);
}

ProcessId ProcessSet::first() const {
  return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1;
}

ProcessId ProcessSet::next_after(ProcessId p) const {
  if (bits_ == 0) return 0;
  // Members strictly above p, else wrap to the smallest.
  const std::uint32_t above = p >= 32 ? 0 : bits_ & ~((1u << p) - 1);
  return above != 0 ? std::countr_zero(above) + 1 : first();
}

std::vector<ProcessId> ProcessSet::members() const {
  std::vector<ProcessId> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::string ProcessSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for (ProcessId p : members()) {
    if (!first_member) os << ',';
    os << p;
    first_member = false;
  }
  os << '}';
  return os.str();
}

}  // namespace advlab
