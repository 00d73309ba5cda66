// Copyright 2026 The protodef Authors
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

#ifndef PROTODEF_INDEX_SET_HPP_
#define PROTODEF_INDEX_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "protodef/error.hpp"

namespace protodef {

// A subset of {0, ..., universe-1}. Iteration over members() is ascending,
// which gives every consumer the same deterministic order.
template <class Tag>
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe) : bits_(universe, false) {}
  IndexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : bits_(universe, false) {
    for (std::size_t m : members) insert(m);
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  template <class Range>
  static IndexSet of(std::size_t universe, const Range& members) {
    IndexSet s(universe);
    for (std::size_t m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }

  bool contains(std::size_t i) const { return i < bits_.size() && bits_[i]; }

  void insert(std::size_t i) {
    if (i >= bits_.size()) throw InvalidInput("set member out of range");
    bits_[i] = true;
  }
  void erase(std::size_t i) {
    if (i < bits_.size()) bits_[i] = false;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (bool b : bits_) n += b ? 1 : 0;
    return n;
  }
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == bits_.size(); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) out.push_back(i);
    }
    return out;
  }

  IndexSet complement() const {
    IndexSet s(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = !bits_[i];
    return s;
  }

  bool is_subset_of(const IndexSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.contains(i)) return false;
    }
    return true;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  // Ascending by cardinality, then lexicographic on the sorted member list.
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    const std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  }

 private:
  std::vector<bool> bits_;
};

using OutcomeSet = IndexSet<struct OutcomeTag>;
using AgentSet = IndexSet<struct AgentTag>;

// The designer's objective (a set of outcomes) and a defender coalition.
using Objective = OutcomeSet;
using DefenderSet = AgentSet;

}  // namespace protodef

#endif  // PROTODEF_INDEX_SET_HPP_
