/*
 * Copyright 2026 The msca Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MSCA_COMPOSE_HPP_
#define MSCA_COMPOSE_HPP_

#include <cstddef>
#include <span>

#include "msca/core.hpp"

namespace msca {

/// Composition of contract automata: a synchronous product over the
/// reachable product states in which complementary request/offer pairs that
/// are enabled together are forced to synchronise.
///
/// - rank is the sum of the operand ranks; a product state is final iff
///   every operand slice is final in its operand;
/// - a match fires exactly two operand transitions carrying ?x and !x; it is
///   urgent if either side is urgent, else lazy if either side is lazy;
/// - a lone move of an operand keeps its modality and is dropped when its
///   action can be matched by another operand at the same product state.
///
/// The result stores a copy of the operands. Throws Error on an empty operand
/// list or an ill-formed (or empty) operand.
Msca compose(std::span<const Msca> operands);

/// Local automaton of component j: states are the j-th components, and
/// transitions are the j-th actions of transitions where j is not idle.
/// Throws Error when j is out of range.
Msca project(const Msca& a, std::size_t j);

/// The j-th principal of a. Taken from the stored operands when a was built by
/// compose, otherwise obtained by projection.
Msca principal(const Msca& a, std::size_t j);

}  // namespace msca

#endif  // MSCA_COMPOSE_HPP_
