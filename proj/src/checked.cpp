// Copyright 2026 The Incidence Scrolls Contributors
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

#include "incidence/checked.hpp"

#include "incidence/errors.hpp"

namespace incidence {

Count checked_add(Count lhs, Count rhs) {
  Count out = 0;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw ArithmeticOverflow("integer overflow in addition");
  }
  return out;
}

Count checked_sub(Count lhs, Count rhs) {
  Count out = 0;
  if (__builtin_sub_overflow(lhs, rhs, &out)) {
    throw ArithmeticOverflow("integer overflow in subtraction");
  }
  return out;
}

Count checked_mul(Count lhs, Count rhs) {
  Count out = 0;
  if (__builtin_mul_overflow(lhs, rhs, &out)) {
    throw ArithmeticOverflow("integer overflow in multiplication");
  }
  return out;
}

}  // namespace incidence
