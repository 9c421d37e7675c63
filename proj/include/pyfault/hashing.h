// Copyright 2026 The pyfault Authors
//
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

#ifndef PYFAULT_HASHING_H_
#define PYFAULT_HASHING_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace pyfault {

std::uint64_t Fnv1a64(std::string_view bytes);

// 16 lowercase hex digits.
std::string HexDigest(std::uint64_t value);

// splitmix64 finalizer over the pair.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t salt);

// Engine whose stream depends only on the run seed and a stable key, so
// choices do not shift when unrelated sites are added or reordered.
std::mt19937_64 KeyedEngine(std::uint64_t seed, std::string_view key);

// Uniform-enough index in [0, n) for small n; n must be positive.
std::size_t PickIndex(std::mt19937_64& engine, std::size_t n);

}  // namespace pyfault

#endif  // PYFAULT_HASHING_H_
