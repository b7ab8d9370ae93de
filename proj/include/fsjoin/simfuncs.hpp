// Copyright 2026 The fsjoin Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "fsjoin/corpus.hpp"

namespace fsjoin {

enum class SimilarityKind { Jaccard, NormalizedEdit };

std::string_view to_string(SimilarityKind kind);
/// Accepts "jac" / "neds" (case-insensitive); throws ArgumentError otherwise.
SimilarityKind parse_similarity(std::string_view name);

/// |a ∩ b| / |a ∪ b| over ascending, duplicate-free id lists. Two empty
/// lists are identical (1.0).
double jaccard(std::span<const TokenId> a, std::span<const TokenId> b);

/// Size of the intersection of two ascending, duplicate-free id lists.
std::size_t intersection_size(std::span<const TokenId> a, std::span<const TokenId> b);

/// Levenshtein distance with unit insert/delete/substitute costs.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - LD(a, b) / max(|a|, |b|); two empty strings are identical (1.0).
double neds(std::string_view a, std::string_view b);

double element_sim(SimilarityKind kind, const Element& r, const Element& s);

}  // namespace fsjoin
