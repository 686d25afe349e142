// Copyright 2026 the sentimix authors
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

#pragma once

#include <string>
#include <string_view>

namespace sentimix {

/// English Snowball (Porter2) stemmer.
///
/// Input is expected lowercase UTF-8. Words of two code points or fewer come
/// back unchanged, and so does any word holding an ASCII character outside
/// `a-z` and the apostrophe (digits in tweets such as "gr8"). Non-ASCII code
/// points count as non-vowels, as in the reference implementation.
std::string stem(std::string_view word);

}  // namespace sentimix
