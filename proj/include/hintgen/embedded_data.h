// Copyright 2026 The Hintgen Authors.
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

#ifndef HINTGEN_EMBEDDED_DATA_H_
#define HINTGEN_EMBEDDED_DATA_H_

#include <string_view>

// Contents of data/*, compiled in at build time so the library works without
// a data directory. Generated by CMake.
namespace hintgen::embedded {

std::string_view lexicon_tsv();
std::string_view irregular_verbs_tsv();
std::string_view verbs_txt();
std::string_view start_patterns_txt();
std::string_view stopwords_txt();
std::string_view topic_stems_tsv();
std::string_view validator_conf();

}  // namespace hintgen::embedded

#endif  // HINTGEN_EMBEDDED_DATA_H_
