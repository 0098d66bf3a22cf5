// Copyright 2026 The cnz Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cnz/circuit.h"

namespace cnz {

/// Text-format error tied to a 1-based line number (0 when not attributable to a line).
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Quirk URL that is malformed or uses something outside the supported subset.
class QuirkError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Canonical text form:
///
///     qubits 5
///     bits 1
///     data 0 1 2 3
///     h 4
///     cx 1 4
///     m 4 -> b0
///     cz 2 3 if b0==0
///
/// Mnemonics: h x z s sdg t tdg sx sxdg cx cz m reset. Any unitary line may carry an
/// `if b<k>==0|1` suffix.
std::string emit_text(const Circuit &circuit);

/// Accepts canonical text plus blank lines and `#` comments. Missing headers default to
/// `qubits 0`, `bits 0`, and every qubit being data.
Circuit parse_text(std::string_view doc);

inline constexpr std::string_view kQuirkUrlPrefix = "https://algassert.com/quirk#circuit=";

/// One gate per column. Ancillas are tagged with an identity custom gate named `|0>`.
/// Throws QuirkError for ops Quirk cannot show (reset, gates on measured wires, stale conditions).
std::string export_quirk_url(const Circuit &circuit);

/// Imports a subset of Quirk: H X Z Z^±½ Z^±¼ X^±½ Measure, single-control X/Z,
/// and control dots on measured wires as classical conditions.
///
/// Identity custom gates are annotations. When a `test` column and a later `verify` column
/// are present, only the columns between them are imported (the rest is a test harness).
/// Wires marked `|0>` and measured wires become ancillas.
Circuit parse_quirk_url(std::string_view url);

std::string percent_encode(std::string_view text);
std::string percent_decode(std::string_view text);

}  // namespace cnz
