/*
 *   Copyright 2026 The hyperwb Authors
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

/**
 * @file
 *
 * Hyperring definition files.
 *
 * A definition is a JSON object
 * \code
 * { "name": "Z4", "size": 4,
 *   "add":  [[0,1,2,3], ...],
 *   "hmul": [[[0],[0],[0],[0]], ...] }
 * \endcode
 * with optional "construction" and "source" provenance strings. An optional
 * "elements" array assigns labels (strings or integers); the tables then
 * refer to elements by label and the additive identity is moved to index 0.
 *
 * save_hyperring writes the canonical form: fixed key order, one table row
 * per line, no labels. Loading and saving a canonical file is byte-identical.
 */

#ifndef HYPERWB_IO_HPP
#define HYPERWB_IO_HPP

#include <string>

#include "hyperwb/hyperring.hpp"

namespace hyperwb {

/// Parses a definition without validating the axioms. Throws FormatError
/// with a line:column position or a field path such as hmul[1][2][0].
RawTables parse_hyperring( const std::string & text );

/// parse_hyperring then HyperRing::validate.
HyperRing load_hyperring_text( const std::string & text, ValidationOptions options = {} );

/// Reads a file; FormatError names the path on IO failure.
HyperRing load_hyperring( const std::string & path, ValidationOptions options = {} );

/// Canonical serialization, LF line endings, trailing newline.
std::string serialize_hyperring( const HyperRing & r );
std::string serialize_tables( const RawTables & raw );

void save_hyperring( const HyperRing & r, const std::string & path );

/// Reads a whole file. Throws FormatError on failure.
std::string read_file( const std::string & path );
/// Writes a whole file. Throws FormatError on failure.
void write_file( const std::string & path, const std::string & content );

} // namespace hyperwb

#endif // HYPERWB_IO_HPP
