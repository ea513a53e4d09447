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
 * Structured families of small hyperrings and the default corpus.
 *
 * Families:
 *  - ordinary-Zn: Z_n with singleton products;
 *  - Zn-with-A: Z_n with x o y = { x a y mod n : a in A };
 *  - total-hyperop: Z_n with x o y = {0} when x or y is 0, else all of Z_n;
 *  - closure: quotients by proper nonzero hyperideals, direct products and
 *    2x2 hypermatrix rings of the base members, within the carrier caps.
 *
 * Every candidate goes through HyperRing::validate. Rejected candidates and
 * exact-table duplicates are counted in the log, never dropped silently.
 */

#ifndef HYPERWB_CORPUS_HPP
#define HYPERWB_CORPUS_HPP

#include <string>
#include <vector>

#include "hyperwb/hyperring.hpp"

namespace hyperwb {

struct CorpusSpec {
	/// Zn ranges, inclusive.
	int ordinary_min = 2;
	int ordinary_max = 12;
	int with_a_min = 2;
	int with_a_max = 13;
	/// Each A is reduced mod n; {n-1, 1} is written as {-1, 1}.
	std::vector< std::vector< int > > a_sets = { { 1 }, { 5, 7 }, { 2, 3 }, { -1, 1 } };
	int total_min = 0;
	int total_max = -1;
	/// 0: base families only. 1: add quotients, products, hypermatrices.
	int depth = 1;
	int product_cap = 16;
	int matrix_cap = 16;
	bool quotients = true;
	bool products = true;
	bool matrices = true;
	/// Further candidates, validated and deduplicated like generated ones.
	std::vector< RawTables > extra;
};

/// The pinned default corpus spec.
CorpusSpec default_corpus_spec();

/**
 * Parses "default", or a comma-separated list of generator terms:
 * ordinary:2-12, with-a:2-13, a:1|5.7|2.3|-1.1, total:2-5, depth:1,
 * product-cap:16, matrix-cap:16. Throws FormatError.
 */
CorpusSpec parse_corpus_spec( const std::string & text );

struct CorpusMember {
	HyperRing ring;
	/// ordinary-Zn, Zn-with-A, total-hyperop, quotient, product, matrix
	std::string generator;
	/// e.g. "n=13 A={5,7}"
	std::string params;
};

struct CorpusLog {
	int candidates = 0;
	int rejected = 0;
	int duplicates = 0;
	std::vector< std::string > messages;
};

/// Deterministic: identical specs give identical member lists.
std::vector< CorpusMember > generate_corpus( const CorpusSpec & spec, CorpusLog * log = nullptr );

/// Z_n with x o y = { x a y mod n : a in as }; unvalidated.
RawTables zn_with_a( int n, const std::vector< int > & as );
RawTables ordinary_zn( int n );
RawTables total_hyperop( int n );

/// Lower-case hex SHA-256.
std::string sha256_hex( const std::string & data );

/// JSON manifest: one record per member {name, sha256, generator, params}.
std::string corpus_manifest( const std::vector< CorpusMember > & members );

/// Empty when the manifest matches; else one line per mismatch.
std::vector< std::string > check_manifest( const std::vector< CorpusMember > & members, const std::string & manifest_text );

} // namespace hyperwb

#endif // HYPERWB_CORPUS_HPP
