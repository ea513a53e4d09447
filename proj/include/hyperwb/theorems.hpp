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
 * The proposition registry and the suite runner.
 *
 * Each entry instantiates one proposition about r- and n-hyperideals over
 * every hyperideal, element, cover, subset candidate, homomorphism or
 * derived ring of a finite hyperring, and returns the first failing instance
 * in canonical order.
 *
 * Ambiguous notions are reading axes. The suite evaluates every entry under
 * the default reading and then once per axis the entry depends on, with that
 * axis flipped. Counterexamples found only under a flipped axis are
 * reported as reading-sensitive.
 */

#ifndef HYPERWB_THEOREMS_HPP
#define HYPERWB_THEOREMS_HPP

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperwb/classify.hpp"
#include "hyperwb/construct.hpp"

namespace hyperwb {

enum class Axis {
	regular,     ///< nzd | vnr: which "regular element" a statement uses
	product,     ///< closed | raw: I o J as a hyperideal or as the raw set
	prime,       ///< relaxed | strict: zero ideal may be prime; R may be an r-hyperideal
	idempotent,  ///< weak (x in x o x) | strict (x o x = {x})
	r_mult,      ///< contains-all-regular | literal
	nil_free,    ///< no-nonzero-nilpotent | has-non-nilpotent
	invertible,  ///< nonzero | all
	mult_closed, ///< contains-regular | consists-of-regular
	gamma,       ///< free-sums | distinct-summands
	standing     ///< enforced | off: every hyperideal must be a C-hyperideal
};

inline constexpr int kAxisCount = 10;

/// One value per axis; 0 is the default.
struct Readings {
	std::array< int, kAxisCount > value{};

	int operator[]( Axis a ) const noexcept { return value[ static_cast< int >( a ) ]; }
	bool is( Axis a, int v ) const noexcept { return ( *this )[ a ] == v; }
	Readings flipped( Axis a ) const {
		Readings r = *this;
		r.value[ static_cast< int >( a ) ] ^= 1;
		return r;
	}
	bool is_default() const noexcept;
	RegularNotion regular() const noexcept { return is( Axis::regular, 0 ) ? RegularNotion::nzd : RegularNotion::vnr; }
	PrimeMode prime() const noexcept { return is( Axis::prime, 0 ) ? PrimeMode::relaxed : PrimeMode::strict; }
	RMultReading r_mult() const noexcept { return is( Axis::r_mult, 0 ) ? RMultReading::contains_all_regular : RMultReading::literal; }
	GammaReading gamma() const noexcept { return is( Axis::gamma, 0 ) ? GammaReading::free_sums : GammaReading::distinct_summands; }
	/// Only the non-default axes, e.g. {"regular": "vnr"}.
	nlohmann::ordered_json to_json() const;
	/// "default" or "regular=vnr".
	std::string label() const;
};

std::string axis_name( Axis a );
std::string axis_value_name( Axis a, int v );
/// Every axis with its default value.
nlohmann::ordered_json default_readings_json();
/// Parses "regular=vnr,prime=strict"; throws FormatError.
Readings parse_readings( const std::string & text );

enum class Status { holds, counterexample, not_applicable };

std::string status_name( Status s );

/// Caps and the ring pool used by entries quantifying over other rings.
struct HarnessOptions {
	int enumeration_cap = kDefaultEnumerationCap;
	int gamma_cap = kDefaultGammaCap;
	/// |R1| * |R2| bound for homomorphism sources and targets.
	int hom_cap = 64;
	/// Carrier bound for products and hypermatrix rings built by entries.
	int construct_cap = 16;
	/// Exhaustive subset candidates up to this carrier size, families beyond.
	int subset_scan_max = 10;
	bool fail_fast = false;
	/// Adds wall time to each verdict; makes reports non-reproducible.
	bool timing = false;
};

/// Rings an entry may pair with the ring under test, in corpus order.
struct RingPool {
	std::vector< std::shared_ptr< const RingContext > > rings;
};

struct Outcome {
	Status status = Status::holds;
	/// Number of instances whose hypothesis held.
	long long instances = 0;
	nlohmann::ordered_json witness;
	std::string reason;
};

struct CheckEnv {
	const RingContext & ctx;
	const Readings & readings;
	const HarnessOptions & options;
	const RingPool & pool;
};

struct TheoremEntry {
	std::string id;
	std::string name;
	/// Formal statement in the library's notation.
	std::string statement;
	std::vector< Axis > axes;
	bool needs_identity = false;
	bool needs_scalar_identity = false;
	std::function< Outcome( const CheckEnv & ) > check;
};

/// All entries, ordered by id.
const std::vector< TheoremEntry > & registry();
const TheoremEntry * find_entry( const std::string & id );

struct TheoremVerdict {
	std::string theorem;
	std::string ring;
	Readings readings;
	Status status = Status::holds;
	bool reading_sensitive = false;
	long long instances = 0;
	nlohmann::ordered_json witness;
	std::string reason;
	bool reverified = false;
	double wall_ms = 0;
};

/**
 * One entry on one ring under one reading. Applicability gates (identity,
 * commutativity, standing C assumption, caps) give not_applicable. A
 * counterexample is recomputed from a freshly validated copy of the ring and
 * must reproduce the same witness.
 */
TheoremVerdict run_theorem( const TheoremEntry & entry, const RingContext & ctx, const Readings & readings, const HarnessOptions & options, const RingPool & pool );

struct SuiteReport {
	std::vector< std::string > corpus;
	std::vector< TheoremVerdict > verdicts;
	int holds = 0;
	int counterexamples = 0;
	int not_applicable = 0;
	int reading_sensitive = 0;
	/// Ill-defined derived rings and similar notes, deterministic order.
	std::vector< std::string > notes;
	/// Copied from HarnessOptions::timing; adds wall_ms to every verdict.
	bool timing = false;

	bool ok() const noexcept { return counterexamples == 0; }
	/// Deterministic unless options.timing was set.
	std::string to_json() const;
	std::string to_table() const;
};

/**
 * Every selected entry on every ring: the default reading, then each axis of
 * the entry flipped. An empty filter selects the whole registry.
 * When forced is set only that reading is run, and its counterexamples count.
 */
SuiteReport run_suite( const std::vector< HyperRing > & corpus, const std::vector< std::string > & filter = {}, const HarnessOptions & options = {}, const Readings * forced = nullptr );

} // namespace hyperwb

#endif // HYPERWB_THEOREMS_HPP
