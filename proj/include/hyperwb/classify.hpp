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
 * Decision procedures for hyperideal classes (prime, primary, maximal,
 * minimal, essential, r- and n-hyperideals) and for r-/n-multiplicatively
 * closed subsets.
 *
 * Every predicate is an exhaustive scan. Failing scans report the
 * lexicographically least failing tuple as a witness, so reports are stable.
 */

#ifndef HYPERWB_CLASSIFY_HPP
#define HYPERWB_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperwb/hyperring.hpp"
#include "hyperwb/ideals.hpp"

namespace hyperwb {

/// relaxed: any proper hyperideal may be prime/primary, including the zero
/// ideal. strict: only nonzero proper hyperideals qualify.
enum class PrimeMode { relaxed, strict };

/// Which notion of "regular element" a statement is read with.
enum class RegularNotion {
	nzd, ///< ann(x) = {0}
	vnr  ///< x != 0 and x in x^2 o y for some y
};

/**
 * How r-multiplicatively closed subsets are defined.
 *
 * contains_all_regular requires every non-zero-divisor to lie in S, in the
 * same shape as the n-variant's "R - r(0) subset of S". literal only asks for
 * one non-zero-divisor u != 1 in S.
 */
enum class RMultReading { contains_all_regular, literal };

/// Outcome of a scan: holds, or fails with a witness tuple.
struct Check {
	bool holds = true;
	std::vector< int > witness;

	static Check pass() { return {}; }
	static Check fail( std::vector< int > w = {} ) { return { false, std::move( w ) }; }
	explicit operator bool() const noexcept { return holds; }
};

/// Least (x, y) with x o y inside p but neither x nor y in p. No properness check.
std::optional< std::pair< Element, Element > > prime_failure( const HyperRing & r, ElementSubset p );

struct ContextOptions {
	int enumeration_cap = kDefaultEnumerationCap;
};

/**
 * Everything the classifiers need about one ring, computed once up front:
 * the hyperideal lattice, the product class C, element classes, prime
 * hyperideals and r(0). Immutable after construction.
 */
class RingContext {
public:
	/// Throws CapExceeded when the carrier exceeds the enumeration cap.
	explicit RingContext( HyperRing ring, ContextOptions options = {} );

	const HyperRing & ring() const noexcept { return ring_; }
	int size() const noexcept { return ring_.size(); }
	ElementSubset carrier() const noexcept { return ring_.carrier(); }
	ElementSubset zero() const noexcept { return ElementSubset::singleton( 0 ); }

	/// Hyperideals in canonical order.
	const std::vector< ElementSubset > & ideals() const noexcept { return ideals_; }
	bool is_ideal( ElementSubset s ) const { return ideal_set_.count( s ) != 0; }
	bool is_C( ElementSubset i ) const { return is_C_hyperideal( product_class_, i ); }
	/// Standing assumption of the registry: every hyperideal is a C-hyperideal.
	bool all_ideals_C() const noexcept { return all_C_; }
	const std::vector< ElementSubset > & product_class() const noexcept { return product_class_; }

	const ElementClasses & elements() const noexcept { return classes_; }
	const RingFlags & flags() const noexcept { return flags_; }
	ElementSubset regular( RegularNotion notion ) const noexcept {
		return notion == RegularNotion::nzd ? classes_.nzd : classes_.regular_vnr - zero();
	}

	/// Proper prime hyperideals, zero ideal allowed.
	const std::vector< ElementSubset > & primes() const noexcept { return primes_; }
	bool is_prime_ideal( ElementSubset p ) const;
	/// r(0): intersection of all primes, or the carrier when there are none.
	ElementSubset nil_radical() const noexcept { return r0_; }
	/// r(I) from the cached prime list.
	ElementSubset radical( ElementSubset i ) const;

	std::optional< Element > identity() const noexcept { return ring_.identity(); }

private:
	HyperRing ring_;
	std::vector< ElementSubset > ideals_;
	std::unordered_set< ElementSubset > ideal_set_;
	std::vector< ElementSubset > product_class_;
	bool all_C_ = true;
	ElementClasses classes_;
	RingFlags flags_;
	std::vector< ElementSubset > primes_;
	ElementSubset r0_;
};

Check is_prime( const RingContext & ctx, ElementSubset i, PrimeMode mode = PrimeMode::relaxed );
Check is_primary( const RingContext & ctx, ElementSubset i, PrimeMode mode = PrimeMode::relaxed );

/**
 * x o y inside I with ann(x) = {0} forces y in I. In relaxed mode the
 * improper hyperideal qualifies vacuously; strict mode requires I proper.
 */
Check is_r_hyperideal( const RingContext & ctx, ElementSubset i, PrimeMode mode = PrimeMode::relaxed );

/// Proper hyperideal with: x o y inside I and x not in r(0) forces y in I.
Check is_n_hyperideal( const RingContext & ctx, ElementSubset i );

enum class IdealClass { hyperideal, prime, r_ideal, n_ideal };

/// Maximal under inclusion among the proper hyperideals of the given class.
bool is_maximal_in_class( const RingContext & ctx, ElementSubset i, IdealClass cls );
/// Minimal among nonzero hyperideals.
bool is_minimal( const RingContext & ctx, ElementSubset i );
/// Prime and containing no smaller prime.
bool is_minimal_prime( const RingContext & ctx, ElementSubset i );
/// Nonzero and meeting every nonzero hyperideal in a nonzero element.
bool is_essential( const RingContext & ctx, ElementSubset i );

/// Throws NoIdentity.
Check is_r_mult_closed( const RingContext & ctx, ElementSubset s, RMultReading reading = RMultReading::contains_all_regular );
Check is_n_mult_closed( const RingContext & ctx, ElementSubset s );

/// All hyperideals containing k, disjoint from s, maximal with that property.
/// Throws NotDisjoint when k meets s.
std::vector< ElementSubset > maximal_disjoint_ideals( const RingContext & ctx, ElementSubset s, ElementSubset k );

/// The canonically first of maximal_disjoint_ideals.
ElementSubset maximal_disjoint_ideal( const RingContext & ctx, ElementSubset s, ElementSubset k );

struct ClassificationFlags {
	bool proper = false;
	bool c_ideal = false;
	bool prime = false;
	bool primary = false;
	bool maximal = false;
	bool minimal_nonzero = false;
	bool minimal_prime = false;
	bool essential = false;
	bool r_ideal = false;
	bool n_ideal = false;
	/// Witness tuples for the failed scans, keyed by flag name.
	std::map< std::string, std::vector< int > > witnesses;
};

ClassificationFlags classify_ideal( const RingContext & ctx, ElementSubset i, PrimeMode mode = PrimeMode::relaxed );

} // namespace hyperwb

#endif // HYPERWB_CLASSIFY_HPP
