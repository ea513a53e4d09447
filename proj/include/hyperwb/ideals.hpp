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
 * Hyperideal recognition, generation and enumeration, plus the arithmetic
 * used throughout the classifiers: sum, product, intersection, colon,
 * annihilator and the two radicals.
 */

#ifndef HYPERWB_IDEALS_HPP
#define HYPERWB_IDEALS_HPP

#include <string>
#include <vector>

#include "hyperwb/element_subset.hpp"
#include "hyperwb/hyperring.hpp"

namespace hyperwb {

/// Default carrier bound for anything that enumerates hyperideals.
inline constexpr int kDefaultEnumerationCap = 16;

struct IdealProfile {
	ElementSubset members;
	bool is_hyperideal = false;
	bool is_C = false;
	bool is_proper = false;
	/**
	 * Set when an arithmetic result was not itself a hyperideal and had to be
	 * replaced by the hyperideal it generates. diagnostic says why.
	 */
	bool repaired = false;
	std::string diagnostic;
};

/// Subtraction-closed and absorbing (on both sides for non-commutative rings).
/// Throws EmptySet.
bool is_hyperideal( const HyperRing & r, ElementSubset s );

/// Smallest hyperideal containing gens. Throws EmptySet.
ElementSubset generated_ideal( const HyperRing & r, ElementSubset gens );

/// Smallest additive subgroup containing s (s nonempty).
ElementSubset additive_closure( const HyperRing & r, ElementSubset s );

/**
 * Every hyperideal of r in canonical order (cardinality, then mask).
 *
 * Hyperideals are found as joins of principal ones, so the cost is driven by
 * the number of hyperideals rather than by 2^n. The cap still bounds the
 * carrier size; throws CapExceeded.
 */
std::vector< IdealProfile > enumerate_hyperideals( const HyperRing & r, int cap = kDefaultEnumerationCap );

/// Same listing as bare member sets.
std::vector< ElementSubset > hyperideal_members( const HyperRing & r, int cap = kDefaultEnumerationCap );

/**
 * The class C of all finite hyperproducts r1 o ... o rk (k >= 2), as a
 * canonical sorted list. Computed by closing the pairwise products under
 * multiplication by singletons.
 */
std::vector< ElementSubset > product_class( const HyperRing & r );

/// C-hyperideal: every member of C that meets i is contained in i.
bool is_C_hyperideal( const std::vector< ElementSubset > & product_class, ElementSubset i );
bool is_C_hyperideal( const HyperRing & r, ElementSubset i );

IdealProfile make_profile( const HyperRing & r, ElementSubset members, const std::vector< ElementSubset > & product_class );

/// {i + j}; generated ideal with a diagnostic if the raw sum is not closed.
IdealProfile ideal_sum( const HyperRing & r, ElementSubset i, ElementSubset j );
/// Additive closure of I o J; generated ideal with a diagnostic if needed.
IdealProfile ideal_product( const HyperRing & r, ElementSubset i, ElementSubset j );
IdealProfile ideal_intersection( const HyperRing & r, ElementSubset i, ElementSubset j );

/// (I : J) = {r : r o J subset of I}
ElementSubset colon( const HyperRing & r, ElementSubset i, ElementSubset j );

/// ann(x) = {y : x o y = {0}}
inline ElementSubset ann( const HyperRing & r, Element x ) { return annihilator( r, x ); }

/**
 * Prime radical: intersection of the prime hyperideals containing i (proper
 * hyperideals, zero allowed), or the whole carrier when there are none.
 * Throws CapExceeded from enumeration.
 */
ElementSubset radical( const HyperRing & r, ElementSubset i, int cap = kDefaultEnumerationCap );

/// {x : x^k subset of i for some k within power_bound}
ElementSubset radical_via_powers( const HyperRing & r, ElementSubset i );

} // namespace hyperwb

#endif // HYPERWB_IDEALS_HPP
