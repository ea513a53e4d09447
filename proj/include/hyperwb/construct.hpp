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
 * Derived hyperrings: quotients, direct products, 1x1 and 2x2 hypermatrix
 * rings, subhyperrings, good homomorphisms and the fundamental ring R/gamma*.
 *
 * Well-definedness of every lifted operation is verified over all choices of
 * representatives; nothing is assumed.
 */

#ifndef HYPERWB_CONSTRUCT_HPP
#define HYPERWB_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "hyperwb/hyperring.hpp"
#include "hyperwb/ideals.hpp"

namespace hyperwb {

struct QuotientRing {
	HyperRing ring;
	/// element of the source -> coset label
	std::vector< Element > projection;
	/// coset label -> members, labels ordered by least member
	std::vector< ElementSubset > cosets;
};

/**
 * R/J over the additive cosets of the hyperideal j. The coset of x times the
 * coset of y is {z + J : z in x o y}; throws IllDefinedQuotient when that set
 * depends on the representatives, NotClosed when j is not a hyperideal.
 */
QuotientRing quotient( const HyperRing & r, ElementSubset j );

/// Image of a subset under a coset projection.
ElementSubset project( const std::vector< Element > & projection, ElementSubset s );

/// Componentwise R1 x R2; the pair (a, b) has index a * |R2| + b.
HyperRing direct_product( const HyperRing & r1, const HyperRing & r2 );

inline Element pair_index( const HyperRing & r2, Element a, Element b ) noexcept {
	return a * r2.size() + b;
}

/**
 * M_n(R) for n in {1, 2}. Entry (i, k) of A o B is the set-sum over j of
 * A_ij o B_jk and the product set holds every matrix whose entries are drawn
 * from those sets. The result is generally not commutative.
 *
 * Requires a scalar identity in r (throws NoIdentity) and at most cap
 * elements in the result (throws CapExceeded).
 */
HyperRing matrix_hyperring( const HyperRing & r, int n, int cap = kDefaultEnumerationCap );

/// Index of the matrix with the given row-major entries.
Element matrix_index( const HyperRing & r, const std::vector< Element > & entries );
/// Row-major entries of a matrix index.
std::vector< Element > matrix_entries( const HyperRing & r, int n, Element index );
/// M_n(I): every matrix with all entries in i.
ElementSubset matrix_ideal( const HyperRing & r, int n, ElementSubset i );
/// diag(x, 0, ..., 0)
Element matrix_corner( const HyperRing & r, int n, Element x );

struct GoodHomomorphism {
	std::vector< Element > map;
	ElementSubset kernel;
	bool injective = false;
	bool surjective = false;
};

/// Throws NotHomomorphism (law "additive" / "multiplicative") or DimensionMismatch.
GoodHomomorphism check_good_homomorphism( const std::vector< Element > & map, const HyperRing & r1, const HyperRing & r2 );

/// Every good homomorphism r1 -> r2, by backtracking over additive images.
std::vector< GoodHomomorphism > enumerate_good_homomorphisms( const HyperRing & r1, const HyperRing & r2 );

ElementSubset image_ideal( const GoodHomomorphism & phi, ElementSubset i1 );
ElementSubset preimage_ideal( const GoodHomomorphism & phi, int source_size, ElementSubset i2 );

struct Subring {
	HyperRing ring;
	/// new index -> element of the parent
	std::vector< Element > embedding;
};

/// Throws NotClosed unless t is closed under +, - and o.
Subring subhyperring_restrict( const HyperRing & r, ElementSubset t );

/// Every subset closed under +, - and o, canonical order.
std::vector< ElementSubset > enumerate_subhyperrings( const HyperRing & r );

inline constexpr int kDefaultGammaCap = 10;

/**
 * How the family U of finite sums of finite products is generated.
 * free_sums closes under arbitrary sums; distinct_summands only adds
 * pairwise distinct members of the seed family.
 */
enum class GammaReading { free_sums, distinct_summands };

struct FundamentalRingImage {
	std::vector< ElementSubset > classes;
	std::vector< Element > projection;
	/// An ordinary ring: every hyperproduct is a singleton.
	HyperRing ring;
};

/// The family U; exposed for tests and sensitivity runs.
std::vector< ElementSubset > sums_of_products( const HyperRing & r, GammaReading reading = GammaReading::free_sums );

/**
 * R/gamma*. gamma relates a and b when some member of U contains both;
 * gamma* is its transitive closure. Throws CapExceeded above cap and
 * IllDefinedQuotient if a lifted operation depends on representatives.
 */
FundamentalRingImage fundamental_ring( const HyperRing & r, int cap = kDefaultGammaCap, GammaReading reading = GammaReading::free_sums );

/// Classes meeting i.
ElementSubset gamma_image( const FundamentalRingImage & img, ElementSubset i );

/**
 * Ordinary-ring n-ideal test by direct table arithmetic: i is a proper ideal
 * and xy in i with x not nilpotent forces y in i. Throws DimensionMismatch if
 * the ring is not ordinary.
 */
bool classical_n_ideal( const HyperRing & ordinary, ElementSubset i );

} // namespace hyperwb

#endif // HYPERWB_CONSTRUCT_HPP
