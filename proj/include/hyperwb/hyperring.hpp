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
 * Finite multiplicative hyperrings: an abelian group (R,+) together with an
 * associative, weakly distributive hyperoperation o whose values are nonempty
 * subsets of R.
 */

#ifndef HYPERWB_HYPERRING_HPP
#define HYPERWB_HYPERRING_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperwb/element_subset.hpp"
#include "hyperwb/errors.hpp"

namespace hyperwb {

/// Unvalidated tables, as read from a file or produced by a generator.
struct RawTables {
	std::string name;
	int size = 0;
	std::vector< std::vector< int > > add;
	std::vector< std::vector< std::vector< int > > > hmul;
	/// Provenance for constructed rings; empty for primary inputs.
	std::string construction;
	std::string source;
};

struct ValidationOptions {
	/// Matrix hyperrings are the only non-commutative objects the library builds.
	bool require_commutative = true;
};

/**
 * A validated, immutable finite multiplicative hyperring.
 *
 * Elements are 0..size()-1 and 0 is the additive identity. Instances are only
 * obtained through validate(), so every object satisfies the group laws,
 * nonemptiness, associativity, weak distributivity and sign compatibility.
 */
class HyperRing {
public:
	/// Throws DimensionMismatch, EmptyHyperproduct or AxiomError.
	static HyperRing validate( const RawTables & raw, ValidationOptions options = {} );

	/**
	 * Every failed law with its least witness, one entry per law. Shape
	 * problems still throw, since the laws cannot be evaluated on them.
	 */
	static std::vector< AxiomViolation > check_axioms( const RawTables & raw, ValidationOptions options = {} );

	const std::string & name() const noexcept { return name_; }
	int size() const noexcept { return size_; }
	ElementSubset carrier() const noexcept { return ElementSubset::full( size_ ); }
	bool commutative() const noexcept { return commutative_; }

	Element add( Element a, Element b ) const noexcept { return add_[ a * size_ + b ]; }
	Element neg( Element a ) const noexcept { return neg_[ a ]; }
	Element sub( Element a, Element b ) const noexcept { return add( a, neg( b ) ); }
	ElementSubset mul( Element a, Element b ) const noexcept { return mul_[ a * size_ + b ]; }

	/// All e with a in a o e for every a.
	ElementSubset identities() const noexcept { return identities_; }
	/// Least identity element, if any.
	std::optional< Element > identity() const noexcept;
	/// Least e with a o e = {a} for every a, if any.
	std::optional< Element > scalar_identity() const noexcept;

	/// A o B, the union of a o b over a in A and b in B.
	ElementSubset product( ElementSubset a, ElementSubset b ) const noexcept;
	/// A + B = {a + b}.
	ElementSubset sum( ElementSubset a, ElementSubset b ) const noexcept;
	/// -A
	ElementSubset negate( ElementSubset a ) const noexcept;

	/// True when every hyperproduct is a singleton, i.e. an ordinary ring.
	bool is_ordinary() const noexcept;

	RawTables to_raw() const;

	const std::string & construction() const noexcept { return construction_; }
	const std::string & source() const noexcept { return source_; }
	HyperRing renamed( std::string name ) const;
	HyperRing with_provenance( std::string construction, std::string source ) const;

	/// Exact table equality (names and provenance ignored).
	bool same_tables( const HyperRing & other ) const noexcept;

private:
	HyperRing() = default;

	std::string name_;
	std::string construction_;
	std::string source_;
	int size_ = 0;
	bool commutative_ = true;
	std::vector< Element > add_;
	std::vector< Element > neg_;
	std::vector< ElementSubset > mul_;
	ElementSubset identities_;
	ElementSubset scalar_identities_;
};

/// Free-function spelling of HyperRing::product.
inline ElementSubset hprod( const HyperRing & r, ElementSubset a, ElementSubset b ) noexcept {
	return r.product( a, b );
}

/// x^n by repeated hyperproducts; x^1 = {x}. Requires n >= 1.
ElementSubset element_power( const HyperRing & r, Element x, int n );

/// Exponent bound used for nilpotency and radical-by-powers scans.
inline int power_bound( const HyperRing & r ) noexcept { return 2 * r.size(); }

struct ElementFlags {
	/// exists y != 0 with x o y = {0}
	bool zero_divisor = false;
	/// x^n = {0} for some n within power_bound
	bool nilpotent = false;
	/// von Neumann regular: x in x^2 o y for some y
	bool regular_vnr = false;
	/// non-zero-divisor: ann(x) = {0}
	bool nzd = false;
	/// exists y with e in x o y; empty when the ring has no identity
	std::optional< bool > invertible;
	/// x in x o x
	bool idempotent = false;
	/// x o x = {x}
	bool idempotent_strict = false;
};

ElementFlags element_predicates( const HyperRing & r, Element x );

/// Throws NoIdentity when the ring has no identity.
bool is_invertible( const HyperRing & r, Element x );

struct RingFlags {
	/// 0 in x o y implies x = 0 or y = 0
	bool integral_hyperdomain = false;
	/// no nonzero nilpotent element
	bool reduced = false;
	/// every element von Neumann regular
	bool regular_ring = false;
	/// every element invertible (false without identity)
	bool invertible_ring = false;
	/// every nonzero element invertible (false without identity)
	bool nonzero_invertible = false;
};

RingFlags classify_ring( const HyperRing & r );

/// Sets of elements satisfying each predicate, computed in one pass.
struct ElementClasses {
	ElementSubset zero_divisors;
	ElementSubset nilpotent;
	ElementSubset regular_vnr;
	ElementSubset nzd;
	ElementSubset invertible;
	ElementSubset idempotent;
	ElementSubset idempotent_strict;
};

ElementClasses element_classes( const HyperRing & r );

/// ann(x) = {y : x o y = {0}}
ElementSubset annihilator( const HyperRing & r, Element x );

/// ann(A) = {y : A o y = {0}}
ElementSubset annihilator_of_set( const HyperRing & r, ElementSubset a );

} // namespace hyperwb

#endif // HYPERWB_HYPERRING_HPP
