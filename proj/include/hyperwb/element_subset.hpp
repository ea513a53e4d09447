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

#ifndef HYPERWB_ELEMENT_SUBSET_HPP
#define HYPERWB_ELEMENT_SUBSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperwb {

/// Elements of a carrier are the canonical indices 0..n-1; 0 is the additive
/// identity.
using Element = int;

/// Largest carrier an ElementSubset can address.
inline constexpr int kMaxCarrier = 64;

/**
 * A subset of a finite carrier, stored as a 64-bit mask.
 *
 * This is the common currency of the library: hyperproducts, hyperideals,
 * multiplicatively closed sets and equivalence classes are all ElementSubsets.
 */
class ElementSubset {
public:
	constexpr ElementSubset() noexcept = default;
	constexpr explicit ElementSubset( std::uint64_t bits ) noexcept : bits_( bits ) {}
	ElementSubset( std::initializer_list< Element > elems ) noexcept {
		for( Element e : elems ) {
			insert( e );
		}
	}

	static constexpr ElementSubset singleton( Element e ) noexcept {
		return ElementSubset( std::uint64_t{ 1 } << e );
	}

	/// The full carrier {0, ..., n-1}.
	static constexpr ElementSubset full( int n ) noexcept {
		return ElementSubset( n >= 64 ? ~std::uint64_t{ 0 } : ( ( std::uint64_t{ 1 } << n ) - 1 ) );
	}

	static ElementSubset from_vector( const std::vector< Element > & elems ) noexcept {
		ElementSubset s;
		for( Element e : elems ) {
			s.insert( e );
		}
		return s;
	}

	constexpr std::uint64_t bits() const noexcept { return bits_; }
	constexpr bool empty() const noexcept { return bits_ == 0; }
	constexpr int count() const noexcept { return std::popcount( bits_ ); }

	constexpr bool contains( Element e ) const noexcept {
		return ( bits_ >> e ) & 1U;
	}

	constexpr void insert( Element e ) noexcept {
		assert( e >= 0 && e < kMaxCarrier );
		bits_ |= std::uint64_t{ 1 } << e;
	}

	constexpr void erase( Element e ) noexcept { bits_ &= ~( std::uint64_t{ 1 } << e ); }

	constexpr bool subset_of( ElementSubset other ) const noexcept {
		return ( bits_ & ~other.bits_ ) == 0;
	}

	constexpr bool intersects( ElementSubset other ) const noexcept {
		return ( bits_ & other.bits_ ) != 0;
	}

	constexpr bool is_singleton() const noexcept {
		return bits_ != 0 && ( bits_ & ( bits_ - 1 ) ) == 0;
	}

	/// Smallest member; the set must be nonempty.
	constexpr Element min() const noexcept {
		assert( bits_ != 0 );
		return std::countr_zero( bits_ );
	}

	template< typename F >
	void for_each( F && f ) const {
		for( std::uint64_t b = bits_; b != 0; b &= b - 1 ) {
			f( static_cast< Element >( std::countr_zero( b ) ) );
		}
	}

	std::vector< Element > to_vector() const {
		std::vector< Element > out;
		out.reserve( count() );
		for_each( [ &out ]( Element e ) { out.push_back( e ); } );
		return out;
	}

	/// "{0,2,4}"
	std::string to_string() const {
		std::string out = "{";
		bool first = true;
		for_each( [ & ]( Element e ) {
			if( !first ) {
				out += ',';
			}
			first = false;
			out += std::to_string( e );
		} );
		return out + "}";
	}

	constexpr ElementSubset operator|( ElementSubset o ) const noexcept { return ElementSubset( bits_ | o.bits_ ); }
	constexpr ElementSubset operator&( ElementSubset o ) const noexcept { return ElementSubset( bits_ & o.bits_ ); }
	/// Set difference.
	constexpr ElementSubset operator-( ElementSubset o ) const noexcept { return ElementSubset( bits_ & ~o.bits_ ); }
	constexpr ElementSubset & operator|=( ElementSubset o ) noexcept { bits_ |= o.bits_; return *this; }
	constexpr ElementSubset & operator&=( ElementSubset o ) noexcept { bits_ &= o.bits_; return *this; }

	constexpr bool operator==( const ElementSubset & ) const noexcept = default;

	/// Canonical order used for every listing: cardinality, then mask value.
	static constexpr bool canonical_less( ElementSubset a, ElementSubset b ) noexcept {
		const int ca = a.count();
		const int cb = b.count();
		return ca != cb ? ca < cb : a.bits_ < b.bits_;
	}

private:
	std::uint64_t bits_ = 0;
};

} // namespace hyperwb

template<>
struct std::hash< hyperwb::ElementSubset > {
	std::size_t operator()( const hyperwb::ElementSubset & s ) const noexcept {
		return std::hash< std::uint64_t >{}( s.bits() );
	}
};

#endif // HYPERWB_ELEMENT_SUBSET_HPP
