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

#include <gtest/gtest.h>

#include "hyperwb/corpus.hpp"
#include "hyperwb/ideals.hpp"
#include "oracle.hpp"

using namespace hyperwb;

namespace {

HyperRing zn( int n ) {
	return HyperRing::validate( ordinary_zn( n ) );
}

HyperRing zna( int n, std::vector< int > as ) {
	return HyperRing::validate( zn_with_a( n, as ) );
}

std::vector< HyperRing > commutative_corpus() {
	std::vector< HyperRing > out;
	for( auto & m : generate_corpus( default_corpus_spec() ) ) {
		if( m.ring.commutative() ) {
			out.push_back( std::move( m.ring ) );
		}
	}
	return out;
}

std::set< oracle::Mask > product_class_oracle( const oracle::Tab & t ) {
	std::set< oracle::Mask > cls;
	std::vector< oracle::Mask > todo;
	for( int a = 0; a < t.n; ++a ) {
		for( int b = 0; b < t.n; ++b ) {
			if( cls.insert( t.mul[ a ][ b ] ).second ) {
				todo.push_back( t.mul[ a ][ b ] );
			}
		}
	}
	while( !todo.empty() ) {
		const auto s = todo.back();
		todo.pop_back();
		for( int c = 0; c < t.n; ++c ) {
			for( const auto next : { t.prod( s, oracle::bit( c ) ), t.prod( oracle::bit( c ), s ) } ) {
				if( cls.insert( next ).second ) {
					todo.push_back( next );
				}
			}
		}
	}
	return cls;
}

} // namespace

TEST( Hyperideal, Examples ) {
	const auto z4 = zn( 4 );
	EXPECT_TRUE( is_hyperideal( z4, ElementSubset( { 0 } ) ) );
	EXPECT_TRUE( is_hyperideal( z4, z4.carrier() ) );
	EXPECT_TRUE( is_hyperideal( z4, ElementSubset( { 0, 2 } ) ) );
	EXPECT_FALSE( is_hyperideal( z4, ElementSubset( { 0, 1 } ) ) );
	EXPECT_THROW( is_hyperideal( z4, ElementSubset() ), EmptySet );
	EXPECT_EQ( generated_ideal( z4, ElementSubset( { 0 } ) ), ElementSubset( { 0 } ) );
	EXPECT_EQ( generated_ideal( z4, ElementSubset( { 2 } ) ), ElementSubset( { 0, 2 } ) );
	EXPECT_EQ( generated_ideal( z4, z4.carrier() ), z4.carrier() );
}

TEST( Hyperideal, Listings ) {
	using V = std::vector< ElementSubset >;
	EXPECT_EQ( hyperideal_members( zn( 2 ) ), ( V{ { 0 }, { 0, 1 } } ) );
	EXPECT_EQ( hyperideal_members( zn( 4 ) ), ( V{ { 0 }, { 0, 2 }, { 0, 1, 2, 3 } } ) );
	EXPECT_EQ( hyperideal_members( zn( 6 ) ), ( V{ { 0 }, { 0, 3 }, { 0, 2, 4 }, { 0, 1, 2, 3, 4, 5 } } ) );
}

TEST( Hyperideal, EnumerationMatchesFullSubsetScan ) {
	for( const auto & r : commutative_corpus() ) {
		const oracle::Tab t( r );
		std::vector< ElementSubset > want;
		for( const auto m : t.ideals() ) {
			want.push_back( oracle::as_subset( m ) );
		}
		std::sort( want.begin(), want.end(), ElementSubset::canonical_less );
		EXPECT_EQ( hyperideal_members( r ), want ) << r.name();
	}
}

TEST( Hyperideal, CapExceeded ) {
	EXPECT_THROW( hyperideal_members( zn( 20 ) ), CapExceeded );
	EXPECT_EQ( hyperideal_members( zn( 20 ), 20 ).size(), 6U );
}

TEST( CHyperideal, OrdinaryRingsAreAllC ) {
	for( int n = 2; n <= 12; ++n ) {
		const auto r = zn( n );
		for( const auto i : hyperideal_members( r ) ) {
			EXPECT_TRUE( is_C_hyperideal( r, i ) ) << n << " " << i.to_string();
		}
	}
}

TEST( CHyperideal, MatchesOracle ) {
	for( const auto & r : commutative_corpus() ) {
		const oracle::Tab t( r );
		const auto cls = product_class_oracle( t );
		std::vector< ElementSubset > want;
		for( const auto m : cls ) {
			want.push_back( oracle::as_subset( m ) );
		}
		std::sort( want.begin(), want.end(), ElementSubset::canonical_less );
		auto got = product_class( r );
		std::sort( got.begin(), got.end(), ElementSubset::canonical_less );
		EXPECT_EQ( got, want ) << r.name();
		for( const auto i : hyperideal_members( r ) ) {
			bool c = true;
			for( const auto a : cls ) {
				if( ( a & i.bits() ) && !oracle::sub( a, i.bits() ) ) {
					c = false;
				}
			}
			EXPECT_EQ( is_C_hyperideal( r, i ), c ) << r.name() << " " << i.to_string();
		}
		EXPECT_TRUE( is_C_hyperideal( r, r.carrier() ) );
	}
}

TEST( CHyperideal, Z13FiveSeven ) {
	const auto r = zna( 13, { 5, 7 } );
	EXPECT_EQ( hyperideal_members( r ).size(), 2U );
	EXPECT_TRUE( is_C_hyperideal( r, ElementSubset( { 0 } ) ) );
}

TEST( Arithmetic, Examples ) {
	const auto z6 = zn( 6 );
	const ElementSubset i{ 0, 2, 4 }, j{ 0, 3 };
	EXPECT_EQ( ideal_sum( z6, i, ElementSubset( { 0 } ) ).members, i );
	EXPECT_EQ( ideal_product( z6, i, j ).members, ElementSubset( { 0 } ) );
	EXPECT_EQ( ideal_intersection( z6, i, z6.carrier() ).members, i );
	EXPECT_EQ( ideal_sum( z6, i, j ).members, z6.carrier() );
	EXPECT_EQ( colon( z6, i, z6.carrier() ), i );
	EXPECT_EQ( ann( z6, 2 ), ElementSubset( { 0, 3 } ) );
	EXPECT_EQ( ann( z6, 1 ), ElementSubset( { 0 } ) );
}

TEST( Arithmetic, ColonAndAnnMatchOracle ) {
	for( const auto & r : commutative_corpus() ) {
		if( r.size() > 10 ) {
			continue;
		}
		const oracle::Tab t( r );
		const auto ids = hyperideal_members( r );
		for( const auto i : ids ) {
			for( const auto j : ids ) {
				oracle::Mask want = 0;
				for( int x = 0; x < t.n; ++x ) {
					if( oracle::sub( t.prod( oracle::bit( x ), j.bits() ), i.bits() ) ) {
						want |= oracle::bit( x );
					}
				}
				EXPECT_EQ( colon( r, i, j ).bits(), want ) << r.name();
				const auto s = ideal_sum( r, i, j );
				EXPECT_TRUE( s.is_hyperideal );
				EXPECT_TRUE( i.subset_of( s.members ) && j.subset_of( s.members ) );
				const auto p = ideal_product( r, i, j );
				EXPECT_TRUE( t.is_ideal( p.members.bits() ) ) << r.name();
				EXPECT_TRUE( oracle::sub( t.prod( i.bits(), j.bits() ), p.members.bits() ) );
			}
		}
	}
}

TEST( Radical, Examples ) {
	const auto z4 = zn( 4 );
	const auto z6 = zn( 6 );
	EXPECT_EQ( radical( z4, z4.carrier() ), z4.carrier() );
	EXPECT_EQ( radical( z4, ElementSubset( { 0 } ) ), ElementSubset( { 0, 2 } ) );
	EXPECT_EQ( radical( z6, ElementSubset( { 0 } ) ), ElementSubset( { 0 } ) );
	EXPECT_EQ( radical_via_powers( z4, z4.carrier() ), z4.carrier() );
	EXPECT_EQ( radical_via_powers( z4, ElementSubset( { 0 } ) ), ElementSubset( { 0, 2 } ) );
	EXPECT_TRUE( ElementSubset( { 0, 3 } ).subset_of( radical_via_powers( z6, ElementSubset( { 0, 3 } ) ) ) );
}

TEST( Radical, PowersInsidePrimeRadical ) {
	for( const auto & r : commutative_corpus() ) {
		const oracle::Tab t( r );
		const auto ids = t.ideals();
		for( const auto i : ids ) {
			oracle::Mask want = t.full();
			for( const auto p : ids ) {
				if( oracle::sub( i, p ) && t.prime( p ) ) {
					want &= p;
				}
			}
			const auto got = radical( r, oracle::as_subset( i ) );
			EXPECT_EQ( got.bits(), want ) << r.name();
			EXPECT_TRUE( radical_via_powers( r, oracle::as_subset( i ) ).subset_of( got ) ) << r.name();
		}
	}
}
